"""Build script: compiles the evaluation kernel extension when a toolchain
is available and falls back to the pure-Python kernel otherwise."""

import warnings

from setuptools import Extension, setup
from setuptools.command.build_ext import build_ext

try:
    import numpy as np
    from Cython.Build import cythonize
except ImportError:  # source tree without build deps: pure-Python install
    np = None
    cythonize = None


class optional_build_ext(build_ext):
    """Let the install proceed without the compiled kernel."""

    def run(self):
        try:
            super().run()
        except Exception as exc:  # noqa: BLE001 - any build failure is non-fatal
            warnings.warn(f"compiled kernel unavailable, using pure-Python fallback: {exc}")

    def build_extension(self, ext):
        try:
            super().build_extension(ext)
        except Exception as exc:  # noqa: BLE001
            warnings.warn(f"skipping {ext.name}: {exc}")


if cythonize is not None:
    extensions = cythonize(
        [
            Extension(
                "derschedule.kernels._core",
                ["src/derschedule/kernels/_core.pyx"],
                include_dirs=[np.get_include()],
                define_macros=[("NPY_NO_DEPRECATED_API", "NPY_1_7_API_VERSION")],
            )
        ],
        compiler_directives={
            "language_level": "3",
            "boundscheck": False,
            "wraparound": False,
            "cdivision": True,
        },
    )
else:
    extensions = []

setup(ext_modules=extensions, cmdclass={"build_ext": optional_build_ext})
