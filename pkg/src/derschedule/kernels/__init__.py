"""Evaluation kernels: compiled core with a pure-Python fallback.

Evaluating one chromosome (replaying genes into the allocation matrix,
scaling by the forecast, summing the objectives) is the hot loop of every
optimization run, so it lives behind a narrow batch interface with two
interchangeable implementations: a Cython extension and a numpy fallback.
The extension is selected at import when present; set
``DERSCHEDULE_PURE_PYTHON=1`` to force the fallback. Both produce
bit-identical float64 results, so any mix of processes yields the same run.

Interface (both implementations):

    Evaluator(energy_cap, alpha, beta, gamma, demand)
        energy_cap: (m, T) float64, kWh obtainable per unit and interval
        alpha/beta/gamma: (m,) cost coefficients, demand: (T,) kWh
    Evaluator.evaluate_batch(rows, starts, durs, fracs, offsets)
        Packed genes for a batch of chromosomes; chromosome b owns the gene
        range offsets[b]:offsets[b+1]. Returns (costs, dtds, hus) arrays.
"""

import os

__all__ = ["KernelEvaluator", "implementation", "available_implementations"]

_force_python = os.environ.get("DERSCHEDULE_PURE_PYTHON", "").strip().lower() in {
    "1", "true", "yes",
}

if _force_python:
    from ._fallback import Evaluator as KernelEvaluator
    implementation = "python"
else:
    try:
        from ._core import Evaluator as KernelEvaluator
        implementation = "compiled"
    except ImportError:
        from ._fallback import Evaluator as KernelEvaluator
        implementation = "python"


def available_implementations() -> dict:
    """All importable kernel classes by name (for parity tests and benchmarks)."""
    impls = {}
    try:
        from ._core import Evaluator as compiled
        impls["compiled"] = compiled
    except ImportError:
        pass
    from ._fallback import Evaluator as python
    impls["python"] = python
    return impls
