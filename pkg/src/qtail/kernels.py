"""Select the compiled kernels when available, else the pure-Python ones.

Set ``QTAIL_PURE_PYTHON=1`` to force the fallback (used by the benchmark and
by the tests that check both backends agree).  The compiled ``run_top`` may
raise OverflowError; :func:`run_top_checked` then redoes the work with the
exact pure-Python kernel.
"""
import os

from . import _kernels_py

BACKEND = "python"
_impl = _kernels_py

if os.environ.get("QTAIL_PURE_PYTHON", "") not in ("1", "true", "yes"):
    try:
        from . import _kernels as _compiled
    except ImportError:
        pass
    else:
        _impl = _compiled
        BACKEND = "cython"

poly_add = _impl.poly_add
poly_mul = _impl.poly_mul
prepare_table = _impl.prepare_table
run_top = _impl.run_top


def run_top_checked(top, fast_steps, exact_steps):
    """``run_top`` on the selected backend, exact on overflow."""
    if fast_steps is not None:
        try:
            return run_top(top, fast_steps)
        except OverflowError:
            pass
    return _kernels_py.run_top(top, exact_steps)


def compiled_available():
    try:
        from . import _kernels  # noqa: F401
    except ImportError:
        return False
    return True
