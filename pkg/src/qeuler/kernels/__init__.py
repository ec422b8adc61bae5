"""Polynomial kernel selection.

Imports the compiled kernels when built, otherwise the pure-Python twin.
Set ``QEULER_PURE_PYTHON=1`` to force the fallback (used by the benchmark
and the cross-implementation tests).
"""

import os

if os.environ.get("QEULER_PURE_PYTHON"):
    from . import _pure as _impl
else:
    try:
        from . import _speedups as _impl  # type: ignore[attr-defined]
    except ImportError:
        from . import _pure as _impl

IMPLEMENTATION = _impl.__name__.rsplit(".", 1)[-1].lstrip("_")

poly_trim = _impl.poly_trim
poly_add = _impl.poly_add
poly_sub = _impl.poly_sub
poly_mul_int = _impl.poly_mul_int
poly_mul_generic = _impl.poly_mul_generic
poly_divmod = _impl.poly_divmod
poly_gcd_int = _impl.poly_gcd_int

__all__ = [
    "IMPLEMENTATION",
    "poly_trim",
    "poly_add",
    "poly_sub",
    "poly_mul_int",
    "poly_mul_generic",
    "poly_divmod",
    "poly_gcd_int",
]
