"""Exact rational scalars.

Every number in this package is an arbitrary-precision rational stored in
lowest terms with a positive denominator; all arithmetic is exact and
equality is exact equality.  The concrete type is ``gmpy2.mpq`` when gmpy2
is importable (C-backed, roughly an order of magnitude faster) and
``fractions.Fraction`` otherwise.  Set ``OSCYBE_SCALAR=fraction`` or
``OSCYBE_SCALAR=gmpy2`` to force a backend; results are identical either
way.
"""

import os

_requested = os.environ.get("OSCYBE_SCALAR", "auto")
if _requested not in ("auto", "gmpy2", "fraction"):
    raise ValueError(f"OSCYBE_SCALAR must be 'gmpy2' or 'fraction', got {_requested!r}")

if _requested in ("auto", "gmpy2"):
    try:
        from gmpy2 import mpq as Q

        BACKEND = "gmpy2"
    except ImportError:
        if _requested == "gmpy2":
            raise
        from fractions import Fraction as Q

        BACKEND = "fraction"
else:
    from fractions import Fraction as Q

    BACKEND = "fraction"

Scalar = Q

ZERO = Q(0)
ONE = Q(1)
TWO = Q(2)
HALF = Q(1, 2)


def scalar(x) -> Scalar:
    """Coerce an int, a ``p/q`` string or a Scalar to a Scalar.

    Floats are rejected: they would silently smuggle binary rounding into
    an exact computation.
    """
    if isinstance(x, float):
        raise TypeError(f"refusing to build an exact scalar from float {x!r}")
    if isinstance(x, str):
        return Q(x.strip())
    return Q(x)


def scalar_str(x) -> str:
    """Canonical string form: ``p`` for integers, ``p/q`` otherwise."""
    return str(Q(x))
