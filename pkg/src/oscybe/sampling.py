"""Deterministic seeded draws used by the verification suite.

Scalar entries come from {-3..3}/{1,2,3} (bivectors for the Schouten
oracle use {-2..2}/{1,2}); every draw is reproducible from the seed.
Solution draws are built from the closed-form families and asserted
against the matching residual at draw time.
"""

import random

from .algebra import Vector
from .bialgebra import (
    BialgebraParams,
    bialgebra_condition_residual,
    cybe_reduced_residual,
    gybe_reduced_residual,
)
from .catalog import block_basis, t_i
from .multivector import Bivector
from .oscillator import OscillatorAlgebra
from .scalar import ONE, ZERO, Q

PARAM_NUMS = range(-3, 4)
PARAM_DENS = (1, 2, 3)
ORACLE_NUMS = range(-2, 3)
ORACLE_DENS = (1, 2)


def make_rng(seed: int) -> random.Random:
    return random.Random(seed)


def rand_scalar(rng, nums=PARAM_NUMS, dens=PARAM_DENS):
    return Q(rng.choice(nums), rng.choice(dens))


def rand_vector(dim: int, rng, indices=None, nums=PARAM_NUMS, dens=PARAM_DENS) -> Vector:
    idx = range(dim) if indices is None else indices
    c = [ZERO] * dim
    for i in idx:
        c[i] = rand_scalar(rng, nums, dens)
    return Vector(tuple(c))


def rand_bivector(dim: int, rng, nums=ORACLE_NUMS, dens=ORACLE_DENS) -> Bivector:
    entries = {}
    for i in range(dim):
        for j in range(i + 1, dim):
            v = rand_scalar(rng, nums, dens)
            if v:
                entries[(i, j)] = v
    return Bivector.from_entries(dim, entries)


def rand_bivector_S(g: OscillatorAlgebra, rng, nums=PARAM_NUMS, dens=PARAM_DENS) -> Bivector:
    entries = {}
    for i in g.s_indices:
        for j in g.s_indices:
            if i < j:
                v = rand_scalar(rng, nums, dens)
                if v:
                    entries[(i, j)] = v
    return Bivector.from_entries(g.dim, entries)


def rand_vector_S(g: OscillatorAlgebra, rng) -> Vector:
    return rand_vector(g.dim, rng, indices=g.s_indices)


def rand_params(g: OscillatorAlgebra, rng) -> BialgebraParams:
    """Unconstrained draw; its admissibility residual is usually nonzero."""
    return BialgebraParams(
        rand_bivector_S(g, rng),
        rand_vector_S(g, rng),
        tuple(rand_scalar(rng) for _ in range(g.n)),
    )


def admissible_params(g: OscillatorAlgebra, rng) -> BialgebraParams:
    """Draw from the closed-form bialgebra families (residual asserted
    zero): t-combinations with arbitrary a, or a rotated-basis block
    family on a random index pair with the matching a-constraint."""
    n = g.n
    a = [rand_scalar(rng) for _ in range(n)]
    r = Bivector.zero(g.dim)
    style = rng.choice(["t", "E", "F", "EF"]) if n >= 2 else "t"
    if style == "t":
        for i in range(1, n + 1):
            r = r + rand_scalar(rng) * t_i(g, i)
    else:
        i = rng.randrange(1, n)
        j = rng.randrange(i + 1, n + 1)
        bb = block_basis(g, i, j)
        c = rand_scalar(rng)
        r = c * (bb["ti"] - bb["tj"])
        for k in range(1, n + 1):
            if k not in (i, j):
                r = r + rand_scalar(rng) * t_i(g, k)
        s = rand_scalar(rng)
        if style == "E":
            r = r + rand_scalar(rng) * bb["E"] + rand_scalar(rng) * bb["Ec"]
            a[i - 1], a[j - 1] = s, -s
        elif style == "F":
            r = r + rand_scalar(rng) * bb["F"] + rand_scalar(rng) * bb["Fc"]
            a[i - 1], a[j - 1] = s, s
        else:
            r = (
                r
                + rand_scalar(rng) * bb["E"]
                + rand_scalar(rng) * bb["Ec"]
                + rand_scalar(rng) * bb["F"]
                + rand_scalar(rng) * bb["Fc"]
            )
            a[i - 1] = a[j - 1] = ZERO
    params = BialgebraParams(r, rand_vector_S(g, rng), tuple(a))
    assert bialgebra_condition_residual(g, params.r, params.a).is_zero()
    return params


def gybe_reduced_solution(g: OscillatorAlgebra, rng):
    """(r0, alpha) with zero generalized reduced residual."""
    n = g.n
    style = rng.choice(["t", "ef", "zero"]) if n >= 2 else rng.choice(["t", "zero"])
    alpha = rand_scalar(rng)
    if style == "zero":
        r0 = Bivector.zero(g.dim)
    elif style == "t":
        r0 = Bivector.zero(g.dim)
        for i in range(1, n + 1):
            r0 = r0 + rand_scalar(rng) * t_i(g, i)
    else:
        alpha = ZERO
        i = rng.randrange(1, n)
        j = rng.randrange(i + 1, n + 1)
        bb = block_basis(g, i, j)
        r0 = rand_scalar(rng) * (bb["ti"] - bb["tj"])
        for name in ("E", "Ec", "F", "Fc"):
            r0 = r0 + rand_scalar(rng) * bb[name]
        for k in range(1, n + 1):
            if k not in (i, j):
                r0 = r0 + rand_scalar(rng) * t_i(g, k)
    assert gybe_reduced_residual(g, r0, alpha).is_zero()
    return r0, alpha


def cybe_reduced_solution(g: OscillatorAlgebra, rng):
    """(r0, alpha) with zero classical reduced residual."""
    n = g.n
    style = rng.choice(["zero", "ef", "pyth"]) if n >= 2 else "zero"
    if style == "zero":
        r0 = Bivector.zero(g.dim)
        return r0, rand_scalar(rng)
    i = rng.randrange(1, n)
    j = rng.randrange(i + 1, n + 1)
    bb = block_basis(g, i, j)
    if style == "ef":
        # (a, ac) = (x, y), (b, bc) = (y, x) makes c = 0 admissible
        x, y = rand_scalar(rng), rand_scalar(rng)
        r0 = x * bb["E"] + y * bb["Ec"] + y * bb["F"] + x * bb["Fc"]
    else:
        # scaled (3, 4, 0, 0, 5) pattern: c^2 = a^2 + ac^2
        x = rand_scalar(rng)
        r0 = Q(3) * x * bb["E"] + Q(4) * x * bb["Ec"] + Q(5) * x * (bb["ti"] - bb["tj"])
    assert cybe_reduced_residual(g, r0, ZERO).is_zero()
    return r0, ZERO


def assemble_gybe_candidate(g: OscillatorAlgebra, r0: Bivector, u0: Vector, alpha) -> Bivector:
    """r = 2 alpha e_0^e_-1 + e_0^u0 + r0 (the generalized normal form)."""
    from .catalog import e0_wedge

    return e0_wedge(g, (2 * alpha) * g.basis_vector(0) + u0) + r0


def assemble_cybe_candidate(g: OscillatorAlgebra, r0: Bivector, u0: Vector, alpha) -> Bivector:
    """r = alpha e_0^e_-1 + e_0^u0 + r0 (the classical normal form)."""
    from .catalog import e0_wedge

    return e0_wedge(g, alpha * g.basis_vector(0) + u0) + r0


def rand_isotropic_basis(g: OscillatorAlgebra, rng):
    """A random 2m-dimensional omega-isotropic subspace of S spanned by
    e-type directions mixed by an invertible triangular change of basis."""
    n = g.n
    if n < 2:
        raise ValueError("no positive even-dimensional isotropic subspace for n = 1")
    m = rng.randrange(1, n // 2 + 1)
    picks = rng.sample(range(1, n + 1), 2 * m)
    vecs = []
    for idx, i in enumerate(picks):
        c = [ZERO] * g.dim
        c[g.e(i)] = ONE
        for i2 in picks[:idx]:
            c[g.e(i2)] = rand_scalar(rng)
        vecs.append(Vector(tuple(c)))
    return vecs
