"""Lie bialgebra structures and Yang-Baxter equations.

A 1-cocycle xi: g -> wedge^2 g satisfies

    xi([u,v]) = ad†_u xi(v) - ad†_v xi(u),

and defines a Lie bialgebra when the dual bracket
``[a,b]*(u) = xi(u)(a,b)`` satisfies Jacobi.  Coboundaries
``xi(u) = ad†_u r`` give the bracket

    [a,b]_r = ad*_{r#(b)} a - ad*_{r#(a)} b,

whose Jacobi identity is the generalized classical Yang-Baxter equation
``ad_u [r,r] = 0``; the classical equation is ``[r,r] = 0``.

On a generic oscillator algebra, every bialgebra cocycle is

    xi(u) = ad†_u r + 2 e_0 ^ ((J_a + ad_{u0})(u)),   r in wedge^2 S,

subject to the admissibility condition

    omega_{r, ad†_{e-1} r} - (J_a† ∘ ad†_{e-1}) r = 0,

and the dual bracket then has the closed form implemented in
``dual_from_params`` (e_-1* central, [S*, S*]* a multiple of e_-1*).
The reduced conditions for a bivector 2a e_0^e_-1 + e_0^u_0 + r_0 (resp.
a e_0^e_-1 + e_0^u_0 + r_0) to solve the generalized (resp. classical)
equation are implemented in ``gybe_reduced_residual`` and
``cybe_reduced_residual``.
"""

from dataclasses import dataclass

from . import linalg
from .algebra import Covector, LieAlgebra, Vector
from .errors import (
    ConditionViolated,
    JacobiFailure,
    NotABialgebra,
    NotGeneric,
    NotInNormalForm,
    RNotInWedge2S,
    StructureMismatch,
)
from .multivector import (
    Bivector,
    Trivector,
    ad_dag,
    ad_trivector_is_zero,
    j_dag,
    schouten_self,
    wedge,
)
from .oscillator import OscillatorAlgebra, decompose, is_generic, j_a, omega_pair
from .scalar import HALF, TWO, ZERO, Q


def _lie(g) -> LieAlgebra:
    return g.algebra if isinstance(g, OscillatorAlgebra) else g


# ---- cocycles ---------------------------------------------------------


@dataclass(frozen=True)
class Cocycle:
    """Linear map g -> wedge^2 g stored by its basis images."""

    images: tuple

    @classmethod
    def zero(cls, g):
        g = _lie(g)
        return cls(tuple(Bivector.zero(g.dim) for _ in range(g.dim)))

    @property
    def dim(self):
        return len(self.images)

    def __call__(self, u: Vector) -> Bivector:
        out = Bivector.zero(self.dim)
        for k, x in enumerate(u.c):
            if x:
                out = out + x * self.images[k]
        return out


def coboundary(g, r: Bivector) -> Cocycle:
    g = _lie(g)
    return Cocycle(tuple(ad_dag(g, g.basis_vector(k), r) for k in range(g.dim)))


def cocycle_check(g, xi: Cocycle):
    """Check the cocycle identity on all basis pairs.  Returns
    (True, None) or (False, (i, j, residual_bivector)) with the first
    violating pair in lexicographic order."""
    g = _lie(g)
    for i in range(g.dim):
        bi = g.basis_vector(i)
        for j in range(i + 1, g.dim):
            bj = g.basis_vector(j)
            res = xi(g.bracket_basis(i, j)) - ad_dag(g, bi, xi.images[j]) + ad_dag(g, bj, xi.images[i])
            if not res.is_zero():
                return False, (i, j, res)
    return True, None


def solve_cocycle_space(g) -> list:
    """Exact basis of the space of 1-cocycles, by solving the cocycle
    identity on all basis pairs as one linear system over Q."""
    g = _lie(g)
    d = g.dim
    pairs = [(i, j) for i in range(d) for j in range(i + 1, d)]
    pidx = {p: n for n, p in enumerate(pairs)}
    P = len(pairs)
    ads = [g.ad(g.basis_vector(u)).m for u in range(d)]

    def unk(k, i, j):
        # index and sign of unknown xi(b_k)(b_i*, b_j*)
        if i < j:
            return k * P + pidx[(i, j)], 1
        return k * P + pidx[(j, i)], -1

    rows = []
    for u in range(d):
        Au = ads[u]
        for v in range(u + 1, d):
            Av = ads[v]
            cuv = g.c[u][v]
            for i, j in pairs:
                row = [ZERO] * (d * P)
                for k in range(d):
                    if cuv[k]:
                        n, s = unk(k, i, j)
                        row[n] += s * cuv[k]
                # -(ad†_u xi(b_v))(i,j) = -sum_m Au[i][m] xi_v(m,j) + sum_m Au[j][m] xi_v(m,i)
                for m in range(d):
                    if Au[i][m] and m != j:
                        n, s = unk(v, m, j)
                        row[n] -= s * Au[i][m]
                    if Au[j][m] and m != i:
                        n, s = unk(v, m, i)
                        row[n] += s * Au[j][m]
                    if Av[i][m] and m != j:
                        n, s = unk(u, m, j)
                        row[n] += s * Av[i][m]
                    if Av[j][m] and m != i:
                        n, s = unk(u, m, i)
                        row[n] -= s * Av[j][m]
                if any(row):
                    rows.append(row)
    if not rows:
        rows = [[ZERO] * (d * P)]
    basis = []
    for vec in linalg.kernel_basis(rows):
        images = []
        for k in range(d):
            entries = {}
            for (i, j), n in pidx.items():
                if vec[k * P + n]:
                    entries[(i, j)] = vec[k * P + n]
            images.append(Bivector.from_entries(d, entries))
        basis.append(Cocycle(tuple(images)))
    return basis


# ---- dual brackets ----------------------------------------------------


@dataclass(frozen=True)
class DualAlgebra:
    algebra: LieAlgebra
    provenance: str


def _dual_labels(g: LieAlgebra):
    return tuple(lab + "*" for lab in g.labels)


def _validated_dual(c, labels, provenance) -> DualAlgebra:
    dual = LieAlgebra(c, labels=labels, check=False)
    d = dual.dim
    for i in range(d):
        for j in range(i + 1, d):
            for k in range(j + 1, d):
                res = [
                    a + b + cc
                    for a, b, cc in zip(
                        dual._bracket_raw(dual.c[i][j], dual._basis_raw(k)),
                        dual._bracket_raw(dual.c[j][k], dual._basis_raw(i)),
                        dual._bracket_raw(dual.c[k][i], dual._basis_raw(j)),
                    )
                ]
                if any(res):
                    raise JacobiFailure(i, j, k, res)
    return DualAlgebra(dual, provenance)


def dual_bracket_from_cocycle(g, xi: Cocycle) -> DualAlgebra:
    """[a, b]*(u) = xi(u)(a, b); raises JacobiFailure with the first
    violating triple when xi is not a bialgebra structure."""
    g = _lie(g)
    d = g.dim
    c = [[[xi.images[k].m[i][j] for k in range(d)] for j in range(d)] for i in range(d)]
    return _validated_dual(c, _dual_labels(g), "from-cocycle")


def r_bracket(g, r: Bivector) -> DualAlgebra:
    """[a, b]_r = ad*_{r#(b)} a - ad*_{r#(a)} b; Jacobi holds exactly when
    r solves the generalized Yang-Baxter equation."""
    g = _lie(g)
    d = g.dim
    sharp_rows = [Vector(tuple(r.m[i][j] for j in range(d))) for i in range(d)]
    A = [g.ad(v).m for v in sharp_rows]
    c = [[[A[j][i][k] - A[i][j][k] for k in range(d)] for j in range(d)] for i in range(d)]
    return _validated_dual(c, _dual_labels(g), "from-r")


def cybe_check(g, r: Bivector) -> bool:
    """[r, r] = 0."""
    return schouten_self(_lie(g), r).is_zero()


def cybe_residual(g, r: Bivector) -> Trivector:
    return schouten_self(_lie(g), r)


def gybe_check(g, r: Bivector) -> bool:
    """ad_u [r, r] = 0 for every u."""
    g = _lie(g)
    T = schouten_self(g, r)
    if T.is_zero():
        return True
    return all(ad_trivector_is_zero(g, g.basis_vector(u), T) for u in range(g.dim))


# ---- the classification on generic oscillator algebras ----------------


@dataclass(frozen=True)
class BialgebraParams:
    r: Bivector
    u0: Vector
    a: tuple


def _require_wedge2S(g: OscillatorAlgebra, r: Bivector):
    if not g.in_wedge2S(r):
        raise RNotInWedge2S("bivector pairs the e_-1* or e_0* direction")


def bialgebra_condition_residual(g: OscillatorAlgebra, r: Bivector, a) -> Bivector:
    """omega_{r, ad†_{e-1} r} - (J_a† ∘ ad†_{e-1}) r; zero iff (r, a)
    defines a bialgebra (with any u0)."""
    _require_wedge2S(g, r)
    adm = ad_dag(g.algebra, g.basis_vector(0), r)
    return omega_pair(g, r, adm) - j_dag(j_a(g, a).map, adm)


def gybe_reduced_residual(g: OscillatorAlgebra, r0: Bivector, alpha) -> Bivector:
    """omega_{r0, ad†_{e-1} r0} + alpha (ad†_{e-1} ∘ ad†_{e-1}) r0."""
    _require_wedge2S(g, r0)
    alpha = Q(alpha)
    em1 = g.basis_vector(0)
    adm = ad_dag(g.algebra, em1, r0)
    return omega_pair(g, r0, adm) + alpha * ad_dag(g.algebra, em1, adm)


def cybe_reduced_residual(g: OscillatorAlgebra, r0: Bivector, alpha) -> Bivector:
    """omega_{r0, r0} + alpha ad†_{e-1} r0."""
    _require_wedge2S(g, r0)
    alpha = Q(alpha)
    return omega_pair(g, r0, r0) + alpha * ad_dag(g.algebra, g.basis_vector(0), r0)


def bialgebra_cocycle(g: OscillatorAlgebra, params: BialgebraParams) -> Cocycle:
    """xi(u) = ad†_u r + 2 e_0 ^ ((J_a + ad_{u0})(u)).

    Always a 1-cocycle; the dual bracket satisfies Jacobi iff the
    admissibility residual of (r, a) vanishes.
    """
    _require_wedge2S(g, params.r)
    if not g.in_S(params.u0):
        raise RNotInWedge2S("u0 must lie in S")
    J = j_a(g, params.a)
    alg = g.algebra
    e0 = alg.basis_vector(1)
    images = []
    for k in range(g.dim):
        bk = alg.basis_vector(k)
        w = J(bk) + alg.bracket(params.u0, bk)
        images.append(ad_dag(alg, bk, params.r) + TWO * wedge(e0, w))
    return Cocycle(tuple(images))


def dual_from_params(g: OscillatorAlgebra, params: BialgebraParams) -> DualAlgebra:
    """Closed form of the dual bracket:

        [e_0*, a]* = 2 J* a - 2 (ad*_{e-1} a)(u0) e_-1* + i_{r#(a)} omega,
        [a, b]*    = (ad†_{e-1} r)(a, b) e_-1*,        a, b in S*,

    with e_-1* central.  Raises ConditionViolated when the admissibility
    residual of (r, a) is nonzero."""
    if not bialgebra_condition_residual(g, params.r, params.a).is_zero():
        raise ConditionViolated("admissibility residual is nonzero")
    alg = g.algebra
    d = g.dim
    W = g.omega
    J = j_a(g, params.a).map
    adm = ad_dag(alg, alg.basis_vector(0), params.r)
    em1_u0 = alg.bracket(alg.basis_vector(0), params.u0)
    c = [[[ZERO] * d for _ in range(d)] for _ in range(d)]
    for j in g.s_indices:
        aj = alg.basis_covector(j)
        cov = list((TWO * J.dual(aj)).c)
        # -2 (ad*_{e-1} a)(u0) e_-1*: (ad*_{e-1} a)(u0) = a([e-1, u0])
        cov[0] -= TWO * em1_u0.c[j]
        # i_{r#(a)} omega, components omega(r#a, b_k)
        sh = params.r.m[j]  # r#(b_j*) = row j
        for k in range(d):
            s = ZERO
            for m_ in range(d):
                if sh[m_] and W[m_][k]:
                    s += sh[m_] * W[m_][k]
            cov[k] += s
        c[1][j] = cov
        c[j][1] = [-x for x in cov]
    for i in g.s_indices:
        for j in g.s_indices:
            if i != j and adm.m[i][j]:
                c[i][j][0] = adm.m[i][j]
    return _validated_dual(c, _dual_labels(alg), "from-params")


def extract_params(g: OscillatorAlgebra, xi: Cocycle) -> BialgebraParams:
    """Invert ``bialgebra_cocycle`` by reading parameters off the basis
    images; valid for bialgebra cocycles on generic algebras.  The
    reconstruction is verified exactly."""
    if not is_generic(g.lam):
        raise NotGeneric(f"lambda = {[str(x) for x in g.lam]}")
    ok, witness = cocycle_check(g, xi)
    if not ok:
        raise NotABialgebra(f"not a cocycle, first violation at pair {witness[:2]}")
    try:
        dual_bracket_from_cocycle(g, xi)
    except JacobiFailure as exc:
        raise NotABialgebra(f"dual bracket violates Jacobi at {exc.triple}") from exc
    n = g.n
    lam = g.lam
    im = xi.images
    a = tuple(HALF * im[g.e(i)].m[1][g.ec(i)] for i in range(1, n + 1))
    u0 = [ZERO] * g.dim
    for i in range(1, n + 1):
        u0[g.e(i)] = -im[0].m[1][g.ec(i)] / (TWO * lam[i - 1])
        u0[g.ec(i)] = im[0].m[1][g.e(i)] / (TWO * lam[i - 1])
    entries = {}
    for i in range(1, n + 1):
        for j in range(i, n + 1):
            entries[(g.e(i), g.ec(j))] = -im[g.e(j)].m[1][g.e(i)]
            if i != j:
                entries[(g.ec(i), g.e(j))] = im[g.e(i)].m[1][g.e(j)]
                entries[(g.e(i), g.e(j))] = im[g.ec(j)].m[1][g.e(i)]
                entries[(g.ec(i), g.ec(j))] = -im[g.e(j)].m[1][g.ec(i)]
    params = BialgebraParams(Bivector.from_entries(g.dim, entries), Vector(tuple(u0)), a)
    rebuilt = bialgebra_cocycle(g, params)
    if any(not (ri - oi).is_zero() for ri, oi in zip(rebuilt.images, im)):
        raise StructureMismatch("cocycle is a bialgebra but does not reconstruct from parameters")
    return params


@dataclass(frozen=True)
class NormalForm:
    kind: str  # "cybe" | "gybe"
    alpha: object
    u0: Vector
    r0: Bivector


def ybe_normal_form(g: OscillatorAlgebra, r: Bivector) -> NormalForm:
    """Split a Yang-Baxter solution as coef e_0^e_-1 + e_0^u0 + r0 and
    verify the reduced residual of the matching equation.

    For the classical equation alpha = coef, for the generalized equation
    alpha = coef/2 (the two statements normalize the e_0^e_-1 coefficient
    differently)."""
    is_c = cybe_check(g, r)
    is_g = is_c or gybe_check(g, r)
    if not is_g:
        raise ConditionViolated("bivector solves neither Yang-Baxter equation")
    try:
        coef, u0, r0 = decompose(g, r)
    except NotInNormalForm as exc:
        raise StructureMismatch(
            "Yang-Baxter solution pairs e_-1* with S*; contradicts the classification"
        ) from exc
    if is_c:
        alpha = coef
        if not cybe_reduced_residual(g, r0, alpha).is_zero():
            raise StructureMismatch("classical solution violates the reduced condition")
        return NormalForm("cybe", alpha, u0, r0)
    alpha = HALF * coef
    if not gybe_reduced_residual(g, r0, alpha).is_zero():
        raise StructureMismatch("generalized solution violates the reduced condition")
    return NormalForm("gybe", alpha, u0, r0)


@dataclass(frozen=True)
class Corollary12Report:
    p: int
    heisenberg_dim: int
    unimodular: bool
    center_contains_em1star: bool
    brackets_into_line: bool
    dual: DualAlgebra


def analyze_dual_structure(g: OscillatorAlgebra, params: BialgebraParams) -> Corollary12Report:
    """Structure of the dual: with 2p the kernel dimension of the
    restriction of ad†_{e-1} r to S*, the dual is R e_0* acting on the
    ideal h_{2(n-p)+1} + R^{2p}; unimodular iff sum_i r(e_i*, e~_i*) = 0.
    The unimodularity flag is computed both from that component sum and
    from the adjoint-trace oracle on the dual; they must agree."""
    n = g.n
    adm = ad_dag(g.algebra, g.basis_vector(0), params.r)
    block = [[adm.m[i][j] for j in g.s_indices] for i in g.s_indices]
    rk = linalg.rank(block)
    kernel_dim = 2 * n - rk
    if kernel_dim % 2:
        raise StructureMismatch("skew form has odd kernel dimension")
    p = kernel_dim // 2
    dual = dual_from_params(g, params)
    dc = dual.algebra.c
    d = g.dim
    central = all(not dc[0][j][k] for j in range(d) for k in range(d))
    into_line = all(
        not dc[i][j][k] for i in g.s_indices for j in g.s_indices for k in range(1, d)
    )
    uni_sum = sum((params.r.m[g.e(i)][g.ec(i)] for i in range(1, n + 1)), ZERO) == 0
    uni_trace = dual.algebra.is_unimodular()
    if uni_sum != uni_trace:
        raise StructureMismatch("component-sum and trace unimodularity criteria disagree")
    if not central or not into_line or rk != 2 * (n - p):
        raise StructureMismatch("dual bracket violates the predicted structure")
    return Corollary12Report(p, 2 * (n - p) + 1, uni_trace, central, into_line, dual)
