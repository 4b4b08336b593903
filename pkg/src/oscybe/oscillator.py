"""Oscillator Lie algebras G_lambda and their symplectic data.

Basis order is fixed once and for all as (e_-1, e_0, e_1, e~_1, ...,
e_n, e~_n) — indices 0, 1, 2i, 2i+1 — where e~_i denotes the checked
partner of e_i.  Brackets:

    [e_-1, e_j] = lambda_j e~_j,   [e_-1, e~_j] = -lambda_j e_j,
    [e_j, e~_j] = e_0,

e_0 central.  S = span{e_i, e~_i} carries the symplectic form omega with
omega(e_i, e~_j) = delta_ij and i_{e_-1} omega = i_{e_0} omega = 0; on S
the bracket is [u, v] = omega(u, v) e_0.
"""

from dataclasses import dataclass

from .algebra import Covector, LieAlgebra, LinearMap, Vector
from .errors import DegenerateForm, NonPositiveLambda, NotInNormalForm, UnsortedLambda
from .forms import OrthogonalStructure, validate_orthogonal
from .multivector import Bivector
from .scalar import HALF, ONE, ZERO, scalar


@dataclass(frozen=True)
class OscillatorAlgebra:
    lam: tuple
    algebra: LieAlgebra
    omega: tuple  # matrix of the 2-form on vectors

    @property
    def n(self):
        return len(self.lam)

    @property
    def dim(self):
        return self.algebra.dim

    # basis index helpers (i is 1-based)
    def e(self, i) -> int:
        return 2 * i

    def ec(self, i) -> int:
        return 2 * i + 1

    @property
    def s_indices(self):
        return range(2, self.dim)

    def omega_form(self, u: Vector, v: Vector):
        s = ZERO
        for i, ui in enumerate(u.c):
            if ui:
                row = self.omega[i]
                for j, vj in enumerate(v.c):
                    if vj and row[j]:
                        s += ui * row[j] * vj
        return s

    def in_S(self, v: Vector) -> bool:
        return not v.c[0] and not v.c[1]

    def in_wedge2S(self, r: Bivector) -> bool:
        """r#(e_-1*) = r#(e_0*) = 0."""
        return not any(r.m[0]) and not any(r.m[1])

    def basis_vector(self, i) -> Vector:
        return self.algebra.basis_vector(i)

    def basis_covector(self, i) -> Covector:
        return self.algebra.basis_covector(i)


def build_oscillator(lam) -> OscillatorAlgebra:
    lam = tuple(scalar(x) for x in lam)
    if not lam or any(x <= 0 for x in lam):
        raise NonPositiveLambda(f"lambda must be positive, got {[str(x) for x in lam]}")
    if any(a > b for a, b in zip(lam, lam[1:])):
        raise UnsortedLambda(f"lambda must be weakly increasing, got {[str(x) for x in lam]}")
    n = len(lam)
    d = 2 * n + 2
    c = [[[ZERO] * d for _ in range(d)] for _ in range(d)]

    def setb(i, j, k, v):
        c[i][j][k] = v
        c[j][i][k] = -v

    for i in range(1, n + 1):
        e, ec = 2 * i, 2 * i + 1
        setb(0, e, ec, lam[i - 1])
        setb(0, ec, e, -lam[i - 1])
        setb(e, ec, 1, ONE)
    labels = ["e-1", "e0"]
    for i in range(1, n + 1):
        labels += [f"e{i}", f"e~{i}"]
    g = LieAlgebra(c, labels=labels)
    omega = [[ZERO] * d for _ in range(d)]
    for i in range(1, n + 1):
        omega[2 * i][2 * i + 1] = ONE
        omega[2 * i + 1][2 * i] = -ONE
    return OscillatorAlgebra(lam, g, tuple(tuple(row) for row in omega))


def is_generic(lam) -> bool:
    """Strictly increasing and no lambda_k = lambda_i + lambda_j for
    i < j < k."""
    lam = tuple(scalar(x) for x in lam)
    if any(x <= 0 for x in lam):
        return False
    if any(a >= b for a, b in zip(lam, lam[1:])):
        return False
    n = len(lam)
    for i in range(n):
        for j in range(i + 1, n):
            for k in range(j + 1, n):
                if lam[k] == lam[i] + lam[j]:
                    return False
    return True


def omega_pair(g: OscillatorAlgebra, r1: Bivector, r2: Bivector) -> Bivector:
    """omega_{r1,r2}(a, b) = (omega(r1#a, r2#b) + omega(r2#a, r1#b)) / 2,
    symmetric in (r1, r2); as matrices (R1 W R2^T + R2 W R1^T) / 2."""
    d = g.dim
    W = g.omega
    R1, R2 = r1.m, r2.m

    def rw(R):
        return [[sum((R[i][k] * W[k][j] for k in range(d) if R[i][k]), ZERO) for j in range(d)] for i in range(d)]

    A, B = rw(R1), rw(R2)
    out = []
    for i in range(d):
        row = []
        for j in range(d):
            s = ZERO
            for k in range(d):
                if A[i][k] and R2[j][k]:
                    s += A[i][k] * R2[j][k]
                if B[i][k] and R1[j][k]:
                    s += B[i][k] * R1[j][k]
            row.append(HALF * s)
        out.append(tuple(row))
    return Bivector(tuple(out))


@dataclass(frozen=True)
class SkewDerivation:
    """J_a: e_i -> a_i e~_i, e~_i -> -a_i e_i, J(e_-1) = J(e_0) = 0.
    A derivation commuting with ad_{e_-1}; omega-skew on S."""

    a: tuple
    map: LinearMap

    def __call__(self, v: Vector) -> Vector:
        return self.map(v)


def j_a(g: OscillatorAlgebra, a) -> SkewDerivation:
    a = tuple(scalar(x) for x in a)
    if len(a) != g.n:
        raise ValueError(f"expected {g.n} coefficients, got {len(a)}")
    d = g.dim
    m = [[ZERO] * d for _ in range(d)]
    for i in range(1, g.n + 1):
        m[2 * i + 1][2 * i] = a[i - 1]
        m[2 * i][2 * i + 1] = -a[i - 1]
    return SkewDerivation(a, LinearMap(tuple(tuple(row) for row in m)))


def k_lambda(g: OscillatorAlgebra) -> OrthogonalStructure:
    """The bi-invariant Lorentzian form k(x, x) = 2 x_-1 x_0 +
    sum (x_i^2 + x~_i^2) / lambda_i (validated, signature checked)."""
    d = g.dim
    m = [[ZERO] * d for _ in range(d)]
    m[0][1] = m[1][0] = ONE
    for i in range(1, g.n + 1):
        m[2 * i][2 * i] = ONE / g.lam[i - 1]
        m[2 * i + 1][2 * i + 1] = ONE / g.lam[i - 1]
    k = validate_orthogonal(g.algebra, m)
    if not k.is_lorentzian():
        raise DegenerateForm("k_lambda is not Lorentzian")  # unreachable for positive lambda
    return k


def project_S(g: OscillatorAlgebra, r: Bivector) -> Bivector:
    d = g.dim
    return Bivector(
        tuple(tuple(r.m[i][j] if i >= 2 and j >= 2 else ZERO for j in range(d)) for i in range(d))
    )


def decompose(g: OscillatorAlgebra, r: Bivector):
    """Split r = coef e_0^e_-1 + e_0^u0 + r0 with u0 in S, r0 in
    wedge^2 S.  Raises NotInNormalForm when r pairs e_-1* with S*."""
    residual = [(0, j, r.m[0][j]) for j in g.s_indices if r.m[0][j]]
    if residual:
        raise NotInNormalForm(residual)
    coef = r.m[1][0]
    u0 = Vector(tuple(ZERO if i < 2 else r.m[1][i] for i in range(g.dim)))
    return coef, u0, project_S(g, r)
