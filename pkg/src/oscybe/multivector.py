"""Skew multivectors and the Schouten calculus.

A bivector r is stored as the full skew matrix R with
``r(alpha, beta) = alpha^T R beta`` and the convention
``r = sum_{i<j} R_ij b_i ^ b_j``; the sharp map is then a plain matrix
product, ``(r# alpha)_j = sum_i alpha_i R_ij``, and satisfies the defining
relation ``beta(r# alpha) = r(alpha, beta)``.

The self Schouten bracket is computed from the sharp map,

    [r, r](a, b, c) = 2 a([r#b, r#c]) + 2 b([r#c, r#a]) + 2 c([r#a, r#b]),

and independently (for cross-checking) by expanding r into decomposables
and applying the Leibniz rule

    [x^y, z^w] = [x,z]^y^w - [x,w]^y^z - [y,z]^x^w + [y,w]^x^z.
"""

from dataclasses import dataclass

from .algebra import Covector, LieAlgebra, LinearMap, Vector
from .scalar import ONE, TWO, ZERO, Q, scalar


@dataclass(frozen=True)
class Bivector:
    m: tuple

    @classmethod
    def zero(cls, dim):
        return cls(tuple((ZERO,) * dim for _ in range(dim)))

    @classmethod
    def from_entries(cls, dim, entries):
        """Build from {(i, j): value} given for i < j."""
        m = [[ZERO] * dim for _ in range(dim)]
        for (i, j), v in entries.items():
            if i == j:
                raise ValueError("diagonal bivector entry")
            v = scalar(v)
            m[i][j] += v
            m[j][i] -= v
        return cls(tuple(tuple(row) for row in m))

    @classmethod
    def from_matrix(cls, m):
        rows = tuple(tuple(scalar(x) for x in row) for row in m)
        d = len(rows)
        for i in range(d):
            for j in range(i, d):
                if rows[i][j] != -rows[j][i]:
                    raise ValueError(f"matrix is not skew at ({i}, {j})")
        return cls(rows)

    @property
    def dim(self):
        return len(self.m)

    def pair(self, a: Covector, b: Covector):
        s = ZERO
        for i, ai in enumerate(a.c):
            if ai:
                row = self.m[i]
                for j, bj in enumerate(b.c):
                    if bj and row[j]:
                        s += ai * row[j] * bj
        return s

    def sharp(self, a: Covector) -> Vector:
        d = self.dim
        out = [ZERO] * d
        for i, ai in enumerate(a.c):
            if ai:
                row = self.m[i]
                for j in range(d):
                    if row[j]:
                        out[j] += ai * row[j]
        return Vector(tuple(out))

    def sharp_matrix(self) -> list:
        """Matrix of r#: covector components -> vector components (the
        transpose of m)."""
        return [list(col) for col in zip(*self.m)]

    def entries(self):
        d = self.dim
        for i in range(d):
            for j in range(i + 1, d):
                if self.m[i][j]:
                    yield i, j, self.m[i][j]

    def is_zero(self):
        return all(not x for row in self.m for x in row)

    def __add__(self, other):
        return Bivector(tuple(tuple(a + b for a, b in zip(ra, rb)) for ra, rb in zip(self.m, other.m)))

    def __sub__(self, other):
        return Bivector(tuple(tuple(a - b for a, b in zip(ra, rb)) for ra, rb in zip(self.m, other.m)))

    def __neg__(self):
        return Bivector(tuple(tuple(-a for a in row) for row in self.m))

    def __rmul__(self, s):
        s = Q(s)
        return Bivector(tuple(tuple(s * a for a in row) for row in self.m))

    def __repr__(self):
        terms = [f"{v}*({i}^{j})" for i, j, v in self.entries()]
        return "Bivector(" + (" + ".join(terms) if terms else "0") + ")"


def wedge(x: Vector, y: Vector) -> Bivector:
    d = x.dim
    return Bivector(tuple(tuple(x.c[i] * y.c[j] - x.c[j] * y.c[i] for j in range(d)) for i in range(d)))


@dataclass(frozen=True)
class Trivector:
    t: tuple

    @classmethod
    def zero(cls, dim):
        return cls(tuple(tuple((ZERO,) * dim for _ in range(dim)) for _ in range(dim)))

    @classmethod
    def from_canonical(cls, dim, canon):
        """Build the full antisymmetric array from {(i<j<k): value}."""
        t = [[[ZERO] * dim for _ in range(dim)] for _ in range(dim)]
        for (i, j, k), v in canon.items():
            for (a, b, c), s in (
                ((i, j, k), ONE),
                ((j, k, i), ONE),
                ((k, i, j), ONE),
                ((j, i, k), -ONE),
                ((i, k, j), -ONE),
                ((k, j, i), -ONE),
            ):
                t[a][b][c] += s * v
        return cls(tuple(tuple(tuple(row) for row in plane) for plane in t))

    @property
    def dim(self):
        return len(self.t)

    def pair(self, a: Covector, b: Covector, c: Covector):
        s = ZERO
        for i, ai in enumerate(a.c):
            if not ai:
                continue
            for j, bj in enumerate(b.c):
                if not bj:
                    continue
                row = self.t[i][j]
                for k, ck in enumerate(c.c):
                    if ck and row[k]:
                        s += ai * bj * ck * row[k]
        return s

    def is_zero(self):
        d = self.dim
        for i in range(d):
            for j in range(i + 1, d):
                for k in range(j + 1, d):
                    if self.t[i][j][k]:
                        return False
        return True

    def __add__(self, other):
        return Trivector(
            tuple(
                tuple(tuple(a + b for a, b in zip(ra, rb)) for ra, rb in zip(pa, pb))
                for pa, pb in zip(self.t, other.t)
            )
        )

    def __sub__(self, other):
        return Trivector(
            tuple(
                tuple(tuple(a - b for a, b in zip(ra, rb)) for ra, rb in zip(pa, pb))
                for pa, pb in zip(self.t, other.t)
            )
        )

    def __rmul__(self, s):
        s = Q(s)
        return Trivector(tuple(tuple(tuple(s * a for a in row) for row in plane) for plane in self.t))

    def __repr__(self):
        d = self.dim
        terms = [
            f"{self.t[i][j][k]}*({i}^{j}^{k})"
            for i in range(d)
            for j in range(i + 1, d)
            for k in range(j + 1, d)
            if self.t[i][j][k]
        ]
        return "Trivector(" + (" + ".join(terms) if terms else "0") + ")"


def wedge3(x: Vector, y: Vector, z: Vector) -> Trivector:
    d = x.dim
    canon = {}
    for i in range(d):
        for j in range(i + 1, d):
            for k in range(j + 1, d):
                v = (
                    x.c[i] * (y.c[j] * z.c[k] - y.c[k] * z.c[j])
                    - y.c[i] * (x.c[j] * z.c[k] - x.c[k] * z.c[j])
                    + z.c[i] * (x.c[j] * y.c[k] - x.c[k] * y.c[j])
                )
                if v:
                    canon[(i, j, k)] = v
    return Trivector.from_canonical(d, canon)


def j_dag(J: LinearMap, r: Bivector) -> Bivector:
    """Lift of J to bivectors: (J† r)(a, b) = r(J* a, b) + r(a, J* b).
    In matrices this is J R + R J^T; on decomposables it is the derivation
    J(x)^y + x^J(y)."""
    d = r.dim
    Jm, R = J.m, r.m
    JR = [[sum((Jm[i][k] * R[k][j] for k in range(d) if Jm[i][k]), ZERO) for j in range(d)] for i in range(d)]
    return Bivector(tuple(tuple(JR[i][j] - JR[j][i] for j in range(d)) for i in range(d)))


def ad_dag(g: LieAlgebra, u: Vector, r: Bivector) -> Bivector:
    """j_dag with J = ad_u: the adjoint action extended to bivectors."""
    return j_dag(g.ad(u), r)


def ad_trivector(g: LieAlgebra, u: Vector, T: Trivector) -> Trivector:
    """Adjoint action extended to trivectors as a derivation:
    ad_u(x^y^z) = [u,x]^y^z + x^[u,y]^z + x^y^[u,z]."""
    d = g.dim
    A = g.ad(u).m
    canon = {}
    for i in range(d):
        for j in range(i + 1, d):
            for k in range(j + 1, d):
                s = ZERO
                for m in range(d):
                    if A[i][m]:
                        s += A[i][m] * T.t[m][j][k]
                    if A[j][m]:
                        s += A[j][m] * T.t[i][m][k]
                    if A[k][m]:
                        s += A[k][m] * T.t[i][j][m]
                if s:
                    canon[(i, j, k)] = s
    return Trivector.from_canonical(d, canon)


def ad_trivector_is_zero(g: LieAlgebra, u: Vector, T: Trivector) -> bool:
    d = g.dim
    A = g.ad(u).m
    for i in range(d):
        for j in range(i + 1, d):
            for k in range(j + 1, d):
                s = ZERO
                for m in range(d):
                    if A[i][m]:
                        s += A[i][m] * T.t[m][j][k]
                    if A[j][m]:
                        s += A[j][m] * T.t[i][m][k]
                    if A[k][m]:
                        s += A[k][m] * T.t[i][j][m]
                if s:
                    return False
    return True


def schouten_pair(g: LieAlgebra, r1: Bivector, r2: Bivector) -> Trivector:
    """Polarized Schouten pairing S with S(r, r) = [r, r]:
    S(r1,r2)(a,b,c) = sum_cyc a([r1#b, r2#c] + [r2#b, r1#c])."""
    d = g.dim
    rows1 = [list(col) for col in zip(*r1.m)]  # rows1[i] = r1#(b_i*)
    rows2 = [list(col) for col in zip(*r2.m)]
    C = [[None] * d for _ in range(d)]
    for j in range(d):
        for k in range(j + 1, d):
            w = [
                a + b
                for a, b in zip(g._bracket_raw(rows1[j], rows2[k]), g._bracket_raw(rows2[j], rows1[k]))
            ]
            C[j][k] = w
            C[k][j] = [-x for x in w]
    canon = {}
    for i in range(d):
        for j in range(i + 1, d):
            for k in range(j + 1, d):
                v = C[j][k][i] - C[i][k][j] + C[i][j][k]
                if v:
                    canon[(i, j, k)] = v
    return Trivector.from_canonical(d, canon)


def schouten_self(g: LieAlgebra, r: Bivector) -> Trivector:
    """[r, r] from the sharp-map formula (exact)."""
    d = g.dim
    rows = [list(col) for col in zip(*r.m)]
    B = [[None] * d for _ in range(d)]
    for j in range(d):
        for k in range(j + 1, d):
            B[j][k] = g._bracket_raw(rows[j], rows[k])
            B[k][j] = [-x for x in B[j][k]]
    canon = {}
    for i in range(d):
        for j in range(i + 1, d):
            for k in range(j + 1, d):
                v = B[j][k][i] - B[i][k][j] + B[i][j][k]
                if v:
                    canon[(i, j, k)] = TWO * v
    return Trivector.from_canonical(d, canon)


def schouten_self_decomposable(g: LieAlgebra, r: Bivector) -> Trivector:
    """Independent oracle for [r, r]: expand r = sum R_ij b_i^b_j over
    i < j and apply the Leibniz rule to each pair of decomposables."""
    d = g.dim
    terms = [(i, j, v) for i, j, v in r.entries()]
    acc = {}

    def add_basis_wedge(coeff, vec, a, b):
        # coeff * (vec ^ b_a ^ b_b), vec given by raw components
        if a == b:
            return
        for m, x in enumerate(vec):
            if not x or m == a or m == b:
                continue
            idx, sign = _sort3_sign(m, a, b)
            key = idx
            acc[key] = acc.get(key, ZERO) + sign * coeff * x

    for p, (i, j, cij) in enumerate(terms):
        for q in range(p, len(terms)):
            k, l, ckl = terms[q]
            coeff = cij * ckl if p == q else TWO * cij * ckl
            add_basis_wedge(coeff, g.c[i][k], j, l)
            add_basis_wedge(-coeff, g.c[i][l], j, k)
            add_basis_wedge(-coeff, g.c[j][k], i, l)
            add_basis_wedge(coeff, g.c[j][l], i, k)
    canon = {k: v for k, v in acc.items() if v}
    return Trivector.from_canonical(d, canon)


def _sort3_sign(a, b, c):
    sign = ONE
    if a > b:
        a, b = b, a
        sign = -sign
    if b > c:
        b, c = c, b
        sign = -sign
    if a > b:
        a, b = b, a
        sign = -sign
    return (a, b, c), sign
