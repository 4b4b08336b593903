"""Lie algebras over exact rationals: structure constants, adjoint and
coadjoint actions, and the standard structural invariants (derived series,
center, solvability, unimodularity).

Conventions fixed once here and used everywhere:

* vectors carry components on the primal basis b_i, covectors on the dual
  basis b_i*; the pairing ``alpha(v) = sum alpha_i v_i`` is the only
  primal/dual bridge;
* the coadjoint action is ``(ad*_u alpha)(v) = alpha([u, v])``.  This is
  the sign that matches the adjoint table of the oscillator algebras; the
  opposite sign is common elsewhere.
"""

from dataclasses import dataclass

from . import linalg
from .errors import AntisymmetryViolation, JacobiViolation
from .scalar import ONE, ZERO, Q, scalar


@dataclass(frozen=True)
class Vector:
    c: tuple

    @classmethod
    def zero(cls, dim):
        return cls((ZERO,) * dim)

    @classmethod
    def basis(cls, dim, i):
        return cls(tuple(ONE if j == i else ZERO for j in range(dim)))

    @classmethod
    def of(cls, comps):
        return cls(tuple(scalar(x) for x in comps))

    @property
    def dim(self):
        return len(self.c)

    def is_zero(self):
        return not any(self.c)

    def __add__(self, other):
        return Vector(tuple(a + b for a, b in zip(self.c, other.c)))

    def __sub__(self, other):
        return Vector(tuple(a - b for a, b in zip(self.c, other.c)))

    def __neg__(self):
        return Vector(tuple(-a for a in self.c))

    def __rmul__(self, s):
        s = Q(s)
        return Vector(tuple(s * a for a in self.c))

    def __repr__(self):
        return f"Vector({[str(x) for x in self.c]})"


@dataclass(frozen=True)
class Covector:
    c: tuple

    @classmethod
    def zero(cls, dim):
        return cls((ZERO,) * dim)

    @classmethod
    def basis(cls, dim, i):
        return cls(tuple(ONE if j == i else ZERO for j in range(dim)))

    @classmethod
    def of(cls, comps):
        return cls(tuple(scalar(x) for x in comps))

    @property
    def dim(self):
        return len(self.c)

    def is_zero(self):
        return not any(self.c)

    def __call__(self, v: Vector):
        s = ZERO
        for a, x in zip(self.c, v.c):
            if a and x:
                s += a * x
        return s

    def __add__(self, other):
        return Covector(tuple(a + b for a, b in zip(self.c, other.c)))

    def __sub__(self, other):
        return Covector(tuple(a - b for a, b in zip(self.c, other.c)))

    def __neg__(self):
        return Covector(tuple(-a for a in self.c))

    def __rmul__(self, s):
        s = Q(s)
        return Covector(tuple(s * a for a in self.c))

    def __repr__(self):
        return f"Covector({[str(x) for x in self.c]})"


@dataclass(frozen=True)
class LinearMap:
    """Endomorphism acting on vectors; the dual action on covectors is by
    the transpose, so that (J* alpha)(v) = alpha(J v)."""

    m: tuple

    @classmethod
    def zero(cls, dim):
        return cls(tuple((ZERO,) * dim for _ in range(dim)))

    @classmethod
    def identity(cls, dim):
        return cls(tuple(tuple(ONE if i == j else ZERO for j in range(dim)) for i in range(dim)))

    @classmethod
    def from_rows(cls, rows):
        return cls(tuple(tuple(scalar(x) for x in row) for row in rows))

    @classmethod
    def from_images(cls, images):
        """Map sending basis vector j to images[j]."""
        dim = len(images)
        return cls(tuple(tuple(images[j].c[i] for j in range(dim)) for i in range(dim)))

    @property
    def dim(self):
        return len(self.m)

    def __call__(self, v: Vector) -> Vector:
        return Vector(tuple(linalg.mat_vec(self.m, v.c)))

    def dual(self, a: Covector) -> Covector:
        cols = len(self.m)
        return Covector(tuple(sum((a.c[i] * self.m[i][j] for i in range(cols) if a.c[i]), ZERO) for j in range(cols)))

    def compose(self, other: "LinearMap") -> "LinearMap":
        return LinearMap(tuple(tuple(row) for row in linalg.mat_mul(self.m, other.m)))

    def __add__(self, other):
        return LinearMap(tuple(tuple(a + b for a, b in zip(ra, rb)) for ra, rb in zip(self.m, other.m)))

    def __sub__(self, other):
        return LinearMap(tuple(tuple(a - b for a, b in zip(ra, rb)) for ra, rb in zip(self.m, other.m)))

    def __rmul__(self, s):
        s = Q(s)
        return LinearMap(tuple(tuple(s * a for a in row) for row in self.m))

    def is_zero(self):
        return all(not a for row in self.m for a in row)

    def trace(self):
        return sum((self.m[i][i] for i in range(len(self.m))), ZERO)


class LieAlgebra:
    """Finite-dimensional Lie algebra given by exact structure constants
    c[i][j] = coordinates of [b_i, b_j] on a labeled basis."""

    def __init__(self, c, labels=None, check=True):
        self.dim = len(c)
        self.c = tuple(tuple(tuple(scalar(x) for x in cij) for cij in ci) for ci in c)
        self.labels = tuple(labels) if labels is not None else tuple(f"b{i}" for i in range(self.dim))
        if len(self.labels) != self.dim:
            raise ValueError("label count does not match dimension")
        # sparse view: (i, j, ((k, coeff), ...)) for i < j with nonzero bracket
        nz = []
        for i in range(self.dim):
            for j in range(i + 1, self.dim):
                items = tuple((k, s) for k, s in enumerate(self.c[i][j]) if s)
                if items:
                    nz.append((i, j, items))
        self._nz = tuple(nz)
        if check:
            self._validate()

    def _validate(self):
        d = self.dim
        for i in range(d):
            if len(self.c[i]) != d or any(len(self.c[i][j]) != d for j in range(d)):
                raise ValueError("structure constant array is not square")
        for i in range(d):
            for j in range(i, d):
                if any(self.c[i][j][k] + self.c[j][i][k] for k in range(d)):
                    raise AntisymmetryViolation(i, j)
        for i in range(d):
            for j in range(i + 1, d):
                for k in range(j + 1, d):
                    res = [
                        a + b + c
                        for a, b, c in zip(
                            self._bracket_raw(self.c[i][j], self._basis_raw(k)),
                            self._bracket_raw(self.c[j][k], self._basis_raw(i)),
                            self._bracket_raw(self.c[k][i], self._basis_raw(j)),
                        )
                    ]
                    if any(res):
                        raise JacobiViolation(i, j, k, res)

    def _basis_raw(self, i):
        v = [ZERO] * self.dim
        v[i] = ONE
        return v

    def _bracket_raw(self, x, y):
        out = [ZERO] * self.dim
        for i, j, items in self._nz:
            t = x[i] * y[j] - x[j] * y[i]
            if t:
                for k, s in items:
                    out[k] += t * s
        return out

    def basis_vector(self, i) -> Vector:
        return Vector.basis(self.dim, i)

    def basis_covector(self, i) -> Covector:
        return Covector.basis(self.dim, i)

    def basis(self):
        return [self.basis_vector(i) for i in range(self.dim)]

    def bracket(self, x: Vector, y: Vector) -> Vector:
        return Vector(tuple(self._bracket_raw(x.c, y.c)))

    def bracket_basis(self, i, j) -> Vector:
        return Vector(self.c[i][j])

    def ad(self, u: Vector) -> LinearMap:
        """Matrix of ad_u = [u, .] acting on vectors."""
        d = self.dim
        cols = [self._bracket_raw(u.c, self._basis_raw(j)) for j in range(d)]
        return LinearMap(tuple(tuple(cols[j][i] for j in range(d)) for i in range(d)))

    def coadjoint(self, u: Vector, alpha: Covector) -> Covector:
        """(ad*_u alpha)(v) = alpha([u, v])."""
        return self.ad(u).dual(alpha)

    # ---- structural invariants -------------------------------------

    def is_abelian(self) -> bool:
        return not self._nz

    def is_unimodular(self) -> bool:
        """tr(ad_x) = 0 for every basis x."""
        for i in range(self.dim):
            if sum((self.c[i][j][j] for j in range(self.dim)), ZERO):
                return False
        return True

    def center(self) -> list:
        """Basis of {u : [u, v] = 0 for all v}."""
        d = self.dim
        rows = []
        for j in range(d):
            for k in range(d):
                rows.append([self.c[i][j][k] for i in range(d)])
        return [Vector(tuple(v)) for v in linalg.kernel_basis(rows)]

    def _span_brackets(self, basA, basB) -> list:
        vecs = []
        for a in basA:
            for b in basB:
                w = self._bracket_raw(a, b)
                if any(w):
                    vecs.append(w)
        return linalg.row_space_basis(vecs)

    def derived_series(self) -> list:
        """Bases of g = D0 >= D1 = [D0, D0] >= ... until stable."""
        series = [[self._basis_raw(i) for i in range(self.dim)]]
        while True:
            cur = series[-1]
            nxt = self._span_brackets(cur, cur)
            if len(nxt) == len(cur):
                break
            series.append(nxt)
            if not nxt:
                break
        return [[Vector(tuple(v)) for v in level] for level in series]

    def lower_central_series(self) -> list:
        full = [self._basis_raw(i) for i in range(self.dim)]
        series = [full]
        while True:
            cur = series[-1]
            nxt = self._span_brackets(full, cur)
            if len(nxt) == len(cur):
                break
            series.append(nxt)
            if not nxt:
                break
        return [[Vector(tuple(v)) for v in level] for level in series]

    def is_solvable(self) -> bool:
        return len(self.derived_series()[-1]) == 0

    def is_nilpotent(self) -> bool:
        return len(self.lower_central_series()[-1]) == 0

    def structure_report(self) -> dict:
        return {
            "dim": self.dim,
            "abelian": self.is_abelian(),
            "derived_dims": [len(level) for level in self.derived_series()],
            "lower_central_dims": [len(level) for level in self.lower_central_series()],
            "center_dim": len(self.center()),
            "solvable": self.is_solvable(),
            "nilpotent": self.is_nilpotent(),
            "unimodular": self.is_unimodular(),
        }

    # ---- subspaces ---------------------------------------------------

    def is_ideal(self, vectors) -> bool:
        rows, pivots = linalg.rref([list(v.c) for v in vectors])
        for i in range(self.dim):
            for v in vectors:
                w = self._bracket_raw(self._basis_raw(i), v.c)
                if any(linalg.reduce_against(rows, pivots, w)):
                    return False
        return True

    def subalgebra(self, vectors) -> "LieAlgebra":
        """The bracket expressed in the coordinates of the given (closed)
        basis; raises ValueError when the span is not closed."""
        B = [list(v.c) for v in vectors]
        Bt = linalg.transpose(B)
        m = len(vectors)
        c = [[None] * m for _ in range(m)]
        for i in range(m):
            for j in range(m):
                w = self._bracket_raw(B[i], B[j])
                x = linalg.solve(Bt, w)
                if x is None:
                    raise ValueError("span is not closed under the bracket")
                c[i][j] = x
        return LieAlgebra(c, check=False)

    def __eq__(self, other):
        return isinstance(other, LieAlgebra) and self.c == other.c and self.labels == other.labels

    def __repr__(self):
        return f"LieAlgebra(dim={self.dim}, labels={list(self.labels)})"


def validate_lie_algebra(c, labels=None) -> LieAlgebra:
    """Validate antisymmetry and Jacobi; raises AntisymmetryViolation or
    JacobiViolation (with the first offending triple and its residual)."""
    return LieAlgebra(c, labels=labels, check=True)


def is_heisenberg(g: LieAlgebra) -> bool:
    """Structural test for h_{2m+1}: odd dimension, two-step nilpotent,
    derived algebra = center of dimension 1, and the induced skew form on
    g / center nondegenerate."""
    d = g.dim
    if d % 2 == 0:
        return False
    center = g.center()
    derived = g.derived_series()
    if len(derived) < 2 or len(derived[1]) != 1 or len(center) != 1:
        return False
    rows, pivots = linalg.rref([list(center[0].c)])
    if any(linalg.reduce_against(rows, pivots, list(derived[1][0].c))):
        return False
    z = derived[1][0].c
    zi = next(k for k, x in enumerate(z) if x)
    phi = [[g.c[i][j][zi] / z[zi] for j in range(d)] for i in range(d)]
    if linalg.rank(phi) != d - 1:
        return False
    # two-step: [g, [g, g]] = 0
    lcs = g.lower_central_series()
    return len(lcs) >= 2 and (len(lcs) == 2 or len(lcs[2]) == 0)


# ---- stock algebras used throughout the tests ------------------------


def abelian(dim: int) -> LieAlgebra:
    z = [[[ZERO] * dim for _ in range(dim)] for _ in range(dim)]
    return LieAlgebra(z, check=False)


def heisenberg(m: int) -> LieAlgebra:
    """h_{2m+1} with [x_i, y_i] = z on basis (x_1, y_1, ..., x_m, y_m, z)."""
    d = 2 * m + 1
    c = [[[ZERO] * d for _ in range(d)] for _ in range(d)]
    for i in range(m):
        c[2 * i][2 * i + 1][d - 1] = ONE
        c[2 * i + 1][2 * i][d - 1] = -ONE
    labels = [f"{nm}{i + 1}" for i in range(m) for nm in ("x", "y")] + ["z"]
    return LieAlgebra(c, labels=labels)


def sl2() -> LieAlgebra:
    """sl(2, R) on (e1, e2, e3) with [e1,e2] = 2e2, [e1,e3] = -2e3,
    [e2,e3] = -e1."""
    Z, O = ZERO, ONE
    c = [[[Z] * 3 for _ in range(3)] for _ in range(3)]
    c[0][1][1], c[1][0][1] = Q(2), Q(-2)
    c[0][2][2], c[2][0][2] = Q(-2), Q(2)
    c[1][2][0], c[2][1][0] = -O, O
    return LieAlgebra(c, labels=("e1", "e2", "e3"))
