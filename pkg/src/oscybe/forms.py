"""Ad-invariant symmetric bilinear forms and their dual forms.

An orthogonal (quadratic) Lie algebra carries a nondegenerate symmetric
form <,> with <[u,v],w> + <v,[u,w]> = 0.  The induced form on the dual is
<a,b>* = <phi^-1 a, phi^-1 b> with phi(u) = <u,.>, i.e. the inverse
matrix.
"""

from dataclasses import dataclass

from . import linalg
from .algebra import Covector, LieAlgebra, Vector
from .errors import DegenerateForm, NotAdInvariant
from .scalar import ZERO, scalar


@dataclass(frozen=True)
class OrthogonalStructure:
    m: tuple

    @property
    def dim(self):
        return len(self.m)

    def pair(self, u: Vector, v: Vector):
        s = ZERO
        for i, ui in enumerate(u.c):
            if ui:
                row = self.m[i]
                for j, vj in enumerate(v.c):
                    if vj and row[j]:
                        s += ui * row[j] * vj
        return s

    def flat(self, u: Vector) -> Covector:
        """phi(u) = <u, .>."""
        return Covector(tuple(linalg.mat_vec(self.m, list(u.c))))

    def signature(self):
        return linalg.signature([list(row) for row in self.m])

    def is_lorentzian(self):
        pos, neg, zero = self.signature()
        return neg == 1 and zero == 0


@dataclass(frozen=True)
class DualMetric:
    m: tuple

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


def validate_orthogonal(g: LieAlgebra, form) -> OrthogonalStructure:
    """Check symmetry, nondegeneracy (exact rank) and ad-invariance on all
    basis triples; reports the first violated triple."""
    m = [[scalar(x) for x in row] for row in form]
    d = g.dim
    if len(m) != d or any(len(row) != d for row in m):
        raise ValueError("form size does not match the algebra dimension")
    for i in range(d):
        for j in range(i + 1, d):
            if m[i][j] != m[j][i]:
                raise ValueError(f"form is not symmetric at ({i}, {j})")
    if linalg.rank(m) != d:
        raise DegenerateForm("form has a nontrivial kernel")
    for u in range(d):
        for v in range(d):
            cuv = g.c[u][v]
            for w in range(d):
                # <[u,v],w> + <v,[u,w]> must vanish
                s = ZERO
                for k in range(d):
                    if cuv[k] and m[k][w]:
                        s += cuv[k] * m[k][w]
                    cuw = g.c[u][w][k]
                    if cuw and m[v][k]:
                        s += m[v][k] * cuw
                if s:
                    raise NotAdInvariant(u, v, w)
    return OrthogonalStructure(tuple(tuple(row) for row in m))


def dual_metric(k: OrthogonalStructure) -> DualMetric:
    inv = linalg.inverse([list(row) for row in k.m])
    return DualMetric(tuple(tuple(row) for row in inv))
