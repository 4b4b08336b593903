"""Left-invariant geometry of the dual group of a Yang-Baxter solution.

For r solving the generalized Yang-Baxter equation on an orthogonal Lie
algebra (g, <,>), the dual algebra (g*, [,]_r) carries the metric
<,>* = <,> pulled through phi(u) = <u,.>, and

    nabla*_a b = -ad*_{r#(a)} b

is its Levi-Civita connection (torsion-free by the definition of [,]_r,
metric because every ad*_u is <,>*-skew).  The curvature convention is

    R(a, b) c = nabla*_{[a,b]_r} c - [nabla*_a, nabla*_b] c
              = ad*_{u_r(a,b)} c,     c(u_r(a,b)) = [r,r](a,b,c) / 2,

(note the sign: the negative of the most common textbook convention;
flatness and local symmetry do not depend on it), and

    (nabla*_p R)(a,b)c = nabla*_p(R(a,b)c) - R(nabla*_p a, b)c
                         - R(a, nabla*_p b)c - R(a,b) nabla*_p c.

Classical solutions give R = 0; generalized solutions give nabla*R = 0.
A flat metric is geodesically complete iff the dual group is unimodular,
and then the dual is solvable; completeness is reported as that verdict,
no geodesic is ever integrated.
"""

from dataclasses import dataclass

from . import linalg
from .algebra import Covector, LieAlgebra, Vector
from .bialgebra import DualAlgebra, _lie, cybe_check, gybe_check, r_bracket
from .errors import ConditionViolated, DegenerateMetric, FormulaMismatch, StructureMismatch
from .forms import DualMetric, OrthogonalStructure, dual_metric, validate_orthogonal
from .multivector import Bivector, schouten_self
from .scalar import HALF, ZERO

__all__ = [
    "ConnectionTable",
    "CurvatureTensor",
    "DualGeometryReport",
    "OrthogonalStructure",
    "DualMetric",
    "validate_orthogonal",
    "dual_metric",
    "connection",
    "koszul_connection",
    "u_r_map",
    "curvature",
    "geometry_report",
]


@dataclass(frozen=True)
class ConnectionTable:
    gamma: tuple  # gamma[i][j][k]: nabla_{b_i*} b_j* = sum_k gamma[i][j][k] b_k*

    @property
    def dim(self):
        return len(self.gamma)

    def nabla(self, i, j) -> Covector:
        return Covector(self.gamma[i][j])

    def is_torsion_free(self, dual: DualAlgebra) -> bool:
        d = self.dim
        dc = dual.algebra.c
        return all(
            self.gamma[i][j][k] - self.gamma[j][i][k] == dc[i][j][k]
            for i in range(d)
            for j in range(d)
            for k in range(d)
        )

    def is_metric(self, kstar: DualMetric) -> bool:
        d = self.dim
        K = kstar.m
        for i in range(d):
            for j in range(d):
                for k in range(d):
                    s = ZERO
                    for m in range(d):
                        if self.gamma[i][j][m] and K[m][k]:
                            s += self.gamma[i][j][m] * K[m][k]
                        if self.gamma[i][k][m] and K[m][j]:
                            s += self.gamma[i][k][m] * K[m][j]
                    if s:
                        return False
        return True


def connection(g, r: Bivector, dual: DualAlgebra) -> ConnectionTable:
    """nabla*_a b = -ad*_{r#(a)} b on the dual basis."""
    g = _lie(g)
    d = g.dim
    gamma = []
    for i in range(d):
        sharp_i = Vector(tuple(r.m[i][j] for j in range(d)))
        A = g.ad(sharp_i).m
        gamma.append(tuple(tuple(-A[j][k] for k in range(d)) for j in range(d)))
    return ConnectionTable(tuple(gamma))


def koszul_connection(dual: DualAlgebra, kstar: DualMetric) -> ConnectionTable:
    """Independent Levi-Civita oracle for a left-invariant metric:
    2 <nabla_a b, c> = <[a,b],c> - <[b,c],a> + <[c,a],b>."""
    d = dual.algebra.dim
    dc = dual.algebra.c
    K = [list(row) for row in kstar.m]
    try:
        Kinv = linalg.inverse(K)
    except ValueError as exc:
        raise DegenerateMetric("dual metric is singular") from exc

    def pair(x, k):
        return sum((x[m] * K[m][k] for m in range(d) if x[m]), ZERO)

    gamma = []
    for i in range(d):
        rows = []
        for j in range(d):
            rhs = [
                HALF * (pair(dc[i][j], k) - pair(dc[j][k], i) + pair(dc[k][i], j))
                for k in range(d)
            ]
            rows.append(tuple(linalg.mat_vec(Kinv, rhs)))
        gamma.append(tuple(rows))
    return ConnectionTable(tuple(gamma))


def u_r_map(g, r: Bivector, a: Covector, b: Covector) -> Vector:
    """The vector with c(u_r(a,b)) = [r,r](a,b,c) / 2 for all c."""
    g = _lie(g)
    T = schouten_self(g, r)
    d = g.dim
    out = [ZERO] * d
    for i, ai in enumerate(a.c):
        if not ai:
            continue
        for j, bj in enumerate(b.c):
            if not bj:
                continue
            row = T.t[i][j]
            for k in range(d):
                if row[k]:
                    out[k] += HALF * ai * bj * row[k]
    return Vector(tuple(out))


@dataclass(frozen=True)
class CurvatureTensor:
    riem: tuple  # R(b_i*, b_j*) b_k* = sum_l riem[i][j][k][l] b_l*
    nabla_r: tuple  # (nabla*_p R)(b_i*, b_j*) b_k* = sum_l nabla_r[p][i][j][k][l] b_l*

    @property
    def dim(self):
        return len(self.riem)

    def is_flat(self) -> bool:
        return all(not x for pi in self.riem for pj in pi for pk in pj for x in pk)

    def is_locally_symmetric(self) -> bool:
        return all(not x for pp in self.nabla_r for pi in pp for pj in pi for pk in pj for x in pk)


def curvature(g, r: Bivector, dual: DualAlgebra, conn: ConnectionTable) -> CurvatureTensor:
    """Curvature from the commutator formula, cross-checked against
    ad*_{u_r(a,b)} (FormulaMismatch if the two disagree), plus the
    covariant derivative nabla*R."""
    lie = _lie(g)
    d = lie.dim
    dc = dual.algebra.c
    gm = conn.gamma
    T = schouten_self(lie, r)
    riem = []
    for i in range(d):
        plane = []
        for j in range(d):
            # ad route: w = u_r(b_i*, b_j*)
            w = Vector(tuple(HALF * T.t[i][j][k] for k in range(d)))
            Aw = lie.ad(w).m
            rows = []
            for k in range(d):
                row = []
                for l in range(d):
                    s = ZERO
                    for m in range(d):
                        if dc[i][j][m] and gm[m][k][l]:
                            s += dc[i][j][m] * gm[m][k][l]
                        if gm[j][k][m] and gm[i][m][l]:
                            s -= gm[j][k][m] * gm[i][m][l]
                        if gm[i][k][m] and gm[j][m][l]:
                            s += gm[i][k][m] * gm[j][m][l]
                    if s != Aw[k][l]:
                        raise FormulaMismatch(
                            f"curvature formulas disagree at component ({i},{j},{k},{l})"
                        )
                    row.append(s)
                rows.append(tuple(row))
            plane.append(tuple(rows))
        riem.append(tuple(plane))
    nabla = []
    for p in range(d):
        pl_p = []
        for i in range(d):
            pl_i = []
            for j in range(d):
                pl_j = []
                for k in range(d):
                    row = []
                    for l in range(d):
                        s = ZERO
                        for m in range(d):
                            if riem[i][j][k][m] and gm[p][m][l]:
                                s += riem[i][j][k][m] * gm[p][m][l]
                            if gm[p][i][m] and riem[m][j][k][l]:
                                s -= gm[p][i][m] * riem[m][j][k][l]
                            if gm[p][j][m] and riem[i][m][k][l]:
                                s -= gm[p][j][m] * riem[i][m][k][l]
                            if gm[p][k][m] and riem[i][j][m][l]:
                                s -= gm[p][k][m] * riem[i][j][m][l]
                        row.append(s)
                    pl_j.append(tuple(row))
                pl_i.append(tuple(pl_j))
            pl_p.append(tuple(pl_i))
        nabla.append(tuple(pl_p))
    return CurvatureTensor(tuple(riem), tuple(nabla))


@dataclass(frozen=True)
class DualGeometryReport:
    dual: DualAlgebra
    kstar: DualMetric
    connection: ConnectionTable
    curvature: CurvatureTensor
    flat: bool
    locally_symmetric: bool
    unimodular: bool
    solvable: bool
    completeness: str  # "complete" | "incomplete" | "not-determined"
    kernel_dim: int
    kernel_is_abelian_ideal: bool
    sharp_is_homomorphism: bool

    def summary(self) -> dict:
        return {
            "flat": self.flat,
            "locally_symmetric": self.locally_symmetric,
            "unimodular": self.unimodular,
            "solvable": self.solvable,
            "completeness": self.completeness,
            "kernel_dim": self.kernel_dim,
            "kernel_is_abelian_ideal": self.kernel_is_abelian_ideal,
            "sharp_is_homomorphism": self.sharp_is_homomorphism,
        }


def geometry_report(g, k: OrthogonalStructure, r: Bivector) -> DualGeometryReport:
    """Full bundle for a generalized Yang-Baxter solution on an orthogonal
    Lie algebra: dual algebra, dual metric, connection (cross-checked
    against the Koszul oracle), curvature, and the verdicts."""
    lie = _lie(g)
    d = lie.dim
    if not gybe_check(lie, r):
        raise ConditionViolated("bivector does not solve the generalized Yang-Baxter equation")
    is_c = cybe_check(lie, r)
    dual = r_bracket(lie, r)
    kstar = dual_metric(k)
    conn = connection(lie, r, dual)
    if conn.gamma != koszul_connection(dual, kstar).gamma:
        raise StructureMismatch("-ad* connection does not match the Koszul oracle")
    if not conn.is_torsion_free(dual) or not conn.is_metric(kstar):
        raise StructureMismatch("connection is not Levi-Civita")
    curv = curvature(lie, r, dual, conn)
    flat = curv.is_flat()
    locally_symmetric = curv.is_locally_symmetric()
    unimodular = dual.algebra.is_unimodular()
    solvable = dual.algebra.is_solvable()
    if flat:
        completeness = "complete" if unimodular else "incomplete"
    else:
        completeness = "not-determined"

    # exact sequence 0 -> ker r# -> g* -> Im r# -> 0
    sharp_map = [[r.m[i][j] for i in range(d)] for j in range(d)]  # alpha -> R^T alpha
    kernel = linalg.kernel_basis(sharp_map)
    rows, pivots = linalg.rref(kernel) if kernel else ([], [])
    dc = dual.algebra.c
    abelian_ideal = True
    for kv in kernel:
        for j in range(d):
            w = dual.algebra._bracket_raw(kv, dual.algebra._basis_raw(j))
            if any(linalg.reduce_against(rows, pivots, w)):
                abelian_ideal = False
        for kv2 in kernel:
            if any(dual.algebra._bracket_raw(kv, kv2)):
                abelian_ideal = False
    sharp_hom = True
    for i in range(d):
        for j in range(i + 1, d):
            lhs = linalg.mat_vec(sharp_map, dc[i][j])
            rhs = lie._bracket_raw(
                [r.m[i][m] for m in range(d)], [r.m[j][m] for m in range(d)]
            )
            if any(x - y for x, y in zip(lhs, rhs)):
                sharp_hom = False
    if is_c and (not abelian_ideal or not sharp_hom):
        raise StructureMismatch("kernel/image exact sequence fails for a classical solution")
    return DualGeometryReport(
        dual,
        kstar,
        conn,
        curv,
        flat,
        locally_symmetric,
        unimodular,
        solvable,
        completeness,
        len(kernel),
        abelian_ideal,
        sharp_hom,
    )
