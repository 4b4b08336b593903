"""Closed-form solution families and worked examples.

On the (i, j) block of an oscillator algebra write

    r_ij = e_i^e_j,  rc_ij = e~_i^e~_j,  s_ij = e_i^e~_j,
    sc_ij = e~_i^e_j,  t_i = e_i^e~_i,

and the rotated basis

    E = s + sc,  Ec = -r + rc,  F = -s + sc,  Fc = r + rc,

on which J_a† acts by E -> (a_i+a_j) Ec, Ec -> -(a_i+a_j) E,
F -> (a_j-a_i) Fc, Fc -> (a_i-a_j) F.  The dimension-4 and dimension-6
families below enumerate every bialgebra / Yang-Baxter solution in those
dimensions; block sums over disjoint index pairs and the isotropic-image
construction give large families in any dimension.
"""

import json
import os
from dataclasses import dataclass

from . import linalg
from .algebra import Vector, sl2
from .bialgebra import BialgebraParams, bialgebra_cocycle, cybe_reduced_residual
from .errors import (
    BadIndices,
    ConstraintViolated,
    DegenerateMu,
    NotIsotropic,
    OverlappingIndices,
    StructureMismatch,
)
from .forms import OrthogonalStructure, validate_orthogonal
from .multivector import Bivector, j_dag, wedge
from .oscillator import OscillatorAlgebra, build_oscillator, j_a, omega_pair
from .scalar import HALF, ONE, ZERO, Q, scalar, scalar_str

def data_dir() -> str:
    return os.environ.get("OSCYBE_DATA_DIR", os.path.join(os.path.dirname(__file__), "data"))


def block_basis(g: OscillatorAlgebra, i: int, j: int) -> dict:
    """The ten bivectors attached to the index pair 1 <= i < j <= n."""
    if not (1 <= i < j <= g.n):
        raise BadIndices(f"need 1 <= i < j <= {g.n}, got ({i}, {j})")
    d = g.dim
    ei, eci = g.e(i), g.ec(i)
    ej, ecj = g.e(j), g.ec(j)

    def bv(a, b):
        return Bivector.from_entries(d, {(a, b): ONE})

    r = bv(ei, ej)
    rc = bv(eci, ecj)
    s = bv(ei, ecj)
    sc = bv(eci, ej)
    return {
        "r": r,
        "rc": rc,
        "s": s,
        "sc": sc,
        "ti": bv(ei, eci),
        "tj": bv(ej, ecj),
        "E": s + sc,
        "Ec": -ONE * r + rc,
        "F": -ONE * s + sc,
        "Fc": r + rc,
    }


def t_i(g: OscillatorAlgebra, i: int) -> Bivector:
    if not (1 <= i <= g.n):
        raise BadIndices(f"need 1 <= i <= {g.n}, got {i}")
    return Bivector.from_entries(g.dim, {(g.e(i), g.ec(i)): ONE})


def e0_wedge(g: OscillatorAlgebra, u: Vector) -> Bivector:
    return wedge(g.basis_vector(1), u)


# ---- dimension 4 -------------------------------------------------------


def dim4_family(g: OscillatorAlgebra, kind: str, **params):
    """dim-4 families: every bialgebra is (alpha t_1, u0, a); every
    generalized solution is e_0^u + alpha t_1; every classical solution is
    e_0^u."""
    if g.n != 1:
        raise BadIndices("dimension-4 family needs n = 1")
    if kind == "bialgebra":
        p = BialgebraParams(
            scalar(params.get("alpha", 0)) * t_i(g, 1),
            params.get("u0", Vector.zero(g.dim)),
            (scalar(params.get("a", 0)),),
        )
        return p, bialgebra_cocycle(g, p)
    if kind == "gybe":
        return e0_wedge(g, params["u"]) + scalar(params.get("alpha", 0)) * t_i(g, 1)
    if kind == "cybe":
        return e0_wedge(g, params["u"])
    raise ValueError(f"unknown kind {kind!r}")


# ---- dimension 6 -------------------------------------------------------


def dim6_family(g: OscillatorAlgebra, kind: str, subcase: str, **params):
    """dim-6 families (n = 2).

    bialgebra subcases (returning (params, cocycle)):
      a: r = c1 t1 + c2 t2, any a = (a1, a2);
      b: r = d E + dc Ec + c (t1 - t2), a = (s, -s);
      c: r = d F + dc Fc + c (t1 - t2), a = (s, s);
      d: r = d E + dc Ec + b F + bc Fc + c (t1 - t2), a = 0.
    gybe subcases (returning a bivector):
      t: e_0^u + c1 t1 + c2 t2, u anywhere;
      ef: e_0^u + a E + ac Ec + b F + bc Fc + c (t1 - t2), u in S.
    cybe subcases:
      u: e_0^u, u anywhere;
      ef: as gybe "ef" but constrained to c^2 = a^2 + ac^2 - b^2 - bc^2.
    """
    if g.n != 2:
        raise BadIndices("dimension-6 family needs n = 2")
    bb = block_basis(g, 1, 2)
    t1, t2 = bb["ti"], bb["tj"]

    def sc(name, default=0):
        return scalar(params.get(name, default))

    if kind == "bialgebra":
        u0 = params.get("u0", Vector.zero(g.dim))
        c = sc("c")
        if subcase == "a":
            r = sc("c1") * t1 + sc("c2") * t2
            a = (sc("a1"), sc("a2"))
        elif subcase == "b":
            r = sc("d") * bb["E"] + sc("dc") * bb["Ec"] + c * (t1 - t2)
            a = (sc("s"), -sc("s"))
        elif subcase == "c":
            r = sc("d") * bb["F"] + sc("dc") * bb["Fc"] + c * (t1 - t2)
            a = (sc("s"), sc("s"))
        elif subcase == "d":
            r = (
                sc("d") * bb["E"]
                + sc("dc") * bb["Ec"]
                + sc("b") * bb["F"]
                + sc("bc") * bb["Fc"]
                + c * (t1 - t2)
            )
            a = (ZERO, ZERO)
        else:
            raise ValueError(f"unknown bialgebra subcase {subcase!r}")
        p = BialgebraParams(r, u0, a)
        return p, bialgebra_cocycle(g, p)

    if kind == "gybe":
        u = params["u"]
        if subcase == "t":
            return e0_wedge(g, u) + sc("c1") * t1 + sc("c2") * t2
        if subcase == "ef":
            if not g.in_S(u):
                raise ConstraintViolated("u must lie in S for the ef family")
            return (
                e0_wedge(g, u)
                + sc("a") * bb["E"]
                + sc("ac") * bb["Ec"]
                + sc("b") * bb["F"]
                + sc("bc") * bb["Fc"]
                + sc("c") * (t1 - t2)
            )
        raise ValueError(f"unknown gybe subcase {subcase!r}")

    if kind == "cybe":
        u = params["u"]
        if subcase == "u":
            return e0_wedge(g, u)
        if subcase == "ef":
            if not g.in_S(u):
                raise ConstraintViolated("u must lie in S for the ef family")
            a, ac, b, bc, c = sc("a"), sc("ac"), sc("b"), sc("bc"), sc("c")
            if c * c != a * a + ac * ac - b * b - bc * bc:
                raise ConstraintViolated("c^2 = a^2 + ac^2 - b^2 - bc^2 fails")
            return (
                e0_wedge(g, u)
                + a * bb["E"]
                + ac * bb["Ec"]
                + b * bb["F"]
                + bc * bb["Fc"]
                + c * (t1 - t2)
            )
        raise ValueError(f"unknown cybe subcase {subcase!r}")

    raise ValueError(f"unknown kind {kind!r}")


def block_sum(g: OscillatorAlgebra, r1: Bivector, pair1, r2: Bivector, pair2) -> Bivector:
    """Sum of two solutions supported on disjoint index pairs; solves the
    same equation as the summands."""
    if set(pair1) & set(pair2):
        raise OverlappingIndices(f"index pairs {pair1} and {pair2} overlap")

    def check_support(r, pair):
        allowed = set()
        for i in pair:
            if not (1 <= i <= g.n):
                raise BadIndices(f"index {i} out of range")
            allowed |= {g.e(i), g.ec(i)}
        for i, j, _ in r.entries():
            if i not in allowed or j not in allowed:
                raise BadIndices(f"entry ({i}, {j}) outside the block of pair {pair}")

    check_support(r1, pair1)
    check_support(r2, pair2)
    return r1 + r2


def isotropic_solution(g: OscillatorAlgebra, f_basis, mu) -> Bivector:
    """Classical solution built from an even-dimensional omega-isotropic
    subspace F of S and a nondegenerate skew form mu on it:
    r0(a, b) = b(mu# i*(a)), so Im r0# = F."""
    m = len(f_basis)
    if m == 0 or m % 2:
        raise NotIsotropic("F must have positive even dimension")
    for f in f_basis:
        if not g.in_S(f):
            raise NotIsotropic("F must lie inside S")
    for x in f_basis:
        for y in f_basis:
            if g.omega_form(x, y):
                raise NotIsotropic("basis is not omega-isotropic")
    rows = [list(f.c) for f in f_basis]
    if linalg.rank(rows) != m:
        raise NotIsotropic("basis vectors are linearly dependent")
    mu = [[scalar(x) for x in row] for row in mu]
    if len(mu) != m or any(len(row) != m for row in mu):
        raise DegenerateMu("mu has the wrong size")
    for i in range(m):
        for j in range(m):
            if mu[i][j] != -mu[j][i]:
                raise DegenerateMu("mu is not skew-symmetric")
    try:
        minv = linalg.inverse(mu)
    except ValueError as exc:
        raise DegenerateMu("mu is degenerate") from exc
    d = g.dim
    out = [[ZERO] * d for _ in range(d)]
    for a in range(m):
        for b in range(m):
            if minv[a][b]:
                fb, fa = rows[b], rows[a]
                for x in range(d):
                    if fb[x]:
                        for y in range(d):
                            if fa[y]:
                                out[x][y] += minv[a][b] * fb[x] * fa[y]
    r0 = Bivector.from_matrix(out)
    if not cybe_reduced_residual(g, r0, ZERO).is_zero():
        raise StructureMismatch("isotropic construction failed its own residual check")
    return r0


# ---- the omega-pairing table -------------------------------------------


@dataclass(frozen=True)
class TableReport:
    checks: int
    failures: tuple

    @property
    def passed(self):
        return not self.failures


def verify_pairing_table(g: OscillatorAlgebra, a_samples=None) -> TableReport:
    """Check every displayed pairing identity and every J†/ad† eigenvalue
    relation on the E/F basis, for all 1 <= i < j <= n."""
    checks = 0
    failures = []

    def expect(name, got, want):
        nonlocal checks
        checks += 1
        if not (got - want).is_zero():
            failures.append(name)

    if a_samples is None:
        a_samples = [
            tuple(g.lam),
            (ONE,) * g.n,
            tuple(Q(k + 1) for k in range(g.n)),
            tuple(Q(-3) if k % 2 else HALF for k in range(g.n)),
        ]
    zero = Bivector.zero(g.dim)
    for i in range(1, g.n + 1):
        for j in range(i + 1, g.n + 1):
            bb = block_basis(g, i, j)
            r, rc, s, sc_ = bb["r"], bb["rc"], bb["s"], bb["sc"]
            ti, tj = bb["ti"], bb["tj"]
            E, Ec, F, Fc = bb["E"], bb["Ec"], bb["F"], bb["Fc"]
            tag = f"({i},{j})"
            for name, x in (("r", r), ("rc", rc), ("s", s), ("sc", sc_)):
                expect(f"omega_{name},{name}{tag}", omega_pair(g, x, x), zero)
            for name, x, y in (
                ("r,s", r, s),
                ("r,sc", r, sc_),
                ("rc,s", rc, s),
                ("rc,sc", rc, sc_),
            ):
                expect(f"omega_{name}{tag}", omega_pair(g, x, y), zero)
            half_tt = HALF * (ti + tj)
            expect(f"omega_r,rc{tag}", omega_pair(g, r, rc), half_tt)
            expect(f"omega_s,sc{tag}", omega_pair(g, s, sc_), -ONE * half_tt)
            for tname, t in (("ti", ti), ("tj", tj)):
                expect(f"omega_{tname},r{tag}", omega_pair(g, t, r), HALF * r)
                expect(f"omega_{tname},rc{tag}", omega_pair(g, t, rc), HALF * rc)
                expect(f"omega_{tname},s{tag}", omega_pair(g, t, s), HALF * s)
                expect(f"omega_{tname},sc{tag}", omega_pair(g, t, sc_), HALF * sc_)
            expect(f"omega_ti,ti{tag}", omega_pair(g, ti, ti), ti)
            expect(f"omega_tj,tj{tag}", omega_pair(g, tj, tj), tj)
            expect(f"omega_ti,tj{tag}", omega_pair(g, ti, tj), zero)
            # the rotated quadruple: pairwise orthogonal, squares +-(ti+tj)
            quad = [("E", E), ("Ec", Ec), ("F", F), ("Fc", Fc)]
            for ai in range(4):
                for bj in range(ai + 1, 4):
                    expect(
                        f"omega_{quad[ai][0]},{quad[bj][0]}{tag}",
                        omega_pair(g, quad[ai][1], quad[bj][1]),
                        zero,
                    )
            tt = ti + tj
            expect(f"omega_E,E{tag}", omega_pair(g, E, E), -ONE * tt)
            expect(f"omega_Ec,Ec{tag}", omega_pair(g, Ec, Ec), -ONE * tt)
            expect(f"omega_F,F{tag}", omega_pair(g, F, F), tt)
            expect(f"omega_Fc,Fc{tag}", omega_pair(g, Fc, Fc), tt)
            # eigenvalue relations for J_a (ad_{e-1} is the a = lambda case)
            for a in a_samples:
                J = j_a(g, a).map
                ai_, aj_ = a[i - 1], a[j - 1]
                expect(f"Jdag_E{tag},a={a}", j_dag(J, E), (ai_ + aj_) * Ec)
                expect(f"Jdag_Ec{tag},a={a}", j_dag(J, Ec), -(ai_ + aj_) * E)
                expect(f"Jdag_F{tag},a={a}", j_dag(J, F), (aj_ - ai_) * Fc)
                expect(f"Jdag_Fc{tag},a={a}", j_dag(J, Fc), (ai_ - aj_) * F)
    return TableReport(checks, tuple(failures))


# ---- worked examples ---------------------------------------------------


@dataclass(frozen=True)
class ExampleBundle:
    algebra: object  # OscillatorAlgebra or LieAlgebra
    r: Bivector
    form: OrthogonalStructure
    golden: dict | None  # expected dual brackets, when shipped as data
    expected: dict


def _load_golden(name):
    path = os.path.join(data_dir(), name)
    if not os.path.exists(path):
        return None
    with open(path, encoding="utf-8") as fh:
        return json.load(fh)


def flat_lorentzian_bundle(lam=(1, 2)) -> ExampleBundle:
    """The 6-dimensional flat complete example: r = e_0^e_1 + E_12 + t_1
    - t_2 on G_lambda with the bi-invariant Lorentzian form."""
    l1, l2 = scalar(lam[0]), scalar(lam[1])
    if not l1 < l2:
        raise ConstraintViolated("need lambda_1 < lambda_2")
    g = build_oscillator((l1, l2))
    bb = block_basis(g, 1, 2)
    r = e0_wedge(g, g.basis_vector(g.e(1))) + bb["E"] + bb["ti"] - bb["tj"]
    from .oscillator import k_lambda

    k = k_lambda(g)
    golden = _load_golden(f"flat_example_lambda_{scalar_str(l1)}_{scalar_str(l2)}.json")
    expected = {
        "cybe": True,
        "flat": True,
        "locally_symmetric": True,
        "unimodular": True,
        "solvable": True,
        "completeness": "complete",
    }
    return ExampleBundle(g, r, k, golden, expected)


def sl2_trace_form() -> OrthogonalStructure:
    """k(a, b) = tr(ab) on sl(2, R): matrix [[2,0,0],[0,0,-1],[0,-1,0]]."""
    Z = ZERO
    m = [[Q(2), Z, Z], [Z, Z, Q(-1)], [Z, Q(-1), Z]]
    return validate_orthogonal(sl2(), m)


def sl2_r_matrix(a, b, c) -> Bivector:
    """Skew map g* -> g with matrix [[0,a,b],[-a,0,c],[-b,-c,0]] (columns
    are the images of e_1*, e_2*, e_3*), encoded as the bivector whose
    sharp map it is."""
    a, b, c = scalar(a), scalar(b), scalar(c)
    return Bivector.from_entries(3, {(0, 1): -a, (0, 2): -b, (1, 2): -c})


def sl2_bundle(a, b, c) -> ExampleBundle:
    """sl(2, R) with the trace form; classical solution iff
    4ab + c^2 = 0, and then the dual metric is flat and incomplete for
    (a, b, c) != 0."""
    a, b, c = scalar(a), scalar(b), scalar(c)
    g = sl2()
    r = sl2_r_matrix(a, b, c)
    k = sl2_trace_form()
    is_sol = 4 * a * b + c * c == 0
    golden_all = _load_golden("sl2_duals.json")
    key = f"{scalar_str(a)},{scalar_str(b)},{scalar_str(c)}"
    golden = golden_all.get(key) if golden_all else None
    nonzero = any((a, b, c))
    expected = {"cybe": is_sol}
    if is_sol:
        expected.update(
            {
                "flat": True,
                "locally_symmetric": True,
                "unimodular": not nonzero,
                "solvable": True,
                "completeness": "complete" if not nonzero else "incomplete",
            }
        )
    return ExampleBundle(g, r, k, golden, expected)
