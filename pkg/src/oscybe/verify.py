"""The full verification battery.

Each check reproduces one block of the claimed results with exact
arithmetic: validity of the oscillator construction, the Schouten oracle
equivalence, the pairing-table identities, exhaustive small-grid
classification in dimension 4 and for sl(2,R), the sampled
iff-classifications of bialgebras and Yang-Baxter solutions, the dual
structure analysis, the curvature verdicts, and the golden bracket
tables.  Everything is deterministic given the seed, and every equality
is exact (tolerance zero).
"""

import json
import os
import time
from dataclasses import dataclass
from itertools import product

from . import serialize
from .algebra import Vector, heisenberg, is_heisenberg, sl2
from .bialgebra import (
    BialgebraParams,
    analyze_dual_structure,
    bialgebra_cocycle,
    bialgebra_condition_residual,
    coboundary,
    cocycle_check,
    cybe_check,
    cybe_reduced_residual,
    dual_bracket_from_cocycle,
    dual_from_params,
    extract_params,
    gybe_check,
    gybe_reduced_residual,
    r_bracket,
    solve_cocycle_space,
    ybe_normal_form,
)
from .catalog import (
    block_basis,
    data_dir,
    dim6_family,
    e0_wedge,
    flat_lorentzian_bundle,
    isotropic_solution,
    sl2_bundle,
    t_i,
    verify_pairing_table,
)
from .errors import JacobiFailure, OscybeError
from .forms import dual_metric
from .geometry import connection, curvature, geometry_report, koszul_connection
from .multivector import Bivector, ad_dag, ad_trivector, schouten_pair, schouten_self, schouten_self_decomposable
from .oscillator import build_oscillator, k_lambda
from .sampling import (
    ORACLE_DENS,
    ORACLE_NUMS,
    admissible_params,
    assemble_cybe_candidate,
    assemble_gybe_candidate,
    cybe_reduced_solution,
    gybe_reduced_solution,
    make_rng,
    rand_bivector,
    rand_bivector_S,
    rand_isotropic_basis,
    rand_params,
    rand_scalar,
    rand_vector,
    rand_vector_S,
)
from .scalar import HALF, ONE, TWO, ZERO, Q

DEFAULT_SEED = 20240901


@dataclass
class CheckResult:
    name: str
    passed: bool
    detail: str
    seconds: float


def _fail(msg):
    raise AssertionError(msg)


# ---- 1 -----------------------------------------------------------------


def check_oscillator_validity(seed):
    rng = make_rng(seed)
    identities = 0
    for lam in [(1,), (1, 2), (1, 2, 4)]:
        g = build_oscillator(lam)  # antisymmetry + Jacobi validated here
        d = g.dim
        identities += d * d * d + (d * (d - 1) * (d - 2) // 6) * d
        em1 = g.basis_vector(0)
        e0 = g.basis_vector(1)
        svecs = [g.basis_vector(i) for i in g.s_indices]
        svecs += [rand_vector_S(g, rng) for _ in range(30)]
        for u in svecs:
            for v in svecs:
                if not (g.algebra.bracket(u, v) - g.omega_form(u, v) * e0).is_zero():
                    _fail("[u,v] != omega(u,v) e_0 on S")
                adu = g.algebra.bracket(em1, u)
                adv = g.algebra.bracket(em1, v)
                if g.omega_form(adu, v) + g.omega_form(u, adv) != 0:
                    _fail("omega is not ad_{e-1}-invariant on S")
                identities += 2
        k = k_lambda(g)  # validates symmetry, nondegeneracy, ad-invariance
        identities += d ** 3
        if k.signature() != (d - 1, 1, 0):
            _fail("k_lambda is not Lorentzian")
        identities += 1
    return True, f"{identities} identities over lambda in (1), (1,2), (1,2,4)"


# ---- 2 -----------------------------------------------------------------

_ORACLE_ALGEBRAS = {
    3: [sl2(), heisenberg(1)],
    4: [build_oscillator((1,)).algebra],
    5: [heisenberg(2)],
    6: [build_oscillator((1, 2)).algebra],
    7: [heisenberg(3)],
    8: [build_oscillator((1, 2, 4)).algebra],
    9: [heisenberg(4)],
    10: [build_oscillator((1, 2, 4, 8)).algebra],
}


def check_schouten_oracle(seed):
    rng = make_rng(seed + 1)
    total = 0
    for dim in range(3, 11):
        algebras = _ORACLE_ALGEBRAS[dim]
        for k in range(25):
            g = algebras[k % len(algebras)]
            r = rand_bivector(dim, rng, ORACLE_NUMS, ORACLE_DENS)
            if not (schouten_self(g, r) - schouten_self_decomposable(g, r)).is_zero():
                _fail(f"Schouten oracle mismatch at dim {dim}, draw {k}")
            total += 1
    return True, f"{total} random bivectors, dims 3..10, both routes equal"


# ---- 3 -----------------------------------------------------------------


def check_pairing_table(seed):
    checks = 0
    for lam in [(1, 2), (1, 2, 4), (1, 2, 4, 8)]:
        g = build_oscillator(lam)
        rep = verify_pairing_table(g)
        if not rep.passed:
            _fail(f"pairing table failures for lambda={lam}: {rep.failures[:5]}")
        checks += rep.checks
    return True, f"{checks} identities for n = 2, 3, 4"


# ---- 4 -----------------------------------------------------------------


def check_dim4_grid(seed):
    g = build_oscillator((1,))
    vals = [Q(-1), Q(-1, 2), ZERO, Q(1, 2), ONE]
    pairs = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]
    n_cybe = n_gybe = 0
    for combo in product(vals, repeat=6):
        entries = {p: v for p, v in zip(pairs, combo) if v}
        r = Bivector.from_entries(4, entries)
        # e_0^u <=> no entry outside row/column of index 1
        is_e0u = not (combo[1] or combo[2] or combo[5])
        is_e0u_t1 = not (combo[1] or combo[2])
        c = cybe_check(g, r)
        gy = gybe_check(g, r)
        if c != is_e0u:
            _fail(f"classical grid mismatch at {entries}")
        if gy != is_e0u_t1:
            _fail(f"generalized grid mismatch at {entries}")
        n_cybe += c
        n_gybe += gy
    return True, f"5^6 grid: {n_cybe} classical (= e_0^u), {n_gybe} generalized (= e_0^u + a t_1)"


# ---- 5 -----------------------------------------------------------------


def check_dim6_families(seed):
    rng = make_rng(seed + 5)
    g = build_oscillator((1, 2))
    counts = {}
    for sub in "abcd":
        for k in range(100):
            kw = {
                "u0": rand_vector_S(g, rng),
                "c": rand_scalar(rng),
                "c1": rand_scalar(rng),
                "c2": rand_scalar(rng),
                "a1": rand_scalar(rng),
                "a2": rand_scalar(rng),
                "d": rand_scalar(rng),
                "dc": rand_scalar(rng),
                "b": rand_scalar(rng),
                "bc": rand_scalar(rng),
                "s": rand_scalar(rng),
            }
            params, xi = dim6_family(g, "bialgebra", sub, **kw)
            if not bialgebra_condition_residual(g, params.r, params.a).is_zero():
                _fail(f"bialgebra family ({sub}) draw {k} has nonzero residual")
            dual_bracket_from_cocycle(g, xi)  # raises JacobiFailure if not a bialgebra
            counts[f"bialgebra-{sub}"] = counts.get(f"bialgebra-{sub}", 0) + 1
    for k in range(100):
        sub = "t" if k % 2 else "ef"
        u = rand_vector(g.dim, rng) if sub == "t" else rand_vector_S(g, rng)
        kw = dict(
            u=u,
            c1=rand_scalar(rng),
            c2=rand_scalar(rng),
            a=rand_scalar(rng),
            ac=rand_scalar(rng),
            b=rand_scalar(rng),
            bc=rand_scalar(rng),
            c=rand_scalar(rng),
        )
        r = dim6_family(g, "gybe", sub, **kw)
        if not gybe_check(g, r):
            _fail(f"generalized family draw {k} fails the predicate")
        counts["gybe"] = counts.get("gybe", 0) + 1
    for k in range(100):
        if k % 2:
            r = dim6_family(g, "cybe", "u", u=rand_vector(g.dim, rng))
        else:
            x, y = rand_scalar(rng), rand_scalar(rng)
            r = dim6_family(
                g, "cybe", "ef", u=rand_vector_S(g, rng), a=x, ac=y, b=y, bc=x, c=ZERO
            )
        if not cybe_check(g, r):
            _fail(f"classical family draw {k} fails the predicate")
        counts["cybe"] = counts.get("cybe", 0) + 1
    # constraint-violating draws must fail
    bb = block_basis(g, 1, 2)
    bad = 0
    for k in range(25):
        d_ = rand_scalar(rng)
        while not d_:
            d_ = rand_scalar(rng)
        s = rand_scalar(rng)
        # E-part with a_1 + a_2 != 0 violates the rotated-family constraint
        params = BialgebraParams(d_ * bb["E"], rand_vector_S(g, rng), (s, ONE - s))
        if bialgebra_condition_residual(g, params.r, params.a).is_zero():
            _fail("constraint-violating bialgebra draw has zero residual")
        try:
            dual_bracket_from_cocycle(g, bialgebra_cocycle(g, params))
            _fail("constraint-violating bialgebra draw passed Jacobi")
        except JacobiFailure:
            bad += 1
        # alpha != 0 with a rotated-basis part violates the generalized family
        rg = assemble_gybe_candidate(g, d_ * bb["E"], rand_vector_S(g, rng), ONE)
        if gybe_check(g, rg):
            _fail("alpha != 0 rotated draw passed the generalized equation")
        # c^2 constraint violation fails the classical equation
        rc = d_ * bb["E"] + (abs(d_) + ONE) * (bb["ti"] - bb["tj"])
        if cybe_check(g, assemble_cybe_candidate(g, rc, rand_vector_S(g, rng), ZERO)):
            _fail("c^2-violating draw passed the classical equation")
        bad += 2
    # case-analysis grid: residual(.,0) = 0 iff c1 = -c2 = c, c^2 = a^2+ac^2-b^2-bc^2
    grid_small = [Q(-1), ZERO, ONE]
    grid_c = [Q(-1), Q(-1, 2), ZERO, Q(1, 2), ONE]
    npoints = 0
    for a, ac, b_, bc_ in product(grid_small, repeat=4):
        p12 = a * bb["E"] + ac * bb["Ec"] + b_ * bb["F"] + bc_ * bb["Fc"]
        want_sq = a * a + ac * ac - b_ * b_ - bc_ * bc_
        for c1, c2 in product(grid_c, repeat=2):
            r0 = p12 + c1 * bb["ti"] + c2 * bb["tj"]
            lhs = cybe_reduced_residual(g, r0, ZERO).is_zero()
            rhs = (c1 == -c2) and (c1 * c1 == want_sq)
            if lhs != rhs:
                _fail(f"case-analysis grid mismatch at {(a, ac, b_, bc_, c1, c2)}")
            npoints += 1
    return True, (
        f"4x100 bialgebra + 100 generalized + 100 classical draws pass; "
        f"{bad} violating draws fail; case grid {npoints} points"
    )


# ---- 6 -----------------------------------------------------------------


def _dual_jacobi_holds(g, xi):
    try:
        dual_bracket_from_cocycle(g, xi)
        return True
    except JacobiFailure:
        return False


def check_bialgebra_iff(seed):
    rng = make_rng(seed + 6)
    stats = []
    for lam in [(1, 2), (1, 2, 4)]:
        g = build_oscillator(lam)
        pos = neg = 0
        for k in range(200):
            params = admissible_params(g, rng) if k % 2 else rand_params(g, rng)
            res_zero = bialgebra_condition_residual(g, params.r, params.a).is_zero()
            xi = bialgebra_cocycle(g, params)
            ok, _ = cocycle_check(g, xi)
            if not ok:
                _fail("constructed cocycle fails the cocycle identity")
            jac = _dual_jacobi_holds(g, xi)
            if jac != res_zero:
                _fail(f"Jacobi <=> residual fails at lambda={lam}, draw {k}")
            if jac:
                pos += 1
                p2 = extract_params(g, xi)
                if (
                    not (p2.r - params.r).is_zero()
                    or not (p2.u0 - params.u0).is_zero()
                    or p2.a != params.a
                ):
                    _fail("parameter extraction does not invert the construction")
                if any(any(img.m[0]) for img in xi.images):
                    _fail("e_-1* is not central for a bialgebra cocycle")
            else:
                neg += 1
        stats.append(f"lambda={lam}: {pos} bialgebras / {neg} rejected")
    # full cocycle spaces in dims 4 and 6
    for lam in [(1,), (1, 2)]:
        g = build_oscillator(lam)
        basis = solve_cocycle_space(g)
        if not basis:
            _fail("empty cocycle space")
        n_basis_bialgebras = 0
        for xi in basis:
            ok, wit = cocycle_check(g, xi)
            if not ok:
                _fail(f"cocycle-space element fails the identity at {wit[:2]}")
            if not xi.images[1].is_zero():
                _fail("cocycle does not kill the central element e_0")
            # cocycle-only half of the central lemma: [e_-1*, a]* lands in
            # R e_-1* for a in S* (the e_0* slot genuinely needs Jacobi)
            for k in range(1, g.dim):
                for j in list(g.s_indices) + [0]:
                    if xi.images[k].m[0][j]:
                        _fail("[e_-1*, S*]* leaves the e_-1* line on a cocycle")
            if _dual_jacobi_holds(g, xi):
                n_basis_bialgebras += 1
                if any(any(img.m[0]) for img in xi.images):
                    _fail("e_-1* is not central for a bialgebra basis cocycle")
                extract_params(g, xi)  # only-if direction on a non-family cocycle
        for k in range(10):
            r = rand_bivector_S(g, rng)
            ok, _ = cocycle_check(g, coboundary(g, r))
            if not ok:
                _fail("a coboundary fails the cocycle identity")
        # sampled combinations that pass Jacobi must be fully classified
        n_sampled = 0
        for k in range(20):
            xi = bialgebra_cocycle(g, admissible_params(g, rng))
            if not _dual_jacobi_holds(g, xi):
                _fail("admissible cocycle fails Jacobi")
            extract_params(g, xi)
            n_sampled += 1
        stats.append(
            f"lambda={lam}: cocycle space dim {len(basis)} "
            f"({n_basis_bialgebras} basis bialgebras classified), {n_sampled} sampled bialgebras"
        )
    return True, "; ".join(stats)


# ---- 7 -----------------------------------------------------------------


def check_ybe_iff(seed):
    rng = make_rng(seed + 7)
    stats = []
    for lam in [(1,), (1, 2), (1, 2, 4)]:
        g = build_oscillator(lam)
        pos = neg = 0
        for k in range(200):
            u0 = rand_vector_S(g, rng)
            if k % 2:
                if k % 4 == 1:
                    r0, alpha = gybe_reduced_solution(g, rng)
                else:
                    r0, alpha = cybe_reduced_solution(g, rng)
            else:
                r0, alpha = rand_bivector_S(g, rng), rand_scalar(rng)
            rg = assemble_gybe_candidate(g, r0, u0, alpha)
            if gybe_check(g, rg) != gybe_reduced_residual(g, r0, alpha).is_zero():
                _fail(f"generalized iff fails at lambda={lam}, draw {k}")
            rc = assemble_cybe_candidate(g, r0, u0, alpha)
            if cybe_check(g, rc) != cybe_reduced_residual(g, r0, alpha).is_zero():
                _fail(f"classical iff fails at lambda={lam}, draw {k}")
            if gybe_check(g, rg):
                pos += 1
                nf = ybe_normal_form(g, rg)
                if not (nf.r0 - r0).is_zero() or not (nf.u0 - u0).is_zero():
                    _fail("normal form does not recover the parts")
                if nf.kind == "gybe" and nf.alpha != alpha:
                    _fail("normal form alpha mismatch")
            else:
                neg += 1
            # contaminating a solution with an e_-1 pairing breaks it
            if k % 10 == 0:
                sol_r0, sol_a = gybe_reduced_solution(g, rng)
                contaminated = assemble_gybe_candidate(g, sol_r0, u0, sol_a) + Bivector.from_entries(
                    g.dim, {(0, rng.choice(list(g.s_indices))): ONE}
                )
                if gybe_check(g, contaminated):
                    _fail("solution with an e_-1 pairing passed the generalized equation")
        stats.append(f"lambda={lam}: {pos} solutions / {neg} non-solutions")
    # isotropic-image characterization at alpha = 0
    for lam in [(1, 2), (1, 2, 4)]:
        g = build_oscillator(lam)
        agree = 0
        for k in range(50):
            r0 = rand_bivector_S(g, rng)
            res_zero = cybe_reduced_residual(g, r0, ZERO).is_zero()
            rows = [Vector(tuple(r0.m[i])) for i in g.s_indices]
            isotropic = all(
                g.omega_form(x, y) == 0 for x in rows for y in rows
            )
            if res_zero != isotropic:
                _fail("isotropy characterization fails")
            agree += 1
        for k in range(5):
            f_basis = rand_isotropic_basis(g, rng)
            m = len(f_basis)
            mu = [[ZERO] * m for _ in range(m)]
            for i in range(0, m, 2):
                scale = rand_scalar(rng)
                while not scale:
                    scale = rand_scalar(rng)
                mu[i][i + 1] = scale
                mu[i + 1][i] = -scale
            r0 = isotropic_solution(g, f_basis, mu)
            if not cybe_check(g, r0):
                _fail("isotropic construction is not a classical solution")
            # image containment: rows of r0 lie in span(F)
            span = [list(f.c) for f in f_basis]
            from . import linalg

            rows_ref, piv = linalg.rref(span)
            for i in range(g.dim):
                if any(linalg.reduce_against(rows_ref, piv, list(r0.m[i]))):
                    _fail("image of the isotropic solution leaves F")
        stats.append(f"lambda={lam}: 50 isotropy iffs + 5 constructions")
    return True, "; ".join(stats)


# ---- 8 -----------------------------------------------------------------


def check_dual_structure(seed):
    rng = make_rng(seed + 8)
    stats = []
    for lam in [(1, 2), (1, 2, 4)]:
        g = build_oscillator(lam)
        n_uni = 0
        for k in range(50):
            params = admissible_params(g, rng)
            rep = analyze_dual_structure(g, params)  # raises StructureMismatch on any failure
            if not (0 <= rep.p <= g.n) or rep.heisenberg_dim % 2 == 0:
                _fail("dual structure report out of range")
            n_uni += rep.unimodular
        stats.append(f"lambda={lam}: 50 duals analyzed, {n_uni} unimodular")
    # pinned cases
    g = build_oscillator((1, 2))
    r_t1 = t_i(g, 1)
    rep = analyze_dual_structure(g, BialgebraParams(r_t1, Vector.zero(g.dim), (ZERO, ZERO)))
    if rep.p != 2 or rep.unimodular:
        _fail("t_1 case: expected p = 2 and a non-unimodular dual")
    rep = analyze_dual_structure(
        g, BialgebraParams(r_t1 - t_i(g, 2), Vector.zero(g.dim), (ZERO, ZERO))
    )
    if not rep.unimodular:
        _fail("t_1 - t_2 case must be unimodular")
    rep = analyze_dual_structure(
        g, BialgebraParams(Bivector.zero(g.dim), Vector.zero(g.dim), (ZERO, ZERO))
    )
    if rep.p != g.n or not rep.unimodular:
        _fail("zero case must give p = n and a unimodular dual")
    # every classical solution in dimension 6 has a unimodular dual
    for k in range(100):
        r0, alpha = cybe_reduced_solution(g, rng)
        r = assemble_cybe_candidate(g, r0, rand_vector_S(g, rng), alpha)
        if not r_bracket(g, r).algebra.is_unimodular():
            _fail("dimension-6 classical solution with a non-unimodular dual")
    stats.append("100 dim-6 classical duals unimodular")
    return True, "; ".join(stats)


# ---- 9 -----------------------------------------------------------------


def _geometry_samples(rng):
    samples = []  # (tag, algebra-like, form, r, expect_cybe)
    g4 = build_oscillator((1,))
    k4 = k_lambda(g4)
    for k in range(6):
        samples.append(("dim4-cybe", g4, k4, e0_wedge(g4, rand_vector(g4.dim, rng)), True))
    samples.append(("dim4-t1", g4, k4, t_i(g4, 1), False))
    for k in range(3):
        r = e0_wedge(g4, rand_vector(g4.dim, rng)) + rand_scalar(rng) * t_i(g4, 1)
        samples.append(("dim4-gybe", g4, k4, r, None))
    g6 = build_oscillator((1, 2))
    k6 = k_lambda(g6)
    for k in range(4):
        r0, alpha = cybe_reduced_solution(g6, rng)
        samples.append(
            ("dim6-cybe", g6, k6, assemble_cybe_candidate(g6, r0, rand_vector_S(g6, rng), alpha), True)
        )
    for k in range(4):
        r0, alpha = gybe_reduced_solution(g6, rng)
        samples.append(
            ("dim6-gybe", g6, k6, assemble_gybe_candidate(g6, r0, rand_vector_S(g6, rng), alpha), None)
        )
    g8 = build_oscillator((1, 2, 4))
    k8 = k_lambda(g8)
    r0, alpha = cybe_reduced_solution(g8, rng)
    samples.append(("dim8-cybe", g8, k8, assemble_cybe_candidate(g8, r0, rand_vector_S(g8, rng), alpha), True))
    r8 = assemble_gybe_candidate(g8, t_i(g8, 1) + TWO * t_i(g8, 3), rand_vector_S(g8, rng), ONE)
    samples.append(("dim8-gybe", g8, k8, r8, False))
    for abc in [(1, 0, 0), (0, 1, 0), (1, -1, 2)]:
        b = sl2_bundle(*abc)
        samples.append((f"sl2{abc}", b.algebra, b.form, b.r, True))
    for lam in [(1, 2), (1, 3)]:
        b = flat_lorentzian_bundle(lam)
        samples.append((f"flat{lam}", b.algebra, b.form, b.r, True))
    return samples


def check_geometry(seed):
    rng = make_rng(seed + 9)
    n_flat = n_curved = 0
    for tag, g, k, r, expect_cybe in _geometry_samples(rng):
        is_c = cybe_check(g, r)
        if expect_cybe is not None and is_c != expect_cybe:
            _fail(f"{tag}: classical expectation mismatch")
        rep = geometry_report(g, k, r)  # connection == Koszul and both R formulas checked inside
        if not rep.locally_symmetric:
            _fail(f"{tag}: nabla R != 0 for a generalized solution")
        if is_c and not rep.flat:
            _fail(f"{tag}: classical solution with R != 0")
        if rep.flat:
            want = "complete" if rep.unimodular else "incomplete"
            if rep.completeness != want:
                _fail(f"{tag}: completeness verdict is not a function of the two flags")
            if rep.completeness == "complete" and not rep.solvable:
                _fail(f"{tag}: flat complete dual that is not solvable")
            n_flat += 1
        else:
            if rep.completeness != "not-determined":
                _fail(f"{tag}: non-flat bundle must leave completeness undetermined")
            n_curved += 1
        if tag == "dim4-t1" and rep.flat:
            _fail("t_1 on the dim-4 algebra must have nonzero curvature")
    return True, f"{n_flat} flat + {n_curved} curved-but-symmetric bundles verified"


# ---- 10 ----------------------------------------------------------------


def check_flat_example(seed):
    details = []
    for lam in [(1, 2), (1, 3)]:
        b = flat_lorentzian_bundle(lam)
        if b.golden is None:
            _fail(f"missing golden data for lambda={lam}")
        if not cybe_check(b.algebra, b.r):
            _fail("the flat example bivector is not a classical solution")
        dual = r_bracket(b.algebra, b.r)
        got = serialize.dumps(serialize.algebra_to_spec(dual.algebra))
        want = serialize.dumps(b.golden)
        if got != want:
            _fail(f"dual brackets differ from the golden table for lambda={lam}")
        rep = geometry_report(b.algebra, b.form, b.r)
        for key in ("flat", "unimodular", "solvable"):
            if not getattr(rep, key):
                _fail(f"flat example: {key} expected")
        if rep.completeness != "complete":
            _fail("flat example must be complete")
        # the 5-dim ideal spanned by everything except e_0*
        ideal_idx = [0, 2, 3, 4, 5]
        vecs = [dual.algebra.basis_vector(i) for i in ideal_idx]
        if not dual.algebra.is_ideal(vecs):
            _fail("expected ideal is not an ideal")
        sub = dual.algebra.subalgebra(vecs)
        if not is_heisenberg(sub):
            _fail("the 5-dim ideal is not a Heisenberg algebra")
        details.append(f"lambda={lam}: golden + verdicts + h5 ideal")
    return True, "; ".join(details)


# ---- 11 ----------------------------------------------------------------


def check_sl2_example(seed):
    g = sl2()
    vals = [Q(n, d) for n in range(-2, 3) for d in (1, 2)]
    vals = sorted(set(vals))
    n_sol = 0
    for a in vals:
        for b in vals:
            for c in vals:
                from .catalog import sl2_r_matrix

                r = sl2_r_matrix(a, b, c)
                is_sol = cybe_check(g, r)
                if is_sol != (4 * a * b + c * c == 0):
                    _fail(f"sl2 grid mismatch at {(a, b, c)}")
                n_sol += is_sol
    for abc in [(1, 0, 0), (0, 1, 0), (1, -1, 2)]:
        bundle = sl2_bundle(*abc)
        if bundle.golden is None:
            _fail(f"missing sl2 golden data for {abc}")
        dual = r_bracket(bundle.algebra, bundle.r)
        got = serialize.dumps(serialize.algebra_to_spec(dual.algebra))
        want = serialize.dumps(bundle.golden)
        if got != want:
            _fail(f"sl2 dual brackets differ from the golden table at {abc}")
        derived = dual.algebra.derived_series()
        if len(derived) < 2 or len(derived[1]) != 2:
            _fail("sl2 dual derived ideal is not 2-dimensional")
        dsub = dual.algebra.subalgebra(derived[1])
        if not dsub.is_abelian():
            _fail("sl2 dual derived ideal is not abelian")
        rep = geometry_report(bundle.algebra, bundle.form, bundle.r)
        if not rep.flat or rep.unimodular or rep.completeness != "incomplete":
            _fail(f"sl2 bundle verdicts wrong at {abc}")
    return True, f"{len(vals)}^3 grid, {n_sol} solutions; 3 golden duals + verdicts"


# ---- 12 ----------------------------------------------------------------


def check_cross_formulas(seed):
    rng = make_rng(seed + 12)
    n1 = n2 = 0
    for lam in [(1,), (1, 2)]:
        g = build_oscillator(lam)
        for k in range(50):
            params = admissible_params(g, rng)
            d1 = dual_bracket_from_cocycle(g, bialgebra_cocycle(g, params))
            d2 = dual_from_params(g, params)
            if d1.algebra.c != d2.algebra.c:
                _fail("closed-form dual differs from the cocycle route")
            n1 += 1
    algebras = [
        build_oscillator((1,)).algebra,
        build_oscillator((1, 2)).algebra,
        sl2(),
        heisenberg(2),
    ]
    for g in algebras:
        for k in range(50):
            r = rand_bivector(g.dim, rng)
            xi = coboundary(g, r)
            sharp_rows = [Vector(tuple(r.m[i])) for i in range(g.dim)]
            A = [g.ad(v).m for v in sharp_rows]
            for i in range(g.dim):
                for j in range(g.dim):
                    for kk in range(g.dim):
                        if xi.images[kk].m[i][j] != A[j][i][kk] - A[i][j][kk]:
                            _fail("coboundary dual differs from the sharp-map bracket")
            n2 += 1
    return True, f"{n1} closed-form duals equal; {n2} coboundary brackets equal"


CHECKS = [
    ("1 oscillator validity", check_oscillator_validity),
    ("2 Schouten oracle", check_schouten_oracle),
    ("3 pairing table", check_pairing_table),
    ("4 dim-4 grid", check_dim4_grid),
    ("5 dim-6 families", check_dim6_families),
    ("6 bialgebra iff", check_bialgebra_iff),
    ("7 Yang-Baxter iff", check_ybe_iff),
    ("8 dual structure", check_dual_structure),
    ("9 dual geometry", check_geometry),
    ("10 flat example golden", check_flat_example),
    ("11 sl2 example golden", check_sl2_example),
    ("12 cross-formula consistency", check_cross_formulas),
]


def run_all(seed: int = DEFAULT_SEED) -> list:
    results = []
    for name, fn in CHECKS:
        t0 = time.perf_counter()
        try:
            passed, detail = fn(seed)
        except OscybeError as exc:
            passed, detail = False, f"{type(exc).__name__}: {exc}"
        except AssertionError as exc:
            passed, detail = False, str(exc)
        results.append(CheckResult(name, passed, detail, time.perf_counter() - t0))
    return results


def report_dict(results, seed) -> dict:
    return {
        "seed": seed,
        "data_dir": data_dir(),
        "checks": [
            {"name": r.name, "passed": r.passed, "detail": r.detail, "seconds": round(r.seconds, 3)}
            for r in results
        ],
        "passed": all(r.passed for r in results),
    }
