"""Command-line interface.

Subcommands: algebra | check | dualize | geometry | enumerate |
verify-paper.  Inputs are JSON files (see serialize); reports are
human-readable text or machine JSON (--json).  Exit codes: 0 success,
1 check failure, 2 input error.
"""

import argparse
import sys
from itertools import product

from . import serialize
from . import verify as verify_mod
from .algebra import LieAlgebra, sl2
from .bialgebra import (
    analyze_dual_structure,
    coboundary,
    cybe_check,
    cybe_residual,
    dual_bracket_from_cocycle,
    extract_params,
    gybe_check,
    r_bracket,
    cocycle_check,
)
from .catalog import block_basis, sl2_r_matrix
from .errors import (
    AntisymmetryViolation,
    JacobiFailure,
    JacobiViolation,
    OscybeError,
    ParseError,
)
from .forms import validate_orthogonal
from .geometry import geometry_report
from .multivector import Bivector, ad_trivector, schouten_self
from .oscillator import OscillatorAlgebra, build_oscillator, k_lambda
from .scalar import Q, ZERO, scalar_str
from .bialgebra import cybe_reduced_residual


def _lie(g) -> LieAlgebra:
    return g.algebra if isinstance(g, OscillatorAlgebra) else g


def _fmt_terms(pairs):
    out = ""
    for coeff, name in pairs:
        s = scalar_str(coeff)
        if s.startswith("-"):
            out += f" - {s[1:]}*{name}" if out else f"-{s[1:]}*{name}"
        else:
            out += f" + {s}*{name}" if out else f"{s}*{name}"
    return out or "0"


def _fmt_covector(labels, coeffs):
    return _fmt_terms([(c, labels[k]) for k, c in enumerate(coeffs) if c])


def _fmt_trivector(labels, T):
    d = T.dim
    terms = []
    for i in range(d):
        for j in range(i + 1, d):
            for k in range(j + 1, d):
                if T.t[i][j][k]:
                    terms.append((T.t[i][j][k], f"{labels[i]}^{labels[j]}^{labels[k]}"))
    return _fmt_terms(terms)


def _emit(args, payload, lines):
    text = serialize.dumps(payload) if args.json else "\n".join(lines) + "\n"
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
        print(f"wrote {args.out}")
    else:
        sys.stdout.write(text)


def cmd_algebra(args):
    try:
        loaded = serialize.load_input(args.file)
    except (AntisymmetryViolation, JacobiViolation) as exc:
        payload = {"valid": False, "error": f"{type(exc).__name__}: {exc}"}
        _emit(args, payload, [f"invalid: {exc}"])
        return 1
    g = loaded["algebra"]
    lie = _lie(g)
    rep = lie.structure_report()
    center_labels = []
    for v in lie.center():
        center_labels.append(_fmt_covector(lie.labels, v.c))
    payload = {"valid": True, **{k: v for k, v in rep.items()}, "center": center_labels}
    flags = ", ".join(k for k in ("abelian", "solvable", "nilpotent", "unimodular") if rep[k])
    lines = [
        f"valid, dim {rep['dim']}" + (f", {flags}" if flags else ""),
        f"derived series dims: {rep['derived_dims']}",
        f"center: dim {rep['center_dim']}"
        + (f" = span({'; '.join(center_labels)})" if center_labels else ""),
    ]
    _emit(args, payload, lines)
    return 0


def cmd_check(args):
    loaded = serialize.load_input(args.file)
    g = loaded["algebra"]
    lie = _lie(g)
    run_all = not (args.cybe or args.gybe or args.cocycle)
    verdicts = {}
    lines = []
    if run_all and "bivector" not in loaded and "cocycle" not in loaded:
        raise ParseError("input file has no 'bivector' or 'cocycle' section")
    if (args.cybe or args.gybe) and "bivector" not in loaded:
        raise ParseError("input file has no 'bivector' section")
    if args.cybe or (run_all and "bivector" in loaded):
        T = cybe_residual(lie, loaded["bivector"])
        verdicts["cybe"] = T.is_zero()
        lines.append(f"CYBE: {'yes' if T.is_zero() else 'no'}")
        if not T.is_zero():
            lines.append(f"  [r,r] = {_fmt_trivector(lie.labels, T)}")
    if args.gybe or (run_all and "bivector" in loaded):
        r = loaded["bivector"]
        T = schouten_self(lie, r)
        ok = True
        if not T.is_zero():
            for u in range(lie.dim):
                Tu = ad_trivector(lie, lie.basis_vector(u), T)
                if not Tu.is_zero():
                    ok = False
                    lines.append("GYBE: no")
                    lines.append(
                        f"  ad_{lie.labels[u]}[r,r] = {_fmt_trivector(lie.labels, Tu)}"
                    )
                    break
        if ok:
            lines.append("GYBE: yes")
        verdicts["gybe"] = ok
    if args.cocycle or (run_all and "cocycle" in loaded):
        if "cocycle" not in loaded:
            raise ParseError("input file has no 'cocycle' section")
        ok, witness = cocycle_check(lie, loaded["cocycle"])
        verdicts["cocycle"] = ok
        lines.append(f"cocycle: {'yes' if ok else 'no'}")
        if not ok:
            i, j, res = witness
            lines.append(
                f"  violated at ({lie.labels[i]}, {lie.labels[j]}), residual "
                + _fmt_terms([(v, f"{lie.labels[a]}^{lie.labels[b]}") for a, b, v in res.entries()])
            )
    _emit(args, {"verdicts": verdicts}, lines)
    return 0 if all(verdicts.values()) else 1


def _dualize(loaded):
    g = loaded["algebra"]
    lie = _lie(g)
    if "cocycle" in loaded:
        dual = dual_bracket_from_cocycle(lie, loaded["cocycle"])
        xi = loaded["cocycle"]
    elif "bivector" in loaded:
        dual = r_bracket(lie, loaded["bivector"])
        xi = coboundary(lie, loaded["bivector"])
    else:
        raise ParseError("input file needs a 'bivector' or 'cocycle' section")
    return g, lie, dual, xi


def cmd_dualize(args):
    loaded = serialize.load_input(args.file)
    try:
        g, lie, dual, xi = _dualize(loaded)
    except JacobiFailure as exc:
        print(f"dual bracket fails Jacobi at triple {exc.triple}", file=sys.stderr)
        return 1
    payload = {"dual": serialize.algebra_to_spec(dual.algebra)}
    lines = []
    da = dual.algebra
    for i in range(da.dim):
        for j in range(i + 1, da.dim):
            if any(da.c[i][j]):
                lines.append(
                    f"[{da.labels[i]}, {da.labels[j]}] = {_fmt_covector(da.labels, da.c[i][j])}"
                )
    rep = da.structure_report()
    payload["structure"] = rep
    lines.append(
        f"dual: dim {rep['dim']}, solvable: {rep['solvable']}, unimodular: {rep['unimodular']}"
    )
    if isinstance(g, OscillatorAlgebra):
        from .oscillator import is_generic

        if is_generic(g.lam):
            params = extract_params(g, xi)
            crep = analyze_dual_structure(g, params)
            payload["oscillator_analysis"] = {
                "p": crep.p,
                "heisenberg_dim": crep.heisenberg_dim,
                "unimodular": crep.unimodular,
            }
            lines.append(
                f"semidirect structure: p = {crep.p}, ideal = h_{crep.heisenberg_dim} + R^{2 * crep.p}"
            )
    _emit(args, payload, lines)
    return 0


def cmd_geometry(args):
    loaded = serialize.load_input(args.file)
    g = loaded["algebra"]
    lie = _lie(g)
    if "bivector" not in loaded:
        raise ParseError("input file needs a 'bivector' section")
    if "form" in loaded:
        k = validate_orthogonal(lie, loaded["form"])
    elif isinstance(g, OscillatorAlgebra):
        k = k_lambda(g)
    else:
        raise ParseError("input file needs a 'form' section for a non-oscillator algebra")
    rep = geometry_report(lie, k, loaded["bivector"])
    payload = {
        "dual": serialize.algebra_to_spec(rep.dual.algebra),
        "report": rep.summary(),
    }
    s = rep.summary()
    lines = [
        f"flat: {'yes' if s['flat'] else 'no'}",
        f"locally symmetric: {'yes' if s['locally_symmetric'] else 'no'}",
        f"unimodular: {'yes' if s['unimodular'] else 'no'}",
        f"solvable: {'yes' if s['solvable'] else 'no'}",
        f"completeness: {s['completeness']}",
        f"ker r#: dim {s['kernel_dim']}, abelian ideal: {s['kernel_is_abelian_ideal']}",
    ]
    _emit(args, payload, lines)
    return 0


def _grid_values(n):
    return sorted({Q(p, q) for p in range(-n, n + 1) for q in (1, 2)}) if n >= 0 else []


def cmd_enumerate(args):
    vals = _grid_values(args.grid)
    payload = {"grid": args.grid, "values": [scalar_str(v) for v in vals]}
    lines = [f"grid numerators -{args.grid}..{args.grid}, denominators 1..2: {len(vals)} values"]
    ok = True
    if args.target == "dim4":
        g = build_oscillator((1,))
        pairs = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]
        cybe_sols, gybe_sols = [], []
        for combo in product(vals, repeat=6):
            entries = {p: v for p, v in zip(pairs, combo) if v}
            r = Bivector.from_entries(4, entries)
            is_e0u = not (combo[1] or combo[2] or combo[5])
            is_e0u_t1 = not (combo[1] or combo[2])
            c, gy = cybe_check(g, r), gybe_check(g, r)
            ok &= (c == is_e0u) and (gy == is_e0u_t1)
            if c:
                cybe_sols.append(serialize.bivector_to_spec(r)["entries"])
            elif gy:
                gybe_sols.append(serialize.bivector_to_spec(r)["entries"])
        payload.update(
            {
                "points": len(vals) ** 6,
                "cybe_solutions": cybe_sols,
                "gybe_only_solutions": gybe_sols,
                "families_match": ok,
            }
        )
        lines += [
            f"points: {len(vals) ** 6}",
            f"classical solutions: {len(cybe_sols)} (all of the form e0^u: {ok})",
            f"generalized-only solutions: {len(gybe_sols)} (all of the form e0^u + a t1: {ok})",
        ]
    elif args.target == "sl2":
        g_sl2 = sl2()
        sols = []
        for a, b, c in product(vals, repeat=3):
            is_sol = cybe_check(g_sl2, sl2_r_matrix(a, b, c))
            ok &= is_sol == (4 * a * b + c * c == 0)
            if is_sol:
                sols.append([scalar_str(a), scalar_str(b), scalar_str(c)])
        payload.update({"points": len(vals) ** 3, "solutions": sols, "locus_match": ok})
        lines += [
            f"points: {len(vals) ** 3}",
            f"classical solutions: {len(sols)}",
            f"locus 4ab + c^2 = 0 matches: {ok}",
        ]
    else:  # dim6-case
        g = build_oscillator((1, 2))
        bb = block_basis(g, 1, 2)
        ints = [v for v in vals if v.denominator == 1]
        sols = []
        npoints = 0
        for a, ac, b, bc in product(ints, repeat=4):
            p12 = a * bb["E"] + ac * bb["Ec"] + b * bb["F"] + bc * bb["Fc"]
            want = a * a + ac * ac - b * b - bc * bc
            for c1, c2 in product(vals, repeat=2):
                npoints += 1
                r0 = p12 + c1 * bb["ti"] + c2 * bb["tj"]
                lhs = cybe_reduced_residual(g, r0, ZERO).is_zero()
                rhs = (c1 == -c2) and (c1 * c1 == want)
                ok &= lhs == rhs
                if lhs:
                    sols.append([scalar_str(x) for x in (a, ac, b, bc, c1, c2)])
        payload.update({"points": npoints, "solutions": sols, "case_analysis_match": ok})
        lines += [
            f"points: {npoints}",
            f"classical block solutions: {len(sols)}",
            f"case analysis (c1 = -c2, c^2 = a^2 + ac^2 - b^2 - bc^2) matches: {ok}",
        ]
    payload["passed"] = ok
    _emit(args, payload, lines)
    return 0 if ok else 1


def cmd_verify_paper(args):
    results = verify_mod.run_all(args.seed)
    payload = verify_mod.report_dict(results, args.seed)
    lines = [f"seed: {args.seed}"]
    for r in results:
        lines.append(f"{'PASS' if r.passed else 'FAIL'}  {r.name}  ({r.seconds:.2f}s)  {r.detail}")
    n_bad = sum(1 for r in results if not r.passed)
    lines.append(f"{len(results) - n_bad}/{len(results)} checks passed")
    _emit(args, payload, lines)
    return 0 if n_bad == 0 else 1


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(
        prog="oscybe",
        description="Exact verification of Lie bialgebra structures, Yang-Baxter "
        "solutions and the induced dual geometry on oscillator and quadratic Lie algebras.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--json", action="store_true", help="emit machine-readable JSON")
        p.add_argument("--out", metavar="PATH", help="write the report to PATH")

    p = sub.add_parser("algebra", help="validate an algebra spec and summarize its structure")
    p.add_argument("file")
    common(p)
    p.set_defaults(func=cmd_algebra)

    p = sub.add_parser("check", help="run Yang-Baxter / cocycle predicates on an input")
    p.add_argument("file")
    p.add_argument("--cybe", action="store_true", help="check the classical equation")
    p.add_argument("--gybe", action="store_true", help="check the generalized equation")
    p.add_argument("--cocycle", action="store_true", help="check the cocycle identity")
    common(p)
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("dualize", help="construct and analyze the dual Lie algebra")
    p.add_argument("file")
    common(p)
    p.set_defaults(func=cmd_dualize)

    p = sub.add_parser("geometry", help="dual metric, connection, curvature and verdicts")
    p.add_argument("file")
    common(p)
    p.set_defaults(func=cmd_geometry)

    p = sub.add_parser("enumerate", help="exhaustive grid enumeration of solutions")
    tgt = p.add_mutually_exclusive_group(required=True)
    tgt.add_argument("--dim4", dest="target", action="store_const", const="dim4")
    tgt.add_argument("--sl2", dest="target", action="store_const", const="sl2")
    tgt.add_argument("--dim6-case", dest="target", action="store_const", const="dim6")
    p.add_argument("--grid", type=int, default=1, help="numerator bound (denominators 1, 2)")
    common(p)
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("verify-paper", help="run the full verification battery")
    p.add_argument("--seed", type=int, default=verify_mod.DEFAULT_SEED)
    common(p)
    p.set_defaults(func=cmd_verify_paper)

    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ParseError as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return 2
    except (AntisymmetryViolation, JacobiViolation) as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return 2
    except OscybeError as exc:
        print(f"check failure: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
