"""Command-line surface.

Every command is non-interactive, reads files and flags, and writes a
line-oriented report with stable field order to stdout, so runs are
byte-for-byte reproducible (worker count included).  Budgets are given as
exponents: --budget 7 means 16^7 enumerated messages; --slow forces 16^8.

Exit status: 0 on success, 1 on parse/budget problems, 2 when a
verification verdict is FAIL.
"""

from __future__ import annotations

import argparse
import sys

import numpy as np

from . import construct, gray, project, ring, wenum
from .code import DistanceResult, LinearCode, dual_of_standard_form
from .errors import BudgetExceeded, ZeroCode
from .scalars import GaussianInt, GaussianRational

_ENUM_PRINT_CAP = 16 ** 6


class _Fail(Exception):
    """Raised internally to signal exit status 2 (a FAIL verdict)."""


def _budget_from(args) -> int:
    if getattr(args, "slow", False):
        return 16 ** 8
    return 16 ** args.budget


def _dist_line(res: DistanceResult) -> str:
    return f"{res.value} ({res.label()})"


def _load_code(path: str) -> LinearCode:
    try:
        return LinearCode.from_file(path)
    except FileNotFoundError:
        raise ValueError(f"cannot read generator file {path!r}")


# ---------------------------------------------------------------------------
# Commands
# ---------------------------------------------------------------------------

def cmd_analyze(args) -> None:
    code = _load_code(args.gen)
    budget = _budget_from(args)
    print(f"length: {code.n}")
    print(f"generator rows: {code.k}")
    print(f"standard-form: {'yes' if code.standard_form else 'no'}")
    card = code.cardinality(budget)
    print(f"cardinality: {card}")
    res = code.min_lee_distance(budget, args.sample, args.threads)
    print(f"min-lee-distance: {_dist_line(res)}")
    print(f"self-duality: {code.self_duality(budget).value}")
    if 16 ** code.k <= min(budget, _ENUM_PRINT_CAP):
        e = wenum.cwe(code, budget)
        print("cwe:")
        for ln in e.format_lines():
            print(f"  {ln}")
        s = wenum.cwe_to_swe(e)
        print("swe:")
        for ln in s.format_lines():
            print(f"  {ln}")
        p = wenum.swe_to_lee(s)
        print("lee:")
        for ln in p.format_lines():
            print(f"  {ln}")
    else:
        for name in ("cwe", "swe", "lee"):
            print(f"{name}: out of budget ({16 ** code.k} messages > {min(budget, _ENUM_PRINT_CAP)})")


def cmd_gray(args) -> None:
    code = _load_code(args.gen)
    budget = _budget_from(args)
    img = gray.gray_image(code, budget)
    print(f"z4-image length: {img.length}")
    print(f"z4-image cardinality: {img.cardinality(budget)}")
    print("z4-image generator:")
    for row in img.gen:
        print("  " + " ".join(str(int(x)) for x in row))
    res = code.min_lee_distance(budget, args.sample, args.threads)
    print(f"z4-image min-lee-distance: {_dist_line(res)}  "
          f"(equals the source distance; the map is a Lee isometry)")


def cmd_dual(args) -> None:
    code = _load_code(args.gen)
    budget = _budget_from(args)
    if code.standard_form and code.n == 2 * code.k:
        dual_code = dual_of_standard_form(code)
        print("dual generator ([-A^T | I]):")
        for row in dual_code.gen:
            print("  " + ring.format_vector(row))
    if 16 ** code.n <= budget:
        words = code.dual_bruteforce(budget)
        print(f"dual cardinality: {len(words)}")
        print(f"size product |C|*|dual|: {code.cardinality(budget) * len(words)}"
              f" (16^n = {16 ** code.n})")
        if len(words) <= 4096:
            print("dual codewords:")
            for w in words.sorted_words():
                print("  " + ring.format_vector(w))
    else:
        print(f"dual codewords: out of budget (16^{code.n} vectors)")


def cmd_macwilliams(args) -> None:
    code = _load_code(args.gen)
    budget = _budget_from(args)
    card = code.cardinality(budget)
    e = wenum.cwe(code, budget)
    s = wenum.cwe_to_swe(e)
    p = wenum.swe_to_lee(s)
    ts = wenum.macwilliams_swe(s, card)
    tp = wenum.macwilliams_lee(p, card)
    print("swe transform (dual swe):")
    for ln in ts.format_lines():
        print(f"  {ln}")
    print("lee transform (dual lee):")
    for ln in tp.format_lines():
        print(f"  {ln}")
    fsd = tp == p
    print(f"lee transform fixed point (formally self-dual): {'yes' if fsd else 'no'}")
    failures = []
    if 16 ** code.n <= budget:
        words = code.dual_bruteforce(budget)
        ds = wenum.swe_of_words(words.sorted_words(), code.n)
        dp = wenum.lee_of_words(words.sorted_words(), code.n)
        ok_s = ds.terms == ts.terms
        ok_p = dp == tp
        print(f"swe transform equals brute-force dual swe: {'yes' if ok_s else 'NO'}")
        print(f"lee transform equals brute-force dual lee: {'yes' if ok_p else 'NO'}")
        dcwe = wenum.cwe_of_words(words.sorted_words(), code.n)
        rng = np.random.default_rng(args.seed)
        ok_c = True
        for _ in range(args.points):
            pt = [GaussianInt(int(a), int(b))
                  for a, b in rng.integers(-3, 4, size=(16, 2))]
            lhs = wenum.macwilliams_cwe_eval(e, card, pt)
            rhs = GaussianRational.of(dcwe.evaluate(pt))
            if lhs != rhs:
                ok_c = False
                break
        print(f"cwe transform evaluations match brute-force dual at {args.points} points: "
              f"{'yes' if ok_c else 'NO'}")
        failures = [name for name, ok in
                    (("swe", ok_s), ("lee", ok_p), ("cwe", ok_c)) if not ok]
    else:
        print("brute-force dual comparison: out of budget")
    if failures:
        raise _Fail(f"transform mismatch: {', '.join(failures)}")


def cmd_project(args) -> None:
    code = _load_code(args.gen)
    budget = _budget_from(args)
    mu = project.project_constant(code, budget)
    nu = project.project_u_coeff(code, budget)
    al = project.project_mod2(code, budget)
    print("constant-part projection (Z4) generator:")
    for row in (code.gen >> 2) & 3:
        print("  " + " ".join(str(int(x)) for x in row))
    print(f"constant-part self-orthogonal: {'yes' if mu.is_self_orthogonal() else 'no'}")
    print("u-coefficient projection (Z4) generator:")
    for row in np.vstack([(code.gen >> 2) & 3, code.gen & 3]):
        print("  " + " ".join(str(int(x)) for x in row))
    print(f"u-coefficient self-orthogonal: {'yes' if nu.is_self_orthogonal() else 'no'}")
    print("mod-2 projection (F2+uF2) generator:")
    for row in project._mod2_matrix(code.gen):
        print("  " + " ".join(project.f2u_format(int(x)) for x in row))
    print(f"mod-2 self-orthogonal: {'yes' if al.is_self_orthogonal() else 'no'}")


def cmd_lift_check(args) -> None:
    code = _load_code(args.ring_gen)
    d = gray.Z4Code(gray.parse_z4_matrix_text(open(args.z4_gen, encoding="utf-8").read()))
    e = project.F2uCode(project.parse_f2u_matrix_text(open(args.f2u_gen, encoding="utf-8").read()))
    budget = _budget_from(args)
    triple = project.LiftTriple(code, d, e)
    proj_budget = min(budget, 16 ** 6)
    if 16 ** code.k <= proj_budget:
        ok = triple.verify_projections(proj_budget)
    else:
        mu_set = project.project_constant(code, budget, via="span").codeword_set(budget)
        al_set = project.project_mod2(code, budget, via="span").codeword_set(budget)
        ok = mu_set == d.codeword_set(budget) and al_set == e.codeword_set(budget)
    print(f"projections match the prescribed codes: {'yes' if ok else 'NO'}")
    report = project.lift_bound_check(triple, budget, args.sample, args.threads)
    for ln in report.format_lines():
        print(ln)
    res = code.min_lee_distance(budget, args.sample, args.threads)
    witness = code.encode(res.witness_message)
    print(f"witness codeword of weight {res.value}: {ring.format_vector(witness)}")
    if not ok or not report.holds:
        raise _Fail("lift check failed")


def cmd_search(args) -> None:
    alphabet = None
    if args.alphabet:
        alphabet = [ring.parse_element(t) for t in args.alphabet.split(",")]
    out = construct.search(args.kind, args.n, alphabet, _budget_from(args),
                           args.threshold, args.sample, args.threads)
    print(f"kind: {out.kind}")
    print(f"candidates: {out.candidates}")
    print(f"exhaustive over full alphabet: {'yes' if out.exhaustive else 'no'}")
    print(f"best distance: {out.best_distance}")
    print(f"best witness: {out.best_spec.describe()}")
    print(f"results with d >= {args.threshold}: {len(out.results)}")
    for r in out.results:
        print(f"  d={r.distance.value} ({r.distance.label()}) fsd={r.fsd}  {r.spec.describe()}")


def cmd_verify_tables(args) -> None:
    reports = construct.verify_tables(args.table, args.max_length,
                                      _budget_from(args), args.sample, args.threads)
    bad = 0
    for rep in reports:
        print(rep.format_line())
        bad += 0 if rep.ok else 1
    print(f"rows: {len(reports)}  pass: {len(reports) - bad}  fail: {bad}")
    if bad:
        raise _Fail(f"{bad} table rows failed")


def cmd_self_check(args) -> None:
    failures: list[str] = []

    def check(name: str, ok: bool) -> None:
        print(f"{'PASS' if ok else 'FAIL'}  {name}")
        if not ok:
            failures.append(name)

    # square classification census
    sq_ok = True
    for x in ring.ELEMENTS:
        expect = {ring.UnitType.NON_UNIT: ring.ZERO,
                  ring.UnitType.TYPE1: ring.ONE,
                  ring.UnitType.TYPE2: ring.make(1, 2)}[ring.unit_type(x)]
        sq_ok &= ring.mul(x, x) == expect
    check("square of every element matches its unit class", sq_ok)

    lee_table = {ring.make(0, 0): 0, ring.make(0, 1): 2, ring.make(0, 2): 4,
                 ring.make(0, 3): 2, ring.make(1, 0): 1, ring.make(1, 1): 3,
                 ring.make(1, 2): 3, ring.make(1, 3): 1, ring.make(2, 0): 2,
                 ring.make(2, 1): 2, ring.make(2, 2): 2, ring.make(2, 3): 2,
                 ring.make(3, 0): 1, ring.make(3, 1): 1, ring.make(3, 2): 3,
                 ring.make(3, 3): 3}
    check("Lee weights of all 16 elements",
          all(ring.lee_weight(x) == w for x, w in lee_table.items()))

    check("unit partition (4 type-1, 4 type-2, 8 non-units)",
          ring.UNITS_TYPE1 == frozenset({ring.make(1, 0), ring.make(3, 0),
                                         ring.make(1, 2), ring.make(3, 2)})
          and ring.UNITS_TYPE2 == frozenset({ring.make(1, 1), ring.make(3, 1),
                                             ring.make(1, 3), ring.make(3, 3)})
          and len(ring.UNITS) == 8)

    gen_char = all(any(ring.character(y) != GaussianInt(1, 0) for y in ring.IDEALS[name])
                   for name in ring.PROPER_NONZERO_IDEALS)
    check("character is nontrivial on all 5 nonzero proper ideals", gen_char)

    table = ring.character_table()
    check("character table is symmetric",
          all(table[i][j] == table[j][i] for i in range(16) for j in range(16)))

    orth = True
    for i in range(16):
        for j in range(16):
            acc = GaussianInt(0, 0)
            for k in range(16):
                acc = acc + table[i][k] * table[j][k].conj()
            orth &= acc == (GaussianInt(16, 0) if i == j else GaussianInt(0, 0))
    check("character table orthogonality T.conj(T)^T = 16 I", orth)

    diffs = ring.character_table_discrepancies()
    print(f"INFO  generated character table vs transcribed copy: "
          f"{len(diffs)} differing entries")
    for i, j, g, t in diffs:
        print(f"INFO    row {i} col {j}: generated {g}, transcribed {t}")

    if failures:
        raise _Fail(f"{len(failures)} self-checks failed")


# ---------------------------------------------------------------------------
# Argument plumbing
# ---------------------------------------------------------------------------

def _add_common(p: argparse.ArgumentParser) -> None:
    p.add_argument("--budget", type=int, default=7,
                   help="enumeration budget exponent: 16^BUDGET messages (default 7)")
    p.add_argument("--slow", action="store_true",
                   help="raise the budget to 16^8")
    p.add_argument("--threads", type=int, default=1,
                   help="worker process cap (results are thread-count independent)")
    p.add_argument("--sample", type=int, default=50_000,
                   help="random messages for upper-bound scans (fixed seed)")


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="z4u",
        description="Linear codes over Z4+uZ4: analysis, transforms, projections, search.")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", help="length, cardinality, distance, duality class, enumerators")
    p.add_argument("--gen", required=True, help="generator matrix file (two-digit tokens)")
    _add_common(p)
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("gray", help="Z4 image generator and distance")
    p.add_argument("--gen", required=True)
    _add_common(p)
    p.set_defaults(func=cmd_gray)

    p = sub.add_parser("dual", help="standard-form and brute-force duals")
    p.add_argument("--gen", required=True)
    _add_common(p)
    p.set_defaults(func=cmd_dual)

    p = sub.add_parser("macwilliams", help="transform outputs and equality verdicts")
    p.add_argument("--gen", required=True)
    p.add_argument("--points", type=int, default=20, help="Gaussian evaluation points")
    p.add_argument("--seed", type=int, default=20120521, help="evaluation point seed")
    _add_common(p)
    p.set_defaults(func=cmd_macwilliams)

    p = sub.add_parser("project", help="the three projections and self-orthogonality")
    p.add_argument("--gen", required=True)
    _add_common(p)
    p.set_defaults(func=cmd_project)

    p = sub.add_parser("lift-check", help="projection identity and the 2d' / 2d'' bound")
    p.add_argument("--ring-gen", required=True, help="generator over Z4+uZ4")
    p.add_argument("--z4-gen", required=True, help="generator over Z4 (single digits)")
    p.add_argument("--f2u-gen", required=True, help="generator over F2+uF2 (0,1,u,1+u)")
    _add_common(p)
    p.set_defaults(func=cmd_lift_check)

    p = sub.add_parser("search", help="sweep dc/bdc codes for high minimum distance")
    p.add_argument("--kind", choices=("dc", "bdc"), required=True)
    p.add_argument("--n", type=int, required=True, help="circulant block order (length is 2n)")
    p.add_argument("--alphabet", default=None,
                   help="comma-separated element tokens restricting first rows")
    p.add_argument("--threshold", type=int, default=0, help="keep results with d >= this")
    _add_common(p)
    p.set_defaults(func=cmd_search)

    p = sub.add_parser("verify-tables", help="reproduce the catalogued dc/bdc codes")
    p.add_argument("--table", type=int, choices=(2, 3), required=True)
    p.add_argument("--max-length", type=int, default=26)
    _add_common(p)
    p.set_defaults(func=cmd_verify_tables)

    p = sub.add_parser("self-check", help="ring and character invariant suite")
    _add_common(p)
    p.set_defaults(func=cmd_self_check)

    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        args.func(args)
    except _Fail as exc:
        print(f"FAIL: {exc}", file=sys.stderr)
        return 2
    except (ValueError, BudgetExceeded, ZeroCode, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
