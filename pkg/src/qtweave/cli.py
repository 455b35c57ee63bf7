"""Command-line front end.

Subcommands: construct, analyze, table1, examples, search-primitive, export.
Every command is deterministic given its flags.  Exit codes: 0 success,
1 verification mismatch, 2 invalid input, 3 enumeration budget exceeded.
The enumeration budget defaults to 2^24 messages and can be overridden with
--budget or the QTWEAVE_BUDGET environment variable.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from importlib import resources

from . import analysis, construction
from .errors import BudgetExceededError, ParameterError, VerificationError
from .fields import Field, field_create
from .polynomial import Poly, find_primitive

_DIGITS = "0123456789abcdefghijklmnopqrstuvwxyz"

EXIT_OK = 0
EXIT_MISMATCH = 1
EXIT_INVALID = 2
EXIT_BUDGET = 3


def _load_fixture(name: str) -> dict:
    path = resources.files("qtweave").joinpath("fixtures", name)
    return json.loads(path.read_text())


def _parse_q(text: str) -> tuple[int, int]:
    """Field order as a plain prime power ("9") or explicit "p^e" ("3^2")."""
    text = text.strip()
    if "^" in text:
        p_str, e_str = text.split("^", 1)
        try:
            return int(p_str), int(e_str)
        except ValueError:
            raise ParameterError(f"cannot parse field order {text!r}") from None
    try:
        q = int(text)
    except ValueError:
        raise ParameterError(f"cannot parse field order {text!r}") from None
    if q < 2:
        raise ParameterError(f"field order must be >= 2, got {q}")
    p = 2
    while p * p <= q and q % p:
        p += 1
    if q % p:
        p = q
    e, rest = 0, q
    while rest % p == 0:
        rest //= p
        e += 1
    if rest != 1:
        raise ParameterError(f"{q} is not a prime power")
    return p, e


def _parse_ints(text: str) -> list[int]:
    try:
        return [int(tok) for tok in text.replace(" ", "").split(",") if tok]
    except ValueError:
        raise ParameterError(f"cannot parse coefficient list {text!r}") from None


def _poly_from_user(field: Field, ints) -> Poly:
    coeffs = []
    for v in ints:
        if v < 0:
            coeffs.append(field.neg(field.check(-v)))
        else:
            coeffs.append(field.check(v))
    return Poly(field, coeffs)


def _parse_selection(text: str):
    pairs = []
    for tok in text.replace(" ", "").split(","):
        if not tok:
            continue
        if ":" not in tok:
            raise ParameterError(f"selection entries look like i:j, got {tok!r}")
        i_str, j_str = tok.split(":", 1)
        try:
            pairs.append((int(i_str), int(j_str)))
        except ValueError:
            raise ParameterError(f"cannot parse selection entry {tok!r}") from None
    if not pairs:
        raise ParameterError("selection is empty")
    return tuple(pairs)


def _resolve_budget(args) -> int:
    if getattr(args, "budget", None) is not None:
        return args.budget
    env = os.environ.get("QTWEAVE_BUDGET")
    if env:
        try:
            return int(env)
        except ValueError:
            raise ParameterError(f"QTWEAVE_BUDGET must be an integer, got {env!r}") from None
    return analysis.DEFAULT_BUDGET


def _digit_string(word, q: int) -> str:
    if q > len(_DIGITS):
        raise ParameterError(f"digit strings support fields up to order {len(_DIGITS)}")
    return "".join(_DIGITS[c] for c in word)


def _build_code(args):
    """Field, simplex base and assembled code from the common flags."""
    p_char, e = _parse_q(args.q)
    field = field_create(p_char, e)
    if args.t <= 1:
        raise ParameterError(f"dimension t must be > 1, got {args.t}")
    budget = _resolve_budget(args)
    total = field.q ** (2 * args.t)
    if total > budget:  # checked before any construction work starts
        raise BudgetExceededError(
            f"enumeration needs q^k = {total} messages, budget is {budget}",
            required=total,
            budget=budget,
        )
    h = _poly_from_user(field, _parse_ints(args.h)) if args.h else None
    g = _poly_from_user(field, _parse_ints(args.g)) if args.g else None
    if g is not None or args.cyclic:
        if h is not None:
            raise ParameterError("--h applies to the consta-cyclic base; use --g with --cyclic")
        s = construction.simplex_cyclic(field, args.t, g=g)
    else:
        s = construction.simplex_consta(field, args.t, h=h)
    selection = _parse_selection(args.selection) if args.selection else None
    qt = field.q**args.t
    if args.variant == "qt-simplex":
        if args.p is not None and args.p != qt:
            raise ParameterError(f"the qt-simplex variant forces p = q^t = {qt}, got {args.p}")
        if selection is not None:
            raise ParameterError("the qt-simplex variant uses the full canonical selection")
        code, G = construction.build_qt_simplex(s)
    else:
        if args.p is None:
            raise ParameterError("--p is required for the two-weight variant")
        code, G = construction.build_two_weight(s, args.p, selection=selection)
    return code, G, budget


def _summary_line(code, W) -> str:
    weights = W.nonzero_weights()
    q = code.field.q
    if code.variant == construction.TWO_WEIGHT:
        w_txt = ", ".join(str(w) for w in weights)
        return f"[{code.n}, {code.k}; {w_txt}]_{q} two-weight quasi-twisted code"
    w_txt = ", ".join(str(w) for w in weights)
    return f"[{code.n}, {code.k}; {w_txt}]_{q} quasi-twisted simplex code"


def _print_code_details(code, G, W, out):
    s = code.simplex
    print(_summary_line(code, W), file=out)
    print(f"blocks: {code.block_count} x {s.m} columns", file=out)
    print(f"field: GF({s.q})", file=out)
    print(f"simplex base: {s.variant} [{s.m}, {s.t}, {s.weight}]_{s.q}", file=out)
    print(f"h: {s.h}", file=out)
    print(f"lambda: {s.lam}", file=out)
    print(f"g: {s.g}", file=out)
    sel = " ".join(f"({i},{j})" for i, j in code.selection)
    print(f"selection: {sel}", file=out)
    d = analysis.min_distance(W)
    print(f"min distance: {d} (exact, {W.total()} codewords enumerated)", file=out)


def _cmd_construct(args) -> int:
    code, G, budget = _build_code(args)
    W = analysis.weight_distribution(G, budget=budget, jobs=args.jobs)
    _print_code_details(code, G, W, sys.stdout)
    if args.matrix:
        print("generator matrix (reduced):")
        for row in G.rows:
            print(" ".join(str(c) for c in row))
    if args.block_matrix:
        print("generator matrix (full block form):")
        for row in construction.full_block_matrix(code):
            print(" ".join(str(c) for c in row))
    return EXIT_OK


def _cmd_analyze(args) -> int:
    code, G, budget = _build_code(args)
    W = analysis.weight_distribution(G, budget=budget, jobs=args.jobs)
    _print_code_details(code, G, W, sys.stdout)
    dist = " ".join(f"{w}:{c}" for w, c in sorted(W.counts.items()))
    print(f"weight distribution: {dist}")
    status = EXIT_OK
    if code.variant == construction.TWO_WEIGHT:
        verdict = analysis.verify_two_weight(W, code)
        if verdict.ok:
            print(f"two-weight check: ok (w1 = {verdict.w1}, w2 = {verdict.w2})")
        else:
            print(
                f"two-weight check: FAILED (expected {{{verdict.w1}, {verdict.w2}}}, "
                f"unexpected {list(verdict.unexpected)}, missing {list(verdict.missing)})"
            )
            status = EXIT_MISMATCH
        predicted = analysis.expected_counts(code)
        actual = (W.counts.get(verdict.w1, 0), W.counts.get(verdict.w2, 0))
        agree = "ok" if predicted == actual else f"FAILED (predicted {predicted}, got {actual})"
        print(f"weight counts vs prediction: {agree}")
        if predicted != actual:
            status = EXIT_MISMATCH
    else:
        weights = W.nonzero_weights()
        single = s_w = code.simplex.q ** (2 * code.simplex.t - 1)
        if weights == (single,):
            print(f"single-weight check: ok (w = {s_w})")
        else:
            print(f"single-weight check: FAILED (expected {{{s_w}}}, observed {list(weights)})")
            status = EXIT_MISMATCH
    report = analysis.griesmer_report(code, W)
    print(f"min distance: {report.d}")
    print(f"length: {report.n}")
    print(f"griesmer length: {report.griesmer_length}")
    print(
        f"gap: observed {report.gap_observed}, predicted {report.gap_predicted} "
        f"(i = {report.i}, r = {report.r})"
    )
    if not report.gap_match:
        print("gap prediction: FAILED")
        status = EXIT_MISMATCH
    print(f"length-optimal: {'yes' if report.length_optimal else 'no'}")
    print(f"projective: {'yes' if analysis.is_projective(G) else 'no'}")
    return status


def _cmd_table1(args) -> int:
    fixture = _load_fixture("table1.json")
    q, t = fixture["q"], fixture["t"]
    field = field_create(q)
    s = construction.simplex_consta(field, t)
    budget = _resolve_budget(args)
    status = EXIT_OK
    print(" p    d    n   gb  gap  i  r  q  status")
    for row in fixture["rows"]:
        p = row["p"]
        if p <= q**t:
            code, G = construction.build_two_weight(s, p)
        else:
            code, G = construction.build_qt_simplex(s)
        W = analysis.weight_distribution(G, budget=budget)
        rep = analysis.griesmer_report(code, W)
        got = {
            "p": p, "d": rep.d, "n": rep.n, "gb": rep.griesmer_length,
            "gap": rep.gap_observed, "i": rep.i, "r": rep.r,
        }
        ok = all(got[key] == row[key] for key in ("d", "n", "gb", "gap", "i", "r"))
        if not ok:
            status = EXIT_MISMATCH
        print(
            f"{p:2d} {rep.d:4d} {rep.n:4d} {rep.griesmer_length:4d} "
            f"{rep.gap_observed:4d} {rep.i:2d} {rep.r:2d} {q:2d}  "
            + ("ok" if ok else f"MISMATCH (expected {row})")
        )
    return status


def _check_series(s, entries, budget, label) -> bool:
    ok = True
    for entry in entries:
        code, G = construction.build_two_weight(s, entry["p"])
        W = analysis.weight_distribution(G, budget=budget)
        verdict = analysis.verify_two_weight(W, code)
        got = {"p": entry["p"], "n": code.n, "k": code.k, "w1": verdict.w1, "w2": verdict.w2}
        match = verdict.ok and got == entry
        ok = ok and match
        print(f"  {label} p={entry['p']}: [{code.n}, {code.k}; {verdict.w1}, {verdict.w2}] "
              + ("ok" if match else f"MISMATCH (expected {entry})"))
    return ok


def _cmd_examples(args) -> int:
    fixture = _load_fixture("examples.json")
    budget = _resolve_budget(args)
    status = EXIT_OK

    ex = fixture["binary_t3"]
    field = field_create(2)
    s = construction.simplex_consta(field, ex["t"], h=Poly(field, ex["h"]))
    g_ok = list(s.g.coeffs) == ex["g"] and s.lam == ex["lambda"]
    print(f"binary_t3: g = {s.g}, lambda = {s.lam} " + ("ok" if g_ok else "MISMATCH"))
    if not (g_ok and _check_series(s, ex["series"], budget, "binary_t3")):
        status = EXIT_MISMATCH

    ex = fixture["ternary_cyclic_t3"]
    field = field_create(3)
    s = construction.simplex_cyclic(field, ex["t"])
    base_ok = s.params() == (ex["simplex"]["n"], ex["simplex"]["k"], ex["simplex"]["d"])
    print(f"ternary_cyclic_t3: simplex [{s.m}, {s.t}, {s.weight}]_3, g = {s.g} "
          + ("ok" if base_ok else "MISMATCH"))
    if not (base_ok and _check_series(s, ex["series"], budget, "ternary_cyclic_t3")):
        status = EXIT_MISMATCH
    s_ref = construction.simplex_cyclic(field, ex["t"], g=Poly(field, ex["reference_g"]))
    ref_ok = s_ref.params() == (ex["simplex"]["n"], ex["simplex"]["k"], ex["simplex"]["d"])
    print(f"ternary_cyclic_t3 (reference g): simplex [{s_ref.m}, {s_ref.t}, {s_ref.weight}]_3 "
          + ("ok" if ref_ok else "MISMATCH"))
    if not (ref_ok and _check_series(s_ref, ex["series"], budget, "ternary_cyclic_t3/ref-g")):
        status = EXIT_MISMATCH

    ex = fixture["ternary_consta_t2"]
    s = construction.simplex_consta(field, ex["t"], h=Poly(field, ex["h"]))
    g_ok = list(s.g.coeffs) == ex["g"] and s.lam == ex["lambda"]
    print(f"ternary_consta_t2: g = {s.g}, lambda = {s.lam} " + ("ok" if g_ok else "MISMATCH"))
    if not (g_ok and _check_series(s, ex["series"], budget, "ternary_consta_t2")):
        status = EXIT_MISMATCH

    print("examples: " + ("all ok" if status == EXIT_OK else "MISMATCHES FOUND"))
    return status


def _cmd_search_primitive(args) -> int:
    p_char, e = _parse_q(args.q)
    field = field_create(p_char, e)
    polys = find_primitive(field, args.t, limit=args.limit)
    for h in polys:
        coeffs = ",".join(str(c) for c in h.coeffs)
        print(f"{h}    coeffs: {coeffs}")
    print(f"{len(polys)} primitive polynomial(s) of degree {args.t} over GF({field.q})")
    return EXIT_OK


def _export_payload(code, G, W) -> dict:
    s = code.simplex
    return {
        "q_characteristic": s.field.p,
        "q_degree": s.field.e,
        "field_modulus": list(s.field.modulus) if s.field.modulus else None,
        "t": s.t,
        "p": code.p,
        "lambda": s.lam,
        "h": list(s.h.coeffs),
        "g": list(s.g.coeffs),
        "selection": [[i, j] for i, j in code.selection],
        "variant": code.variant,
        "generator_rows": [_digit_string(row, s.q) for row in G.rows],
        "weight_counts": {str(w): c for w, c in sorted(W.counts.items())},
    }


def _write_text_export(path, code, G):
    s = code.simplex
    lines = [f"{code.n} {code.k} {s.q} {s.t} {code.p} {s.lam}"]
    lines += [" ".join(str(c) for c in row) for row in G.rows]
    with open(path, "w") as fh:
        fh.write("\n".join(lines) + "\n")


def _roundtrip_json(path, W) -> bool:
    with open(path) as fh:
        data = json.load(fh)
    field = field_create(data["q_characteristic"], data["q_degree"])
    if (list(field.modulus) if field.modulus else None) != data["field_modulus"]:
        raise VerificationError("re-imported field modulus does not match the canonical one")
    h = Poly(field, data["h"])
    variant = construction.CYCLIC if data["lambda"] == 1 else construction.CONSTA_CYCLIC
    s = construction._assemble_simplex(field, data["t"], h, variant)
    selection = tuple((i, j) for i, j in data["selection"])
    if data["variant"] == construction.QT_SIMPLEX:
        code, G = construction.build_qt_simplex(s)
        if code.selection != selection:
            return False
    else:
        code, G = construction.build_two_weight(s, data["p"], selection=selection)
    if [_digit_string(row, field.q) for row in G.rows] != data["generator_rows"]:
        return False
    W2 = analysis.weight_distribution(G)
    return {str(w): c for w, c in sorted(W2.counts.items())} == data["weight_counts"] and (
        W2.counts == W.counts
    )


def _roundtrip_text(path, field, W) -> bool:
    with open(path) as fh:
        header, *row_lines = [line for line in fh.read().splitlines() if line]
    n, k, q, _t, _p, _lam = (int(v) for v in header.split())
    rows = [tuple(int(tok) for tok in line.split()) for line in row_lines]
    if len(rows) != k or any(len(r) != n for r in rows) or q != field.q:
        return False
    W2 = analysis.weight_distribution_of_rows(field, rows)
    return W2.counts == W.counts


def _cmd_export(args) -> int:
    code, G, budget = _build_code(args)
    W = analysis.weight_distribution(G, budget=budget, jobs=args.jobs)
    if args.format == "json":
        payload = _export_payload(code, G, W)
        with open(args.output, "w") as fh:
            json.dump(payload, fh, indent=1)
            fh.write("\n")
    else:
        _write_text_export(args.output, code, G)
    print(f"wrote {args.format} export to {args.output}")
    if args.roundtrip:
        ok = (
            _roundtrip_json(args.output, W)
            if args.format == "json"
            else _roundtrip_text(args.output, code.field, W)
        )
        print("round trip: " + ("ok" if ok else "MISMATCH"))
        if not ok:
            return EXIT_MISMATCH
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="qtweave",
        description="Construct and verify 2-generator quasi-twisted two-weight codes.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--q", required=True, help="field order, a prime power (e.g. 4 or 2^2)")
    common.add_argument("--t", required=True, type=int, help="simplex dimension t > 1")
    common.add_argument("--p", type=int, help="block count, 2 <= p <= q^t")
    common.add_argument(
        "--variant", choices=["two-weight", "qt-simplex"], default="two-weight",
        help="code shape to assemble (default: two-weight)",
    )
    common.add_argument("--cyclic", action="store_true",
                        help="build the simplex base via the cyclic route (needs gcd(t, q-1) = 1)")
    common.add_argument("--h", help="defining polynomial override, ascending coefficients (e.g. 2,2,1)")
    common.add_argument("--g", help="generator polynomial override for the cyclic base (implies --cyclic)")
    common.add_argument("--selection", help="block selection override, comma-separated i:j pairs")
    common.add_argument("--budget", type=int, help="enumeration budget in messages (default 2^24)")
    common.add_argument("--jobs", type=int, default=1, help="parallel enumeration workers")

    p_construct = sub.add_parser("construct", parents=[common],
                                 help="build a code and print its parameters")
    p_construct.add_argument("--matrix", action="store_true", help="print the reduced generator matrix")
    p_construct.add_argument("--block-matrix", action="store_true",
                             help="print the full twistulant block form")
    p_construct.set_defaults(func=_cmd_construct)

    p_analyze = sub.add_parser("analyze", parents=[common],
                               help="full verification report for a code")
    p_analyze.set_defaults(func=_cmd_analyze)

    p_table = sub.add_parser("table1", help="recompute the bundled q=3, t=3 reference table")
    p_table.add_argument("--budget", type=int)
    p_table.set_defaults(func=_cmd_table1)

    p_examples = sub.add_parser("examples", help="verify the bundled example code series")
    p_examples.add_argument("--budget", type=int)
    p_examples.set_defaults(func=_cmd_examples)

    p_search = sub.add_parser("search-primitive", help="list primitive polynomials of a given degree")
    p_search.add_argument("--q", required=True)
    p_search.add_argument("--t", required=True, type=int)
    p_search.add_argument("--limit", type=int, help="stop after this many results")
    p_search.set_defaults(func=_cmd_search_primitive)

    p_export = sub.add_parser("export", parents=[common], help="write a code to disk")
    p_export.add_argument("--format", choices=["text", "json"], required=True)
    p_export.add_argument("--output", required=True)
    p_export.add_argument("--roundtrip", action="store_true",
                          help="re-import the file and check the analysis is reproduced")
    p_export.set_defaults(func=_cmd_export)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ParameterError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID
    except BudgetExceededError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except VerificationError as exc:
        print(f"verification failed: {exc}", file=sys.stderr)
        return EXIT_MISMATCH
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID


def entrypoint():
    sys.exit(main())
