"""Batch command-line front end.

Every subcommand is a pure function of (options, input): identical
invocations produce byte-identical standard output.  Progress notes for the
long-running solves go to standard error only.

Exit codes: 0 all checks passed, 1 at least one check failed, 2 usage or
input error.
"""

import argparse
import json
import sys
import time

from . import composition, jordan, liealg, tensor, veronese
from .jordan import HermMatrix3, IDENTITY_METRIC, LORENTZ_METRIC
from .tensor import COMPLEX_NORM, REAL_NORM, algebra
from .veronese import COMPLEX, REAL, PlaneKind, VeroneseTriple

_TENSOR_ALGS = {
    "CxO": ("C", "O"),
    "CxOs": ("C", "Os"),
    "CsxO": ("Cs", "O"),
    "CsxOs": ("Cs", "Os"),
}


def _progress(msg):
    print(msg, file=sys.stderr, flush=True)


# ---------------------------------------------------------------------------
# report assembly and rendering
# ---------------------------------------------------------------------------

def _check(name, expected, computed, ok, witness=None):
    c = {"name": name, "expected": expected, "computed": computed,
         "pass": bool(ok)}
    if witness is not None and not ok:
        c["witness"] = witness
    return c


def _report(title, checks, extra=None):
    rep = {
        "title": title,
        "status": "pass" if all(c["pass"] for c in checks) else "fail",
        "checks": checks,
    }
    if extra:
        rep["extra"] = extra
    return rep


def _render(rep, fmt):
    if fmt == "json":
        return json.dumps(rep, indent=2, sort_keys=True, default=str)
    if fmt == "csv":
        lines = ["name,expected,computed,status"]
        for c in rep["checks"]:
            lines.append(
                f"{c['name']},{c['expected']},{c['computed']},"
                f"{'pass' if c['pass'] else 'FAIL'}"
            )
        return "\n".join(lines)
    # markdown
    lines = [f"# {rep['title']}", "", f"status: **{rep['status']}**", "",
             "| check | expected | computed | status |",
             "|---|---|---|---|"]
    for c in rep["checks"]:
        lines.append(
            f"| {c['name']} | {c['expected']} | {c['computed']} | "
            f"{'pass' if c['pass'] else 'FAIL'} |"
        )
    if rep.get("extra"):
        lines += ["", "```", json.dumps(rep["extra"], indent=2, sort_keys=True,
                                        default=str), "```"]
    return "\n".join(lines)


def _load_json(path):
    try:
        with open(path) as fh:
            return json.load(fh)
    except json.JSONDecodeError as exc:
        raise SystemExit(
            f"error: malformed JSON in {path}: line {exc.lineno} "
            f"column {exc.colno}: {exc.msg}"
        ) from None
    except OSError as exc:
        raise SystemExit(f"error: cannot read {path}: {exc}") from None


# ---------------------------------------------------------------------------
# subcommands
# ---------------------------------------------------------------------------

def _cmd_identities(args):
    checks = []
    names = [args.algebra] if args.algebra else ["O", "Os"] + list(_TENSOR_ALGS)
    for name in names:
        if name in _TENSOR_ALGS:
            suite = tensor.tensor_identity_suite(
                algebra(*_TENSOR_ALGS[name]), args.samples, args.seed)
        elif name in composition.DOUBLING:
            suite = composition.identity_suite(
                composition.standard_table(name), args.samples, args.seed)
        else:
            raise SystemExit(f"error: unknown algebra {name!r}")
        for cname, c in suite["checks"].items():
            checks.append(_check(f"{name}:{cname}", "holds",
                                 "holds" if c["pass"] else "fails",
                                 c["pass"], c["witness"]))
    witness = composition.find_nonassociative_triple(composition.standard_table("O"))
    checks.append(_check("O:associativity", "fails (witness found)",
                         "fails" if witness else "holds", witness is not None))
    return _report("identity suites", checks)


def _cmd_norms(args):
    name = args.algebra or "CxO"
    if name not in _TENSOR_ALGS:
        raise SystemExit(f"error: unknown tensor algebra {name!r}")
    alg = algebra(*_TENSOR_ALGS[name])
    comp = tensor.composition_check(alg, COMPLEX_NORM, args.samples, args.seed)
    checks = [
        _check(f"{name}: N(ab) = N(a)N(b) (ring-valued norm)", "PASS",
               "PASS" if comp["pass"] else "FAIL", comp["pass"], comp["witness"]),
    ]
    realchk = tensor.composition_check(alg, REAL_NORM, min(args.samples, 100),
                                       args.seed)
    checks.append(
        _check(f"{name}: |ab|^2 = |a|^2 |b|^2 (real norm)",
               "FAIL (counterexample found)",
               "FAIL" if not realchk["pass"] else "PASS", not realchk["pass"])
    )
    extra = {"real_norm_witness": realchk["witness"]}
    if alg.scalar_kind == "C":
        a, b = tensor.canonical_real_norm_witness(alg)
        lhs = (a * b).norm(REAL_NORM)
        rhs = a.norm(REAL_NORM) * b.norm(REAL_NORM)
        checks.append(_check(f"{name}: canonical witness (1+i e1)(1-i e1)",
                             "0 != 4", f"{lhs} != {rhs}",
                             lhs == 0 and rhs == 4))
    return _report(f"norm composition on {name}", checks, extra)


def _cmd_veronese_check(args):
    kind = PlaneKind(args.kind, algebra("C", "O"))
    checks = []
    if args.input:
        v = VeroneseTriple.from_json(_load_json(args.input))
        ok = veronese.is_veronese(v)
        res = veronese.veronese_residuals(v)
        checks.append(_check("conditions hold", "all residuals zero",
                             "zero" if ok else "nonzero", ok,
                             [str(r) for r in res]))
        if ok and args.kind == COMPLEX and not v.is_zero():
            rank = HermMatrix3.from_veronese(v).rank()
            checks.append(_check("attached matrix rank", 1, rank, rank == 1))
    else:
        from .randgen import Stream

        rng = Stream(args.seed)
        bad = 0
        for _ in range(args.samples):
            if args.kind == COMPLEX:
                v = veronese.random_complex_veronese(kind, rng)
            else:
                v = veronese.real_veronese_octonionic_point(kind, rng)
            if not veronese.is_veronese(v):
                bad += 1
        checks.append(_check(f"{args.samples} generated cone points",
                             "all satisfy the conditions",
                             f"{bad} failures", bad == 0))
    return _report(f"veronese conditions ({args.kind})", checks)


def _cmd_veronese_dim(args):
    samples = min(args.samples, 10)
    _progress(f"sampling jacobian ranks at {samples} points per family ...")
    rep = veronese.dimension_report(samples, args.seed)
    cx = rep["complex"]
    checks = [
        _check("complex: generic jacobian rank", 10,
               cx["survey"]["ranks"], cx["pass"]),
        _check("complex: plane dimension", 16,
               cx["survey"]["report"]["dim_plane"], cx["pass"]),
    ]
    real = rep["real"]
    for fam, part in real["measured"].items():
        checks.append(_check(
            f"real/{fam}: measured rank (stated: {real['stated_conditions']} "
            "conditions)", "reported", part["ranks"], True))
    checks.append(_check(
        "real: discrepancy with stated plane dimension "
        f"{real['stated_dim_plane']}", "documented",
        "documented" if real["discrepancy"] else "none", True))
    return _report("veronese cone dimensions", checks, extra=rep)


def _cmd_jordan_rank(args):
    checks = []
    if args.input:
        doc = _load_json(args.input)
        if "entries" in doc:
            m = jordan.matrix_from_json(doc)
        else:
            m = HermMatrix3.from_veronese(VeroneseTriple.from_json(doc))
        rank = m.rank()
        hc = m.hamilton_cayley_residual().is_zero()
        checks.append(_check("rank", "in {0,1,2,3}", rank, rank in (0, 1, 2, 3)))
        checks.append(_check("hamilton-cayley residual", "zero",
                             "zero" if hc else "nonzero", hc))
        return _report("jordan rank", checks, extra={"matrix": jordan.pretty(m)})
    from .randgen import Stream

    for sk, on in (("R", "O"), ("R", "Os"), ("C", "O")):
        alg = algebra(sk, on)
        rng = Stream(args.seed)
        hist = {0: 0, 1: 0, 2: 0, 3: 0}
        hc_fail = 0
        for _ in range(args.samples):
            m = jordan.random_hermitian(alg, rng)
            hist[m.rank()] += 1
            if not m.hamilton_cayley_residual().is_zero():
                hc_fail += 1
        checks.append(_check(f"{alg!r}: hamilton-cayley on {args.samples} samples",
                             "0 failures", f"{hc_fail} failures", hc_fail == 0))
        checks.append(_check(f"{alg!r}: rank histogram", "reported",
                             str(hist), True))
    return _report("jordan ranks", checks)


def _cmd_adjacency_demo(args):
    rep = veronese.adjacency_demo()
    checks = [
        _check(name.replace("_", " "), True, val, val)
        for name, val in rep["checks"].items()
    ]
    return _report("adjacent points in the bioctonionic plane", checks, extra=rep)


_LIE_KEYS = ("O", "Os", "CxO", "J3(O)", "J3(Os)", "J2,1(O)")


def _lie_reports(args, with_char):
    checks = []
    keys = [args.algebra] if args.algebra else list(_LIE_KEYS)
    expected_dims = {"O": 14, "Os": 14, "CxO": 28,
                     "J3(O)": 52, "J3(Os)": 52, "J2,1(O)": 52}
    expected_chars = {"O": -14, "Os": 2, "CxO": 0,
                      "J3(O)": -52, "J3(Os)": 4, "J2,1(O)": -20}
    for key in keys:
        if key not in expected_dims:
            raise SystemExit(f"error: unknown carrier {key!r}; "
                             f"choose from {', '.join(_LIE_KEYS)}")
        _progress(f"solving derivation system for {key} ...")
        rep = liealg.derivation_report(key, args.tolerance)
        checks.append(_check(f"dim der({key})", expected_dims[key],
                             rep["dim"], rep["dim"] == expected_dims[key]))
        if with_char:
            checks.append(_check(f"character of der({key})", expected_chars[key],
                                 rep["character"],
                                 rep["character"] == expected_chars[key]
                                 and rep["paths_agree"]))
    return checks


def _cmd_lie_der(args):
    return _report("derivation algebra dimensions", _lie_reports(args, False))


def _cmd_lie_char(args):
    return _report("derivation algebra characters", _lie_reports(args, True))


def _cmd_tables(args):
    checks = []
    _progress("derivation algebras (g2 and the f4 family) ...")
    for row in liealg.derivation_table(args.tolerance):
        checks.append(_check(f"{row['algebra']}: dim", row["expected_dim"],
                             row["dim"], row["dim"] == row["expected_dim"]))
        checks.append(_check(f"{row['algebra']}: character",
                             row["expected_character"], row["character"],
                             row["character"] == row["expected_character"]
                             and row["paths_agree"]))
    _progress("reduced structure and unitary algebras (the e6 family) ...")
    for row in liealg.structure_table(args.tolerance):
        checks.append(_check(f"{row['algebra']}: dim", row["expected_dim"],
                             row["dim"], row["dim"] == row["expected_dim"]))
        checks.append(_check(f"{row['algebra']}: character",
                             row["expected_character"], row["character"],
                             row["character"] == row["expected_character"]))
    _progress("matrix-model parameter counts ...")
    mm = liealg.matrix_model_report()
    for name, expected in (("a3(O)", 64), ("sa3(O)", 38), ("sa3(CxO)", 64)):
        checks.append(_check(f"parameters of {name}", expected, mm[name],
                             mm[name] == expected))
    for name in ("collineation_sum", "isometry_sum", "bioctonionic_sum"):
        row = mm[name]
        checks.append(_check(name.replace("_", " "), row["expected"],
                             row["value"], row["pass"]))
    cosets = liealg.coset_dimensions()
    f4 = cosets["octonionic_projective"]
    e6 = cosets["bioctonionic_projective"]
    checks.append(_check("octonionic projective plane: 52 - 36",
                         f4["expected"], f4["dim"], f4["pass"]))
    checks.append(_check("bioctonionic projective plane: 78 - 45 - 1",
                         e6["expected"], e6["dim"], e6["pass"]))
    return _report("isometry algebra tables", checks)


# ---------------------------------------------------------------------------
# entry point
# ---------------------------------------------------------------------------

def _build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--samples", type=int, default=200)
    common.add_argument("--format", choices=("json", "csv", "md"), default="md")
    common.add_argument("--input", default=None,
                        help="path to a JSON input document")
    common.add_argument("--tolerance", type=float, default=1e-8,
                        help="relative tolerance of the floating signature path")
    common.add_argument("--threads", type=int, default=1,
                        help="solver parallelism hint (output is identical for "
                             "any value)")
    p = argparse.ArgumentParser(
        prog="bioctonion",
        description="exact verification of bioctonionic plane and isometry "
                    "algebra claims",
    )
    sub = p.add_subparsers(dest="subcommand", required=True)

    def add_parser(name, **kw):
        return sub.add_parser(name, parents=[common], **kw)

    s = add_parser("identities", help="alternativity / Moufang / composition")
    s.add_argument("--algebra", default=None)
    s.set_defaults(fn=_cmd_identities)

    s = add_parser("norms", help="composition dichotomy of the two norms")
    s.add_argument("--algebra", default=None)
    s.set_defaults(fn=_cmd_norms)

    s = add_parser("veronese-check", help="verify the six cone conditions")
    s.add_argument("--kind", choices=(COMPLEX, REAL), default=COMPLEX)
    s.set_defaults(fn=_cmd_veronese_check)

    s = add_parser("veronese-dim", help="jacobian-rank dimension counts")
    s.set_defaults(fn=_cmd_veronese_dim)

    s = add_parser("jordan-rank", help="rank stratification and "
                                           "hamilton-cayley")
    s.set_defaults(fn=_cmd_jordan_rank)

    s = add_parser("adjacency-demo", help="two points joined by two lines")
    s.set_defaults(fn=_cmd_adjacency_demo)

    s = add_parser("lie-der", help="derivation algebra dimensions")
    s.add_argument("--algebra", default=None)
    s.set_defaults(fn=_cmd_lie_der)

    s = add_parser("lie-char", help="derivation algebra characters")
    s.add_argument("--algebra", default=None)
    s.set_defaults(fn=_cmd_lie_char)

    s = add_parser("tables", help="full dimension/character tables")
    s.set_defaults(fn=_cmd_tables)
    return p


def main(argv=None):
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse exits 2 on usage errors already
        raise
    start = time.monotonic()
    try:
        rep = args.fn(args)
    except SystemExit as exc:
        if exc.code and not isinstance(exc.code, int):
            print(exc.code, file=sys.stderr)
            return 2
        raise
    _progress(f"completed in {time.monotonic() - start:.1f} s")
    print(_render(rep, args.format))
    return 0 if rep["status"] == "pass" else 1


if __name__ == "__main__":
    sys.exit(main())
