r"""Batch command-line interface: dimension tables, verification suites,
Kazhdan-Lusztig lift data, and finite-model reports, serialized
deterministically.

Subcommands:

- ``dim``: per-class table (subset representative $I$, normalizer order
  $N_I$, class size $R_I$, descent count $D_I$) and the total dimension
  of the braid-generated subalgebra.
- ``dim-rank``: cross-check of that closed-form total against the rank
  of the generated subalgebra computed by linear closure, exact or at
  sampled specializations of $v$.
- ``verify``: run a named identity suite and report one pass/fail line
  per identity; exit code 0 only when every line passes.
- ``kl-lift``: emit the bar-invariant lifts $c_w$ with exact
  coefficients in the (partition, permutation) basis, together with
  their bar-invariance and image checks.
- ``finite-model``: full operator-identity report over one finite basic
  affine space, plus the base-point span solve and (over square fields)
  the monodromic comparison.

Identical configurations (including the seed) produce byte-identical
output files; JSON keys are sorted, CSV columns fixed.  Exit codes:
0 success, 1 verification failure, 2 usage error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from dataclasses import asdict, dataclass
from fractions import Fraction

from . import btalg, hecke, monodromic
from .coxeter import (all_perms, dim_C, dimension_rows, perm_length,
                      perm_mul, simple_perm)
from .finite_model import (build_model, delta_in_epsilon_span,
                           monodromic_crosscheck, verify_main_identity)
from .monodromic import trivial_character

MAX_THREADS = 64


@dataclass(frozen=True)
class RunConfig:
    """Everything that determines a run's output bytes."""
    command: str
    n: int = 2
    q: int = 2
    k: int = 1
    mode: str = ""
    suite: str = ""
    seed: int = 0
    fmt: str = "json"
    out: str = ""
    threads: int = 1

    def public(self) -> dict:
        d = asdict(self)
        d.pop("out")
        return d


# ---------------------------------------------------------------------------
# serialization
# ---------------------------------------------------------------------------

def _jsonable(x):
    if isinstance(x, Fraction):
        return str(x)
    if isinstance(x, dict):
        return {str(k): _jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [_jsonable(v) for v in x]
    if isinstance(x, (str, int, float, bool)) or x is None:
        return x
    return repr(x)


def _csv_rows(report: dict) -> tuple[list[str], list[list]]:
    cmd = report["config"]["command"]
    if cmd in ("dim",):
        header = ["I", "N_I", "R_I", "D_I"]
        rows = [[" ".join(str(i) for i in r["I"]), r["N_I"], r["R_I"],
                 r["D_I"]] for r in report["rows"]]
        return header, rows
    if cmd == "kl-lift":
        header = ["w", "terms", "bar_invariant", "image_matches",
                  "descent_images_agree"]
        rows = [[" ".join(str(i) for i in r["w"]), len(r["terms"]),
                 r["bar_invariant"], r["image_matches"],
                 r["descent_images_agree"]] for r in report["records"]]
        return header, rows
    header = ["check", "ok"]
    return header, [[label, ok] for label, ok in report["checks"]]


def _serialize(report: dict, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(_jsonable(report), sort_keys=True, indent=2) + "\n"
    buf = io.StringIO()
    header, rows = _csv_rows(report)
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    for row in rows:
        writer.writerow(row)
    return buf.getvalue()


def _emit(report: dict, config: RunConfig) -> None:
    text = _serialize(report, config.fmt)
    if config.out:
        with open(config.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


# ---------------------------------------------------------------------------
# verification suites
# ---------------------------------------------------------------------------

def suite_btalg(n: int) -> list[tuple[str, bool]]:
    return btalg.verify_presentation(n)


def suite_hecke(n: int) -> list[tuple[str, bool]]:
    m = n + 1
    table = hecke.kl_table(m)
    perms = all_perms(m)
    ok_bar = ok_rec = ok_int = True
    for w in perms:
        cw = hecke.canonical_basis(w, table)
        if hecke.bar_involution(cw) != cw:
            ok_bar = False
        if hecke.canonical_by_bar(w) != cw:
            ok_rec = False
    for s in range(1, m):
        sp = simple_perm(s, m)
        for u in perms:
            if perm_length(perm_mul(sp, u)) <= perm_length(u):
                continue
            try:
                hecke.c_expansion(s, u, table)
            except ArithmeticError:
                ok_int = False
    return [("canonical basis bar-invariant", ok_bar),
            ("bar-invariance solve matches recursion", ok_rec),
            ("canonical product expansion integral", ok_int)]


def _pi_image(x: btalg.BTElement) -> hecke.HeckeElement:
    """Image of an element of the braid-generated subalgebra in the
    Hecke algebra: the trivial-character corner of the orbit algebra."""
    combo = btalg.word_combo(x)
    return monodromic.hecke_image(
        monodromic.pi_of_combo(combo, trivial_character(x.m)))


def suite_kl_lift(n: int) -> list[tuple[str, bool]]:
    m = n + 1
    table = hecke.kl_table(m)
    ok_bar = ok_img = ok_descent = True
    for w in all_perms(m):
        cw = btalg.kl_lift(w)
        if btalg.bar(cw) != cw:
            ok_bar = False
        target = hecke.canonical_basis(w, table)
        if _pi_image(cw) != target:
            ok_img = False
        if perm_length(w) >= 2:
            for s in range(1, m):
                if perm_length(perm_mul(simple_perm(s, m), w)) \
                        < perm_length(w):
                    if _pi_image(btalg.kl_lift_via(w, s)) != target:
                        ok_descent = False
    return [("lift bar-invariant", ok_bar),
            ("lift maps onto the canonical basis", ok_img),
            ("every descent recursion maps to the same image", ok_descent)]


def suite_monodromic(n: int, seed: int,
                     trials: int = 120) -> list[tuple[str, bool]]:
    checks = list(monodromic.verify_ho_relations(n, 3))
    checks.append(("trivial orbit matches the Hecke algebra",
                   monodromic.verify_hecke_comparison(n)))
    rep = monodromic.pi_consistency(n, trials, seed=seed, modulus=3)
    checks.append((f"rewrite consistency over {rep['trials']} word pairs",
                   rep["failures"] == 0))
    return checks


def suite_finite(n: int, q: int, k: int) -> list[tuple[str, bool]]:
    rep = verify_main_identity(n, q, k)
    checks = list(rep["checks"])
    span = delta_in_epsilon_span(n, q, k)
    checks.append(("base-point delta solved in character span",
                   span["solved"]))
    return checks


_SUITE_BOUNDS = {"presentation": 3, "hecke": 3, "kl-lift": 3,
                 "monodromic": 2}


def run_suite(suite: str, config: RunConfig) -> list[tuple[str, bool]]:
    n, q, k, seed = config.n, config.q, config.k, config.seed
    if suite == "presentation":
        return suite_btalg(n)
    if suite == "hecke":
        return suite_hecke(n)
    if suite == "kl-lift":
        return suite_kl_lift(n)
    if suite == "monodromic":
        return suite_monodromic(n, seed)
    if suite == "finite":
        return suite_finite(n, q, k)
    raise ValueError(f"unknown suite {suite!r}")


_ALL_BATTERY = (("presentation", {"n": 2}),
                ("hecke", {"n": 3}),
                ("kl-lift", {"n": 2}),
                ("monodromic", {"n": 1}),
                ("monodromic", {"n": 2}),
                ("finite", {"n": 1, "q": 2, "k": 2}),
                ("finite", {"n": 2, "q": 2, "k": 1}))


# ---------------------------------------------------------------------------
# commands
# ---------------------------------------------------------------------------

def cmd_dim(config: RunConfig) -> tuple[dict, int]:
    mode = {"subset": "subset-enumeration",
            "aggregation": "partition-aggregation"}[config.mode]
    rows = [{"I": list(r.subset), "lambda": list(r.lam),
             "N_I": r.normalizer_order, "R_I": r.subgroup_count,
             "D_I": r.descent_count} for r in dimension_rows(config.n)]
    total = dim_C(config.n, mode)
    cross = sum(r["R_I"] * r["D_I"] for r in rows)
    report = {"config": config.public(), "rows": rows, "total": total,
              "row_sum_matches": cross == total}
    return report, 0 if cross == total else 1


def cmd_dim_rank(config: RunConfig) -> tuple[dict, int]:
    rank = btalg.c_dimension_report(config.n, mode=config.mode,
                                    seed=config.seed)
    formula = dim_C(config.n)
    match = bool(rank["agree"]) and rank["dimension"] == formula
    report = {"config": config.public(), "closure": rank,
              "formula_dimension": formula, "match": match,
              "checks": [("closure rank matches the closed form", match)]}
    return report, 0 if match else 1


def cmd_verify(config: RunConfig) -> tuple[dict, int]:
    if config.suite == "all":
        checks = []
        for suite, params in _ALL_BATTERY:
            sub = RunConfig(command="verify", suite=suite,
                            seed=config.seed, **params)
            tag = ", ".join(f"{k2}={v}" for k2, v in sorted(params.items()))
            checks.extend(((f"[{suite}: {tag}] {label}", ok)
                           for label, ok in run_suite(suite, sub)))
    else:
        checks = run_suite(config.suite, config)
    ok = all(flag for _, flag in checks)
    report = {"config": config.public(), "checks": checks, "ok": ok}
    return report, 0 if ok else 1


def cmd_kl_lift(config: RunConfig) -> tuple[dict, int]:
    m = config.n + 1
    table = hecke.kl_table(m)
    records = []
    all_ok = True
    for w in sorted(all_perms(m), key=lambda u: (perm_length(u), u)):
        cw = btalg.kl_lift(w)
        bar_ok = btalg.bar(cw) == cw
        target = hecke.canonical_basis(w, table)
        img_ok = _pi_image(cw) == target
        descent_ok = True
        if perm_length(w) >= 2:
            for s in range(1, m):
                if perm_length(perm_mul(simple_perm(s, m), w)) \
                        < perm_length(w):
                    if _pi_image(btalg.kl_lift_via(w, s)) != target:
                        descent_ok = False
        terms = [{"blocks": [list(b) for b in P], "perm": list(u),
                  "coeff": repr(cw.terms[(P, u)])}
                 for P, u in sorted(cw.terms)]
        all_ok = all_ok and bar_ok and img_ok and descent_ok
        records.append({"w": list(w), "length": perm_length(w),
                        "terms": terms, "bar_invariant": bar_ok,
                        "image_matches": img_ok,
                        "descent_images_agree": descent_ok})
    report = {"config": config.public(), "records": records, "ok": all_ok}
    return report, 0 if all_ok else 1


def cmd_finite_model(config: RunConfig) -> tuple[dict, int]:
    identity = verify_main_identity(config.n, config.q, config.k)
    span = delta_in_epsilon_span(config.n, config.q, config.k)
    model = build_model(config.n, config.q, config.k)
    crosschecks = []
    root = 1
    while root * root < model.qk:
        root += 1
    if root * root == model.qk and config.n <= 2:
        for theta in model.all_characters():
            crosschecks.append(monodromic_crosscheck(
                config.n, config.q, config.k, theta.exponents))
    ok = identity["ok"] and span["solved"] \
        and all(c["ok"] for c in crosschecks)
    checks = list(identity["checks"])
    checks.append(("base-point delta solved in character span",
                   span["solved"]))
    for c in crosschecks:
        checks.append((f"monodromic comparison at exponents "
                       f"{tuple(c['exponents'])}", c["ok"]))
    report = {"config": config.public(), "checks": checks,
              "delta_span": span, "crosschecks": crosschecks, "ok": ok}
    return report, 0 if ok else 1


# ---------------------------------------------------------------------------
# argument parsing and dispatch
# ---------------------------------------------------------------------------

def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="braidties",
        description="Exact workbench for braid-and-tie algebras, "
                    "Hecke algebras, and finite basic affine spaces.")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, n_default=2):
        p.add_argument("--n", type=int, default=n_default,
                       help="rank (symmetric group S_{n+1})")
        p.add_argument("--seed", type=int, default=0,
                       help="seed for randomized trials")
        p.add_argument("--format", dest="fmt", choices=("json", "csv"),
                       default="json", help="output format")
        p.add_argument("--out", default="", help="write output to PATH")
        p.add_argument("--threads", type=int, default=1,
                       help="cap on dispatcher parallelism (all "
                            "computations are exact and single-threaded; "
                            "values above 1 are accepted and capped)")

    p = sub.add_parser("dim", help="per-class dimension table and total")
    common(p)
    p.add_argument("--mode", choices=("subset", "aggregation"), default="",
                   help="subset enumeration (n <= 20) or partition "
                        "aggregation (n <= 50); default picks by n")

    p = sub.add_parser("dim-rank",
                       help="closure rank versus closed-form dimension")
    common(p)
    p.add_argument("--mode", choices=("exact", "specialized"),
                   default="exact")

    p = sub.add_parser("verify", help="run one verification suite")
    common(p)
    p.add_argument("--suite",
                   choices=("presentation", "hecke", "kl-lift",
                            "monodromic", "finite", "all"),
                   default="all")
    p.add_argument("--q", type=int, default=2, help="field prime power")
    p.add_argument("--k", type=int, default=1, help="field extension degree")

    p = sub.add_parser("kl-lift",
                       help="bar-invariant lifts of the canonical basis")
    common(p)

    p = sub.add_parser("finite-model",
                       help="operator identities on one finite model")
    common(p, n_default=1)
    p.add_argument("--q", type=int, default=2, help="field prime power")
    p.add_argument("--k", type=int, default=1, help="field extension degree")

    return parser


def _validate(parser: argparse.ArgumentParser, args) -> RunConfig:
    n = args.n
    if n < 0:
        parser.error("--n must be nonnegative")
    threads = args.threads
    if threads < 1:
        parser.error("--threads must be at least 1")
    threads = min(threads, MAX_THREADS)
    mode = getattr(args, "mode", "")
    if args.command == "dim":
        if not mode:
            mode = "subset" if n <= 20 else "aggregation"
        limit = 20 if mode == "subset" else 50
        if n > limit:
            parser.error(f"dim --mode {mode} is bounded at n <= {limit}")
    elif args.command == "dim-rank":
        limit = 3 if mode == "exact" else 4
        if not 1 <= n <= limit:
            parser.error(f"dim-rank --mode {mode} needs 1 <= n <= {limit}")
    elif args.command == "verify":
        if args.suite in _SUITE_BOUNDS and n > _SUITE_BOUNDS[args.suite]:
            parser.error(f"suite {args.suite} is bounded at "
                         f"n <= {_SUITE_BOUNDS[args.suite]}")
        if args.suite != "all" and n < 1:
            parser.error("verify needs n >= 1")
    elif args.command == "kl-lift":
        if not 1 <= n <= 3:
            parser.error("kl-lift needs 1 <= n <= 3")
    elif args.command == "finite-model":
        if n < 1:
            parser.error("finite-model needs n >= 1")
    q = getattr(args, "q", 2)
    k = getattr(args, "k", 1)
    if q < 2 or k < 1:
        parser.error("--q needs a prime power >= 2 and --k >= 1")
    return RunConfig(command=args.command, n=n, q=q, k=k, mode=mode,
                     suite=getattr(args, "suite", ""), seed=args.seed,
                     fmt=args.fmt, out=args.out, threads=threads)


_DISPATCH = {"dim": cmd_dim, "dim-rank": cmd_dim_rank, "verify": cmd_verify,
             "kl-lift": cmd_kl_lift, "finite-model": cmd_finite_model}


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    config = _validate(parser, args)
    try:
        report, code = _DISPATCH[config.command](config)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    _emit(report, config)
    return code


if __name__ == "__main__":
    sys.exit(main())
