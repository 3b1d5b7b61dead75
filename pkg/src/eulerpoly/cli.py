"""Command-line interface: ``eulerpoly {compute,verify,table} ...``.

Exit status is 0 on success, 1 when a verification finds a property false,
and 2 on usage errors.  Documents contain no timestamps, so repeated runs of
the same invocation are byte-identical.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from itertools import permutations
from math import factorial, prod
from typing import Callable, Optional

from eulerpoly import colored, invseq, perms, realroot, recurrence, subdivision
from eulerpoly.errors import ConsistencyError, DomainError
from eulerpoly.polycore import IntPoly, symmetric_decompose

DEFAULT_CAP = 10**6
DEFAULT_SEED = 0

S_FAMILIES = ("binomial-eulerian-s", "refined")
N_FAMILIES = ("eulerian", "derangement", "binomial-eulerian")
NR_FAMILIES = ("colored", "colored-parts", "h-esd", "h-sections")
FAMILIES = S_FAMILIES + N_FAMILIES + NR_FAMILIES
MULTI = ("refined", "colored-parts", "h-sections")


class UsageError(Exception):
    pass


def parse_s(text: str) -> tuple[int, ...]:
    text = text.strip()
    if not text:
        return ()
    try:
        s = tuple(int(x) for x in text.split(","))
    except ValueError:
        raise UsageError(f"malformed s vector {text!r}: expected comma-separated integers") from None
    if any(x < 1 for x in s):
        raise UsageError(f"malformed s vector {text!r}: entries must be positive")
    return s


def _env_int(name: str, default: int) -> int:
    raw = os.environ.get(name)
    if raw is None:
        return default
    try:
        return int(raw)
    except ValueError:
        raise UsageError(f"environment variable {name} must be an integer, got {raw!r}") from None


def _require(args, *names):
    missing = [n for n in names if getattr(args, n, None) is None]
    if missing:
        flags = ", ".join("--" + n.replace("_", "-") for n in missing)
        raise UsageError(f"family {args.family!r} requires {flags}")


def _params(args) -> dict:
    if args.family in S_FAMILIES:
        return {"s": list(args.s)}
    if args.family in N_FAMILIES:
        out = {"n": args.n}
        if getattr(args, "alpha", None) is not None:
            out["alpha"] = args.alpha
        return out
    return {"n": args.n, "r": args.r}


def compute_family(family: str, s=None, n=None, r=None, alpha=None) -> list[IntPoly]:
    """Polynomials of a family; single-polynomial families return a 1-list."""
    if family == "binomial-eulerian-s":
        return [recurrence.binomial_eulerian(s)]
    if family == "refined":
        if not s:
            raise UsageError("family 'refined' needs a nonempty --s")
        return list(recurrence.refined_polys(s))
    if n is None or n < 0:
        raise UsageError("--n must be a nonnegative integer")
    if family == "eulerian":
        return [perms.alpha_recurrence(n + 1, alpha if alpha is not None else "1")[0]]
    if family == "derangement":
        return [perms.alpha_recurrence(n + 1, "0")[0]]
    if family == "binomial-eulerian":
        if n < 1:
            raise UsageError("binomial-eulerian needs --n >= 1")
        return [perms.binomial_eulerian_perm(n)]
    if r is None or r < 1:
        raise UsageError("--r must be a positive integer")
    if family == "colored":
        if n < 1:
            raise UsageError("colored needs --n >= 1")
        return [colored.a_tilde_parts(n, r, check=False).total]
    if family == "colored-parts":
        if n < 1:
            raise UsageError("colored-parts needs --n >= 1")
        parts = colored.a_tilde_parts(n, r, check=False)
        return [parts.plus, parts.minus]
    if family == "h-esd":
        return [subdivision.h_delta_esd(n, r, check=False).by_er]
    if family == "h-sections":
        return subdivision.h_sections(n, r)
    raise UsageError(f"unknown family {family!r}")


def _params_text(params: dict) -> str:
    parts = []
    for k, v in params.items():
        if isinstance(v, list):
            v = ",".join(str(x) for x in v)
        parts.append(f"{k}={v}")
    return " ".join(parts)


def _csv(rows) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["family", "params", "coeffs"])
    for fam, params, poly in rows:
        w.writerow([fam, params, ";".join(str(c) for c in poly.coeffs)])
    return buf.getvalue()


def _dump(doc) -> str:
    return json.dumps(doc, separators=(",", ":")) + "\n"


def cmd_compute(args) -> tuple[int, str]:
    if args.family in S_FAMILIES:
        _require(args, "s")
    elif args.family in N_FAMILIES:
        _require(args, "n")
    else:
        _require(args, "n", "r")
    polys = compute_family(args.family, args.s, args.n, args.r, args.alpha)
    params = _params(args)
    if args.format == "json":
        if args.family in MULTI:
            return 0, _dump({"family": args.family, "params": params,
                             "polys": [p.to_json() for p in polys]})
        return 0, _dump(polys[0].to_json())
    if args.format == "csv":
        return 0, _csv((args.family, _params_text(params), p) for p in polys)
    lines = [f"{args.family}({_params_text(params)})" + (f"[{k}]" if len(polys) > 1 else "")
             + f" = {p}" for k, p in enumerate(polys)]
    return 0, "\n".join(lines) + "\n"


def cmd_table(args) -> tuple[int, str]:
    if args.family not in N_FAMILIES + ("colored", "h-esd"):
        raise UsageError(f"table supports n-indexed single-polynomial families, not {args.family!r}")
    if args.family in ("colored", "h-esd") and args.r is None:
        raise UsageError(f"family {args.family!r} requires --r")
    start = 1 if args.family in ("binomial-eulerian", "colored") else 0
    start = max(start, args.n_min)
    rows = []
    for n in range(start, args.n_max + 1):
        (poly,) = compute_family(args.family, n=n, r=args.r, alpha=args.alpha)
        rows.append((n, poly))
    params = {"n_min": start, "n_max": args.n_max, "r": args.r}
    if args.format == "json":
        return 0, _dump({"family": args.family, "params": params,
                         "rows": [{"n": n, "r": args.r, "coeffs": p.to_json()["coeffs"]}
                                  for n, p in rows]})
    if args.format == "csv":
        return 0, _csv((args.family, _params_text({"n": n} if args.r is None else {"n": n, "r": args.r}), p)
                       for n, p in rows)
    return 0, "".join(f"n={n}: {p}\n" for n, p in rows)


# verification drivers


def _report(check: str, ok: bool, details: list, fmt: str, **extra) -> tuple[int, str]:
    status = 0 if ok else 1
    if fmt == "json":
        doc = {"check": check, "ok": ok}
        doc.update(extra)
        doc["details"] = details
        return status, _dump(doc)
    head = f"{check}: {'PASS' if ok else 'FAIL'}"
    if extra:
        head += " (" + ", ".join(f"{k}={v}" for k, v in extra.items()) + ")"
    body = [d if isinstance(d, str) else json.dumps(d) for d in details]
    return status, "\n".join([head] + body) + "\n"


def verify_interlacing(args) -> tuple[int, str]:
    details, ok = [], True
    for fam in recurrence.refined_levels(args.s):
        v = realroot.is_interlacing_sequence(fam.polys)
        ok = ok and v.holds
        entry = {"level": fam.level, **v.to_json()}
        if v.pair is not None:
            entry["pair"] = list(v.pair)
        details.append(entry)
    poly = recurrence.binomial_eulerian(args.s)
    rr = realroot.is_real_rooted(poly)
    ok = ok and rr
    details.append({"binomial_eulerian": poly.to_json(), "real_rooted": rr})
    return _report("interlacing", ok, details, args.format, s=list(args.s))


def verify_real_rooted(args) -> tuple[int, str]:
    if args.family is None:
        raise UsageError("verify real-rooted requires --family")
    if args.family in S_FAMILIES:
        _require(args, "s")
    elif args.family in N_FAMILIES:
        _require(args, "n")
    else:
        _require(args, "n", "r")
    polys = compute_family(args.family, args.s, args.n, args.r, args.alpha)
    details = [{"poly": p.to_json(), "real_rooted": realroot.is_real_rooted(p)} for p in polys]
    ok = all(d["real_rooted"] for d in details)
    return _report("real-rooted", ok, details, args.format, family=args.family)


def verify_oracle(args) -> tuple[int, str]:
    size = prod(args.s)
    if size > args.cap:
        raise UsageError(
            f"oracle enumeration of {size} sequences exceeds the cap {args.cap}; "
            "raise --cap or EULERIAN_ORACLE_CAP, or pick a smaller s"
        )
    if not args.s:
        fast, slow = [recurrence.binomial_eulerian(())], [invseq.brute_binomial_eulerian(())]
    else:
        fast = list(recurrence.refined_polys(args.s)) + [recurrence.binomial_eulerian(args.s)]
        slow = invseq.brute_refined(args.s) + [invseq.brute_binomial_eulerian(args.s)]
    details = [{"index": i, "engine": a.to_json(), "oracle": b.to_json(), "equal": a == b}
               for i, (a, b) in enumerate(zip(fast, slow))]
    ok = all(d["equal"] for d in details)
    return _report("oracle", ok, details, args.format, s=list(args.s), sequences=size)


def verify_bijections(args) -> tuple[int, str]:
    _require_nr(args)
    n, r = args.n, args.r
    if factorial(n) * r**n > args.cap:
        raise UsageError(f"{factorial(n) * r ** n} colored permutations exceed the cap {args.cap}")
    details, ok = [], True
    for m in range(1, n + 1):
        images, good = set(), True
        s = perms.theta_svec(m)
        for p in permutations(range(1, m + 1)):
            e = perms.theta(p)
            images.add(e)
            st, es = perms.perm_stats(p), invseq.stats(e, s)
            good = good and st.des == es.asc and st.bad == es.col and perms.theta_inverse(e) == p
        good = good and len(images) == factorial(m)
        details.append({"map": "theta", "n": m, "ok": good})
        ok = ok and good
    for m in range(1, n + 1):
        s = colored.psi_svec(m, r)
        images, good = set(), True
        for sigma in colored.enumerate_colored(m, r):
            e = colored.psi(sigma)
            images.add(e)
            cs, es = colored.colored_stats(sigma), invseq.stats(e, s)
            good = (good and cs.des == es.des and len(cs.bad_set) == es.col_prime
                    and (cs.sign_class == "plus") == (e[-1] == 0)
                    and colored.psi_inv(e, r) == sigma)
        good = good and len(images) == factorial(m) * r**m
        details.append({"map": "psi", "n": m, "r": r, "ok": good})
        ok = ok and good
    return _report("bijections", ok, details, args.format, n=n, r=r)


def verify_matrices(args) -> tuple[int, str]:
    fact = recurrence.factorization_checks(seed=args.seed)
    counter = recurrence.counterexample_check()
    rand = recurrence.random_transform_trials(args.trials, args.seed)
    n_fact = sum(1 for line in fact.lines if line.startswith("PASS factorization"))
    n_counter = sum(1 for line in counter.lines
                    if line.startswith("PASS") and line.endswith("not interlacing"))
    details = (
        [f"{n_fact} factorizations passed", f"{n_counter} counterexamples confirmed non-interlacing"]
        + fact.lines + counter.lines + rand.lines
    )
    ok = fact.ok and counter.ok and rand.ok
    return _report("matrices", ok, details, args.format, seed=args.seed, trials=args.trials)


def verify_decomposition(args) -> tuple[int, str]:
    _require_nr(args)
    n, r = args.n, args.r
    if n < 1:
        raise UsageError("decomposition needs --n >= 1")
    if factorial(n) * r**n > args.cap:
        raise UsageError(f"{factorial(n) * r ** n} colored permutations exceed the cap {args.cap}")
    details = []
    try:
        parts = colored.a_tilde_parts(n, r, check=True)
        details.append("routes agree")
        routes_ok = True
    except ConsistencyError as exc:
        details.append(str(exc))
        parts = colored.a_tilde_parts(n, r, check=False)
        routes_ok = False
    verdict = realroot.interlaces(parts.plus, parts.minus)
    rr = realroot.is_real_rooted(parts.total)
    a, b = symmetric_decompose(parts.total, n)
    sym_ok = a == parts.plus and b.shift(1) == parts.minus
    details += [
        {"plus": parts.plus.to_json(), "minus": parts.minus.to_json(), "total": parts.total.to_json()},
        {"plus_interlaces_minus": verdict.to_json()},
        {"total_real_rooted": rr},
        {"symmetric_decomposition_matches": sym_ok},
    ]
    ok = routes_ok and verdict.holds and rr and sym_ok
    return _report("decomposition", ok, details, args.format, n=n, r=r)


def _require_nr(args):
    missing = [f"--{k}" for k in ("n", "r") if getattr(args, k) is None]
    if missing:
        raise UsageError(f"this check requires {', '.join(missing)}")
    if args.n < 0 or args.r < 1:
        raise UsageError("--n must be nonnegative and --r positive")


VERIFIERS: dict[str, Callable] = {
    "interlacing": verify_interlacing,
    "real-rooted": verify_real_rooted,
    "oracle": verify_oracle,
    "bijections": verify_bijections,
    "matrices": verify_matrices,
    "decomposition": verify_decomposition,
}


def cmd_verify(args) -> tuple[int, str]:
    if args.check in ("interlacing", "oracle"):
        if args.s is None:
            raise UsageError(f"verify {args.check} requires --s")
        if args.check == "interlacing" and not args.s:
            raise UsageError("verify interlacing needs a nonempty --s")
    return VERIFIERS[args.check](args)


def _add_common(p: argparse.ArgumentParser, fmt_default: str = "json") -> None:
    p.add_argument("--s", type=str, default=None, help="comma-separated s vector, e.g. 2,3,4")
    p.add_argument("--n", type=int, default=None)
    p.add_argument("--r", type=int, default=None)
    p.add_argument("--alpha", choices=("0", "1", "1+z"), default=None,
                   help="corner entry of the permutation transfer matrix (eulerian family)")
    p.add_argument("--format", choices=("json", "csv", "text"), default=fmt_default)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="eulerpoly",
        description="Binomial Eulerian polynomials for s-inversion sequences: compute, verify, tabulate.",
    )
    sub = parser.add_subparsers(dest="verb", required=True)

    p = sub.add_parser("compute", help="compute a polynomial family")
    p.add_argument("family", choices=FAMILIES)
    _add_common(p)

    p = sub.add_parser("verify", help="check a property and exit 1 if it fails")
    p.add_argument("check", choices=tuple(VERIFIERS))
    p.add_argument("--family", choices=FAMILIES, default=None)
    _add_common(p)
    p.add_argument("--cap", type=int, default=None, help="oracle size cap (env EULERIAN_ORACLE_CAP)")
    p.add_argument("--seed", type=int, default=None, help="RNG seed (env EULERIAN_SEED)")
    p.add_argument("--trials", type=int, default=200)

    p = sub.add_parser("table", help="tabulate an n-indexed family")
    p.add_argument("--family", choices=FAMILIES, required=True)
    p.add_argument("--n-max", type=int, required=True)
    p.add_argument("--n-min", type=int, default=0)
    p.add_argument("--r", type=int, default=None)
    p.add_argument("--alpha", choices=("0", "1", "1+z"), default=None)
    p.add_argument("--format", choices=("json", "csv", "text"), default="json")
    return parser


def run(argv: Optional[list[str]] = None) -> tuple[int, str, str]:
    """Run one invocation; returns (exit status, stdout text, stderr text)."""
    parser = build_parser()
    err = io.StringIO()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0), "", ""
    try:
        if getattr(args, "s", None) is not None:
            args.s = parse_s(args.s)
        if args.verb == "verify":
            args.cap = args.cap if args.cap is not None else _env_int("EULERIAN_ORACLE_CAP", DEFAULT_CAP)
            args.seed = args.seed if args.seed is not None else _env_int("EULERIAN_SEED", DEFAULT_SEED)
        handler = {"compute": cmd_compute, "verify": cmd_verify, "table": cmd_table}[args.verb]
        status, out = handler(args)
        return status, out, ""
    except (UsageError, DomainError) as exc:
        err.write(f"eulerpoly: error: {exc}\n")
        return 2, "", err.getvalue()


def main(argv: Optional[list[str]] = None) -> int:
    status, out, err = run(argv)
    sys.stdout.write(out)
    sys.stderr.write(err)
    return status


if __name__ == "__main__":
    sys.exit(main())
