"""Command-line front end: exact tables of K-types, norm ratios and Wallach data.

Exit status 0 on success, 1 when a check fails, 2 on parse errors and 3 when
the answer needs the E6 conjecture but --conjecture was not given.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from fractions import Fraction

from . import analysis, oracle
from .arith import FactoredFn, Special, fmt_rat, parse_rational
from .catalog import Family, parse_fiber, parse_group
from .decomp import decompose, decompose_upto
from .norms import ConjecturalContentError, norm_ratio, normalizing_const

COMMANDS = ("decompose", "ratio", "cnorm", "unitary", "filtration", "scan", "check", "table")


class UsageError(ValueError):
    """Malformed request; reported with exit status 2."""


def _max_degree() -> int:
    raw = os.environ.get("HWNORM_MAX_DEGREE", "12")
    try:
        return int(raw)
    except ValueError:
        raise UsageError(f"HWNORM_MAX_DEGREE must be an integer, got {raw!r}") from None


def _parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hwnorm", description="Exact norms of holomorphic discrete series and their continuation.")
    parser.add_argument("command", choices=COMMANDS)
    parser.add_argument("--group", help='e.g. "sp:r=2", "su:q=2,s=3", "sostar:s=5", "spin:n=6", "e6", "e7"')
    parser.add_argument("--fiber", default="", help='e.g. "k=1", "k=2,1,0", "k=1/2,sign=-", "k=2,kind=det"')
    parser.add_argument("--lambda", dest="lam", help="exact rational such as 3/2")
    parser.add_argument("--degree", type=int, help="polynomial degree cutoff")
    parser.add_argument("--ktype", help='select one K-type, e.g. "m=1,0", "m=2,1,kappa=1,0", "n=3"')
    parser.add_argument("--format", default="text", choices=("text", "json", "csv"))
    parser.add_argument("--conjecture", action="store_true", help="use the conjectured E6 ratios")
    parser.add_argument("--eval", action="store_true", help="also print decimal approximations")
    parser.add_argument("--suite", default="all", help="oracle suite for the check command")
    return parser


# ------------------------------------------------------------ helpers

def _value_str(value) -> str:
    if isinstance(value, Special):
        return value.name.lower()
    return fmt_rat(value)


def _decimal(value) -> str:
    if isinstance(value, Special):
        return value.name.lower()
    return f"{float(value):.12g}"


def _parse_ktype(text: str) -> dict:
    out, key = {}, None
    for token in text.split(","):
        token = token.strip()
        if "=" in token:
            key, token = (part.strip() for part in token.split("=", 1))
            if key not in ("m", "kappa", "l", "n"):
                raise UsageError(f"unknown K-type key {key!r}")
            out[key] = []
        if key is None or not token:
            raise UsageError(f"cannot parse K-type {text!r}")
        out[key].append(parse_rational(token))
    return out


def _select(spec, fiber, text):
    want = _parse_ktype(text)
    if "m" in want:
        degrees = [int(sum(want["m"]))]
    elif "n" in want and spec.family is Family.SU:
        degrees = [int(sum(want["n"]) - sum(fiber.k))]
    else:
        raise UsageError("--ktype needs m (or n for SU)")
    for t in decompose(spec, fiber, degrees[0]) if degrees[0] >= 0 else ():
        fields = {"m": t.m, "kappa": t.kappa, "n": t.n or (), "l": (t.l,) if t.l is not None else ()}
        if all(tuple(fields[k])[:len(v)] == tuple(v) and len(fields[k]) >= len(v)
               and all(x == 0 for x in tuple(fields[k])[len(v):]) for k, v in want.items()):
            return t
    raise UsageError(f"no K-type matches {text!r}")


def _ratio_payload(spec, fiber, t, args):
    result = norm_ratio(spec, fiber, t, args.conjecture)
    if result.unknown_numerator_degree:
        raise ConjecturalContentError(
            "this E6 ratio is only known up to a monic numerator of degree "
            f"{result.unknown_numerator_degree}; pass --conjecture")
    payload = {"ktype": t.to_json(), "ratio": str(result.ratio), "factored": result.ratio.to_json(),
               "conjectural": result.conjectural}
    if args.lam is not None:
        value = result.ratio.evaluate(parse_rational(args.lam))
        payload["value"] = _value_str(value)
        if args.eval:
            payload["decimal"] = _decimal(value)
    return payload


def _numerator(f: FactoredFn) -> str:
    return str(FactoredFn(f.constant, f.num))


def _denominator(f: FactoredFn) -> str:
    return str(FactoredFn(Fraction(1), f.den))


def _sig_str(t) -> str:
    return " ".join("(" + ",".join(fmt_rat(x) for x in block) + ")" for block in t.signature)


def _csv(rows, header) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    return buf.getvalue().rstrip("\n")


# ----------------------------------------------------------- commands

def _need(args, *names):
    for name in names:
        if getattr(args, name) is None:
            flag = "--lambda" if name == "lam" else f"--{name}"
            raise UsageError(f"{args.command} requires {flag}")


def _degree(args, default):
    degree = default if args.degree is None else args.degree
    if degree < 0:
        raise UsageError("--degree must be nonnegative")
    cap = _max_degree()
    if degree > cap:
        raise UsageError(f"--degree {degree} exceeds HWNORM_MAX_DEGREE={cap}")
    return degree


def cmd_decompose(spec, fiber, args):
    types = decompose_upto(spec, fiber, _degree(args, 2))
    if args.format == "json":
        return json.dumps([t.to_json() for t in types], indent=2)
    rows = [(t.degree, _sig_str(t), t.multiplicity, t.dim) for t in types]
    if args.format == "csv":
        return _csv(rows, ("degree", "signature", "multiplicity", "dim"))
    return "\n".join(f"{d:>3}  {s}  mult={m}  dim={n}" for d, s, m, n in rows)


def cmd_ratio(spec, fiber, args):
    if args.ktype:
        payloads = [_ratio_payload(spec, fiber, _select(spec, fiber, args.ktype), args)]
    else:
        payloads = [_ratio_payload(spec, fiber, t, args)
                    for t in decompose_upto(spec, fiber, _degree(args, 2))]
    if args.format == "json":
        return json.dumps(payloads if not args.ktype else payloads[0], indent=2)
    if args.format == "csv":
        rows = [(p["ktype"]["degree"], json.dumps(p["ktype"]["index"]), p["ratio"], p.get("value", ""))
                for p in payloads]
        return _csv(rows, ("degree", "index", "ratio", "value"))
    lines = []
    for p in payloads:
        text = p["ratio"]
        if "value" in p:
            text += f" = {p['value']}" + (f" ≈ {p['decimal']}" if "decimal" in p else "")
        if not args.ktype:
            text = f"{json.dumps(p['ktype']['index'])}  {text}"
        lines.append(text + ("  [conjectural]" if p["conjectural"] else ""))
    return "\n".join(lines)


def cmd_cnorm(spec, fiber, args):
    const = normalizing_const(spec, fiber)
    payload = {"group": spec.label(), "c_lambda": str(const), "factored": const.to_json()}
    if args.lam is not None:
        value = const.evaluate(parse_rational(args.lam))
        payload["value"] = _value_str(value)
        if args.eval:
            payload["decimal"] = _decimal(value)
    if args.format == "json":
        return json.dumps(payload, indent=2)
    text = payload["c_lambda"]
    if "value" in payload:
        text += f" = {payload['value']}" + (f" ≈ {payload['decimal']}" if "decimal" in payload else "")
    return text


def cmd_unitary(spec, fiber, args):
    uset = analysis.unitary_set(spec, fiber)
    payload = uset.to_json()
    if args.lam is not None:
        payload["lambda"] = fmt_rat(parse_rational(args.lam))
        payload["member"] = parse_rational(args.lam) in uset
    if args.format == "json":
        return json.dumps(payload, indent=2)
    text = str(uset)
    if "member" in payload:
        text += f"\nlambda = {payload['lambda']}: {'unitary' if payload['member'] else 'not unitary'}"
    return text


def cmd_filtration(spec, fiber, args):
    _need(args, "lam")
    report = analysis.filtration_report(spec, fiber, parse_rational(args.lam))
    if args.format == "json":
        return json.dumps(report, indent=2)
    if not report["reducible"]:
        return f"lambda = {report['lambda']}: irreducible"
    lines = [f"lambda = {report['lambda']}: reducible"]
    if not report["chain"]:
        lines.append("  empty chain (the case table gives a > b)")
    for level in report["chain"]:
        flag = ", unitary" if level["unitary"] else ""
        lines.append(f"  M_{level['j']}: {level['predicate']}  GK dim {level['gk_dim']}{flag}  "
                     f"[{level['label']}]")
    top = report["quotient"]
    lines.append(f"  quotient: GK dim {top['gk_dim']}" + (", unitary" if top["unitary"] else ""))
    return "\n".join(lines)


def cmd_scan(spec, fiber, args):
    _need(args, "lam")
    lam = parse_rational(args.lam)
    N = _degree(args, 8)
    if spec.family is Family.E6 and not args.conjecture and not fiber.scalar:
        raise ConjecturalContentError("E6 scans with k > 0 need --conjecture")
    uni = analysis.unitary_scan(spec, fiber, lam, N, args.conjecture)
    red = analysis.reducible_scan(spec, fiber, lam, N, args.conjecture)
    payload = {"lambda": fmt_rat(lam), "degree": N,
               "unitary_scan": {"compatible": uni.compatible,
                                "witness": uni.witness.to_json() if uni.witness else None},
               "reducible_scan": {"reducible": red.compatible,
                                  "witness": red.witness.to_json() if red.witness else None},
               "conjectural": uni.conjectural or red.conjectural}
    if spec.family not in (Family.E6, Family.E7):
        payload["closed_form"] = {"unitary": lam in analysis.unitary_set(spec, fiber),
                                  "reducible": analysis.reducible(spec, fiber, lam)}
    if args.format == "json":
        return json.dumps(payload, indent=2)
    lines = [f"lambda = {payload['lambda']} (degree <= {N})",
             f"  unitary scan: {'COMPATIBLE' if uni.compatible else 'NEGATIVE_FOUND'}"
             + (f" at {json.dumps(uni.witness.to_json()['index'])}" if uni.witness else ""),
             f"  reducible scan: {red.compatible}"
             + (f" (pole at {json.dumps(red.witness.to_json()['index'])})" if red.witness else "")]
    if "closed_form" in payload:
        cf = payload["closed_form"]
        lines.append(f"  closed form: unitary={cf['unitary']} reducible={cf['reducible']}")
    if payload["conjectural"]:
        lines.append("  [conjectural]")
    return "\n".join(lines)


def cmd_table(spec, fiber, args):
    rows, payloads = [], []
    for t in decompose_upto(spec, fiber, _degree(args, 4)):
        p = _ratio_payload(spec, fiber, t, args)
        ratio = norm_ratio(spec, fiber, t, args.conjecture).ratio
        rows.append((t.degree, _sig_str(t), t.multiplicity, _numerator(ratio), _denominator(ratio)))
        payloads.append(p)
    if args.format == "json":
        return json.dumps(payloads, indent=2)
    if args.format == "csv":
        return _csv(rows, ("degree", "signature", "multiplicity", "ratio_numerator", "ratio_denominator"))
    return "\n".join(f"{d:>3}  {s}  x{m}  {n} / {q}" for d, s, m, n, q in rows)


def run(argv=None) -> tuple:
    """Execute one request; returns (exit status, stdout text, stderr text)."""
    try:
        args = _parser().parse_args(argv)
    except SystemExit as exc:
        return (0 if exc.code == 0 else 2), "", ""
    try:
        if args.command == "check":
            reports = oracle.run_suite(args.suite)
            if args.format == "json":
                out = json.dumps([r.to_json() for r in reports], indent=2)
            else:
                out = "\n".join(f"{'PASS' if r.passed else 'FAIL'}  {r.name}"
                                + "".join(f"\n      {w}" for w in r.witnesses) for r in reports)
            return (0 if all(r.passed for r in reports) else 1), out, ""
        _need(args, "group")
        spec = parse_group(args.group)
        fiber = parse_fiber(spec, args.fiber)
        handler = globals()[f"cmd_{args.command}"]
        return 0, handler(spec, fiber, args), ""
    except ConjecturalContentError as exc:
        return 3, "", f"hwnorm: {exc}"
    except (UsageError, ValueError, KeyError) as exc:
        return 2, "", f"hwnorm: {exc}"


def main(argv=None) -> int:
    status, out, err = run(argv)
    if out:
        print(out)
    if err:
        print(err, file=sys.stderr)
    return status


if __name__ == "__main__":
    sys.exit(main())
