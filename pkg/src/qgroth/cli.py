"""Command-line interface: JSON in, JSON out.

Exit codes: 0 success, 1 verification failure or math-level error,
2 usage error.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from typing import Sequence

from .ds import DsIndex, ds_a, ds_h, ds_model
from .exterior import SpoiledElement
from .groth_h import GrMinusElement, GrXiElement, dual_sharp, dual_star, dual_star_module
from .groth_q import ABasisElement, dual_star_a, sch_typical
from .oracle.modules import OracleScaleError
from .supercharacter import sch_L_q2, sch_verma
from .verify import SUITES, run_suite
from .weights import Weight, classify, core, t_data


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _weight(text: str) -> Weight:
    try:
        return Weight.parse(text)
    except (ValueError, ZeroDivisionError) as e:
        raise argparse.ArgumentTypeError(str(e)) from None


def _dump(obj) -> str:
    return json.dumps(obj, separators=(",", ":"), ensure_ascii=False)


def _load_json(text: str):
    """Inline JSON, '-' for stdin, or a path to a file."""
    if text == "-":
        raw = sys.stdin.read()
    elif text.lstrip().startswith(("{", "[")):
        raw = text
    elif os.path.exists(text):
        with open(text, encoding="utf-8") as fh:
            raw = fh.read()
    else:
        raise UsageError(f"no such file: {text}")
    try:
        return json.loads(raw)
    except json.JSONDecodeError as e:
        raise UsageError(f"invalid JSON: {e}") from None


def _element(obj):
    if not isinstance(obj, dict):
        raise UsageError("expected a JSON object")
    if "flavor" in obj:
        return SpoiledElement.from_json(obj)
    basis = obj.get("basis")
    if basis == "a":
        return ABasisElement.from_json(obj)
    if basis == "C-":
        return GrMinusElement.from_json(obj)
    if basis == "C":
        return GrXiElement.from_json(obj)
    raise UsageError(f"unknown basis {basis!r}")


def _operand(text: str, basis: str, n: int | None):
    """A weight literal means the basis element at that weight."""
    if text.lstrip().startswith("{") or text == "-" or text.endswith(".json"):
        return _element(_load_json(text))
    w = _weight(text)
    if n is not None and w.n != n:
        raise ValueError(f"weight {w.literal()} does not have length {n}")
    if basis == "a":
        return ABasisElement.basis(w)
    if basis == "C":
        return GrXiElement.basis(w)
    return GrMinusElement.basis(w)


# commands


def cmd_core(args) -> dict:
    return {"core": core(args.weight.entries).to_json()}


def cmd_classify(args) -> dict:
    lam = args.weight
    td = t_data(lam)
    out = {"weight": [str(a) for a in lam]}
    out.update(classify(lam).to_json())
    out["n_lambda"] = str(lam.n_lambda)
    out["core"] = core(lam.entries).to_json()
    out["t_squared"] = str(td.t_squared)
    out["phase"] = td.phase
    return out


def cmd_product(args) -> dict:
    x = _operand(args.x, args.basis, args.n)
    y = _operand(args.y, args.basis, args.n)
    if type(x) is not type(y):
        raise ValueError("operands live in different rings")
    return (x * y).to_json()


def cmd_sch_verma(args) -> dict:
    return sch_verma(args.weight, args.depth).to_json()


def cmd_sch_l(args) -> dict:
    lam = args.weight
    if args.n is not None and lam.n != args.n:
        raise ValueError(f"weight {lam.literal()} does not have length {args.n}")
    if lam.n == 2:
        return sch_L_q2(lam).to_json()
    return sch_typical(lam).to_json()


def cmd_ds(args) -> dict:
    x = _element(_load_json(args.element))
    if isinstance(x, ABasisElement):
        return ds_a(DsIndex(args.drop, x.n), x).to_json()
    if isinstance(x, GrMinusElement):
        return ds_h(args.drop, x).to_json()
    if isinstance(x, SpoiledElement):
        return ds_model(args.drop, x).to_json()
    raise ValueError("ds is defined on a-basis, C- and model elements")


def cmd_dual(args) -> dict:
    x = _element(_load_json(args.element))
    if isinstance(x, ABasisElement):
        return dual_star_a(x).to_json()
    if isinstance(x, GrMinusElement):
        return (dual_star_module(x) if args.signed else dual_star(x)).to_json()
    if isinstance(x, GrXiElement):
        return dual_sharp(x).to_json()
    raise ValueError("dual is defined on a-basis, C- and C elements")


def cmd_verify(args) -> dict:
    names = SUITES if args.suite == "all" else (args.suite,)
    params = {"max_n": args.max_n, "max_entry": args.max_entry, "jobs": args.jobs}
    reports = []
    for name in names:
        p = dict(params)
        if name == "rings":
            p["seed"] = args.seed
        reports.append(run_suite(name, **p))
    out = reports[0] if len(reports) == 1 else {"suites": reports, "pass": all(r["pass"] for r in reports)}
    return out


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="qgroth", description="Reduced Grothendieck rings of q(n).")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    s = sub.add_parser("core", help="core multiset of a weight")
    s.add_argument("-w", "--weight", type=_weight, required=True)
    s.set_defaults(func=cmd_core)

    s = sub.add_parser("classify", help="rank, parity class, dominance, typicality")
    s.add_argument("-w", "--weight", type=_weight, required=True)
    s.set_defaults(func=cmd_classify)

    s = sub.add_parser("product", help="product of two elements")
    s.add_argument("--basis", choices=["a", "C", "C-"], default="a")
    s.add_argument("-n", type=int)
    s.add_argument("-x", required=True, help="weight literal or element JSON")
    s.add_argument("-y", required=True, help="weight literal or element JSON")
    s.set_defaults(func=cmd_product)

    s = sub.add_parser("sch-verma", help="truncated supercharacter of a Verma module")
    s.add_argument("-w", "--weight", type=_weight, required=True)
    s.add_argument("--depth", type=int, required=True)
    s.set_defaults(func=cmd_sch_verma)

    s = sub.add_parser("sch-l", help="supercharacter of L(lambda): typical, or n = 2")
    s.add_argument("-w", "--weight", type=_weight, required=True)
    s.add_argument("-n", type=int)
    s.set_defaults(func=cmd_sch_l)

    s = sub.add_parser("ds", help="Duflo-Serganova map dropping the rank by r")
    s.add_argument("--drop", type=int, required=True)
    s.add_argument("element", help="element JSON file, inline JSON, or - for stdin")
    s.set_defaults(func=cmd_ds)

    s = sub.add_parser("dual", help="duality on a-basis, C- or C elements")
    s.add_argument("--signed", action="store_true", help="C-: class of the dual module, parity included")
    s.add_argument("element")
    s.set_defaults(func=cmd_dual)

    s = sub.add_parser("verify", help="run a verification suite")
    s.add_argument("--suite", choices=[*SUITES, "all"], required=True)
    s.add_argument("--max-n", type=int)
    s.add_argument("--max-entry", type=int)
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--jobs", type=int, default=1)
    s.set_defaults(func=cmd_verify)
    return p


def run(argv: Sequence[str] | None = None, out=None) -> int:
    out = sys.stdout if out is None else out
    try:
        args = build_parser().parse_args(argv)
        result = args.func(args)
    except UsageError as e:
        print(_dump({"error": str(e)}), file=out)
        return 2
    except (ValueError, ArithmeticError, OracleScaleError) as e:
        print(_dump({"error": str(e)}), file=out)
        return 1
    print(_dump(result), file=out)
    if args.command == "verify" and not result["pass"]:
        return 1
    return 0


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
