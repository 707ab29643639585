"""Command-line front end for the exact moduli-space calculators.

Every subcommand prints a deterministic, exact result: rationals are
rendered in lowest terms as ``p/q`` (never floats), ``--json`` switches
to a machine-readable record with the command, its inputs, the value,
and neutral provenance identifiers, and ``--tolerance`` only adds a
decimal rendering alongside the exact value.

Flags may be spelled either ``--g 22`` or ``g=22``; the second form is
rewritten to the first before parsing.
"""

from __future__ import annotations

import argparse
import json
import re
import sys
from fractions import Fraction

from . import bn, divclass, koszul, psi, tautring

__all__ = ["CommandResult", "run", "main"]

VERSION = "0.1.0"


class CommandResult:
    """What a subcommand produced, in JSON-safe form."""

    def __init__(self, command, inputs, value, provenance, human):
        self.command = command
        self.inputs = inputs
        self.value = value
        self.provenance = list(provenance)
        self.human = human
        self.json_mode = False

    def to_dict(self) -> dict:
        return {
            "command": self.command,
            "inputs": self.inputs,
            "value": self.value,
            "provenance": self.provenance,
        }


def _rational(value) -> str | int:
    """JSON form: integers stay integers, other rationals become p/q."""
    f = Fraction(value)
    if f.denominator == 1:
        return int(f)
    return str(f)


def _decimal(value: Fraction, tolerance: Fraction) -> str:
    digits = 1
    while Fraction(1, 10**digits) > tolerance and digits < 50:
        digits += 1
    scaled = value * 10**digits
    whole = scaled.numerator // scaled.denominator
    if 2 * (scaled - whole) >= 1:
        whole += 1
    sign = "-" if whole < 0 else ""
    head, tail = divmod(abs(whole), 10**digits)
    return f"{sign}{head}.{str(tail).zfill(digits)}"


def _scalar_human(value, args) -> str:
    if value is divclass.INFINITE:
        return "infinite"
    text = str(Fraction(value))
    if args.tolerance is not None and Fraction(value).denominator != 1:
        text += f" ({_decimal(Fraction(value), args.tolerance)})"
    return text


def _table_id() -> str:
    return "pushforward-table@" + tautring.load_table().checksum()[:12]


# ---------------------------------------------------------------------
# Divisor-class selector shared by slope / k3-check / pair
# ---------------------------------------------------------------------


def _class_from_args(args) -> divclass.DivisorClass:
    sel = args.klass
    if sel == "canonical":
        return divclass.canonical_coarse(_require(args, "g"))
    if sel == "canonical-stack":
        return divclass.canonical_stack(_require(args, "g"))
    if sel == "kappa1":
        return divclass.kappa1(_require(args, "g"))
    if sel == "koszul-odd":
        return divclass.koszul_odd_class(_require(args, "i"))
    if sel == "d22":
        if getattr(args, "g", None) not in (None, 22):
            raise ValueError("the genus-22 class only lives at g=22")
        return divclass.d22_class()
    if sel == "custom":
        if getattr(args, "coeffs", None) is None:
            raise ValueError("--class custom needs --coeffs a,b0,b1,...")
        g = _require(args, "g")
        parts = [Fraction(x) for x in args.coeffs.split(",")]
        if len(parts) != g // 2 + 2:
            raise ValueError(
                f"genus {g} needs {g // 2 + 2} coefficients "
                "(a followed by b_0..b_{g//2})"
            )
        return divclass.DivisorClass(
            g, parts[0], tuple(-b for b in parts[1:])
        )
    raise ValueError(f"unknown class selector {sel!r}")


def _require(args, name: str) -> int:
    value = getattr(args, name, None)
    if value is None:
        raise ValueError(f"this command needs --{name}")
    return value


def _class_inputs(args) -> dict:
    out = {"class": args.klass}
    for name in ("g", "i", "coeffs"):
        if getattr(args, name, None) is not None:
            out[name] = getattr(args, name)
    return out


# ---------------------------------------------------------------------
# Handlers (one per subcommand) returning CommandResult
# ---------------------------------------------------------------------


def _cmd_divclass_canonical(args):
    g = args.g
    cls = divclass.canonical_stack(g) if args.stack else divclass.canonical_coarse(g)
    return CommandResult(
        "divclass canonical",
        {"g": g, "stack": bool(args.stack)},
        cls.to_json_dict(),
        ["closed-form"],
        str(cls),
    )


def _cmd_divclass_slope(args):
    cls = _class_from_args(args)
    value = divclass.slope(cls)
    return CommandResult(
        "divclass slope",
        _class_inputs(args),
        "infinite" if value is divclass.INFINITE else _rational(value),
        ["slope-definition"],
        _scalar_human(value, args),
    )


def _cmd_divclass_koszul_odd(args):
    cls = divclass.koszul_odd_class(args.i)
    return CommandResult(
        "divclass koszul-odd",
        {"i": args.i, "g": 2 * args.i + 3},
        cls.to_json_dict(),
        ["test-curve-system", "closed-form"],
        str(cls),
    )


def _cmd_divclass_koszul_even(args):
    value = divclass.koszul_even_slope(args.i)
    return CommandResult(
        "divclass koszul-even",
        {"i": args.i, "g": 6 * args.i + 10},
        _rational(value),
        ["closed-form"],
        _scalar_human(value, args),
    )


def _cmd_divclass_gp_slope(args):
    value = divclass.gieseker_petri_slope(args.r, args.s)
    return CommandResult(
        "divclass gp-slope",
        {"r": args.r, "s": args.s},
        _rational(value),
        ["closed-form"],
        _scalar_human(value, args),
    )


def _cmd_divclass_d22(args):
    cls = divclass.d22_class()
    return CommandResult(
        "divclass d22",
        {},
        cls.to_json_dict(),
        ["degeneracy-pipeline", _table_id()],
        str(cls),
    )


def _cmd_divclass_k3_check(args):
    cls = _class_from_args(args)
    value = divclass.k3_obstruction(cls)
    return CommandResult(
        "divclass k3-check",
        _class_inputs(args),
        value,
        ["slope-bound", "pencil-pairing"],
        "true" if value else "false",
    )


def _cmd_divclass_pair(args):
    cls = _class_from_args(args)
    curve = divclass.test_curve(args.curve, cls.genus)
    value = divclass.pair(curve, cls)
    inputs = _class_inputs(args)
    inputs["curve"] = args.curve
    return CommandResult(
        "divclass pair",
        inputs,
        _rational(value),
        ["test-curve-pairing"],
        _scalar_human(value, args),
    )


def _cmd_psi_eval(args):
    exps = tuple(int(x) for x in args.a.split(","))
    value = psi.correlator_value(psi.Correlator(args.g, exps))
    return CommandResult(
        "psi eval",
        {"g": args.g, "a": list(exps)},
        _rational(value),
        ["dvv-recursion"],
        _scalar_human(value, args),
    )


def _cmd_psi_one_point(args):
    value = psi.psi_one_point(args.g)
    return CommandResult(
        "psi one-point",
        {"g": args.g},
        _rational(value),
        ["closed-form"],
        _scalar_human(value, args),
    )


def _cmd_psi_pand_bound(args):
    value = psi.pand_bound(args.g)
    return CommandResult(
        "psi pand-bound",
        {"g": args.g},
        _rational(value),
        ["dvv-recursion", "closed-form"],
        _scalar_human(value, args),
    )


def _cmd_bn_rho(args):
    value = bn.rho(args.g, args.r, args.d)
    return CommandResult(
        "bn rho",
        {"g": args.g, "r": args.r, "d": args.d},
        value,
        ["count-formula"],
        str(value),
    )


def _cmd_bn_liaison(args):
    result = bn.liaison_solve(args.g, args.d, args.r)
    if result is bn.INFEASIBLE:
        return CommandResult(
            "bn liaison",
            {"g": args.g, "d": args.d, "r": args.r},
            "INFEASIBLE",
            ["linkage-equations"],
            "INFEASIBLE",
        )
    value = {
        "f": result.f,
        "d_res": result.d_res,
        "g_res": result.g_res,
        "intersections": result.intersections,
    }
    human = " ".join(f"{k}={v}" for k, v in value.items())
    return CommandResult(
        "bn liaison",
        {"g": args.g, "d": args.d, "r": args.r},
        value,
        ["linkage-equations"],
        human,
    )


def _cmd_bn_severi(args):
    report = bn.severi_analyze(args.g)
    value = {
        "d_min": report.d_min,
        "delta": report.delta,
        "dim_U": report.dim_U,
        "feasible": report.feasible,
    }
    human = (
        f"d_min={report.d_min} delta={report.delta} dim_U={report.dim_U} "
        f"feasible={'true' if report.feasible else 'false'}"
    )
    return CommandResult(
        "bn severi", {"g": args.g}, value, ["plane-model-count"], human
    )


def _cmd_bn_hilbert_dim(args):
    value = bn.hilbert_dim(args.d, args.g, args.r)
    return CommandResult(
        "bn hilbert-dim",
        {"d": args.d, "g": args.g, "r": args.r},
        value,
        ["count-formula"],
        str(value),
    )


def _cmd_bn_quadrics(args):
    value = bn.quadric_count(args.g, args.r, args.d)
    return CommandResult(
        "bn quadrics",
        {"g": args.g, "r": args.r, "d": args.d},
        value,
        ["count-formula"],
        str(value),
    )


def _cmd_bn_limit_check(args):
    g = args.g
    if g < 2:
        raise ValueError("the canonical limit-series check needs g >= 2")
    curve = bn.TreeCurve((g - 1, 1), ((0, 1),))
    main_aspect = bn.LinearSeriesData(
        g - 1, g - 1, 2 * g - 2, (0,) + tuple(range(2, g + 1))
    )
    tail_aspect = bn.LinearSeriesData(
        1,
        g - 1,
        2 * g - 2,
        tuple(range(g - 2, 2 * g - 3)) + (2 * g - 2,),
    )
    value = bn.limit_series_compatible(curve, [main_aspect, tail_aspect])
    return CommandResult(
        "bn limit-check",
        {"g": g},
        value,
        ["vanishing-compatibility"],
        "true" if value else "false",
    )


def _cmd_taut_reduce(args):
    element = tautring.element_from_string(args.expr)
    return CommandResult(
        "taut reduce",
        {"expr": args.expr},
        str(element),
        ["ring-normal-form"],
        str(element),
    )


def _cmd_taut_integrate(args):
    element = tautring.element_from_string(args.expr)
    if args.over == "C":
        out = tautring.integrate_over_C(element)
        return CommandResult(
            "taut integrate",
            {"expr": args.expr, "over": "C"},
            str(out),
            ["ring-normal-form"],
            str(out),
        )
    value = tautring.integrate_over_W(element)
    return CommandResult(
        "taut integrate",
        {"expr": args.expr, "over": "W"},
        _rational(value),
        ["ring-normal-form", _table_id()],
        _scalar_human(value, args),
    )


def _cmd_taut_d22_solve(args):
    a, b0, b1 = tautring.solve_d22()
    slope_value = Fraction(a, b0)
    value = {"a": a, "b0": b0, "b1": b1, "slope": str(slope_value)}
    human = f"a={a} b0={b0} b1={b1} slope={slope_value}"
    return CommandResult(
        "taut d22-solve",
        {},
        value,
        ["degeneracy-pipeline", _table_id()],
        human,
    )


def _cmd_taut_table_verify(args):
    table = tautring.load_table()
    table.verify()
    checksum = table.checksum()
    return CommandResult(
        "taut table-verify",
        {},
        {"ok": True, "checksum": checksum},
        [_table_id()],
        f"pushforward table ok (checksum {checksum[:12]})",
    )


def _load_module(path: str) -> koszul.GradedModule:
    with open(path, "r", encoding="utf-8") as handle:
        return koszul.module_from_json(json.load(handle))


def _cmd_koszul_betti(args):
    module = _load_module(args.input)
    table = koszul.betti_table(module, args.max_i, args.max_j, args.modulus)
    width = max(3, *(len(str(x)) for row in table for x in row))
    header = "     " + " ".join(f"i={i}".rjust(width) for i in range(args.max_i + 1))
    lines = [header]
    for j, row in enumerate(table):
        lines.append(
            f"j={j}: " + " ".join(str(x).rjust(width) for x in row)
        )
    provenance = ["exact-linear-algebra"]
    if args.modulus is not None:
        provenance.append(f"prime-field@{args.modulus}")
    return CommandResult(
        "koszul betti",
        {
            "input": args.input,
            "max_i": args.max_i,
            "max_j": args.max_j,
            **({"modulus": args.modulus} if args.modulus is not None else {}),
        },
        table,
        provenance,
        "\n".join(lines),
    )


def _cmd_koszul_np(args):
    module = _load_module(args.input)
    value = koszul.green_lazarsfeld_Np(module, args.p)
    return CommandResult(
        "koszul np",
        {"input": args.input, "p": args.p},
        value,
        ["exact-linear-algebra"],
        "true" if value else "false",
    )


# ---------------------------------------------------------------------
# Parser
# ---------------------------------------------------------------------


class _Version(argparse.Action):
    def __init__(self, option_strings, dest, **kwargs):
        super().__init__(option_strings, dest, nargs=0, **kwargs)

    def __call__(self, parser, namespace, values, option_string=None):
        checksum = tautring.load_table().checksum()[:12]
        print(f"mgbar {VERSION} (pushforward table {checksum})")
        parser.exit(0)


def _build_parser() -> argparse.ArgumentParser:
    # SUPPRESS keeps a subcommand's unset flag from clobbering a value
    # parsed before the subcommand; run() fills in the real defaults
    # after parsing.
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--json", action="store_true", dest="json_mode",
        default=argparse.SUPPRESS,
        help="emit the full machine-readable record",
    )
    common.add_argument(
        "--tolerance", type=Fraction, default=argparse.SUPPRESS,
        help="also render scalar results as decimals to this accuracy "
        "(display only; all computation stays exact)",
    )

    parser = argparse.ArgumentParser(
        prog="mgbar",
        description="Exact slope and intersection computations on the "
        "moduli space of stable curves.",
        parents=[common],
    )
    parser.add_argument("--version", action=_Version)
    groups = parser.add_subparsers(dest="group", required=True)

    def sub(group, name, handler, **kwargs):
        p = group.add_parser(name, parents=[common], **kwargs)
        p.set_defaults(handler=handler)
        return p

    div = groups.add_parser("divclass").add_subparsers(
        dest="subcommand", required=True
    )
    p = sub(div, "canonical", _cmd_divclass_canonical)
    p.add_argument("--g", type=int, required=True)
    p.add_argument("--stack", action="store_true")
    for name, handler in (
        ("slope", _cmd_divclass_slope),
        ("k3-check", _cmd_divclass_k3_check),
        ("pair", _cmd_divclass_pair),
    ):
        p = sub(div, name, handler)
        p.add_argument(
            "--class", dest="klass", required=True,
            choices=[
                "canonical", "canonical-stack", "kappa1",
                "koszul-odd", "d22", "custom",
            ],
        )
        p.add_argument("--g", type=int)
        p.add_argument("--i", type=int)
        p.add_argument("--coeffs", type=str)
        if name == "pair":
            p.add_argument(
                "--curve", required=True, choices=["C0", "C1", "R", "B"]
            )
    p = sub(div, "koszul-odd", _cmd_divclass_koszul_odd)
    p.add_argument("--i", type=int, required=True)
    p = sub(div, "koszul-even", _cmd_divclass_koszul_even)
    p.add_argument("--i", type=int, required=True)
    p = sub(div, "gp-slope", _cmd_divclass_gp_slope)
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--s", type=int, required=True)
    sub(div, "d22", _cmd_divclass_d22)

    psi_group = groups.add_parser("psi").add_subparsers(
        dest="subcommand", required=True
    )
    p = sub(psi_group, "eval", _cmd_psi_eval)
    p.add_argument("--g", type=int, required=True)
    p.add_argument("--a", type=str, required=True,
                   help="comma-separated exponents, e.g. 2,3")
    p = sub(psi_group, "one-point", _cmd_psi_one_point)
    p.add_argument("--g", type=int, required=True)
    p = sub(psi_group, "pand-bound", _cmd_psi_pand_bound)
    p.add_argument("--g", type=int, required=True)

    bn_group = groups.add_parser("bn").add_subparsers(
        dest="subcommand", required=True
    )
    p = sub(bn_group, "rho", _cmd_bn_rho)
    p.add_argument("g", type=int)
    p.add_argument("r", type=int)
    p.add_argument("d", type=int)
    p = sub(bn_group, "liaison", _cmd_bn_liaison)
    p.add_argument("--g", type=int, required=True)
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--r", type=int, required=True)
    p = sub(bn_group, "severi", _cmd_bn_severi)
    p.add_argument("--g", type=int, required=True)
    p = sub(bn_group, "hilbert-dim", _cmd_bn_hilbert_dim)
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--g", type=int, required=True)
    p.add_argument("--r", type=int, required=True)
    p = sub(bn_group, "quadrics", _cmd_bn_quadrics)
    p.add_argument("--g", type=int, required=True)
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--d", type=int, required=True)
    p = sub(bn_group, "limit-check", _cmd_bn_limit_check)
    p.add_argument("--g", type=int, required=True)

    taut = groups.add_parser("taut").add_subparsers(
        dest="subcommand", required=True
    )
    p = sub(taut, "reduce", _cmd_taut_reduce)
    p.add_argument("--expr", type=str, required=True)
    p = sub(taut, "integrate", _cmd_taut_integrate)
    p.add_argument("--expr", type=str, required=True)
    p.add_argument("--over", required=True, choices=["C", "W"])
    sub(taut, "d22-solve", _cmd_taut_d22_solve)
    sub(taut, "table-verify", _cmd_taut_table_verify)

    koszul_group = groups.add_parser("koszul").add_subparsers(
        dest="subcommand", required=True
    )
    p = sub(koszul_group, "betti", _cmd_koszul_betti)
    p.add_argument("--input", type=str, required=True)
    p.add_argument("--max-i", type=int, required=True)
    p.add_argument("--max-j", type=int, required=True)
    p.add_argument("--modulus", type=int, default=None)
    p = sub(koszul_group, "np", _cmd_koszul_np)
    p.add_argument("--input", type=str, required=True)
    p.add_argument("--p", type=int, required=True)

    return parser


_KEY_VALUE = re.compile(r"([A-Za-z][A-Za-z0-9\-]*)=(.*)", re.DOTALL)


def _rewrite_key_value(argv: list[str]) -> list[str]:
    """Allow ``g=22`` as shorthand for ``--g=22``."""
    out = []
    for token in argv:
        match = _KEY_VALUE.fullmatch(token)
        if match and not token.startswith("-"):
            out.append(f"--{match.group(1)}={match.group(2)}")
        else:
            out.append(token)
    return out


def run(argv: list[str]) -> CommandResult:
    """Parse and execute; raises on domain errors, exits 2 on usage."""
    parser = _build_parser()
    args = parser.parse_args(_rewrite_key_value(list(argv)))
    if not hasattr(args, "json_mode"):
        args.json_mode = False
    if not hasattr(args, "tolerance"):
        args.tolerance = None
    result = args.handler(args)
    result.json_mode = bool(args.json_mode)
    return result


def main(argv: list[str] | None = None) -> int:
    if argv is None:
        argv = sys.argv[1:]
    try:
        result = run(argv)
    except (ValueError, ArithmeticError, RuntimeError, OSError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    print(json.dumps(result.to_dict()) if result.json_mode else result.human)
    return 0


if __name__ == "__main__":
    sys.exit(main())
