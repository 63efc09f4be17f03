"""
Command-line front end.

Exit status: 0 on success, 1 on bad input, 2 when a verification check or a
subalgebra closure diagnostic fails.
"""

from __future__ import annotations

import argparse
import json
import sys

from .dsym import (
    CodeElement,
    NotInSubalgebra,
    f_class,
    generator_series,
    hilbert_series,
)
from .fqsym import HopfElement
from .kcode import KCode, classes_of_Sn, descent_class, descent_code, recoil_class, recoil_code
from .perm import parse_perm, render_word
from .stats import eulerian_poly, major_poly
from .verify import SUITES, run_suite

PERM_BASES = {"F": "F", "G": "G", "S": "Sperm", "E": "Eperm", "Sperm": "Sperm", "Eperm": "Eperm"}
CODE_BASES = {"R": "R", "Scode": "Scode", "Ecode": "Ecode", "SC": "Scode", "EC": "Ecode"}


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


def _positive(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text}")
    return value


def _natural(text: str) -> int:
    value = int(text)
    if value < 0:
        raise argparse.ArgumentTypeError(f"expected a non-negative integer, got {text}")
    return value


def _k_list(text: str) -> list[int]:
    try:
        ks = [int(part) for part in text.split(",") if part]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a comma-separated list of widths, got {text}") from None
    if not ks or min(ks) < 1:
        raise argparse.ArgumentTypeError("widths must be positive")
    return ks


def _emit(args, text: str, payload) -> None:
    if args.json:
        print(json.dumps(payload, indent=2))
    else:
        print(text)


def _class_payload(cls, summary: bool) -> dict:
    row = {
        "code": list(cls.code.digits),
        "size": len(cls),
        "min": list(cls.min_rep),
        "max": list(cls.max_rep),
    }
    if not summary:
        row["members"] = [list(p) for p in cls.members]
    return row


def _class_line(cls, summary: bool) -> str:
    line = f"{cls.code}\t{len(cls)}\t{render_word(cls.min_rep)}\t{render_word(cls.max_rep)}"
    if not summary:
        line += "\t" + " ".join(render_word(p) for p in cls.members)
    return line


def cmd_code(args) -> int:
    perm = parse_perm(args.perm)
    code = recoil_code(perm, args.k) if args.recoil else descent_code(perm, args.k)
    _emit(args, str(code), {"k": args.k, "kind": "recoil" if args.recoil else "descent",
                            "perm": list(perm), "code": list(code.digits)})
    return 0


def cmd_classes(args) -> int:
    classes = classes_of_Sn(args.n, args.k, args.kind)
    text = "\n".join(_class_line(c, args.summary) for c in classes)
    _emit(args, text, {"k": args.k, "n": args.n, "kind": args.kind,
                       "classes": [_class_payload(c, args.summary) for c in classes]})
    return 0


def cmd_class_of(args) -> int:
    perm = parse_perm(args.perm)
    cls = recoil_class(perm, args.k) if args.kind == "recoil" else descent_class(perm, args.k)
    text = " ".join(render_word(p) for p in cls.members)
    payload = {"k": args.k, "kind": args.kind, **_class_payload(cls, summary=False)}
    _emit(args, text, payload)
    return 0


def cmd_poly(args) -> int:
    build = eulerian_poly if args.command == "eulerian" else major_poly
    poly = build(args.n, args.k)
    _emit(args, str(poly), {"k": args.k, "n": args.n, **poly.to_json()})
    return 0


def cmd_series(args) -> int:
    if args.generators:
        coeffs = generator_series(args.k, args.order).coeffs[1:]
    else:
        coeffs = hilbert_series(args.k, args.order).coeffs
    _emit(args, ",".join(map(str, coeffs)),
          {"k": args.k, "order": args.order, "series": "generators" if args.generators else "hilbert",
           "coeffs": coeffs})
    return 0


def _perm_element(basis: str, text: str) -> HopfElement:
    return HopfElement.basis_element(basis, parse_perm(text))


def _code_element(basis: str, text: str, k: int) -> CodeElement:
    return CodeElement.basis_element(basis, KCode.parse(text, k))


def cmd_hopf(args) -> int:
    if args.basis in PERM_BASES:
        basis = PERM_BASES[args.basis]
        elems = [_perm_element(basis, t) for t in args.operands]
    else:
        if args.k is None:
            raise UsageError(f"basis {args.basis} needs --k")
        basis = CODE_BASES[args.basis]
        elems = [_code_element(basis, t, args.k) for t in args.operands]
    if args.op == "mul":
        result = elems[0]
        for e in elems[1:]:
            result = result * e
    else:
        if len(elems) != 1:
            raise UsageError("coprod takes exactly one operand")
        result = elems[0].coproduct()
    _emit(args, str(result), result.to_json())
    return 0


def cmd_quotient(args) -> int:
    if args.perms:
        codes = [f_class(parse_perm(t), args.k) for t in args.operands]
    else:
        codes = [KCode.parse(t, args.k) for t in args.operands]
    elems = [CodeElement.basis_element("Fclass", c) for c in codes]
    if args.op == "mul":
        result = elems[0]
        for e in elems[1:]:
            result = result * e
    else:
        if len(elems) != 1:
            raise UsageError("coprod takes exactly one operand")
        result = elems[0].coproduct()
    _emit(args, str(result), result.to_json())
    return 0


def cmd_verify(args) -> int:
    report = run_suite(args.suite, args.k, args.max_n, args.order)
    if args.json:
        print(json.dumps(report.to_json(timings=args.timings), indent=2))
    else:
        for r in report.records:
            timing = f"  ({r.elapsed:.2f}s)" if args.timings else ""
            print(f"{r.status.upper():4s}  {r.check_id}{timing}")
            if r.witness is not None:
                print(f"      witness: {json.dumps(r.witness)}")
        print(f"{report.suite}: {'pass' if report.passed else 'FAIL'}")
    return 0 if report.passed else 2


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="kdescent", description="k-descent codes, classes and their Hopf algebras")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def add(name, help_text, func):
        p = sub.add_parser(name, help=help_text)
        p.add_argument("--json", action="store_true", help="emit JSON")
        p.set_defaults(func=func)
        return p

    p = add("code", "k-descent or k-recoil code of a permutation", cmd_code)
    p.add_argument("--k", type=_positive, required=True)
    p.add_argument("--perm", required=True)
    p.add_argument("--recoil", action="store_true", help="recoil code instead of descent code")

    for name, help_text in (("classes", "all classes of S_n"),):
        p = add(name, help_text, cmd_classes)
        p.add_argument("--k", type=_positive, required=True)
        p.add_argument("--n", type=_natural, required=True)
        p.add_argument("--kind", choices=("recoil", "descent"), default="recoil")
        p.add_argument("--summary", action="store_true", help="omit member lists")

    p = add("class-of", "class of a permutation", cmd_class_of)
    p.add_argument("--k", type=_positive, required=True)
    p.add_argument("--perm", required=True)
    p.add_argument("--kind", choices=("recoil", "descent"), default="recoil")

    for name in ("eulerian", "major"):
        p = add(name, f"k-{name} polynomial", cmd_poly)
        p.add_argument("--k", type=_positive, required=True)
        p.add_argument("--n", type=_natural, required=True)

    p = add("series", "Hilbert series or generator counts of DSym(k)", cmd_series)
    p.add_argument("--k", type=_positive, required=True)
    p.add_argument("--order", type=_natural, default=13)
    p.add_argument("--generators", action="store_true")

    p = add("hopf", "products and coproducts in FQSym and DSym(k)", cmd_hopf)
    p.add_argument("op", choices=("mul", "coprod"))
    p.add_argument("--basis", choices=sorted({*PERM_BASES, *CODE_BASES}), required=True)
    p.add_argument("--k", type=_positive)
    p.add_argument("operands", nargs="+")

    p = add("quotient", "products and coproducts in DQSym(k)", cmd_quotient)
    p.add_argument("op", choices=("mul", "coprod"))
    p.add_argument("--k", type=_positive, required=True)
    p.add_argument("--perms", action="store_true", help="operands are permutations, not codes")
    p.add_argument("operands", nargs="+")

    p = add("verify", "run verification suites", cmd_verify)
    p.add_argument("--suite", choices=(*SUITES, "all"), default="all")
    p.add_argument("--k", type=_k_list, default=[2, 3, 4])
    p.add_argument("--max-n", type=_natural, default=6)
    p.add_argument("--order", type=_natural, default=13)
    p.add_argument("--timings", action="store_true")
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except NotInSubalgebra as exc:
        print(f"closure failure: {exc}", file=sys.stderr)
        return 2
    except (ValueError, UsageError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
