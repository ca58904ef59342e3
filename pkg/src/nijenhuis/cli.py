"""Command-line front end.

Examples::

    nijenhuis mul 'x|x' 'x|x' --base binomial
    nijenhuis coprod 'x|x^2'
    nijenhuis antipode u3 --base trivial
    nijenhuis stuffle 2 1 --lambda -1
    nijenhuis check --base onesided --max-len 3 --max-exp 2 --json
"""

from __future__ import annotations

import argparse
import sys
from fractions import Fraction

from .formats import ParseError, parse_element, render_element, render_pair
from .hopf import EndoHandle, InadmissibleBaseError, NijenhuisHopfAlgebra
from .rota_baxter import identity_sum, stuffle_u
from .suite import AXIOM_NAMES, SuiteConfig, run_axiom_suite

BASE_CHOICES = ["trivial", "onesided", "binomial"]


def _rational(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"not a rational number: {text!r}") from None


def _nat(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a natural number: {text!r}") from None
    if value < 0:
        raise argparse.ArgumentTypeError(f"expected a natural number, got {value}")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="nijenhuis",
        description="Exact arithmetic in free commutative Nijenhuis algebras and their left counital Hopf structure.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--base", choices=BASE_CHOICES, default="onesided", help="base bialgebra (default: onesided)")

    p = sub.add_parser("mul", parents=[common], help="product of two elements")
    p.add_argument("a")
    p.add_argument("b")
    for name, help_text in (
        ("pr", "apply the right-shift operator"),
        ("coprod", "cocycle coproduct"),
        ("counit", "left counit"),
    ):
        p = sub.add_parser(name, parents=[common], help=help_text)
        p.add_argument("a")
    for name, help_text in (("antipode", "right antipode"), ("conv", "evaluate id * S")):
        p = sub.add_parser(name, parents=[common], help=help_text)
        p.add_argument("a")
        p.add_argument("--allow-inadmissible", action="store_true", help="compute over the binomial base anyway")

    p = sub.add_parser("stuffle", help="weight-lambda stuffle product u_m <> u_n")
    p.add_argument("m", type=_nat)
    p.add_argument("n", type=_nat)
    p.add_argument("--lambda", dest="lam", type=_rational, default=Fraction(1))

    p = sub.add_parser("identity-table", help="alternating binomial sums for 0 <= m, n <= M")
    p.add_argument("--max", dest="max", type=_nat, default=6)

    p = sub.add_parser("check", help="run the axiom suite")
    p.add_argument("--base", choices=BASE_CHOICES, default="onesided")
    p.add_argument("--max-len", type=int, default=3)
    p.add_argument("--max-exp", type=_nat, default=2)
    p.add_argument("--max-u", type=_nat, default=6)
    p.add_argument("--max-degree", type=_nat, default=5)
    p.add_argument("--trials", type=_nat, default=50)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--axioms", default="all", help="comma-separated subset of: " + ", ".join(AXIOM_NAMES))
    p.add_argument("--json", action="store_true", help="emit the structured report")
    p.add_argument("--output", "-o", help="write the report to this path instead of stdout")
    p.add_argument("--allow-inadmissible", action="store_true")
    return parser


def _run_check(args) -> int:
    cfg = SuiteConfig(
        base=args.base,
        max_len=args.max_len,
        max_exp=args.max_exp,
        max_u=args.max_u,
        trials=args.trials,
        seed=args.seed,
        axioms=tuple(a.strip() for a in args.axioms.split(",") if a.strip()),
        output="structured" if args.json else "text",
        max_degree=args.max_degree,
        allow_inadmissible=args.allow_inadmissible,
    )
    report = run_axiom_suite(cfg)
    text = report.to_json() if args.json else report.to_text()
    if args.output:
        with open(args.output, "w") as fh:
            fh.write(text + "\n")
    else:
        print(text)
    return 0 if report.verdict == "pass" else 1


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        if args.command == "check":
            return _run_check(args)
        if args.command == "identity-table":
            for m in range(args.max + 1):
                print(" ".join(str(identity_sum(m, n)) for n in range(args.max + 1)))
            return 0
        if args.command == "stuffle":
            alg = NijenhuisHopfAlgebra("trivial")
            print(render_element(stuffle_u(alg, args.m, args.n, args.lam), u_notation=True))
            return 0

        alg = NijenhuisHopfAlgebra(args.base)
        u = alg.base.name == "trivial"
        a = parse_element(args.a, alg.base)
        if args.command == "mul":
            print(render_element(alg.mul(a, parse_element(args.b, alg.base)), u))
        elif args.command == "pr":
            print(render_element(alg.p_right(a), u))
        elif args.command == "coprod":
            print(render_pair(alg.coproduct(a), u))
        elif args.command == "counit":
            print(alg.counit(a))
        elif args.command == "antipode":
            print(render_element(alg.antipode(a, exploratory=args.allow_inadmissible), u))
        elif args.command == "conv":
            value = alg.convolve(EndoHandle.IDENTITY, EndoHandle.ANTIPODE, a, exploratory=args.allow_inadmissible)
            print(render_element(value, u))
        return 0
    except (ParseError, InadmissibleBaseError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
