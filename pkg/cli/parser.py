import argparse

from sequences.relations import RELATIONS

VERIFY_RELATIONS = RELATIONS + ("constraint", "jacobi", "laurent")


def _positive(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text!r}")
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {value}")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="bchlab",
        description="Exact Burchnall-Chaundy and difference Burchnall-Chaundy polynomials, lattices and determinants",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    gen = sub.add_parser("gen", help="Generate a polynomial sequence")
    gen.add_argument("--kind", choices=("P", "Q", "Q0", "R", "x"), required=True)
    gen.add_argument("--coords", choices=("t", "q", "c"))
    gen.add_argument("--n", type=_positive, help="Highest index (default BCHLAB_MAX_N)")
    gen.add_argument("--route", choices=("determinant", "recurrence", "closed"))
    gen.add_argument("--cross-check", action="store_true", help="Recompute by every other route and compare")
    gen.add_argument("--format", choices=("text", "json"), default="text")

    convert = sub.add_parser("convert", help="Print the time/initial-data coordinate changes")
    convert.add_argument("--direction", choices=("t-to-q", "q-to-t", "even-gauge"), required=True)
    convert.add_argument("--n", type=_positive)
    convert.add_argument("--format", choices=("text", "json"), default="text")

    verify = sub.add_parser("verify", help="Check a relation symbolically; exit 1 on failure")
    verify.add_argument("--relation", choices=VERIFY_RELATIONS, required=True)
    verify.add_argument("--n", type=_positive)
    verify.add_argument("--format", choices=("text", "json"), default="text")

    table = sub.add_parser("table", help="Evolve the discrete KdV lattice from seed data")
    table.add_argument("--seed", default="ones", help="ones, symbolic or file:PATH")
    table.add_argument("--window", default="figure4", help="figure4 or MxN")
    table.add_argument("--alpha", default="1", help="Knight recurrence coefficient (rational)")
    table.add_argument("--beta", default="-1", help="Knight recurrence coefficient (rational)")
    table.add_argument("--check-laurent", action="store_true")
    table.add_argument("--format", choices=("tsv", "json"), default="tsv")

    det = sub.add_parser("det", help="Exact determinant of a matrix file")
    det.add_argument("--input", required=True, help="First line N, then N rows")
    det.add_argument("--method", choices=("condense", "bareiss", "both"), default="both")
    det.add_argument("--format", choices=("text", "json"), default="text")

    limit = sub.add_parser("limit", help="Continuum limit P_n of the difference polynomial Q_n")
    limit.add_argument("--n", type=_positive)
    limit.add_argument("--check-against-bch", action="store_true")
    limit.add_argument("--format", choices=("text", "json"), default="text")

    return parser
