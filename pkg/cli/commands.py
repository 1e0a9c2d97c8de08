"""Subcommand implementations. Each returns an exit code and writes to ``out``."""
import json
import logging
from argparse import Namespace
from fractions import Fraction
from typing import Dict, List, TextIO, Tuple

from core.config import Settings
from core.errors import BchlabError
from core.rings import Family, ZPoly
from core.textform import to_json
from lattice.condense import bareiss_det, dodgson_condense
from lattice.evolve import knight_evolve
from lattice.grid import Window, grid_to_json, grid_to_tsv, load_seed_file, ones_seed, symbolic_seed
from lattice.matrix_io import load_matrix
from sequences.casoratian import gen_Q_t, jacobi_residual, odd_x
from sequences.continuum import classical_P, top_weight_in_t
from sequences.conversion import check_integrality, conversion_table, gen_Q_q
from sequences.relations import constraint_residuals, to_dodgson_R, verify_relation
from sequences.steps import bch_chain, dbch_chain
from sequences.tau import TauSequence, normalizer
from sequences.xseq import even_gauge, gen_x, x_det
from sequences.zero_data import q0_closed

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2

Named = List[Tuple[str, ZPoly]]


class UsageError(BchlabError):
    """Custom exception for invalid flag combinations"""
    pass


def _emit(out: TextIO, fmt: str, named: Named) -> None:
    if fmt == "json":
        out.write(json.dumps([{"name": name, "poly": to_json(p)} for name, p in named], indent=2) + "\n")
    else:
        for name, p in named:
            out.write(f"{name} = {p}\n")


def _entries(prefix: str, seq: TauSequence, n: int) -> Named:
    return [(f"{prefix}{k}", seq[k]) for k in range(1, n + 1)]


GEN_ROUTES = {
    ("Q", "t"): ("determinant",),
    ("Q", "q"): ("determinant", "recurrence"),
    ("P", "c"): ("recurrence", "determinant"),
    ("P", "t"): ("determinant",),
    ("Q0", None): ("closed", "recurrence", "determinant"),
    ("R", "q"): ("determinant", "recurrence"),
    ("R", "t"): ("determinant",),
    ("x", "t"): ("recurrence", "determinant"),
}


def _build(kind: str, coords: str, route: str, n: int) -> Named:
    if kind == "Q" and coords == "t":
        return _entries("Q", gen_Q_t(n), n)
    if kind == "Q" and coords == "q":
        return _entries("Q", gen_Q_q(n) if route == "determinant" else dbch_chain(n), n)
    if kind == "P" and coords == "c":
        return _entries("P", classical_P(n) if route == "determinant" else bch_chain(n), n)
    if kind == "P" and coords == "t":
        seq = gen_Q_t(n)
        return [(f"P{k}", top_weight_in_t(seq[k], k)) for k in range(1, n + 1)]
    if kind == "Q0":
        if route == "closed":
            return [(f"Q0_{k}", q0_closed(k)) for k in range(1, n + 1)]
        if route == "recurrence":
            return _entries("Q0_", dbch_chain(n, [0] * n), n)
        seq = gen_Q_t(n)
        return [(f"Q0_{k}", seq[k].evaluate_vars({v: 0 for v in seq[k].variables()})) for k in range(1, n + 1)]
    if kind == "R":
        base = gen_Q_t(n) if coords == "t" else (gen_Q_q(n) if route == "determinant" else dbch_chain(n))
        return _entries("R", to_dodgson_R(base), n)
    if kind == "x":
        if route == "determinant":
            return [(f"x{k}", x_det(k)) for k in range(1, n + 1)]
        xs = gen_x(n)
        return [(f"x{k}", xs[k]) for k in range(1, n + 1)]
    raise UsageError(f"Unsupported combination kind={kind} coords={coords}")


def cmd_gen(args: Namespace, settings: Settings, out: TextIO) -> int:
    n = args.n or settings.max_n
    coords = None if args.kind == "Q0" else (args.coords or {"P": "c", "x": "t"}.get(args.kind, "q"))
    key = (args.kind, coords)
    if key not in GEN_ROUTES:
        raise UsageError(f"--kind {args.kind} is not available in --coords {coords}")
    routes = GEN_ROUTES[key]
    route = args.route or routes[0]
    if route not in routes:
        raise UsageError(f"--route {route} is not available for --kind {args.kind} --coords {coords}; use one of {routes}")
    named = _build(args.kind, coords, route, n)
    _emit(out, args.format, named)
    if args.cross_check:
        mismatched = []
        for other in routes:
            if other == route:
                continue
            for (name, p), (_, p2) in zip(named, _build(args.kind, coords, other, n)):
                if p != p2:
                    mismatched.append(f"{name} ({route} vs {other})")
        if mismatched:
            logger.error(f"Cross-check failed for {', '.join(mismatched)}")
            return EXIT_FAILED
        logger.info(f"Cross-check passed across routes {routes}")
    return EXIT_OK


def cmd_convert(args: Namespace, settings: Settings, out: TextIO) -> int:
    n = args.n or settings.max_n
    if args.direction == "t-to-q":
        pairs = [(f"q{k}", v) for k, v in sorted(conversion_table(n).q_of_t.items())]
    elif args.direction == "q-to-t":
        pairs = [(f"t{k}", v) for k, v in sorted(conversion_table(n).t_of_q.items())]
    else:
        even, _ = even_gauge(n)
        pairs = [(f"t{k}", v) for k, v in sorted(even.items())]
    if args.format == "json":
        out.write(json.dumps({name: to_json(v) for name, v in pairs}, indent=2) + "\n")
    else:
        for name, v in pairs:
            out.write(f"{name} = {v}\n")
    return EXIT_OK


def _verify(relation: str, n: int) -> Dict:
    if relation == "bch":
        return verify_relation("bch", bch_chain(n)).to_dict()
    if relation == "dbch":
        return verify_relation("dbch", gen_Q_q(n)).to_dict()
    if relation == "dodgson":
        return verify_relation("dodgson", to_dodgson_R(gen_Q_q(n)), with_con=False).to_dict()
    if relation == "modified-dodgson":
        return verify_relation("modified-dodgson", gen_Q_q(n), with_con=False).to_dict()
    if relation == "constraint":
        residuals = constraint_residuals(gen_Q_q(n))
        failures = sorted(k for k, r in residuals.items() if r)
        return {"relation": relation, "ok": not failures, "checked": sorted(residuals),
                "failures": {str(k): str(residuals[k]) for k in failures}}
    if relation == "jacobi":
        x = gen_x(2 * min(n, 2) + 3)
        phis = odd_x(x, min(n, 2) + 1)
        chi = x[2]
        residuals = {k: jacobi_residual(phis, chi, k) for k in range(0, min(n, 2) + 1)}
        failures = sorted(k for k, r in residuals.items() if r)
        return {"relation": relation, "ok": not failures, "checked": sorted(residuals),
                "failures": {str(k): str(residuals[k]) for k in failures}}
    if relation == "laurent":
        bad_q = check_integrality(gen_Q_q(n), Family.Q)
        bad_p = check_integrality(classical_P(n), Family.C)
        return {"relation": relation, "ok": not bad_q and not bad_p,
                "normalizers": [normalizer(k) for k in range(1, n + 1)],
                "failures": {"Q": bad_q, "P": bad_p}}
    raise UsageError(f"Unknown relation {relation!r}")


def cmd_verify(args: Namespace, settings: Settings, out: TextIO) -> int:
    n = args.n or settings.max_n
    result = _verify(args.relation, n)
    if args.format == "json":
        out.write(json.dumps(result, indent=2) + "\n")
    else:
        status = "pass" if result["ok"] else "FAIL"
        out.write(f"{args.relation} n<={n}: {status}\n")
        if "normalizers" in result:
            out.write("A_n: " + ", ".join(str(a) for a in result["normalizers"]) + "\n")
        for key, value in result.get("failures", {}).items():
            if value:
                out.write(f"  {key}: {value}\n")
    return EXIT_OK if result["ok"] else EXIT_FAILED


def _seed(spec: str, window: Window):
    if spec == "ones":
        return ones_seed(window)
    if spec == "symbolic":
        return symbolic_seed(window)
    if spec.startswith("file:"):
        return load_seed_file(spec[len("file:"):], window)
    raise UsageError(f"--seed must be ones, symbolic or file:PATH, got {spec!r}")


def cmd_table(args: Namespace, settings: Settings, out: TextIO) -> int:
    try:
        window = Window.parse(args.window)
        alpha, beta = Fraction(args.alpha), Fraction(args.beta)
    except (ValueError, ZeroDivisionError) as e:
        raise UsageError(str(e))
    grid = knight_evolve(alpha, beta, _seed(args.seed, window), window)
    for finding in grid.findings:
        logger.warning(finding)
    if args.format == "json":
        out.write(grid_to_json(grid) + "\n")
    else:
        out.write(grid_to_tsv(grid))
    if args.check_laurent:
        bad = grid.laurent_violations()
        if bad:
            logger.error(f"Cells outside the integer Laurent ring: {bad}")
            return EXIT_FAILED
        logger.info("Every cell lies in the integer Laurent ring")
    return EXIT_OK


def cmd_det(args: Namespace, settings: Settings, out: TextIO) -> int:
    matrix = load_matrix(args.input)
    results = {}
    if args.method in ("condense", "both"):
        results["condense"], _ = dodgson_condense(matrix)
    if args.method in ("bareiss", "both"):
        results["bareiss"] = bareiss_det(matrix)
    agree = len(set(results.values())) == 1
    value = next(iter(results.values()))
    if args.format == "json":
        out.write(json.dumps({k: str(v) for k, v in results.items()} | {"agree": agree}) + "\n")
    else:
        out.write(f"{value}\n")
    if not agree:
        logger.error(f"Determinant methods disagree: {results}")
        return EXIT_FAILED
    return EXIT_OK


def cmd_limit(args: Namespace, settings: Settings, out: TextIO) -> int:
    n = args.n or settings.max_n
    p = classical_P(n)[n]
    _emit(out, args.format, [(f"P{n}", p)])
    if args.check_against_bch:
        if bch_chain(n)[n] != p:
            logger.error(f"Continuum limit P_{n} differs from the BCh recurrence")
            return EXIT_FAILED
        logger.info(f"Continuum limit P_{n} matches the BCh recurrence")
    return EXIT_OK


COMMANDS = {
    "gen": cmd_gen,
    "convert": cmd_convert,
    "verify": cmd_verify,
    "table": cmd_table,
    "det": cmd_det,
    "limit": cmd_limit,
}
