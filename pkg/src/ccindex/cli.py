"""Command-line interface: find, analyze, topology, verify.

Exit codes: 0 success/verified, 1 verification mismatch, 2 validation error,
3 collision in input coordinates.  Results go to stdout (JSON by default);
human-readable progress and summaries go to stderr.
"""

import argparse
import json
import logging
import sys
from typing import Any, Optional

import numpy as np

from . import topology
from .errors import CollisionError, SpecFileError
from .indices import verify_theorem
from .io import census_record, load_problem_spec, records_to_csv, records_to_json
from .massgeometry import Configuration, normalize_to_ellipsoid, project_center
from .solver import cc_residual, census

logger = logging.getLogger("ccindex")

EXIT_OK = 0
EXIT_MISMATCH = 1
EXIT_VALIDATION = 2
EXIT_COLLISION = 3

# The closed quotients with known fixed point counts: (n, d, group) ->
# (topological case, expected Lefschetz number, expected degree).
CLOSED_CASES = {
    (3, 1, "O"): ("circle", 3, -2),
    (3, 2, "SO"): ("complex_projective_line", -1, -2),
}


def effective_group(d: int, group: str) -> str:
    """Quotient group actually used for classification.

    In dimension one the rotation group is trivial, so the meaningful
    projective quotient is by the full orthogonal group (reflection);
    requesting SO there would merely double every class as a mirror pair.
    """
    if d == 1 and group == "SO":
        logger.info("d=1: classifying under the reflection group O(1)")
        return "O"
    return group


def _emit(payload: Any, fmt: str, records: Optional[list[dict]] = None) -> None:
    if fmt == "csv":
        sys.stdout.write(records_to_csv(records if records is not None else payload))
    else:
        sys.stdout.write(
            records_to_json(payload) if isinstance(payload, list) else json.dumps(payload, indent=2) + "\n"
        )


def _run_census(spec, args):
    group = effective_group(spec.system.d, args.group)
    classes = census(
        spec.system,
        group=group,
        n_starts=args.starts,
        rng_seed=args.seed,
        tol_residual=args.tol,
        max_iter=args.max_iter,
    )
    reports = [verify_theorem(cls.representative.q) for cls in classes]
    records = [census_record(i, cls, rep) for i, (cls, rep) in enumerate(zip(classes, reports))]
    return group, classes, reports, records


def cmd_find(args) -> int:
    try:
        spec = load_problem_spec(args.spec)
    except SpecFileError as exc:
        print(f"invalid problem file: {exc}", file=sys.stderr)
        return EXIT_VALIDATION
    _, _, _, records = _run_census(spec, args)
    _emit(records, args.format)
    return EXIT_OK


def cmd_analyze(args) -> int:
    try:
        spec = load_problem_spec(args.spec)
    except SpecFileError as exc:
        print(f"invalid problem file: {exc}", file=sys.stderr)
        return EXIT_VALIDATION
    if spec.coordinates is None:
        print("analyze requires a 'coordinates' field", file=sys.stderr)
        return EXIT_VALIDATION
    try:
        q = normalize_to_ellipsoid(
            project_center(Configuration(spec.system, spec.coordinates))
        )
    except CollisionError as exc:
        print(f"coordinates contain a collision: {exc}", file=sys.stderr)
        return EXIT_COLLISION

    _, residual = cc_residual(q)
    report = verify_theorem(q)
    sys_ = spec.system
    out: dict[str, Any] = {
        "n": sys_.n,
        "d": sys_.d,
        "alpha": sys_.alpha,
        "residual": residual,
        "lambda": report.lam,
        "potential": report.potential,
        "critical": report.critical,
    }
    if report.critical and report.spectral is not None:
        sp = report.spectral
        out.update(
            {
                "spectrum": [float(x) for x in sp.eigenvalues],
                "morse_index": sp.morse_index,
                "kernel_dim": sp.kernel_dim,
                "orbit_dim": sp.orbit_dim,
                "nondegenerate": sp.nondegenerate,
                "fixed_point_index": sp.fixed_point_index,
                "index_from_morse": report.index_from_morse,
                "corollary_residual": report.corollary_residual,
                "corollary_bound": report.corollary_bound,
                "theorem_verified": report.passed is True,
            }
        )
    else:
        out["message"] = report.message
    _emit(out, "json")
    return EXIT_OK


def cmd_topology(args) -> int:
    n, d = args.n, args.d
    if n < 2 or d < 1 or args.max_degree < 0:
        print("need n >= 2, d >= 1, max-degree >= 0", file=sys.stderr)
        return EXIT_VALIDATION
    out: dict[str, Any] = {
        "n": n,
        "d": d,
        "dim_maximal_orbit_manifold": topology.dim_maximal_orbit_manifold(n, d),
        "poincare_configuration": (
            list(topology.poincare_configuration(n, d).coefficients) if d >= 2 else None
        ),
        "planar_quotient_betti": (
            list(topology.poincare_planar_quotient(n).coefficients)
            if d == 2 and n >= 3
            else None
        ),
        "mccord_dimensions": (
            topology.mccord_M_dimensions(n) if d == 2 and n >= 3 else None
        ),
        "pacella_series": (
            list(topology.pacella_series(n, args.max_degree).coefficients)
            if d == 3 and n >= 3
            else None
        ),
    }
    _emit(out, "json")
    return EXIT_OK


def cmd_verify(args) -> int:
    try:
        spec = load_problem_spec(args.spec)
    except SpecFileError as exc:
        print(f"invalid problem file: {exc}", file=sys.stderr)
        return EXIT_VALIDATION
    group, classes, reports, records = _run_census(spec, args)
    sys_ = spec.system

    failures = []
    for rec, rep in zip(records, reports):
        status = "degenerate" if rep.passed is None else ("ok" if rep.passed else "FAIL")
        print(
            f"class {rec['class_id']}: U={rec['potential']:.9g} "
            f"mu={rec['morse_index']} kernel={rec['kernel_dim']} "
            f"orbit={rec['orbit_dim']} index={rec['fixed_point_index']} [{status}]",
            file=sys.stderr,
        )
        if rep.passed is False:
            failures.append(rec["class_id"])

    case_info = CLOSED_CASES.get((sys_.n, sys_.d, group))
    lefschetz = degree = expected_l = expected_deg = None
    closed_ok = True
    if case_info is not None:
        case, expected_l, expected_deg = case_info
        indices = [rec["fixed_point_index"] for rec in records]
        if any(ix is None for ix in indices):
            closed_ok = False
            print("closed-case check: undefined index present", file=sys.stderr)
        else:
            lefschetz, degree = topology.lefschetz_and_degree(indices, case)
            closed_ok = lefschetz == expected_l and degree == expected_deg
            print(
                f"Lefschetz sum {lefschetz} (expected {expected_l}), "
                f"degree {degree} (expected {expected_deg})",
                file=sys.stderr,
            )

    verified = not failures and closed_ok
    out = {
        "n": sys_.n,
        "d": sys_.d,
        "alpha": sys_.alpha,
        "group": group,
        "classes": records,
        "failing_classes": failures,
        "lefschetz": lefschetz,
        "degree": degree,
        "expected_lefschetz": expected_l,
        "expected_degree": expected_deg,
        "verified": verified,
    }
    _emit(out, "json")
    if failures:
        print(f"verification failed for classes {failures}", file=sys.stderr)
    return EXIT_OK if verified else EXIT_MISMATCH


def _add_census_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--tol", type=float, default=1e-12, help="residual tolerance")
    p.add_argument("--max-iter", type=int, default=200, help="Newton iteration cap")
    p.add_argument("--starts", type=int, default=1000, help="number of random starts")
    p.add_argument("--seed", type=int, default=42, help="census RNG seed")
    p.add_argument("--group", choices=["SO", "O"], default="SO", help="quotient group")
    p.add_argument("--format", choices=["json", "csv"], default="json")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ccindex",
        description="Central configurations: census, Morse and fixed point indices",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_find = sub.add_parser("find", help="census of central configuration classes")
    p_find.add_argument("spec", help="problem JSON file")
    _add_census_flags(p_find)
    p_find.set_defaults(func=cmd_find)

    p_an = sub.add_parser("analyze", help="analyze the configuration in the problem file")
    p_an.add_argument("spec", help="problem JSON file with coordinates")
    p_an.add_argument("--format", choices=["json"], default="json")
    p_an.set_defaults(func=cmd_analyze)

    p_top = sub.add_parser("topology", help="closed-form topological invariants")
    p_top.add_argument("--n", type=int, required=True)
    p_top.add_argument("--d", type=int, required=True)
    p_top.add_argument("--max-degree", type=int, default=10)
    p_top.add_argument("--format", choices=["json"], default="json")
    p_top.set_defaults(func=cmd_topology)

    p_ver = sub.add_parser("verify", help="census plus full index verification")
    p_ver.add_argument("spec", help="problem JSON file")
    _add_census_flags(p_ver)
    p_ver.set_defaults(func=cmd_verify)

    return parser


def main(argv: Optional[list[str]] = None) -> int:
    logging.basicConfig(stream=sys.stderr, level=logging.WARNING)
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
