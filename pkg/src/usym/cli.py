"""Command-line interface: deterministic reports over algebra and group files.

Exit codes: 0 success (all requested checks pass), 1 parse/validation failure
or failing checks, 2 completion bound exceeded, 3 search size exceeded.
"""

from __future__ import annotations

import argparse
import os
import sys

from .algebra import is_algebra_map
from .endomorphisms import (
    DEFAULT_MAX_SEARCH,
    automorphism_group,
    enumerate_endomorphisms,
    enumerate_homs,
    is_point,
)
from .errors import (
    CompletionBoundError,
    InputError,
    PresentationContradiction,
    SearchSizeError,
)
from .gradings import (
    classify,
    enumerate_gradings_oracle,
    enumerate_points,
    grading_from_point,
    point_from_grading,
)
from .io import (
    Report,
    grading_json,
    grading_point_json,
    grading_point_text,
    grading_text,
    load_algebra,
    load_group,
    matrix_json,
    presentation_json,
    presentation_text,
)
from .linalg import format_matrix
from .universal import (
    DEFAULT_DEGREE_BOUND,
    build_presentation,
    check_bialgebra,
    check_comodule,
)

ENV_MAX_SEARCH = "USYM_MAX_SEARCH"


def _max_search() -> int:
    value = os.environ.get(ENV_MAX_SEARCH)
    if value is None:
        return DEFAULT_MAX_SEARCH
    try:
        return int(value)
    except ValueError as exc:
        raise InputError(f"{ENV_MAX_SEARCH} must be an integer, got {value!r}") from exc


def _require_degree(value: int) -> int:
    if value < 2:
        raise InputError(f"--max-degree must be at least 2, got {value}")
    return value


def _cmd_present(args) -> Report:
    algebra, meta = load_algebra(args.file)
    presentation = build_presentation(algebra, _require_degree(args.max_degree))
    echo = f"present {meta.name} --max-degree {args.max_degree} --format {args.format}"
    report = Report(echo, [("algebra", meta.name, meta.digest)])
    report.payload = presentation_json(presentation)
    report.text_lines = presentation_text(presentation)
    return report


def _cmd_check(args) -> Report:
    algebra, meta = load_algebra(args.file)
    presentation = build_presentation(algebra, _require_degree(args.max_degree))
    bialgebra = check_bialgebra(presentation)
    comodule = check_comodule(presentation)
    echo = f"check {meta.name} --max-degree {args.max_degree} --format {args.format}"
    report = Report(echo, [("algebra", meta.name, meta.digest)])
    report.checks = [(item.name, item.passed) for item in bialgebra.items + comodule.items]
    report.payload = {
        "field": algebra.field.spec_string(),
        "dimension": algebra.n,
        "max_degree": presentation.degree_bound,
        "generators": [list(g) for g in presentation.gens],
    }
    report.text_lines = [
        f"field: {algebra.field.spec_string()}",
        f"dimension: {algebra.n}",
        f"max-degree: {presentation.degree_bound}",
    ]
    return report


def _endo_like(args, group_like: bool) -> Report:
    algebra, meta = load_algebra(args.file)
    bound = _max_search()
    name = "aut" if group_like else "endo"
    if group_like:
        monoid = automorphism_group(algebra, bound)
    else:
        monoid = enumerate_endomorphisms(algebra, bound)
    flags = ""
    if args.field_check:
        flags += " --field-check"
    if args.oracle:
        flags += " --oracle"
    echo = f"{name} {meta.name}{flags} --format {args.format}"
    report = Report(echo, [("algebra", meta.name, meta.digest)])

    checks: list[tuple[str, bool]] = [
        ("closure", monoid.is_closed()),
        ("identity", monoid.has_identity()),
    ]
    if group_like:
        checks.append(("inverses", monoid.inverses_in_set()))
    if args.field_check:
        gamma_ok = all(is_algebra_map(algebra, algebra, m) for m in monoid.points)
        if group_like:
            gamma_ok = gamma_ok and all(
                is_point(algebra, m.inverse()) for m in monoid.points
            )
        checks.append(("gamma-algebra-map", gamma_ok))
    if args.oracle:
        homs = enumerate_homs(algebra, algebra, bound)
        if group_like:
            homs = tuple(m for m in homs if m.is_invertible())
        oracle_ok = tuple(m.rows for m in homs) == tuple(m.rows for m in monoid.points)
        checks.append(("oracle-match", oracle_ok))
    report.checks = checks
    report.payload = {
        "field": algebra.field.spec_string(),
        "dimension": algebra.n,
        "count": len(monoid.points),
        "identity_index": monoid.identity_index,
        "points": [matrix_json(m) for m in monoid.points],
    }
    report.text_lines = [
        f"field: {algebra.field.spec_string()}",
        f"dimension: {algebra.n}",
        f"points ({len(monoid.points)}):",
        *[f"  {format_matrix(m)}" for m in monoid.points],
        f"identity-index: {monoid.identity_index}",
    ]
    return report


def _cmd_gradings(args) -> Report:
    algebra, meta = load_algebra(args.file)
    group, group_meta = load_group(args.group)
    bound = _max_search()
    points = enumerate_points(algebra, group, bound)
    induced = [grading_from_point(algebra, group, p) for p in points]
    flags = ""
    if args.classify:
        flags += " --classify"
    if args.oracle:
        flags += " --oracle"
    echo = f"gradings {meta.name} --group {group_meta.name}{flags} --format {args.format}"
    report = Report(
        echo,
        [
            ("algebra", meta.name, meta.digest),
            ("group", group_meta.name, group_meta.digest),
        ],
    )
    checks: list[tuple[str, bool]] = []
    payload = {
        "field": algebra.field.spec_string(),
        "dimension": algebra.n,
        "group_order": group.order,
        "count": len(points),
        "points": [grading_point_json(group, p) for p in points],
        "gradings": [grading_json(group, g) for g in induced],
    }
    lines = [
        f"field: {algebra.field.spec_string()}",
        f"dimension: {algebra.n}",
        f"group: {group_meta.name} order={group.order}",
        f"points ({len(points)}):",
        *[f"  point {k}: {grading_point_text(group, p)}" for k, p in enumerate(points)],
        f"gradings ({len(induced)}):",
        *[f"  grading {k}: {grading_text(group, g)}" for k, g in enumerate(induced)],
    ]
    if args.oracle:
        oracle = enumerate_gradings_oracle(algebra, group, bound)
        induced_sorted = sorted(induced, key=lambda g: g.sort_key())
        checks.append(("oracle-match", list(induced_sorted) == list(oracle)))
        roundtrip = all(
            point_from_grading(algebra, group, g) == p
            for p, g in zip(points, induced)
        )
        checks.append(("roundtrip", roundtrip))
        payload["oracle_count"] = len(oracle)
    if args.classify:
        result = classify(algebra, group, bound)
        checks.append(("orbit-count-agreement", result.counts_agree))
        checks.append(("orbit-correspondence", result.correspondence_ok))
        payload["classification"] = {
            "point_orbits": [list(o) for o in result.point_orbits],
            "class_count": result.class_count,
            "grading_class_count": len(result.grading_orbits),
        }
        lines.append("classification:")
        orbit_text = " ".join(
            "[" + ",".join(str(i) for i in orbit) + "]" for orbit in result.point_orbits
        )
        lines.append(f"  point-orbits ({result.class_count}): {orbit_text}")
        lines.append(f"  grading-classes: {len(result.grading_orbits)}")
    report.checks = checks
    report.payload = payload
    report.text_lines = lines
    return report


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="usym",
        description="Exact universal-bialgebra computations for finite-dimensional algebras",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p):
        p.add_argument("file", help="algebra file (JSON)")
        p.add_argument(
            "--format", choices=("text", "json"), default="text", help="output format"
        )

    p_present = sub.add_parser("present", help="presentation of the universal bialgebra")
    add_common(p_present)
    p_present.add_argument("--max-degree", type=int, default=DEFAULT_DEGREE_BOUND)
    p_present.set_defaults(run=_cmd_present)

    p_check = sub.add_parser("check", help="verify bialgebra and comodule axioms")
    add_common(p_check)
    p_check.add_argument("--max-degree", type=int, default=DEFAULT_DEGREE_BOUND)
    p_check.set_defaults(run=_cmd_check)

    p_endo = sub.add_parser("endo", help="enumerate the endomorphism monoid")
    add_common(p_endo)
    p_endo.add_argument("--field-check", action="store_true")
    p_endo.add_argument("--oracle", action="store_true")
    p_endo.set_defaults(run=lambda args: _endo_like(args, group_like=False))

    p_aut = sub.add_parser("aut", help="enumerate the automorphism group")
    add_common(p_aut)
    p_aut.add_argument("--field-check", action="store_true")
    p_aut.add_argument("--oracle", action="store_true")
    p_aut.set_defaults(run=lambda args: _endo_like(args, group_like=True))

    p_grad = sub.add_parser("gradings", help="enumerate and classify group gradings")
    add_common(p_grad)
    p_grad.add_argument("--group", required=True, help="group file or cyclic:m")
    p_grad.add_argument("--classify", action="store_true")
    p_grad.add_argument("--oracle", action="store_true")
    p_grad.set_defaults(run=_cmd_gradings)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        report = args.run(args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except PresentationContradiction as exc:
        print(f"error: inconsistent presentation: {exc}", file=sys.stderr)
        return 1
    except CompletionBoundError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except SearchSizeError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    sys.stdout.write(report.render(args.format))
    return 0 if report.ok else 1


if __name__ == "__main__":
    sys.exit(main())
