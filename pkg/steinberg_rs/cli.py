"""Command-line surface.

Usage:
  python -m steinberg_rs phi 1,2,3
  python -m steinberg_rs xi-s 0,1,2 --format json
  python -m steinberg_rs untriple '{"T1": [[1,2,3]], "T2": [[1,3],[2]], "nu": [2]}'
  python -m steinberg_rs verify --n 4 --what all
  python -m steinberg_rs table --n 3 --format markdown

Results go to stdout, diagnostics to stderr. Exit status is 0 on success, 1
on invalid input, 2 when `verify` finds a mismatch.
"""

from __future__ import annotations

import argparse
import logging
import os
import sys
from dataclasses import dataclass
from pathlib import Path
from typing import Any, Callable, Optional, Sequence, TextIO

from pydantic import ValidationError

from .config import SteinbergConfig, load_config
from .errors import SteinbergError
from .fields import as_field_matrix
from .formatting import (
    image_report_markdown,
    image_report_text,
    pair_text,
    partition_text,
    signed_text,
    skew_text,
    table_markdown,
    table_text,
    tableau_text,
    to_json,
    verify_text,
)
from .insertion import rs_pair
from .models import (
    FiberEntry,
    FibersResponse,
    ImageReportModel,
    MatrixRequest,
    OrbitRepModel,
    OrbitsResponse,
    PartialPermutationModel,
    SkewTableauModel,
    TableRowModel,
    TriangleRequest,
    TripleModel,
    VerifyResultModel,
    shape_pair_json,
    signed_json,
)
from .orbits import canonicalize_grassmann_point, enumerate_orbit_reps, image_analysis, orbit_class_count
from .parsing import parse_json_payload, parse_partial_permutation, parse_partition
from .partial_perm import canonicalize_matrix, decompose, partial_permutation_count
from .partitions import Partition, partitions_of
from .steinberg import fiber_count_formula, phi, phi_fibers, triangle, triple, triple_inverse, xi_k_generic, xi_s_generic
from .sweeps import VERIFY_TARGETS, golden_table, verify
from .tableau import Tableau

logger = logging.getLogger(__name__)

FORMATS = ("json", "text", "markdown")

EXIT_OK = 0
EXIT_DOMAIN_ERROR = 1
EXIT_MISMATCH = 2


@dataclass
class Output:
    data: Any
    text: str
    markdown: Optional[str] = None
    status: int = EXIT_OK

    def render(self, fmt: str) -> str:
        if fmt == "json":
            return to_json(self.data)
        if fmt == "markdown" and self.markdown is not None:
            return self.markdown
        return self.text


Handler = Callable[[argparse.Namespace, SteinbergConfig], Output]


def _rs(args: argparse.Namespace, config: SteinbergConfig) -> Output:
    p, q = rs_pair(decompose(parse_partial_permutation(args.word)).sigma)
    return Output({"P": p.as_lists(), "Q": q.as_lists()}, f"{tableau_text(p)}, {tableau_text(q)}")


def _phi(args: argparse.Namespace, config: SteinbergConfig) -> Output:
    shapes = phi(parse_partial_permutation(args.word))
    return Output(shape_pair_json(shapes), pair_text(shapes))


def _xi_k(args: argparse.Namespace, config: SteinbergConfig) -> Output:
    shapes = xi_k_generic(parse_partial_permutation(args.word))
    return Output(shape_pair_json(shapes), pair_text(shapes))


def _xi_s(args: argparse.Namespace, config: SteinbergConfig) -> Output:
    diagram = xi_s_generic(parse_partial_permutation(args.word))
    return Output(signed_json(diagram), signed_text(diagram))


def _triple(args: argparse.Namespace, config: SteinbergConfig) -> Output:
    t = triple(parse_partial_permutation(args.word))
    text = f"{tableau_text(t.T1)}, {tableau_text(t.T2)}, {partition_text(t.nu)}"
    return Output(TripleModel.from_domain(t).model_dump(mode="json"), text)


def _untriple(args: argparse.Namespace, config: SteinbergConfig) -> Output:
    tau = triple_inverse(parse_json_payload(args.payload, TripleModel).to_domain())
    return Output(PartialPermutationModel.from_domain(tau).model_dump(mode="json"), str(tau))


def _triangle(args: argparse.Namespace, config: SteinbergConfig) -> Output:
    req = parse_json_payload(args.payload, TriangleRequest)
    skew = triangle(Tableau(req.T1), Tableau(req.T2), req.ells, req.ms, req.n)
    return Output(SkewTableauModel.from_domain(skew).model_dump(mode="json"), skew_text(skew))


def _canon_matrix(args: argparse.Namespace, config: SteinbergConfig) -> Output:
    req = parse_json_payload(args.payload, MatrixRequest)
    tau = canonicalize_matrix(as_field_matrix(req.matrix, config.prime), config.prime)
    return Output(PartialPermutationModel.from_domain(tau).model_dump(mode="json"), str(tau))


def _canon_grass(args: argparse.Namespace, config: SteinbergConfig) -> Output:
    req = parse_json_payload(args.payload, MatrixRequest)
    omega = canonicalize_grassmann_point(as_field_matrix(req.matrix, config.prime), config.prime)
    return Output(OrbitRepModel.from_domain(omega).model_dump(mode="json"), str(omega))


def _orbits(args: argparse.Namespace, config: SteinbergConfig) -> Output:
    reps = enumerate_orbit_reps(args.n, max_n=config.max_orbit_n)
    response = OrbitsResponse(
        n=args.n,
        count=len(reps),
        closed_count=orbit_class_count(args.n),
        classes=[OrbitRepModel.from_domain(r) for r in reps],
    )
    text = "\n".join([f"n={args.n}: {len(reps)} classes"] + [str(r) for r in reps])
    return Output(response.model_dump(mode="json"), text)


def _count_fibers(args: argparse.Namespace, config: SteinbergConfig) -> Output:
    fibers = phi_fibers(args.n, max_n=config.max_partial_perm_n)
    if args.lam is not None or args.mu is not None:
        if args.lam is None or args.mu is None:
            raise ValueError("--lambda and --mu must be given together")
        pairs = [(Partition(tuple(parse_partition(args.lam))), Partition(tuple(parse_partition(args.mu))))]
    else:
        pairs = [(lam, mu) for lam in partitions_of(args.n) for mu in partitions_of(args.n)]
    entries = [
        FiberEntry(
            shapes=shape_pair_json(pair),
            count=fibers.get(pair, 0),
            formula=fiber_count_formula(pair[0], pair[1], max_size=config.max_tableau_size),
        )
        for pair in pairs
    ]
    response = FibersResponse(n=args.n, total=partial_permutation_count(args.n), fibers=entries)
    lines = [f"n={args.n}: {response.total} partial permutations"]
    lines += [f"{pair_text(pair)}  {e.count}  (formula {e.formula})" for pair, e in zip(pairs, entries)]
    return Output(response.model_dump(mode="json"), "\n".join(lines))


def _verify(args: argparse.Namespace, config: SteinbergConfig) -> Output:
    results = verify(args.n, args.what, config)
    data = [VerifyResultModel.from_domain(r).model_dump(mode="json") for r in results]
    status = EXIT_OK if all(r.ok for r in results) else EXIT_MISMATCH
    return Output(data, verify_text(results), status=status)


def _image_components(args: argparse.Namespace, config: SteinbergConfig) -> Output:
    report = image_analysis(args.n, config, cross_check=args.cross_check)
    return Output(
        ImageReportModel.from_domain(report).model_dump(mode="json"),
        image_report_text(report),
        image_report_markdown(report),
    )


def _table(args: argparse.Namespace, config: SteinbergConfig) -> Output:
    rows = golden_table(args.n, config)
    data = [TableRowModel.from_domain(r).model_dump(mode="json") for r in rows]
    return Output(data, table_text(rows), table_markdown(rows))


def _global_flags() -> argparse.ArgumentParser:
    """Flags accepted both before and after the subcommand."""

    parent = argparse.ArgumentParser(add_help=False)
    parent.add_argument("--format", choices=FORMATS, default=argparse.SUPPRESS)
    parent.add_argument("--prime", type=int, default=argparse.SUPPRESS)
    parent.add_argument("--trials", type=int, default=argparse.SUPPRESS)
    parent.add_argument("--seed", type=int, default=argparse.SUPPRESS)
    parent.add_argument("--config", type=Path, default=argparse.SUPPRESS)
    parent.add_argument(
        "--log-level",
        choices=("DEBUG", "INFO", "WARNING", "ERROR"),
        default=argparse.SUPPRESS,
    )
    return parent


def build_parser() -> argparse.ArgumentParser:
    common = _global_flags()
    parser = argparse.ArgumentParser(
        prog="steinberg_rs",
        description="Robinson-Schensted and Steinberg maps on partial permutations.",
        parents=[common],
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def _add(name: str, handler: Handler, help_text: str) -> argparse.ArgumentParser:
        p = sub.add_parser(name, parents=[common], help=help_text)
        p.set_defaults(handler=handler)
        return p

    for name, handler, help_text in (
        ("rs", _rs, "RS pair of the nondegenerate part"),
        ("phi", _phi, "generalized Steinberg map"),
        ("triple", _triple, "the (T1, T2, nu) triple"),
        ("xi-k", _xi_k, "Xi_k of (tau; 1_n)"),
        ("xi-s", _xi_s, "Xi_s of (tau; 1_n)"),
    ):
        _add(name, handler, help_text).add_argument("word", help="comma separated word, 0 for kernel")

    for name, handler, help_text in (
        ("untriple", _untriple, "inverse of triple; JSON {T1, T2, nu}"),
        ("triangle", _triangle, "skew tableau; JSON {T1, T2, ells, ms, n}"),
        ("canon-matrix", _canon_matrix, "B x B canonical form; JSON {matrix}"),
        ("canon-grass", _canon_grass, "B_K canonical form of a 2n x n matrix; JSON {matrix}"),
    ):
        _add(name, handler, help_text).add_argument("payload", help="JSON document, or @path to read one")

    _add("orbits", _orbits, "orbit class representatives").add_argument("--n", type=int, required=True)

    p = _add("count-fibers", _count_fibers, "fiber sizes of phi against the closed count")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--lambda", dest="lam", default=None)
    p.add_argument("--mu", default=None)

    p = _add("verify", _verify, "exhaustive verification sweeps")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--what", choices=VERIFY_TARGETS + ("all",), default="all")

    p = _add("image-components", _image_components, "component analysis of the exotic image")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--cross-check", action="store_true")

    _add("table", _table, "golden table of every partial permutation").add_argument(
        "--n", type=int, default=3
    )
    return parser


def _configure_logging(level: Optional[str]) -> None:
    resolved = level or os.environ.get("STEINBERG_LOG_LEVEL", "WARNING")
    logging.basicConfig(
        level=getattr(logging, resolved.upper(), logging.WARNING),
        format="%(asctime)s %(levelname)s %(name)s: %(message)s",
        stream=sys.stderr,
    )


def run(argv: Optional[Sequence[str]] = None, out: Optional[TextIO] = None) -> int:
    out = out or sys.stdout
    args = build_parser().parse_args(argv)
    _configure_logging(getattr(args, "log_level", None))
    fmt = getattr(args, "format", "json")

    try:
        config = load_config(
            getattr(args, "config", None),
            prime=getattr(args, "prime", None),
            trials=getattr(args, "trials", None),
            seed=getattr(args, "seed", None),
        )
        logger.debug("running %s with %s", args.command, config)
        output = args.handler(args, config)
    except ValidationError as exc:
        print(f"error: invalid payload: {exc}", file=sys.stderr)
        return EXIT_DOMAIN_ERROR
    except (SteinbergError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN_ERROR

    print(output.render(fmt), file=out)
    return output.status


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
