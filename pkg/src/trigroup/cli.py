"""Command-line interface: every library operation as a subcommand.

Single JSON documents go to stdout; list outputs stream as JSON lines
(or CSV) so large censuses never buffer.  Integers whose magnitude
exceeds 53 bits are serialized as strings to survive double-precision
JSON consumers.  Exit codes: 0 success, 2 invalid input, 3 resource cap
exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import counting, eisenstein, lie, orbit, reduction, simplex
from .core import (
    ResourceLimitError,
    form_signature,
    is_triangle_quadruple,
    quadratic_form,
    verify_coxeter_relations,
)

_BIG = 2**53


def _json_safe(obj):
    if isinstance(obj, bool):
        return obj
    if isinstance(obj, int):
        return str(obj) if abs(obj) > _BIG else obj
    if isinstance(obj, Fraction):
        return str(obj)
    if isinstance(obj, dict):
        return {k: _json_safe(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_json_safe(v) for v in obj]
    return obj


def _emit(payload) -> None:
    print(json.dumps(_json_safe(payload), sort_keys=True))


def _quadruple(values) -> tuple[int, int, int, int]:
    if len(values) != 4:
        raise ValueError(f"expected 4 integers, got {len(values)}")
    return tuple(values)


def _cmd_check(args) -> int:
    q = _quadruple(args.entries)
    _emit(
        {
            "quadruple": list(q),
            "valid": is_triangle_quadruple(q),
            "form_value": quadratic_form(q),
        }
    )
    return 0


def _cmd_reduce(args) -> int:
    trace = reduction.reduce_to_root(_quadruple(args.entries))
    _emit(
        {
            "start": list(trace.start),
            "steps": [
                {"generator": i, "result": list(q)} for i, q in trace.steps
            ],
            "root": list(trace.root),
            "gcd": reduction.gcd_content(trace.start),
            "primitive": reduction.is_primitive(trace.start),
        }
    )
    return 0


def _cmd_orbit(args) -> int:
    result = orbit.orbit_vectors(
        tuple(args.root),
        args.depth,
        max_vectors=args.max_elements,
        max_sum=args.max_sum,
    )
    if args.list:
        for depth, layer in enumerate(result.layers):
            for v in layer:
                _emit({"depth": depth, "vector": list(v)})
    else:
        _emit(
            {
                "root": list(result.root),
                "depth": args.depth,
                "cumulative_sizes": list(result.cumulative_sizes),
                "total": result.cumulative_sizes[-1],
            }
        )
    return 0


def _cmd_growth(args) -> int:
    table = orbit.bfs_elements(args.depth, max_elements=args.max_elements)
    vec = orbit.orbit_vectors(
        tuple(args.root), args.depth, max_vectors=args.max_elements, keep_layers=False
    )
    rows = [
        {
            "depth": n,
            "layer": table.layer_sizes[n],
            "recurrence": orbit.growth_recurrence(n),
            "cumulative": table.cumulative_sizes[n],
            "orbit": vec.cumulative_sizes[n],
        }
        for n in range(args.depth + 1)
    ]
    _emit({"root": list(args.root), "rows": rows})
    return 0


def _census_args(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("bound", type=int)
    parser.add_argument("--mode", choices=counting.MODES, default="canonical")
    parser.add_argument("--primitive", action="store_true")
    parser.add_argument("--list", action="store_true", help="stream the quadruples")
    parser.add_argument("--format", choices=("jsonl", "csv"), default="jsonl")
    parser.add_argument(
        "--max-bound",
        type=int,
        default=counting.DEFAULT_BOUND_CAP,
        help="feasibility cap on the bound",
    )


def _stream_census(report, fmt: str) -> None:
    if fmt == "csv":
        print("a,b,c,d")
        for q in report.quadruples:
            print(",".join(str(x) for x in q))
    else:
        for q in report.quadruples:
            _emit({"quadruple": list(q)})


def _cmd_census_height(args) -> int:
    if args.sweep:
        for n, count, ratio in counting.height_sweep(
            args.bound, mode=args.mode, max_bound=args.max_bound
        ):
            _emit({"bound": n, "count": count, "ratio": ratio})
        return 0
    if args.list:
        report = counting.enumerate_all(
            args.bound, mode=args.mode, primitive=args.primitive, max_bound=args.max_bound
        )
        _stream_census(report, args.format)
        return 0
    report = counting.count_by_height(
        args.bound, mode=args.mode, primitive=args.primitive, max_bound=args.max_bound
    )
    _emit(
        {
            "bound": report.bound,
            "mode": report.mode,
            "primitive": args.primitive,
            "count": report.count,
        }
    )
    return 0


def _cmd_census_max(args) -> int:
    report = counting.count_by_max(
        args.bound,
        mode=args.mode,
        primitive=args.primitive,
        max_bound=args.max_bound,
        include_list=args.list,
    )
    if args.list:
        _stream_census(report, args.format)
        return 0
    _emit(
        {
            "bound": report.bound,
            "mode": report.mode,
            "primitive": args.primitive,
            "count": report.count,
        }
    )
    return 0


def _cmd_divisor_sum(args) -> int:
    total, ratio = counting.divisor_square_sum(args.bound)
    _emit({"bound": args.bound, "sum": total, "ratio": ratio})
    return 0


def _cmd_pair(args) -> int:
    extensions = eisenstein.quadruples_with_pair(args.p, args.q)
    _emit(
        {
            "pair": [args.p, args.q],
            "count": len(extensions),
            "extensions": [list(q) for q in extensions],
        }
    )
    return 0


def _cmd_normform(args) -> int:
    solutions = eisenstein.solve_norm_form(args.k)
    payload = {"k": args.k, "count": len(solutions), "solutions": [list(s) for s in solutions]}
    if args.k >= 1:
        payload["character_sum"] = eisenstein.divisor_character_sum(args.k)
    _emit(payload)
    return 0


def _cmd_stabilizer(args) -> int:
    layers = orbit.stabilizer_counts(args.depth, max_elements=args.max_elements)
    expected = [1] + [3 * n for n in range(1, args.depth + 1)]
    cumulative = []
    for n in range(args.depth // 2 + 1):
        cumulative.append(
            {
                "n": n,
                "count": sum(layers[: 2 * n + 1]),
                "closed_form": orbit.stabilizer_cumulative_closed_form(n),
            }
        )
    _emit(
        {
            "layer_sizes": layers,
            "expected_layers": expected,
            "layers_match": layers == expected,
            "cumulative_through_even_lengths": cumulative,
        }
    )
    return 0


def _cmd_extremal(args) -> int:
    word = orbit.extremal_word(args.length)
    norm = orbit.word_norm(word, tuple(args.root))
    payload = {
        "length": args.length,
        "word": list(word),
        "norm": norm,
        "root": list(args.root),
    }
    if args.exhaustive:
        best, attaining = orbit.max_norm_at_length(
            args.length, tuple(args.root), max_elements=args.max_elements
        )
        payload["exhaustive_max"] = best
        payload["attaining_words"] = [list(w) for w in attaining]
        payload["extremal_attains_max"] = best == norm
    _emit(payload)
    return 0


def _cmd_verify(args) -> int:
    if args.target == "coxeter":
        checks = verify_coxeter_relations()
        all_pass = all(ok for _, ok in checks)
        _emit(
            {
                "checks": [{"relation": name, "holds": ok} for name, ok in checks],
                "all_pass": all_pass,
            }
        )
        return 0 if all_pass else 1
    if args.target == "cartan":
        signature = form_signature()
        _emit({"signature": list(signature), "all_pass": signature == (3, 1, 0)})
        return 0 if signature == (3, 1, 0) else 1
    if args.target == "lie":
        displays = lie.display_comparison()
        spanning = lie.six_spanning_matrices()
        infinitesimal = [
            (name, lie.preserves_form_infinitesimally(m)) for name, m in spanning
        ]
        infinitesimal.insert(
            0,
            ("D1", lie.preserves_form_infinitesimally(lie.derivative_matrix())),
        )
        rank = lie.six_matrix_rank()
        all_pass = (
            all(ok for _, ok in displays)
            and all(ok for _, ok in infinitesimal)
            and rank == 6
        )
        _emit(
            {
                "display_comparison": [
                    {"matrix": name, "matches": ok} for name, ok in displays
                ],
                "infinitesimal_checks": [
                    {"matrix": name, "holds": ok} for name, ok in infinitesimal
                ],
                "rank": rank,
                "all_pass": all_pass,
            }
        )
        return 0 if all_pass else 1
    # target == "a1": the comparison ledger itself is the product, so a
    # recorded mismatch is reported, not treated as a failure.
    lie.translation_matrix()
    mismatches = lie.power_formula_report(args.max_n)
    _emit(
        {
            "matrix_matches_display": True,
            "derivative_matches": lie.formula_derivative_at_zero()
            == lie.derivative_matrix(),
            "max_n": args.max_n,
            "mismatch_count": len(mismatches),
            "mismatches": [
                {
                    "n": m.n,
                    "row": m.row,
                    "col": m.col,
                    "computed": m.computed,
                    "formula": m.formula,
                }
                for m in mismatches
            ],
        }
    )
    return 0


def _cmd_simplex(args) -> int:
    if args.config is not None:
        cfg = simplex.load_configuration(args.config)
        entries = simplex.tuple_from_configuration(cfg)
    else:
        if not args.entries:
            raise ValueError("provide tuple entries or --config")
        entries = simplex.as_entries(args.entries)
    if args.action == "verify":
        residual = simplex.identity_residual(entries)
        _emit(
            {
                "entries": [str(e) for e in entries],
                "residual": str(residual),
                "valid": residual == 0,
            }
        )
        return 0
    if args.action == "reflect":
        if args.index is None:
            raise ValueError("reflect requires --index")
        result = simplex.reflect(entries, args.index)
        _emit(
            {
                "entries": [str(e) for e in entries],
                "index": args.index,
                "result": [str(e) for e in result],
                "negative": any(e < 0 for e in result),
            }
        )
        return 0
    det = simplex.gram_det(entries)
    closed = simplex.gram_closed_form(entries)
    _emit(
        {
            "entries": [str(e) for e in entries],
            "determinant": str(det),
            "closed_form": str(closed),
            "match": det == closed,
        }
    )
    return 0


def _cmd_alpha(args) -> int:
    if args.search:
        if args.height is None or args.max_count is None:
            raise ValueError("search needs --height and --max-count")
        found = orbit.search_prime_factor_count(args.height, args.max_count)
        _emit(
            {
                "height_bound": args.height,
                "max_count": args.max_count,
                "count": len(found),
                "quadruples": [
                    {
                        "quadruple": list(q),
                        "prime_factors": orbit.prime_factor_count(q),
                    }
                    for q in found
                ],
            }
        )
        return 0
    if len(args.entries) != 4:
        raise ValueError("expected 4 integers")
    q = tuple(args.entries)
    count = orbit.prime_factor_count(q)
    _emit(
        {
            "quadruple": list(q),
            "product": q[0] * q[1] * q[2] * q[3],
            "prime_factors": count,
        }
    )
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="trigroup",
        description="Exact arithmetic for quadruples under the four-reflection group.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check", help="test a 4-tuple against the quadruple equation")
    p.add_argument("entries", type=int, nargs=4)
    p.set_defaults(func=_cmd_check)

    p = sub.add_parser("reduce", help="reduce a quadruple to its root, recording the trace")
    p.add_argument("entries", type=int, nargs=4)
    p.set_defaults(func=_cmd_reduce)

    p = sub.add_parser("orbit", help="breadth-first orbit of a quadruple under the generators")
    p.add_argument("--root", type=int, nargs=4, default=[0, 1, 1, 1])
    p.add_argument("--depth", type=int, required=True)
    p.add_argument("--max-sum", type=int, default=None, help="discard vectors with larger entry sum")
    p.add_argument("--max-elements", type=int, default=None)
    p.add_argument("--list", action="store_true", help="stream vectors as JSON lines")
    p.set_defaults(func=_cmd_orbit)

    p = sub.add_parser("growth", help="per-length element counts: BFS against the closed recurrence")
    p.add_argument("--depth", type=int, required=True)
    p.add_argument("--root", type=int, nargs=4, default=[0, 1, 1, 1])
    p.add_argument("--max-elements", type=int, default=None)
    p.set_defaults(func=_cmd_growth)

    p = sub.add_parser("census-height", help="census of quadruples with bounded height")
    _census_args(p)
    p.add_argument("--sweep", action="store_true", help="emit (n, count, ratio) rows up to the bound")
    p.set_defaults(func=_cmd_census_height)

    p = sub.add_parser("census-max", help="census of quadruples with bounded maximal entry")
    _census_args(p)
    p.set_defaults(func=_cmd_census_max)

    p = sub.add_parser("divisor-sum", help="exact sum of squared divisor counts")
    p.add_argument("bound", type=int)
    p.set_defaults(func=_cmd_divisor_sum)

    p = sub.add_parser("pair", help="all quadruples containing a fixed positive pair")
    p.add_argument("p", type=int)
    p.add_argument("q", type=int)
    p.set_defaults(func=_cmd_pair)

    p = sub.add_parser("normform", help="integer representations by z^2 - zw + w^2")
    p.add_argument("k", type=int)
    p.set_defaults(func=_cmd_normform)

    p = sub.add_parser("stabilizer", help="growth of the root-fixing subgroup")
    p.add_argument("--depth", type=int, required=True)
    p.add_argument("--max-elements", type=int, default=None)
    p.set_defaults(func=_cmd_stabilizer)

    p = sub.add_parser("extremal", help="norm-extremal words and exhaustive norm maxima")
    p.add_argument("length", type=int)
    p.add_argument("--root", type=int, nargs=4, default=[0, 1, 1, 1])
    p.add_argument("--exhaustive", action="store_true")
    p.add_argument("--max-elements", type=int, default=None)
    p.set_defaults(func=_cmd_extremal)

    p = sub.add_parser("verify", help="pass/fail ledgers for the exact matrix identities")
    p.add_argument("target", choices=("coxeter", "cartan", "lie", "a1"))
    p.add_argument("--max-n", type=int, default=20, help="power range for the a1 ledger")
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("simplex", help="the n-dimensional identity, reflection, and Gram check")
    p.add_argument("action", choices=("verify", "reflect", "gram"))
    p.add_argument("entries", nargs="*", help="tuple entries as integers or fractions like 3/8")
    p.add_argument("--index", type=int, default=None, help="1-based distance entry to reflect")
    p.add_argument("--config", default=None, help="JSON file with a point configuration")
    p.set_defaults(func=_cmd_simplex)

    p = sub.add_parser("alpha", help="prime factors (with multiplicity) of the entry product")
    p.add_argument("entries", type=int, nargs="*")
    p.add_argument("--search", action="store_true")
    p.add_argument("--height", type=int, default=None)
    p.add_argument("--max-count", type=int, default=None)
    p.set_defaults(func=_cmd_alpha)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ResourceLimitError as exc:
        print(f"resource limit: {exc}", file=sys.stderr)
        return 3
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
