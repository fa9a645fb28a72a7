"""Command-line surface: classification, verification, census, atlas.

Exit codes: 0 success (including empty results), 1 verification
failure, 2 usage error, 3 resource limit.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import dataclass
from pathlib import Path

from .cosetenum import Presentation, enumerate_cosets, order_of_generator
from .construct import param_sets, build_G, verify_construction
from .ffield import PrimePower, enumerate_primitive, prime_power_decompose
from .mapcore import (RegularMapRecord, build_map, classify,
                      is_orientably_regular, underlying_multigraph)
from .oracle import (CensusLimitError, DEFAULT_FEASIBILITY, FeasibilityError,
                     census)

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_USAGE = 2
EXIT_LIMIT = 3

ATLAS_COLUMNS = ["q", "t", "poly", "variant", "ell", "a", "b", "c",
                 "m", "n", "genus", "chiral", "self_dual",
                 "balanced_cayley", "wilson_orbit"]


@dataclass(frozen=True)
class AtlasRow:
    """One classified map flattened to scalar cells."""

    cells: tuple[str, ...]

    @staticmethod
    def from_record(rec: RegularMapRecord) -> "AtlasRow":
        d = rec.to_json()
        cells = []
        for col in ATLAS_COLUMNS:
            v = d[col]
            if v is None:
                v = ""
            elif isinstance(v, bool):
                v = "yes" if v else "no"
            cells.append(str(v))
        return AtlasRow(tuple(cells))

    def csv(self) -> str:
        return ",".join(self.cells)

    def markdown(self) -> str:
        return "| " + " | ".join(self.cells) + " |"


def _default_jobs() -> int:
    try:
        return max(1, int(os.environ.get("REGMAPS_JOBS", "1")))
    except ValueError:
        return 1


def _records_json(records: list[RegularMapRecord]) -> str:
    return json.dumps([rec.to_json() for rec in records], indent=2)


def _records_csv(records: list[RegularMapRecord]) -> str:
    lines = [",".join(ATLAS_COLUMNS)]
    lines += [AtlasRow.from_record(rec).csv() for rec in records]
    return "\n".join(lines)


def cmd_classify(args) -> int:
    try:
        records = classify(args.q, args.t)
    except RuntimeError as exc:
        print(f"internal check failed: {exc}", file=sys.stderr)
        return EXIT_FAIL
    if args.format == "json":
        print(_records_json(records))
    else:
        print(_records_csv(records))
    return EXIT_OK


def cmd_verify(args) -> int:
    q, t = args.q, args.t
    if prime_power_decompose(q) is None:
        print(f"q={q} is not a prime power: no orientably-regular embeddings")
        return EXIT_OK
    sets = param_sets(q, t)
    if not sets:
        print(f"no admissible parameter sets for (q={q}, t={t})")
        return EXIT_OK
    all_ok = True
    for ps in sets:
        report = verify_construction(ps)
        extra = []
        if report.ok:
            G = build_G(ps)
            M = build_map(G)
            verdict = underlying_multigraph(M)
            extra.append(("underlying-multigraph",
                          verdict.ok and (verdict.r, verdict.t) == (q, t),
                          f"K_{verdict.r}^({verdict.t})" if verdict.ok else verdict.reason))
            extra.append(("orientably-regular", is_orientably_regular(M),
                          "centralizer of <R, L> acts regularly on arcs"))
        print(f"== {report.label}")
        for line in report.lines():
            print("  " + line)
        for name, okk, detail in extra:
            print(f"  [{'PASS' if okk else 'FAIL'}] {name}: {detail}")
            all_ok &= okk
        all_ok &= report.ok
    print("verify: " + ("all checks passed" if all_ok else "FAILURES detected"))
    return EXIT_OK if all_ok else EXIT_FAIL


def _parse_feasibility(spec: str | None) -> dict[int, int]:
    table = dict(DEFAULT_FEASIBILITY)
    if spec:
        for part in spec.split(","):
            r, _, t = part.partition(":")
            table[int(r)] = int(t)
    return table


def cmd_census(args) -> int:
    progress = None
    if args.progress:
        def progress(nodes: int) -> None:
            print(f"... {nodes} nodes", file=sys.stderr)
    try:
        result = census(args.r, args.t,
                        feasibility=_parse_feasibility(args.allow),
                        jobs=args.jobs, node_limit=args.node_limit,
                        progress=progress)
    except FeasibilityError as exc:
        print(str(exc), file=sys.stderr)
        return EXIT_LIMIT
    except CensusLimitError as exc:
        print(str(exc), file=sys.stderr)
        return EXIT_LIMIT
    print(f"census K_{args.r}^({args.t}): {result.count} class(es), "
          f"{result.labeled_survivors} labeled survivor(s), {result.nodes} nodes")
    if args.dump:
        for rep in result.representatives:
            print(rep.to_text(), end="")
    if args.check:
        expected = len(classify(args.r, args.t))
        if expected != result.count:
            print(f"MISMATCH: classification gives {expected}", file=sys.stderr)
            return EXIT_FAIL
        print(f"matches classification ({expected})")
    return EXIT_OK


def atlas_records(q_list: list[int], t_list: list[int]) -> list[RegularMapRecord]:
    records = []
    for q in q_list:
        for t in t_list:
            records.extend(classify(q, t))
    return records


def render_atlas_csv(records: list[RegularMapRecord]) -> str:
    lines = [",".join(ATLAS_COLUMNS)]
    lines += [AtlasRow.from_record(rec).csv() for rec in records]
    return "\n".join(lines) + "\n"


def render_atlas_markdown(records: list[RegularMapRecord], title: str) -> str:
    lines = [f"# {title}", ""]
    lines.append("| " + " | ".join(ATLAS_COLUMNS) + " |")
    lines.append("|" + "---|" * len(ATLAS_COLUMNS))
    lines += [AtlasRow.from_record(rec).markdown() for rec in records]
    return "\n".join(lines) + "\n"


def cmd_atlas(args) -> int:
    if args.q_list:
        q_list = [int(x) for x in args.q_list.split(",")]
    else:
        q_list = [q for q in range(2, args.q_max + 1)
                  if prime_power_decompose(q) is not None]
    if args.t_list:
        t_list = [int(x) for x in args.t_list.split(",")]
    else:
        t_list = list(range(1, args.t_max + 1))
    try:
        records = atlas_records(q_list, t_list)
    except RuntimeError as exc:
        print(f"internal check failed: {exc}", file=sys.stderr)
        return EXIT_FAIL
    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    name = args.name
    (out / f"{name}.csv").write_text(render_atlas_csv(records))
    title = (f"Orientably-regular embeddings of complete multigraphs: "
             f"q in {q_list}, t in {t_list}")
    (out / f"{name}.md").write_text(render_atlas_markdown(records, title))
    print(f"wrote {out / (name + '.csv')} and {out / (name + '.md')} "
          f"({len(records)} rows)")
    return EXIT_OK


def cmd_wilson(args) -> int:
    records = classify(args.q, args.t)
    orbits: dict[int, list[str]] = {}
    for rec in records:
        orbits.setdefault(rec.wilson_orbit, []).append(rec.ps.label())
    payload = {
        "q": args.q,
        "t": args.t,
        "orbit_count": len(orbits),
        "orbits": [orbits[k] for k in sorted(orbits)],
    }
    print(json.dumps(payload, indent=2))
    return EXIT_OK


def cmd_polys(args) -> int:
    try:
        pp = PrimePower(args.p, args.k)
    except ValueError as exc:
        print(str(exc), file=sys.stderr)
        return EXIT_USAGE
    polys = enumerate_primitive(pp)
    if args.format == "json":
        print(json.dumps([m.to_json() for m in polys], indent=2))
    else:
        for m in polys:
            print(str(m))
        print(f"{len(polys)} primitive polynomial(s) for q = {pp.q}")
    return EXIT_OK


def cmd_order(args) -> int:
    text = Path(args.presentation).read_text()
    try:
        pres = Presentation.from_text(text)
    except ValueError as exc:
        print(f"malformed presentation: {exc}", file=sys.stderr)
        return EXIT_USAGE
    table = enumerate_cosets(pres, args.limit)
    if not table.complete:
        print(f"inconclusive within {args.limit} cosets")
        return EXIT_LIMIT
    print(f"order {table.order}")
    print(f"ord(x) = {order_of_generator(table, 'x')}, "
          f"ord(y) = {order_of_generator(table, 'y')}")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="regmaps",
        description="Orientably-regular embeddings of complete multigraphs")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("classify", help="classify the embeddings of K_q^(t)")
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--t", type=int, required=True)
    p.add_argument("--format", choices=("json", "csv"), default="json")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("verify", help="run all construction self-checks")
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--t", type=int, required=True)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("census", help="brute-force rotation-system census")
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--t", type=int, required=True)
    p.add_argument("--check", action="store_true",
                   help="compare the count against the classification")
    p.add_argument("--jobs", type=int, default=_default_jobs())
    p.add_argument("--node-limit", type=int, default=None)
    p.add_argument("--allow", default=None, metavar="R:T,R:T",
                   help="extend the feasibility table")
    p.add_argument("--dump", action="store_true",
                   help="print representatives in the exchange format")
    p.add_argument("--progress", action="store_true")
    p.set_defaults(func=cmd_census)

    p = sub.add_parser("atlas", help="write CSV + markdown atlas tables")
    p.add_argument("--out", required=True)
    p.add_argument("--name", default="atlas")
    p.add_argument("--q-max", type=int, default=16)
    p.add_argument("--t-max", type=int, default=8)
    p.add_argument("--q-list", default=None)
    p.add_argument("--t-list", default=None)
    p.set_defaults(func=cmd_atlas)

    p = sub.add_parser("wilson", help="rotational-power orbits for (q, t)")
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--t", type=int, required=True)
    p.set_defaults(func=cmd_wilson)

    p = sub.add_parser("polys", help="enumerate primitive polynomials")
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(func=cmd_polys)

    p = sub.add_parser("order", help="coset-enumerate a presentation file")
    p.add_argument("presentation")
    p.add_argument("--limit", type=int, default=1000000)
    p.set_defaults(func=cmd_order)

    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
