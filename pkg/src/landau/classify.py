"""Candidate generation -> catalog scan -> structural verification -> tables.

Work fans out over catalog entries (each entry's analysis is pure and
independent), and the merge step sorts rows deterministically so output
bytes are identical regardless of worker count.
"""

from __future__ import annotations

import csv
import io
import json
import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass

from .bounds import iterative_kpp_bound, thm311_bound, thm322_bound
from .catalog import Catalog, CatalogEntry, IncompleteCatalogError
from .classgraph import build_gamma, check_thm313, verify_one_vertex, verify_two_vertex_edgeless
from .embedding import NormalEmbedding, k_and_kpp
from .fracsolve import candidate_orders_one_class, candidate_orders_two_coprime
from .group import is_prime_power
from .labeling import structure_label


@dataclass(frozen=True)
class ClassificationRow:
    index: int
    group_order: int
    catalog_id: int
    group_label: str
    subgroup_order: int
    subgroup_label: str
    subgroup_generators: str
    central_part_order: int
    class_sizes: tuple[int, ...]
    graph_shape: str
    verifications: tuple[tuple[str, bool], ...]

    def sort_key(self):
        return (self.group_order, self.catalog_id, self.subgroup_order,
                self.subgroup_generators)


@dataclass(frozen=True)
class KppRow:
    k: int
    group_order: int
    catalog_id: int
    group_label: str

    def sort_key(self):
        return (self.k, self.group_order, self.catalog_id)


def _subgroup_desc(sub):
    return ", ".join(repr(g) for g in sub.small_generating_set) or "1"


def _analyze_entry_one_class(entry: CatalogEntry, n: int) -> list[ClassificationRow]:
    group = entry.realize()
    rows = []
    for sub in group.normal_subgroups:
        if sub.order * n != group.order:
            continue
        e = NormalEmbedding(group, sub)
        if len(e.noncentral_classes) != 1:
            continue
        checks = [("one-vertex-structure", verify_one_vertex(e).ok)]
        if is_prime_power(group.order) and group.order > 1:
            checks.append(("p-group-refinement", check_thm313(group, sub).ok))
        rows.append(ClassificationRow(
            index=n,
            group_order=entry.order,
            catalog_id=entry.catalog_id,
            group_label=entry.label,
            subgroup_order=sub.order,
            subgroup_label=structure_label(sub),
            subgroup_generators=_subgroup_desc(sub),
            central_part_order=e.central_part_order,
            class_sizes=e.noncentral_sizes,
            graph_shape=f"{len(build_gamma(e).vertices)}v{build_gamma(e).edge_count}e",
            verifications=tuple(checks),
        ))
    return rows


def _analyze_entry_two_coprime(entry: CatalogEntry, n: int) -> list[ClassificationRow]:
    group = entry.realize()
    rows = []
    for sub in group.normal_subgroups:
        if sub.order * n != group.order:
            continue
        e = NormalEmbedding(group, sub)
        sizes = e.noncentral_sizes
        if len(sizes) != 2 or math.gcd(*sizes) != 1:
            continue
        report = verify_two_vertex_edgeless(e)
        checks = [
            ("trivial-central-part", e.central_part_order == 1),
            ("two-vertex-structure", report.ok),
            (f"branch-{report.branch}", report.branch is not None),
        ]
        rows.append(ClassificationRow(
            index=n,
            group_order=entry.order,
            catalog_id=entry.catalog_id,
            group_label=entry.label,
            subgroup_order=sub.order,
            subgroup_label=structure_label(sub),
            subgroup_generators=_subgroup_desc(sub),
            central_part_order=e.central_part_order,
            class_sizes=sizes,
            graph_shape="2v0e",
            verifications=tuple(checks),
        ))
    return rows


_WORKER_FUNCS = {
    "one-class": _analyze_entry_one_class,
    "two-coprime": _analyze_entry_two_coprime,
}


def _run_entry(args):
    mode, entry, n = args
    return _WORKER_FUNCS[mode](entry, n)


def _fan_out(mode, entries, n, jobs):
    tasks = [(mode, entry, n) for entry in entries]
    if jobs and jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(_run_entry, tasks))
    else:
        results = [_run_entry(t) for t in tasks]
    rows = [row for chunk in results for row in chunk]
    rows.sort(key=ClassificationRow.sort_key)
    return rows


def _scan_orders(catalog, candidates, bound, strict, exhaustive):
    """Entries at candidate orders; exhaustive mode demands coverage."""
    needed = bound - 1 if strict else bound
    if exhaustive and catalog.complete_up_to < needed:
        raise IncompleteCatalogError(
            f"exhaustive mode needs catalog complete to {needed}, "
            f"have {catalog.complete_up_to}"
        )
    entries = []
    for cand in candidates:
        entries.extend(catalog.entries_of_order(cand.c))
    return entries


def classify_one_class(catalog: Catalog, n: int, exhaustive: bool = False,
                       jobs: int = 1) -> list[ClassificationRow]:
    """All (G, N) with |G:N| = n and exactly one non-central G-class in N."""
    candidates = candidate_orders_one_class(n)
    entries = _scan_orders(catalog, candidates, thm311_bound(n).bound_G,
                           strict=True, exhaustive=exhaustive)
    return _fan_out("one-class", entries, n, jobs)


def classify_two_coprime(catalog: Catalog, n: int, exhaustive: bool = False,
                         jobs: int = 1) -> list[ClassificationRow]:
    """All (G, N) with |G:N| = n and two non-central classes of coprime sizes."""
    candidates = candidate_orders_two_coprime(n)
    entries = _scan_orders(catalog, candidates, thm322_bound(n).bound_G,
                           strict=False, exhaustive=exhaustive)
    return _fan_out("two-coprime", entries, n, jobs)


def group_count(rows) -> int:
    """Ambient groups counted once, regardless of qualifying subgroups."""
    return len({(r.group_order, r.catalog_id) for r in rows})


def classify_kpp(catalog: Catalog, k_max: int, exhaustive: bool = False) -> list[KppRow]:
    """Solvable groups with a given prime-power-class count, level by level.

    Each level's order cap is k * m^2 where m is the largest order seen
    at earlier levels; exhaustive mode requires the catalog to cover the
    cap at every level.
    """
    rows = []
    max_order = 1
    for k in range(1, k_max + 1):
        bound = iterative_kpp_bound(k, max_order)
        if exhaustive and catalog.complete_up_to < bound:
            raise IncompleteCatalogError(
                f"level k={k} needs catalog complete to {bound}, "
                f"have {catalog.complete_up_to}"
            )
        scan_to = bound if exhaustive else min(bound, catalog.max_entry_order())
        level = []
        for m in range(1, scan_to + 1):
            for entry in catalog.entries_of_order(m):
                group = entry.realize()
                if not group.is_solvable:
                    continue
                if k_and_kpp(group)[1] == k:
                    level.append(KppRow(k, entry.order, entry.catalog_id, entry.label))
        level.sort(key=KppRow.sort_key)
        rows.extend(level)
        if level:
            max_order = max(max_order, max(r.group_order for r in level))
    return rows


# --- table emission --------------------------------------------------------

def _row_to_record(row):
    record = asdict(row)
    if "class_sizes" in record:
        record["class_sizes"] = "+".join(map(str, row.class_sizes))
    if "verifications" in record:
        record["verifications"] = "; ".join(
            f"{name}={'ok' if passed else 'FAIL'}" for name, passed in row.verifications
        )
    return record


def emit_table(rows, format: str = "csv", destination=None) -> str:
    """Render rows as csv, markdown, or json; deterministic bytes.

    Returns the rendered text; writes it to ``destination`` (path or
    file-like) when given.
    """
    rows = sorted(rows, key=lambda r: r.sort_key())
    if rows:
        fields = list(_row_to_record(rows[0]).keys())
    else:
        fields = [f.strip() for f in
                  ("index, group_order, catalog_id, group_label, subgroup_order, "
                   "subgroup_label, subgroup_generators, central_part_order, "
                   "class_sizes, graph_shape, verifications").split(",")]
    records = [_row_to_record(r) for r in rows]

    if format == "csv":
        buf = io.StringIO()
        writer = csv.DictWriter(buf, fieldnames=fields, lineterminator="\n")
        writer.writeheader()
        writer.writerows(records)
        text = buf.getvalue()
    elif format in ("md", "markdown"):
        lines = ["| " + " | ".join(fields) + " |",
                 "| " + " | ".join("---" for _ in fields) + " |"]
        for rec in records:
            lines.append("| " + " | ".join(str(rec[f]) for f in fields) + " |")
        text = "\n".join(lines) + "\n"
    elif format == "json":
        text = json.dumps(records, indent=2) + "\n"
    else:
        raise ValueError(f"unknown format {format!r}")

    if destination is not None:
        if hasattr(destination, "write"):
            destination.write(text)
        else:
            with open(destination, "w", encoding="utf-8") as fh:
                fh.write(text)
    return text
