"""Small-group catalog files: parse, validate, serialize, iterate.

File format (group-catalog/1): line-delimited JSON.  The first line is a
header object with the schema tag, a completeness bound, and per-order
entry counts; every following line is one group given by permutation
generators in cycle notation (1-based points).
"""

from __future__ import annotations

import io
import json
from dataclasses import dataclass, field
from functools import cached_property

from .group import ClosureCapExceededError, FiniteGroup
from .perm import InvalidPermutationError, Permutation

SCHEMA = "group-catalog/1"


class CatalogError(ValueError):
    """Base class for catalog parse/validation failures."""


class SchemaMismatchError(CatalogError):
    pass


class OrderMismatchError(CatalogError):
    def __init__(self, message, line_number):
        super().__init__(f"line {line_number}: {message}")
        self.line_number = line_number


class DuplicateIdError(CatalogError):
    pass


class IncompleteCatalogError(CatalogError):
    """Exhaustive-mode request beyond the catalog's completeness bound."""


@dataclass
class CatalogEntry:
    order: int
    catalog_id: int
    label: str
    degree: int
    generators: list  # list of cycles, cycles are lists of 1-based ints

    def realize(self) -> FiniteGroup:
        return self._group

    @cached_property
    def _group(self):
        perms = [Permutation.from_cycles(cycles, self.degree)
                 for cycles in self.generators]
        return FiniteGroup(perms, self.degree,
                           label=f"{self.label} ({self.order}, {self.catalog_id})")


@dataclass
class Catalog:
    entries: list[CatalogEntry]
    complete_up_to: int = 0
    counts: dict[int, int] = field(default_factory=dict)
    provenance: str = ""

    @cached_property
    def _by_order(self):
        grouped: dict[int, list[CatalogEntry]] = {}
        for entry in self.entries:
            grouped.setdefault(entry.order, []).append(entry)
        for group_list in grouped.values():
            group_list.sort(key=lambda e: e.catalog_id)
        return grouped

    def entries_of_order(self, m: int) -> list[CatalogEntry]:
        return self._by_order.get(m, [])

    def max_entry_order(self) -> int:
        return max((e.order for e in self.entries), default=0)


def parse_catalog(source) -> Catalog:
    """Parse and fully validate a catalog from text, a stream, or a path.

    Every entry's generators are closed and the resulting order checked
    against the declared one; a mismatch reports the offending line.
    """
    if hasattr(source, "read"):
        stream = source
    elif isinstance(source, str) and (source.lstrip().startswith("{") or "\n" in source):
        stream = io.StringIO(source)
    else:
        stream = open(source, "r", encoding="utf-8")
    lines = [line for line in stream.read().splitlines()]

    header_line = next((line for line in lines if line.strip()), None)
    if header_line is None:
        raise SchemaMismatchError("empty catalog file")
    try:
        header = json.loads(header_line)
    except json.JSONDecodeError as exc:
        raise SchemaMismatchError(f"unreadable header: {exc}") from exc
    if not isinstance(header, dict) or header.get("schema") != SCHEMA:
        raise SchemaMismatchError(
            f"expected schema {SCHEMA!r}, got {header.get('schema') if isinstance(header, dict) else header!r}"
        )
    complete_up_to = int(header.get("complete_up_to", 0))
    counts = {int(k): int(v) for k, v in (header.get("counts") or {}).items()}

    entries = []
    seen_ids = set()
    header_seen = False
    for line_number, line in enumerate(lines, start=1):
        if not line.strip():
            continue
        if not header_seen:
            header_seen = True
            continue
        try:
            record = json.loads(line)
        except json.JSONDecodeError as exc:
            raise SchemaMismatchError(f"line {line_number}: bad JSON: {exc}") from exc
        try:
            entry = CatalogEntry(
                order=int(record["order"]),
                catalog_id=int(record["catalog_id"]),
                label=str(record["label"]),
                degree=int(record["degree"]),
                generators=record["generators"],
            )
        except (KeyError, TypeError, ValueError) as exc:
            raise SchemaMismatchError(f"line {line_number}: bad record: {exc}") from exc
        key = (entry.order, entry.catalog_id)
        if key in seen_ids:
            raise DuplicateIdError(f"line {line_number}: duplicate id {key}")
        seen_ids.add(key)
        try:
            group = entry.realize()
        except (InvalidPermutationError, ClosureCapExceededError) as exc:
            raise OrderMismatchError(f"unrealizable generators: {exc}", line_number) from exc
        if group.order != entry.order:
            raise OrderMismatchError(
                f"declared order {entry.order} but generators close to {group.order}",
                line_number,
            )
        entries.append(entry)

    catalog = Catalog(entries=entries, complete_up_to=complete_up_to,
                      counts=counts, provenance=str(header.get("provenance", "")))
    if complete_up_to:
        for m in range(1, complete_up_to + 1):
            declared = counts.get(m, 0)
            actual = len(catalog.entries_of_order(m))
            if declared != actual:
                raise SchemaMismatchError(
                    f"order {m}: header declares {declared} entries, file has {actual}"
                )
    return catalog


def serialize(catalog: Catalog) -> str:
    header = {
        "schema": SCHEMA,
        "complete_up_to": catalog.complete_up_to,
        "counts": {str(k): v for k, v in sorted(catalog.counts.items())},
    }
    if catalog.provenance:
        header["provenance"] = catalog.provenance
    lines = [json.dumps(header, separators=(", ", ": "))]
    for entry in catalog.entries:
        lines.append(json.dumps({
            "order": entry.order,
            "catalog_id": entry.catalog_id,
            "label": entry.label,
            "degree": entry.degree,
            "generators": entry.generators,
        }, separators=(", ", ": ")))
    return "\n".join(lines) + "\n"


def groups_of_order(catalog: Catalog, m: int, exhaustive: bool = False) -> list[FiniteGroup]:
    """Realized groups of order m in catalog_id order.

    In exhaustive mode, asking beyond the completeness bound is an error
    rather than a silent empty answer.
    """
    if m < 1:
        raise ValueError("order must be >= 1")
    if exhaustive and m > catalog.complete_up_to:
        raise IncompleteCatalogError(
            f"order {m} exceeds the catalog completeness bound {catalog.complete_up_to}"
        )
    return [entry.realize() for entry in catalog.entries_of_order(m)]
