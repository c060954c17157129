"""HTTP service exposing the classification toolkit.

Catalogs are passed inline as text; errors map to 400 (bad parameters),
422 (unparseable catalog), and 409 (catalog too small for an exhaustive
request).
"""

from __future__ import annotations

from fastapi import FastAPI, HTTPException

from .. import __version__
from ..bounds import (DomainError, lemma21_bounds, theoremA_bounds,
                      thm311_bound, thm322_bound)
from ..catalog import CatalogError, IncompleteCatalogError, parse_catalog
from ..classify import classify_kpp, classify_one_class, classify_two_coprime, group_count
from ..fracsolve import (candidate_orders_one_class, candidate_orders_two_coprime,
                         unit_fraction_solutions)
from ..verify import verify_catalog
from . import schemas

app = FastAPI(title="landau", version=__version__)


def _catalog_from(text):
    try:
        return parse_catalog(text if "\n" in text else text + "\n")
    except IncompleteCatalogError:
        raise
    except CatalogError as exc:
        raise HTTPException(status_code=422, detail=f"catalog error: {exc}")


@app.get("/health", response_model=schemas.HealthResponse)
def health():
    return schemas.HealthResponse(status="ok", version=__version__)


@app.get("/bounds", response_model=schemas.BoundsResponse)
def bounds(index: int, noncentral: int):
    try:
        reports = [theoremA_bounds(index, noncentral)]
        if noncentral == 1:
            reports.append(thm311_bound(index))
        if noncentral == 2:
            reports.append(thm322_bound(index))
        caps = lemma21_bounds(index, noncentral)
    except DomainError as exc:
        raise HTTPException(status_code=400, detail=str(exc))
    return schemas.BoundsResponse(
        index=index,
        noncentral=noncentral,
        bounds=[schemas.BoundEntry(source=r.source, bound_G=r.bound_G,
                                   bound_N=r.bound_N, strict=r.strict)
                for r in reports],
        part_caps=caps,
    )


@app.post("/solve", response_model=schemas.SolveResponse)
def solve(request: schemas.SolveRequest):
    try:
        solutions = unit_fraction_solutions(request.index, request.parts)
    except DomainError as exc:
        raise HTTPException(status_code=400, detail=str(exc))
    return schemas.SolveResponse(
        index=request.index,
        parts=request.parts,
        solutions=[list(s.parts) for s in solutions],
    )


@app.get("/candidates", response_model=schemas.CandidatesResponse)
def candidates(mode: str, index: int):
    fns = {"one-class": candidate_orders_one_class,
           "two-coprime": candidate_orders_two_coprime}
    if mode not in fns:
        raise HTTPException(status_code=400, detail=f"unknown mode {mode!r}")
    try:
        found = fns[mode](index)
    except DomainError as exc:
        raise HTTPException(status_code=400, detail=str(exc))
    return schemas.CandidatesResponse(
        mode=mode,
        index=index,
        candidates=[{"order": c.c, "witnesses": [list(w) for w in c.witnesses]}
                    for c in found],
    )


@app.post("/classify", response_model=schemas.ClassifyResponse)
def classify(request: schemas.ClassifyRequest):
    catalog = _catalog_from(request.catalog_text)
    fn = (classify_one_class if request.mode == "one-class"
          else classify_two_coprime)
    try:
        rows = fn(catalog, request.index, exhaustive=request.exhaustive)
    except IncompleteCatalogError as exc:
        raise HTTPException(status_code=409, detail=str(exc))
    except DomainError as exc:
        raise HTTPException(status_code=400, detail=str(exc))
    return schemas.ClassifyResponse(
        mode=request.mode,
        index=request.index,
        group_count=group_count(rows),
        rows=[schemas.ClassificationRowModel(
            index=r.index, group_order=r.group_order, catalog_id=r.catalog_id,
            group_label=r.group_label, subgroup_order=r.subgroup_order,
            subgroup_label=r.subgroup_label,
            subgroup_generators=r.subgroup_generators,
            central_part_order=r.central_part_order,
            class_sizes=list(r.class_sizes), graph_shape=r.graph_shape,
            verifications=list(r.verifications),
        ) for r in rows],
    )


@app.post("/kpp", response_model=schemas.KppResponse)
def kpp(request: schemas.KppRequest):
    catalog = _catalog_from(request.catalog_text)
    try:
        rows = classify_kpp(catalog, request.max_k, exhaustive=request.exhaustive)
    except IncompleteCatalogError as exc:
        raise HTTPException(status_code=409, detail=str(exc))
    return schemas.KppResponse(
        max_k=request.max_k,
        rows=[schemas.KppRowModel(k=r.k, group_order=r.group_order,
                                  catalog_id=r.catalog_id, group_label=r.group_label)
              for r in rows],
    )


@app.post("/verify", response_model=schemas.VerifyResponse)
def verify(request: schemas.VerifyRequest):
    catalog = _catalog_from(request.catalog_text)
    violations = verify_catalog(catalog)
    return schemas.VerifyResponse(entries_checked=len(catalog.entries),
                                  violations=violations)
