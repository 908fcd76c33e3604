from typing import List, Optional

from fastapi import Depends, FastAPI, HTTPException, Query

from . import schemas
from .catalog import CatalogError, dump_catalog
from .deformations import IndexConstraintError, UnknownDeformationError, canonical_indices, parse_indices
from .runner import ConfigurationError, contraction_summary, run
from .series import DivergenceError
from .settings import Settings, get_settings
from .spacetime import StarProductTerminationError, derive_spacetime

app = FastAPI(title="Twisted Poincare Hopf Algebra Verifier")

BAD_REQUEST = (ConfigurationError, IndexConstraintError, UnknownDeformationError, CatalogError)


def _bad_request(example: str) -> dict:
    return {"description": "Bad Request", "content": {"application/json": {"example": {"detail": example}}}}


@app.post(
    "/verify",
    response_model=schemas.VerificationReport,
    responses={
        200: {
            "description": "Report sorted by case id",
            "content": {"application/json": {"example": schemas.VerificationReport.model_config["json_schema_extra"]["example"]}},
        },
        400: _bad_request("kappa: indices i=1,k=1 violate [i,k fixed, i != k]"),
    },
)
def verify(config: schemas.RunConfig):
    """Run the selected checks.

    - Returns the full report; `exit_code` is 1 when any case fails.
    - Returns 400 when an index assignment violates its constraint.
    """
    try:
        return run(config)
    except BAD_REQUEST as e:
        raise HTTPException(status_code=400, detail=str(e))


@app.get(
    "/spacetime/{deformation}",
    response_model=schemas.SpacetimeTable,
    responses={
        200: {
            "description": "Derived star commutators, annotated against the catalog",
            "content": {"application/json": {"example": schemas.SpacetimeTable.model_config["json_schema_extra"]["example"]}},
        },
        400: _bad_request("unknown deformation 'theta' (known: theta_kl, ...)"),
    },
)
def spacetime(
    deformation: str,
    indices: Optional[str] = Query(None, description="k=..,l=..,i=.. (default canonical)"),
    settings: Settings = Depends(get_settings),
):
    try:
        chosen = parse_indices(indices) if indices else canonical_indices(deformation)
        derivation = derive_spacetime(deformation, chosen, settings.star_safety_order)
    except BAD_REQUEST as e:
        raise HTTPException(status_code=400, detail=str(e))
    except StarProductTerminationError as e:
        raise HTTPException(status_code=422, detail=str(e))
    return derivation.as_dict()


@app.get(
    "/contract/{deformation}",
    response_model=schemas.ContractionSummary,
    responses={
        200: {
            "description": "Contracted coproducts and antipodes",
            "content": {"application/json": {"example": schemas.ContractionSummary.model_config["json_schema_extra"]["example"]}},
        },
        400: _bad_request("theta_0i: index i=4 must be spatial (1..3) [i fixed]"),
        422: {"description": "Divergent limit", "content": {"application/json": {"example": {"detail": "term ... grows like c^1 in the contraction of Pi0"}}}},
    },
)
def contract(
    deformation: str,
    indices: Optional[str] = Query(None, description="k=..,l=..,i=.. (default canonical)"),
    order: Optional[int] = Query(None, ge=1),
    settings: Settings = Depends(get_settings),
):
    try:
        return contraction_summary(deformation, parse_indices(indices) if indices else None, order or settings.order)
    except BAD_REQUEST as e:
        raise HTTPException(status_code=400, detail=str(e))
    except DivergenceError as e:
        raise HTTPException(status_code=422, detail=str(e))


@app.get(
    "/catalog",
    response_model=List[schemas.CatalogItem],
    responses={
        200: {
            "description": "Every closed form and space-time table",
            "content": {"application/json": {"example": [schemas.CatalogItem.model_config["json_schema_extra"]["example"]]}},
        },
    },
)
def catalog(order: Optional[int] = Query(None, ge=1), settings: Settings = Depends(get_settings)):
    return dump_catalog(order or settings.order)
