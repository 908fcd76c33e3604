"""Schemas package re-exports for easy imports from `src.twistdeform.schemas`."""
from .schemas import (
    CHECKS,
    CaseRecord,
    CaseStatus,
    CatalogItem,
    ContractionSummary,
    RunConfig,
    SpacetimeTable,
    VerificationReport,
)

__all__ = [
    "CHECKS",
    "CaseRecord",
    "CaseStatus",
    "CatalogItem",
    "ContractionSummary",
    "RunConfig",
    "SpacetimeTable",
    "VerificationReport",
]
