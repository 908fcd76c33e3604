import enum
from typing import Dict, List, Literal, Optional, Union

from pydantic import BaseModel, ConfigDict, Field, field_validator

from ..deformations import ALL_DEFORMATIONS, parse_deformation
from ..settings import get_settings

CHECKS = ("cybe", "cocycle", "normalization", "coproducts", "hopf_axioms", "antipode", "spacetime", "contraction")


class CaseStatus(str, enum.Enum):
    PASS = "pass"
    FAIL = "fail"
    FINDING = "finding"


class RunConfig(BaseModel):
    deformations: List[str] = Field(default_factory=lambda: [d.value for d in ALL_DEFORMATIONS])
    indices: Union[Literal["canonical", "all"], Dict[str, int]] = "canonical"
    order: int = Field(default_factory=lambda: get_settings().order, ge=1)
    checks: List[str] = Field(default_factory=lambda: list(CHECKS))
    format: Literal["json", "text"] = "json"
    workers: int = Field(default_factory=lambda: get_settings().workers, ge=1)
    record_timings: bool = False

    model_config = ConfigDict(
        extra="forbid",
        json_schema_extra={
            "example": {
                "deformations": ["theta_kl+kappa"],
                "indices": {"k": 1, "l": 2, "i": 3},
                "order": 4,
                "checks": ["cybe", "cocycle", "coproducts"],
                "format": "json",
                "workers": 1,
                "record_timings": False,
            }
        },
    )

    @field_validator("deformations")
    @classmethod
    def known_deformations(cls, value: List[str]) -> List[str]:
        if not value:
            raise ValueError("at least one deformation is required")
        out = []
        for name in value:
            canonical = parse_deformation(name).value
            if canonical not in out:
                out.append(canonical)
        return out

    @field_validator("checks")
    @classmethod
    def known_checks(cls, value: List[str]) -> List[str]:
        unknown = [c for c in value if c not in CHECKS]
        if unknown:
            raise ValueError(f"unknown checks {', '.join(unknown)} (known: {', '.join(CHECKS)})")
        # canonical order keeps reports independent of how the selection was written
        return [c for c in CHECKS if c in value]


class CaseRecord(BaseModel):
    case_id: str
    deformation: str = ""
    indices: str = ""
    check: str
    status: CaseStatus
    residual: str = ""
    exactness: str = "exact"
    wall_time: Optional[float] = None
    provenance: str = ""
    control: bool = False
    detail: str = ""

    model_config = ConfigDict(
        json_schema_extra={
            "example": {
                "case_id": "cybe/theta_kl+kappa/k=1,l=2,i=3",
                "deformation": "theta_kl+kappa",
                "indices": "k=1,l=2,i=3",
                "check": "cybe",
                "status": "pass",
                "residual": "",
                "exactness": "exact",
                "wall_time": None,
                "provenance": "rge1",
                "control": False,
                "detail": "rmatrix/theta_kl+kappa: [[r,r]] for r = (theta_kl)*P1^P2 + (-1/2*kappa^-1)*P1^M03",
            }
        }
    )


class VerificationReport(BaseModel):
    order: int
    convention: str
    cases: List[CaseRecord]
    summary: Dict[str, int]
    exit_code: int

    model_config = ConfigDict(
        json_schema_extra={
            "example": {
                "order": 4,
                "convention": "a ^ b = a (x) b - b (x) a; d_nu x_mu = eta_mu_nu, eta = diag(-1, 1, 1, 1)",
                "cases": [CaseRecord.model_config["json_schema_extra"]["example"]],
                "summary": {"pass": 1, "fail": 0, "finding": 0},
                "exit_code": 0,
            }
        }
    )


class SpacetimeTable(BaseModel):
    deformation: str
    indices: Dict[str, int]
    matched: bool
    commutators: Dict[str, str]
    mismatches: List[str]
    latex: List[str]

    model_config = ConfigDict(
        json_schema_extra={
            "example": {
                "deformation": "theta_kl",
                "indices": {"k": 1, "l": 2},
                "matched": True,
                "commutators": {
                    "[x0,x1]": "0", "[x0,x2]": "0", "[x0,x3]": "0",
                    "[x1,x2]": "2*i*theta_kl", "[x1,x3]": "0", "[x2,x3]": "0",
                },
                "mismatches": [],
                "latex": [r"[x_{1}, x_{2}]_\star = 2 i \theta_{kl}"],
            }
        }
    )


class ContractionSummary(BaseModel):
    deformation: str
    galilei: Optional[str]
    indices: Dict[str, int]
    matched: bool
    coproducts: Dict[str, str]
    antipodes: Dict[str, str]
    mismatches: Dict[str, List[str]]

    model_config = ConfigDict(
        json_schema_extra={
            "example": {
                "deformation": "theta_kl+kappa",
                "galilei": "xi_kl+lambda",
                "indices": {"k": 1, "l": 2, "i": 3},
                "matched": True,
                "coproducts": {"V1": "V1 (x) 1 + 1 (x) V1"},
                "antipodes": {"V1": "-V1"},
                "mismatches": {},
            }
        }
    )


class CatalogItem(BaseModel):
    key: str
    equation: str = ""
    deformation: str
    algebra: str
    generator: Optional[str] = None
    formula: Optional[str] = None
    indices: Optional[str] = None
    commutators: Optional[Dict[str, str]] = None
    notes: List[str] = []

    model_config = ConfigDict(
        json_schema_extra={
            "example": {
                "key": "coproduct/theta_kl/P",
                "equation": "dlww3v",
                "deformation": "theta_kl",
                "algebra": "poincare",
                "generator": "P_mu",
                "formula": "D0(P_mu)",
                "notes": [],
            }
        }
    )
