"""Batch verification: case enumeration, execution on a worker pool and report assembly."""
import itertools
import logging
import multiprocessing
import time
from functools import lru_cache
from typing import Callable, Dict, Iterable, List, Mapping, NamedTuple, Optional, Tuple

from pydantic import ValidationError

from ..catalog import (
    catalog_coproduct,
    catalog_reduction,
    compare_to_catalog,
    find_entry,
    normalization_equation,
    rmatrix_equation,
    second_leg_equation,
    spacetime_equation,
    spacetime_key,
    twist_equation,
)
from ..catalog import equations
from ..contraction import (
    UNSCALED_CONTRACTION,
    check_galilei_classical_limit,
    check_limit_commutation,
    contract_algebra,
    contract_hopf,
    contracted_antipodes,
)
from ..deformations import (
    DeformationId,
    admissible_indices,
    canonical_indices,
    format_indices,
    get_spec,
    validate_indices,
)
from ..hopf import (
    CheckOutcome,
    HopfStructure,
    build_twist,
    check_antipode_axiom,
    check_coassociativity,
    check_cocycle,
    check_counit,
    check_homomorphism,
    check_normalization,
    check_second_leg_cocycle,
    check_sweedler_u,
    control_twist,
    twisted_hopf,
    undeformed_antipode_residual,
)
from ..rmatrix import build_rmatrix, check_cybe, control_rmatrix
from ..schemas import CaseRecord, CaseStatus, ContractionSummary, RunConfig, SpacetimeTable, VerificationReport
from ..series import DivergenceError
from ..settings import get_settings
from ..spacetime import (
    check_classical_limit,
    check_star_antisymmetry,
    check_star_associativity,
    check_star_jacobi,
    derive_spacetime,
    representation_violations,
    spacetime_reduction,
)

logger = logging.getLogger(__name__)

CONVENTION = (
    "a ^ b = a (x) b - b (x) a (weight 1, no 1/2); "
    "d_nu x_mu = eta_mu_nu with eta = diag(-1, 1, 1, 1); "
    "P_mu |> f = i d_mu f, M_mu_nu |> f = i (x_mu d_nu - x_nu d_mu) f"
)


# Domain exceptions
class ConfigurationError(ValueError):
    """Unreadable or invalid run configuration."""


class Task(NamedTuple):
    check: str
    deformation: Optional[str]
    indices: Tuple[Tuple[str, int], ...]
    order: int
    safety_order: int
    timings: bool


class _Clock:
    def __init__(self, enabled: bool):
        self.enabled = enabled
        self.mark = time.perf_counter()

    def lap(self) -> Optional[float]:
        if not self.enabled:
            return None
        now = time.perf_counter()
        elapsed, self.mark = now - self.mark, now
        return round(elapsed, 6)


# configuration

def load_config(path: str) -> RunConfig:
    """Read and validate a JSON run configuration."""
    try:
        with open(path, encoding="utf-8") as handle:
            text = handle.read()
    except OSError as exc:
        raise ConfigurationError(f"cannot read config {path}: {exc.strerror or exc}")
    try:
        return RunConfig.model_validate_json(text)
    except ValidationError as exc:
        raise ConfigurationError(f"invalid config {path}: {_first_error(exc)}")


def merge_overrides(config: RunConfig, **overrides) -> RunConfig:
    """CLI flags win over file values; ``None`` means not given."""
    update = {key: value for key, value in overrides.items() if value is not None}
    if not update:
        return config
    try:
        return RunConfig.model_validate({**config.model_dump(), **update})
    except ValidationError as exc:
        raise ConfigurationError(_first_error(exc))


def _first_error(exc: ValidationError) -> str:
    error = exc.errors()[0]
    where = ".".join(str(part) for part in error.get("loc", ())) or "config"
    return f"{where}: {error.get('msg', 'invalid value')}"


def resolve_indices(config: RunConfig, deformation) -> List[Dict[str, int]]:
    """Index assignments a run uses for one deformation; explicit mappings are validated here."""
    if config.indices == "canonical":
        return [canonical_indices(deformation)]
    if config.indices == "all":
        return admissible_indices(deformation)
    return [validate_indices(deformation, config.indices)]


# case enumeration

_PER_DEFORMATION = ("cybe", "cocycle", "normalization", "coproducts", "hopf_axioms", "antipode", "spacetime")
_GLOBAL = {
    "cybe": ("cybe-control",),
    "cocycle": ("cocycle-control",),
    "spacetime": ("spacetime-representation",),
    "contraction": ("contraction-algebra", "contraction-control"),
}


def build_tasks(config: RunConfig, safety_order: Optional[int] = None) -> List[Task]:
    """Every unit of work of a run; all index assignments are validated before anything is computed."""
    safety_order = safety_order or get_settings().star_safety_order
    safety_order = max(safety_order, config.order)
    assignments = {name: resolve_indices(config, name) for name in config.deformations}
    tasks = []
    for check in config.checks:
        for name in config.deformations:
            if check == "contraction" and not get_spec(name).generalized:
                continue
            if check not in _PER_DEFORMATION and check != "contraction":
                continue
            for indices in assignments[name]:
                tasks.append(Task(check, name, tuple(sorted(indices.items())), config.order, safety_order,
                                  config.record_timings))
        for extra in _GLOBAL.get(check, ()):
            tasks.append(Task(extra, None, (), config.order, safety_order, config.record_timings))
    return tasks


# shared computations, cached per worker process

@lru_cache(maxsize=32)
def _hopf(deformation: str, indices: Tuple[Tuple[str, int], ...], order: int) -> HopfStructure:
    return twisted_hopf(build_twist(deformation, dict(indices), order))


def _first_failure(outcomes: Iterable[CheckOutcome], order: int, detail: str) -> CheckOutcome:
    exact = True
    for outcome in outcomes:
        if not outcome.passed:
            return outcome
        exact = exact and outcome.exact
    return CheckOutcome(True, "", exact, order, detail=detail)


@lru_cache(maxsize=32)
def _consistency(deformation: str, indices: Tuple[Tuple[str, int], ...], order: int) -> CheckOutcome:
    """Cocycle condition of the twist and coassociativity of the twisted coproduct."""
    cocycle = check_cocycle(build_twist(deformation, dict(indices), order))
    if not cocycle.passed:
        return CheckOutcome(False, cocycle.residual, False, order, detail=f"cocycle fails: {cocycle.detail}")
    hopf = _hopf(deformation, indices, order)
    return _first_failure((check_coassociativity(hopf, g) for g in hopf.algebra.generators), order,
                          "cocycle and coassociativity hold")


def _mismatch(consistency: CheckOutcome) -> CaseStatus:
    # a catalog disagreement is only a finding when the engine side is internally consistent
    return CaseStatus.FINDING if consistency.passed else CaseStatus.FAIL


def _equations(deformation, generators) -> str:
    tags = dict.fromkeys(find_entry(deformation, g).equation for g in generators)
    return ",".join(tags)


def _slug(param) -> str:
    # "1/kappa" -> "inv_kappa"; case ids use "/" as separator
    return param.value.replace("1/", "inv_")


class _Case:
    """Builds records for one (check, deformation, indices) task."""

    def __init__(self, task: Task):
        self.task = task
        self.indices = dict(task.indices)
        self.label = format_indices(self.indices)
        self.clock = _Clock(task.timings)

    def case_id(self, *parts: str) -> str:
        head = [self.task.check.split("-")[0]]
        if self.task.deformation:
            head += [self.task.deformation, self.label]
        return "/".join(head + [p for p in parts if p])

    def record(self, suffix: str, status: CaseStatus, *, residual: str = "", exactness: str = "exact",
               provenance: str = "", control: bool = False, detail: str = "") -> CaseRecord:
        return CaseRecord(
            case_id=self.case_id(suffix),
            deformation=self.task.deformation or "",
            indices=self.label,
            check=self.task.check.split("-")[0],
            status=status,
            residual=residual,
            exactness=exactness,
            wall_time=self.clock.lap(),
            provenance=provenance,
            control=control,
            detail=detail,
        )

    def outcome(self, suffix: str, outcome: CheckOutcome, provenance: str, *, source: str = "",
                mismatch: CaseStatus = CaseStatus.FAIL, control: bool = False) -> CaseRecord:
        # a control passes when the check reports the residual it is built to produce
        ok = outcome.passed != control
        return self.record(
            suffix,
            CaseStatus.PASS if ok else mismatch,
            residual=outcome.residual,
            exactness=outcome.exactness,
            provenance=provenance,
            control=control,
            detail=f"{source}: {outcome.detail}" if source else outcome.detail,
        )


def _cybe(case: _Case) -> List[CaseRecord]:
    d = case.task.deformation
    r = build_rmatrix(d, case.indices, case.task.order)
    outcome = check_cybe(r)
    return [case.outcome("", outcome, rmatrix_equation(d), source=f"rmatrix/{d}")]


def _cybe_control(case: _Case) -> List[CaseRecord]:
    outcome = check_cybe(control_rmatrix(case.task.order))
    return [case.outcome("control", outcome, equations.CYBE, source="rmatrix/control", control=True)]


def _cocycle(case: _Case) -> List[CaseRecord]:
    d, order = case.task.deformation, case.task.order
    spec = get_spec(d)
    out = [case.outcome("", check_cocycle(build_twist(d, case.indices, order)),
                        f"{equations.COCYCLE},{twist_equation(d)}", source=f"twist/{d}")]
    if spec.generalized:
        first, second = spec.components
        for base, twist in ((first, second), (second, first)):
            outcome = check_second_leg_cocycle(base, twist, case.indices, order)
            out.append(case.outcome(f"{twist.value}-over-{base.value}", outcome, second_leg_equation(d),
                                    source=f"twist/{twist.value} over coproduct/{base.value}"))
    return out


def _cocycle_control(case: _Case) -> List[CaseRecord]:
    F = control_twist(case.task.order)
    outcome = check_cocycle(F)
    return [case.outcome("control", outcome, equations.COCYCLE, source="twist/control", control=True)]


def _normalization(case: _Case) -> List[CaseRecord]:
    d = case.task.deformation
    F = build_twist(d, case.indices, case.task.order)
    return [case.outcome("", check_normalization(F), normalization_equation(d), source=f"twist/{d}")]


def _antipode(case: _Case) -> List[CaseRecord]:
    d, order = case.task.deformation, case.task.order
    F = build_twist(d, case.indices, order)
    out = [case.outcome("u", check_sweedler_u(F), equations.TWISTED_COPRODUCT, source=f"twist/{d}")]
    hopf = _hopf(d, case.task.indices, order)
    residual = ""
    for g in hopf.algebra.generators:
        diff = undeformed_antipode_residual(hopf, g)
        if not diff.is_zero():
            residual = f"S({g}) + {g} = {diff.to_text()}"
            break
    out.append(case.record(
        "S",
        CaseStatus.FAIL if residual else CaseStatus.PASS,
        residual=residual,
        exactness=out[0].exactness,
        provenance=equations.ANTIPODES,
        detail=f"twist/{d}: twisted antipode equals the undeformed one on every generator",
    ))
    return out


def _coproducts(case: _Case) -> List[CaseRecord]:
    d, order = case.task.deformation, case.task.order
    spec = get_spec(d)
    hopf = _hopf(d, case.task.indices, order)
    consistency = None
    out = []
    for g in hopf.algebra.generators:
        expected = catalog_coproduct(d, g, case.indices, order)
        diff = compare_to_catalog(hopf.coproduct[g], expected)
        entry = find_entry(d, g)
        if diff.matched:
            status, detail = CaseStatus.PASS, "engine matches catalog"
        else:
            consistency = consistency or _consistency(d, case.task.indices, order)
            status = _mismatch(consistency)
            detail = f"{'; '.join(diff.offending)} ({consistency.detail})"
        out.append(case.record(
            str(g),
            status,
            residual=diff.residual,
            exactness="exact" if diff.matched and hopf.exact.get(g, False) else f"order-{order}",
            provenance=entry.equation,
            detail=f"{entry.key}: {detail}",
        ))
    if spec.generalized:
        for vanishing in spec.parameters:
            out.append(case.outcome(f"reduction-{_slug(vanishing)}", _engine_reduction(case, vanishing),
                                    twist_equation(d), source=f"twist/{d}"))
            outcomes = (catalog_reduction(d, g, vanishing, case.indices, order) for g in hopf.algebra.generators)
            outcome = _first_failure(outcomes, order, f"catalog {d} at {vanishing.value}=0")
            mismatch = CaseStatus.FAIL
            if not outcome.passed:
                mismatch = _mismatch(_consistency(d, case.task.indices, order))
            out.append(case.outcome(f"catalog-reduction-{_slug(vanishing)}", outcome,
                                    _equations(d, hopf.algebra.generators), source=f"coproduct/{d}",
                                    mismatch=mismatch))
    return out


def _engine_reduction(case: _Case, vanishing) -> CheckOutcome:
    d, order = case.task.deformation, case.task.order
    spec = get_spec(d)
    survivor = spec.components[1] if vanishing == spec.parameters[0] else spec.components[0]
    full = _hopf(d, case.task.indices, order)
    survivor_indices = validate_indices(survivor, case.indices)
    single = _hopf(survivor.value, tuple(sorted(survivor_indices.items())), order)
    for g in full.algebra.generators:
        residual = full.coproduct[g].map_coefficients(lambda c: c.substitute_zero(vanishing)) - single.coproduct[g]
        if not residual.is_zero():
            return CheckOutcome(False, residual.to_text(), False, order, detail=f"{g} at {vanishing.value}=0")
    return CheckOutcome(True, "", False, order, detail=f"{d} at {vanishing.value}=0 vs {survivor.value}")


def _axiom_records(case: _Case, hopf: HopfStructure, provenance: str, prefix: str = "",
                   source: str = "") -> List[CaseRecord]:
    generators = hopf.algebra.generators
    order = hopf.order
    single = {
        "counit": check_counit,
        "coassociativity": check_coassociativity,
    }
    out = []
    for name, check in single.items():
        outcome = _first_failure((check(hopf, g) for g in generators), order, f"{name} on every generator")
        out.append(case.outcome(prefix + name, outcome, provenance, source=source))
    pairs = itertools.combinations(generators, 2)
    outcome = _first_failure((check_homomorphism(hopf, a, b) for a, b in pairs), order,
                             "bracket homomorphism on every pair of generators")
    out.append(case.outcome(prefix + "homomorphism", outcome, provenance, source=source))
    return out


def _hopf_axioms(case: _Case) -> List[CaseRecord]:
    d, order = case.task.deformation, case.task.order
    hopf = _hopf(d, case.task.indices, order)
    out = _axiom_records(case, hopf, equations.TWISTED_COPRODUCT, source=f"twist/{d}")
    outcome = _first_failure((check_antipode_axiom(hopf, g) for g in hopf.algebra.generators), order,
                             "m (S (x) 1) D(g) = 0 on every generator")
    out.append(case.outcome("antipode-axiom", outcome, equations.TWISTED_COPRODUCT, source=f"twist/{d}"))
    return out


def _spacetime(case: _Case) -> List[CaseRecord]:
    d, safety = case.task.deformation, case.task.safety_order
    spec = get_spec(d)
    derivation = derive_spacetime(d, case.indices, safety)
    equation = spacetime_equation(d)
    status, detail = CaseStatus.PASS, f"{spacetime_key(d)}: sixteen star commutators"
    if not derivation.matched:
        consistency = _consistency(d, case.task.indices, case.task.order)
        status, detail = _mismatch(consistency), f"{detail} ({consistency.detail})"
    out = [case.record(
        "table",
        status,
        residual="; ".join(derivation.mismatches),
        provenance=equation,
        detail=detail,
    )]
    F = build_twist(d, case.indices, safety)
    for name, check in (("jacobi", check_star_jacobi), ("antisymmetry", check_star_antisymmetry),
                        ("associativity", check_star_associativity), ("classical-limit", check_classical_limit)):
        out.append(case.outcome(name, check(F, safety), equation, source=spacetime_key(d)))
    if spec.generalized:
        for vanishing in spec.parameters:
            outcome = spacetime_reduction(d, vanishing, case.indices, safety)
            out.append(case.outcome(f"reduction-{_slug(vanishing)}", outcome, equation, source=spacetime_key(d)))
    return out


def _spacetime_representation(case: _Case) -> List[CaseRecord]:
    violations = [f"[{a},{b}] on x^{m}" for a, b, m in representation_violations()]
    return [case.record(
        "representation",
        CaseStatus.FAIL if violations else CaseStatus.PASS,
        residual="; ".join(violations),
        provenance=equations.POINCARE_ALGEBRA,
        detail="algebra/poincare: generator action on polynomials of degree <= 3 respects every bracket",
    )]


def _contraction(case: _Case) -> List[CaseRecord]:
    d, order = case.task.deformation, case.task.order
    contracted = contract_hopf(d, case.indices, order)
    galilei = contracted.galilei
    source = f"galilei/{galilei}"
    consistency = None

    def gate() -> CheckOutcome:
        # both the relativistic twist and the contracted coproduct have to be consistent
        outcome = _consistency(d, case.task.indices, order)
        if not outcome.passed:
            return outcome
        generators = contracted.hopf.algebra.generators
        return _first_failure((check_coassociativity(contracted.hopf, g) for g in generators), order,
                              "cocycle and coassociativity hold before and after the contraction")

    out = []
    for g, diff in contracted.diffs.items():
        entry = find_entry(galilei, g)
        status, detail = CaseStatus.PASS, f"contracted coproduct of {g}"
        if not diff.matched:
            consistency = consistency or gate()
            status, detail = _mismatch(consistency), f"{'; '.join(diff.offending)} ({consistency.detail})"
        out.append(case.record(
            str(g),
            status,
            residual=diff.residual,
            exactness=f"order-{order}",
            provenance=entry.equation,
            detail=f"{entry.key}: {detail}",
        ))
    out.extend(_axiom_records(case, contracted.hopf, equations.CONTRACTION, prefix="hopf-", source=source))
    out.append(case.outcome("classical-limit", check_galilei_classical_limit(contracted), equations.CONTRACTION,
                            source=source))
    out.append(case.outcome("limit-commutation", check_limit_commutation(d, case.indices, order),
                            equations.CONTRACTION, source=source))
    antipodes = contracted_antipodes(contracted)
    deformed = [f"S({g}) = {text}" for g, text in antipodes.items() if text != f"-{g}"]
    status = CaseStatus.PASS
    if deformed:
        consistency = consistency or gate()
        status = _mismatch(consistency)
    out.append(case.record(
        "antipodes",
        status,
        residual="; ".join(deformed),
        exactness=f"order-{order}",
        provenance=equations.CONTRACTION,
        detail=f"{source}: " + "; ".join(f"S({g}) = {text}" for g, text in antipodes.items()),
    ))
    return out


def _contraction_algebra(case: _Case) -> List[CaseRecord]:
    contracted = contract_algebra()
    jacobi = [f"({a},{b},{c})" for a, b, c in contracted.jacobi]
    return [case.record(
        "algebra",
        CaseStatus.PASS if contracted.matched and not jacobi else CaseStatus.FAIL,
        residual="; ".join(list(contracted.mismatches) + jacobi),
        provenance=equations.GALILEI_ALGEBRA,
        detail="algebra/galilei: c -> infinity limit of every Poincare bracket against the Galilei table",
    )]


def _contraction_control(case: _Case) -> List[CaseRecord]:
    d = DeformationId.THETA_KL_KAPPA
    try:
        contract_hopf(d, canonical_indices(d), case.task.order, UNSCALED_CONTRACTION, compare=False)
    except DivergenceError as exc:
        ok = exc.generator == "Pi0"
        return [case.record(
            "control",
            CaseStatus.PASS if ok else CaseStatus.FAIL,
            residual=exc.term or "",
            provenance=equations.CONTRACTION,
            control=True,
            detail=f"galilei/control: {exc}",
        )]
    return [case.record("control", CaseStatus.FAIL, provenance=equations.CONTRACTION, control=True,
                        detail="galilei/control: unscaled contraction converged")]


_EXECUTORS: Mapping[str, Callable[[_Case], List[CaseRecord]]] = {
    "cybe": _cybe,
    "cybe-control": _cybe_control,
    "cocycle": _cocycle,
    "cocycle-control": _cocycle_control,
    "normalization": _normalization,
    "coproducts": _coproducts,
    "hopf_axioms": _hopf_axioms,
    "antipode": _antipode,
    "spacetime": _spacetime,
    "spacetime-representation": _spacetime_representation,
    "contraction": _contraction,
    "contraction-algebra": _contraction_algebra,
    "contraction-control": _contraction_control,
}


def execute_task(task: Task) -> List[CaseRecord]:
    case = _Case(task)
    try:
        return _EXECUTORS[task.check](case)
    except Exception as exc:
        logger.warning(f"{case.case_id()} raised {type(exc).__name__}: {exc}")
        return [case.record("error", CaseStatus.FAIL, detail=f"{type(exc).__name__}: {exc}")]


def run(config: RunConfig) -> VerificationReport:
    """Execute the selected checks and assemble a report sorted by case id."""
    tasks = build_tasks(config)
    logger.info(f"running {len(tasks)} tasks at order {config.order} on {config.workers} worker(s)")
    if config.workers > 1 and len(tasks) > 1:
        with multiprocessing.Pool(config.workers) as pool:
            batches = pool.map(execute_task, tasks)
    else:
        batches = [execute_task(task) for task in tasks]
    cases = sorted((record for batch in batches for record in batch), key=lambda r: r.case_id)
    summary = {status.value: sum(1 for r in cases if r.status == status) for status in CaseStatus}
    exit_code = 1 if summary[CaseStatus.FAIL.value] else 0
    logger.info(f"summary {summary}")
    return VerificationReport(order=config.order, convention=CONVENTION, cases=cases, summary=summary,
                              exit_code=exit_code)


# rendering

def render_json(model) -> str:
    return model.model_dump_json(indent=2) + "\n"


def render_text(report: VerificationReport) -> str:
    lines = [f"order {report.order}; {report.convention}"]
    for record in report.cases:
        flag = " [control]" if record.control else ""
        lines.append(f"{record.status.value.upper():8} {record.case_id} ({record.exactness}){flag}")
        if record.residual:
            lines.append(f"         residual: {record.residual}")
    counts = ", ".join(f"{key} {value}" for key, value in report.summary.items())
    lines.append(f"summary: {counts}; exit code {report.exit_code}")
    return "\n".join(lines) + "\n"


def emit_spacetime_tables(config: RunConfig, safety_order: Optional[int] = None) -> List[SpacetimeTable]:
    """Derived commutator tables for every deformation and index set of ``config``."""
    safety_order = safety_order or get_settings().star_safety_order
    assignments = {name: resolve_indices(config, name) for name in config.deformations}
    tables = []
    for name in config.deformations:
        for indices in assignments[name]:
            tables.append(SpacetimeTable(**derive_spacetime(name, indices, safety_order).as_dict()))
    return tables


def render_tables_text(tables: Iterable[SpacetimeTable]) -> str:
    lines = []
    for table in tables:
        verdict = "matches the catalog" if table.matched else "differs from the catalog"
        lines.append(f"{table.deformation} ({format_indices(table.indices)}): {verdict}")
        lines.extend(f"  {line}" for line in table.latex)
        lines.extend(f"  mismatch {line}" for line in table.mismatches)
    return "\n".join(lines) + "\n"


def contraction_summary(deformation, indices: Optional[Mapping[str, int]] = None,
                        order: Optional[int] = None) -> ContractionSummary:
    order = order or get_settings().order
    contracted = contract_hopf(deformation, indices, order)
    return ContractionSummary(
        deformation=contracted.deformation,
        galilei=contracted.galilei,
        indices=dict(contracted.indices),
        matched=contracted.matched,
        coproducts={str(g): contracted.hopf.coproduct[g].to_text() for g in contracted.hopf.algebra.generators},
        antipodes={str(g): text for g, text in contracted_antipodes(contracted).items()},
        mismatches={str(g): list(diff.offending) for g, diff in contracted.diffs.items() if not diff.matched},
    )


def render_contraction_text(summary: ContractionSummary) -> str:
    verdict = "matches the Galilei catalog" if summary.matched else "differs from the Galilei catalog"
    lines = [f"{summary.deformation} -> {summary.galilei} ({format_indices(summary.indices)}): {verdict}"]
    for name, text in summary.coproducts.items():
        lines.append(f"  D({name}) = {text}")
        lines.append(f"  S({name}) = {summary.antipodes[name]}")
        lines.extend(f"  mismatch {term}" for term in summary.mismatches.get(name, ()))
    return "\n".join(lines) + "\n"
