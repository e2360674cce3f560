"""Scenario document schema plus the request/response shapes shared by the
CLI's structured output and the HTTP service.

A scenario document is the canonical wire form of a ScenarioSet:

    {"scenarios": [{"name", "regime", "i_bar"?, "params": {...}}, ...]}

with 1 to 3 entries; unfilled slots are materialized from the defaults and
take the canonical slot names. Both front ends serialize through
canonical_json, so identical inputs produce byte-identical output everywhere.
"""

from __future__ import annotations

import json
from typing import Annotated, Literal

from pydantic import BaseModel, ConfigDict, Field, ValidationError, field_validator, model_validator

from .errors import DocumentError
from .model import (
    MONEY_SUPPLY_CONTROL,
    Parameters,
    RegimeKind,
    interest_rate_control,
)
from .scenarios import (
    DEFAULT_PARAMETERS,
    I_BAR_RANGE,
    SLIDER_RANGES,
    SLOT_NAMES,
    GridSpec,
    PlotKind,
    Scenario,
    ScenarioSet,
    compare,
    create_scenario_set,
    sample_curves,
    solve_slot,
)

RegimeName = Literal["money_supply", "interest_rate"]


class ScenarioParams(BaseModel):
    """The twelve model parameters, range-checked against the slider contract."""

    model_config = ConfigDict(extra="forbid")

    A: float
    c: float
    T: float
    B: float
    b: float
    pi_e: float
    G: float
    NX: float
    h1: float
    h2: float
    M: float
    P: float

    @field_validator("*")
    @classmethod
    def _within_slider_range(cls, value: float, info):
        legal = SLIDER_RANGES[info.field_name]
        if not legal.contains(value):
            raise ValueError(f"{value!r} is outside the legal range {legal}")
        return value


class ScenarioEntry(BaseModel):
    model_config = ConfigDict(extra="forbid")

    name: str = Field(min_length=1, max_length=80)
    regime: RegimeName
    i_bar: float | None = None
    params: ScenarioParams

    @field_validator("i_bar")
    @classmethod
    def _i_bar_in_range(cls, value: float | None):
        if value is not None and not I_BAR_RANGE.contains(value):
            raise ValueError(f"{value!r} is outside the legal range {I_BAR_RANGE}")
        return value

    @model_validator(mode="after")
    def _i_bar_iff_rate_control(self):
        if self.regime == "interest_rate" and self.i_bar is None:
            raise ValueError("i_bar is required under interest-rate control")
        if self.regime == "money_supply" and self.i_bar is not None:
            raise ValueError("i_bar is only allowed under interest-rate control")
        return self


class ScenarioDocument(BaseModel):
    model_config = ConfigDict(extra="forbid")

    scenarios: list[ScenarioEntry]

    @field_validator("scenarios")
    @classmethod
    def _one_to_three(cls, value: list[ScenarioEntry]):
        if len(value) == 0:
            raise ValueError("no scenarios: the document needs 1 to 3 entries")
        if len(value) > 3:
            raise ValueError(f"too many scenarios: got {len(value)}, the limit is 3")
        return value

    @model_validator(mode="after")
    def _names_unique_after_fill(self):
        names = [entry.name for entry in self.scenarios]
        if len(set(names)) != len(names):
            raise ValueError(f"scenario names must be unique, got {names}")
        fill = set(SLOT_NAMES[len(names):])
        clash = sorted(set(names) & fill)
        if clash:
            raise ValueError(
                f"scenario names {clash} collide with the default names of unfilled slots"
            )
        return self


def document_to_set(doc: ScenarioDocument) -> ScenarioSet:
    """Materialize a full 3-slot set, topping up missing slots with defaults."""
    slots = []
    for entry in doc.scenarios:
        if entry.regime == RegimeKind.INTEREST_RATE.value:
            regime = interest_rate_control(entry.i_bar)
        else:
            regime = MONEY_SUPPLY_CONTROL
        slots.append(
            Scenario(
                name=entry.name,
                params=Parameters(**entry.params.model_dump()),
                regime=regime,
            )
        )
    for k in range(len(slots), 3):
        slots.append(
            Scenario(name=SLOT_NAMES[k], params=DEFAULT_PARAMETERS, regime=MONEY_SUPPLY_CONTROL)
        )
    return ScenarioSet(tuple(slots))


def set_to_document(s: ScenarioSet) -> ScenarioDocument:
    entries = []
    for scenario in s.slots:
        entries.append(
            ScenarioEntry(
                name=scenario.name,
                regime=scenario.regime.kind.value,
                i_bar=scenario.regime.i_bar,
                params=ScenarioParams(**{k: getattr(scenario.params, k) for k in ScenarioParams.model_fields}),
            )
        )
    return ScenarioDocument(scenarios=entries)


def parse_document(text: str) -> ScenarioDocument:
    """Parse and validate a scenario document, folding all failure modes into
    DocumentError with field-path locators."""
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise DocumentError(f"invalid JSON: {exc}") from exc
    try:
        return ScenarioDocument.model_validate(data)
    except ValidationError as exc:
        raise DocumentError(format_validation_error(exc)) from exc


def field_path_from_loc(loc: tuple) -> str:
    """Render a validation-error location as a dotted path with indices,
    e.g. ("body", "scenarios", 0, "params", "c") -> "scenarios[0].params.c"."""
    parts: list[str] = []
    for item in loc:
        if item == "body" and not parts:
            continue  # transport envelope, not document content
        if isinstance(item, int):
            parts.append(f"[{item}]")
        else:
            parts.append(("." if parts else "") + str(item))
    return "".join(parts)


def format_validation_error(exc: ValidationError) -> str:
    lines = []
    for err in exc.errors():
        path = field_path_from_loc(err["loc"]) or "document"
        lines.append(f"{path}: {err['msg']}")
    return "; ".join(lines)


# ---------------------------------------------------------------------------
# result shapes


class CompositionOut(BaseModel):
    C: float
    I: float
    G: float
    NX: float


class EquilibriumOut(BaseModel):
    name: str
    slot: int
    Y_star: float
    i_star: float
    r_star: float
    M_realized: float
    at_zlb: bool
    composition: CompositionOut
    budget_balance: float
    diagnostics: list[str]


class SolveResponse(BaseModel):
    results: list[EquilibriumOut]


class SeriesOut(BaseModel):
    curve_kind: str
    slot: int
    scenario: str
    points: list[tuple[float, float]]


class CurvesResponse(BaseModel):
    plot: str
    series: list[SeriesOut]


class CompareColumnOut(BaseModel):
    slot: int
    name: str
    Y_star: float
    i_star: float
    M_realized: float
    C: float
    I: float
    G: float
    NX: float
    budget_balance: float
    at_zlb: bool


class CompareDeltaOut(BaseModel):
    from_slot: int
    to_slot: int
    Y_star: float
    i_star: float
    M_realized: float
    C: float
    I: float
    G: float
    NX: float
    budget_balance: float


class CompareResponse(BaseModel):
    columns: list[CompareColumnOut]
    deltas: list[CompareDeltaOut]


# ---------------------------------------------------------------------------
# request shapes (HTTP service; the CLI reads the same pieces from flags)


class GridModel(BaseModel):
    model_config = ConfigDict(extra="forbid")

    min: float = Field(allow_inf_nan=False)
    max: float = Field(allow_inf_nan=False)
    n: int = Field(ge=2, le=10_000)

    @model_validator(mode="after")
    def _ordered(self):
        if not self.min < self.max:
            raise ValueError(f"grid needs min < max, got [{self.min!r}, {self.max!r}]")
        return self

    def to_spec(self) -> GridSpec:
        return GridSpec(min=self.min, max=self.max, n=self.n)


class CurvesRequest(BaseModel):
    model_config = ConfigDict(extra="forbid")

    document: ScenarioDocument
    plot: str
    slot: int | None = Field(default=None, ge=1, le=3)
    grid: GridModel | None = None


class CompareRequest(BaseModel):
    model_config = ConfigDict(extra="forbid")

    document: ScenarioDocument
    slots: list[Annotated[int, Field(ge=1, le=3)]]


ERROR_CODES = ("BadRequest", "InvalidParameters", "UnknownPlot", "Internal")


class ApiErrorModel(BaseModel):
    code: Literal["BadRequest", "InvalidParameters", "UnknownPlot", "Internal"]
    message: str
    field_path: str | None = None


# ---------------------------------------------------------------------------
# builders shared by cli and service


def build_solve_response(doc: ScenarioDocument) -> SolveResponse:
    """Solve every scenario provided in the document (filled slots are solved
    only when explicitly present)."""
    s = document_to_set(doc)
    results = []
    for k in range(1, len(doc.scenarios) + 1):
        scenario = s.slots[k - 1]
        eq = solve_slot(s, k)
        results.append(
            EquilibriumOut(
                name=scenario.name,
                slot=k,
                Y_star=eq.Y_star,
                i_star=eq.i_star,
                r_star=eq.r_star,
                M_realized=eq.M_realized,
                at_zlb=eq.at_zlb,
                composition=CompositionOut(
                    C=eq.composition.C,
                    I=eq.composition.I,
                    G=eq.composition.G,
                    NX=eq.composition.NX,
                ),
                budget_balance=eq.budget_balance,
                diagnostics=[d.value for d in eq.diagnostics],
            )
        )
    return SolveResponse(results=results)


def build_curves_response(
    doc: ScenarioDocument,
    plot: PlotKind,
    slot: int | None = None,
    grid: GridSpec | None = None,
) -> CurvesResponse:
    """Sample one slot's curves, or every slot visible in the plot when no
    slot is given."""
    s = document_to_set(doc)
    if slot is None:
        slots = [k for k in (1, 2, 3) if plot in s.slots[k - 1].visible_in]
    else:
        slots = [slot]
    series = []
    for k in slots:
        for cs in sample_curves(s, k, plot, grid):
            series.append(
                SeriesOut(
                    curve_kind=cs.curve_kind.value,
                    slot=cs.slot,
                    scenario=cs.scenario,
                    points=list(cs.points),
                )
            )
    return CurvesResponse(plot=plot.value, series=series)


def build_compare_response(doc: ScenarioDocument, slots: list[int]) -> CompareResponse:
    s = document_to_set(doc)
    table = compare(s, slots)
    return CompareResponse(
        columns=[
            CompareColumnOut(
                slot=c.slot,
                name=c.name,
                Y_star=c.Y_star,
                i_star=c.i_star,
                M_realized=c.M_realized,
                C=c.C,
                I=c.I,
                G=c.G,
                NX=c.NX,
                budget_balance=c.budget_balance,
                at_zlb=c.at_zlb,
            )
            for c in table.columns
        ],
        deltas=[
            CompareDeltaOut(
                from_slot=d.from_slot,
                to_slot=d.to_slot,
                Y_star=d.Y_star,
                i_star=d.i_star,
                M_realized=d.M_realized,
                C=d.C,
                I=d.I,
                G=d.G,
                NX=d.NX,
                budget_balance=d.budget_balance,
            )
            for d in table.deltas
        ],
    )


def canonical_json(model: BaseModel) -> str:
    """Single serialization used for every structured output; byte-stable for
    identical inputs."""
    return json.dumps(model.model_dump(mode="json", exclude_none=True), indent=2) + "\n"


def default_document() -> ScenarioDocument:
    return set_to_document(create_scenario_set())


DEFAULT_DOCUMENT_JSON = canonical_json(default_document())
