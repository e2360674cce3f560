"""Three parallel scenario slots and the operations the workbench exposes on
them: assignment and reset, slider-style parameter edits, regime switches,
cross-slot comparison, and curve sampling for the three standard plots.

All operations are pure: they take a ScenarioSet and return a new one (or a
derived value). A set is a plain value; callers own concurrency.
"""

from __future__ import annotations

import bisect
import math
from dataclasses import dataclass, replace
from enum import Enum

from . import model
from .errors import (
    DuplicateSlot,
    EmptySelection,
    InvalidGrid,
    InvalidRegime,
    InvalidSlot,
    OutOfRange,
    UnknownParameter,
    UnknownPlot,
)
from .model import (
    MONEY_SUPPLY_CONTROL,
    PARAMETER_NAMES,
    Equilibrium,
    Parameters,
    PolicyRegime,
    RegimeKind,
)

#: shipped calibration; solves to Y* = 1050 CU, i* = 5% under money-supply control
DEFAULT_PARAMETERS = Parameters(
    A=160.0,
    c=0.5,
    T=200.0,
    B=215.0,
    b=10.0,
    pi_e=0.0,
    G=250.0,
    NX=50.0,
    h1=0.2,
    h2=2.0,
    M=200.0,
    P=1.0,
)

SLOT_NAMES = ("Model 1", "Model 2", "Model 3")


@dataclass(frozen=True)
class SliderRange:
    """Legal slider interval for one parameter; bounds may be exclusive."""

    lo: float
    hi: float
    lo_open: bool = False
    hi_open: bool = False

    def contains(self, value: float) -> bool:
        if not math.isfinite(value):
            return False
        above = value > self.lo if self.lo_open else value >= self.lo
        below = value < self.hi if self.hi_open else value <= self.hi
        return above and below

    def __str__(self) -> str:
        left = "(" if self.lo_open else "["
        right = ")" if self.hi_open else "]"
        return f"{left}{self.lo:g}, {self.hi:g}{right}"


#: validation contract shared by slider edits, scenario documents, and the UI
SLIDER_RANGES: dict[str, SliderRange] = {
    "A": SliderRange(0.0, 1000.0),
    "c": SliderRange(0.01, 0.99, lo_open=True, hi_open=True),
    "T": SliderRange(-500.0, 1000.0),
    "B": SliderRange(0.0, 1000.0),
    "b": SliderRange(0.1, 100.0),
    "pi_e": SliderRange(-10.0, 10.0),
    "G": SliderRange(-500.0, 1000.0),
    "NX": SliderRange(-500.0, 1000.0),
    "h1": SliderRange(0.01, 2.0),
    "h2": SliderRange(0.1, 100.0),
    "M": SliderRange(0.0, 2000.0),
    "P": SliderRange(0.1, 10.0),
}

I_BAR_RANGE = SliderRange(0.0, 30.0)


class PlotKind(str, Enum):
    """The three plots the workbench can sample."""

    ISLM = "islm"
    MONEY = "money"
    GOODS = "goods"


ALL_PLOTS = frozenset(PlotKind)


def parse_plot(text: str) -> PlotKind:
    try:
        return PlotKind(text)
    except ValueError:
        raise UnknownPlot(
            f"unknown plot {text!r}; expected one of islm, money, goods"
        ) from None


class CurveKind(str, Enum):
    IS = "IS"
    LM = "LM"
    MONEY_DEMAND = "MoneyDemand"
    MONEY_SUPPLY = "MoneySupply"
    AGGREGATE_DEMAND = "AggregateDemand"
    FORTY_FIVE_DEGREE = "FortyFiveDegree"


@dataclass(frozen=True)
class GridSpec:
    """Sampling range for curve export.

    Spans the plot's sampling variable: output Y for the IS-LM and
    goods-market plots, the nominal rate i for the money-market plot.
    """

    min: float
    max: float
    n: int

    def __post_init__(self):
        if not (math.isfinite(self.min) and math.isfinite(self.max)):
            raise InvalidGrid("grid bounds must be finite")
        if not self.min < self.max:
            raise InvalidGrid(f"grid needs min < max, got [{self.min:g}, {self.max:g}]")
        if not (isinstance(self.n, int) and self.n >= 2):
            raise InvalidGrid(f"grid needs at least 2 points, got n={self.n!r}")


@dataclass(frozen=True)
class CurveSeries:
    """One sampled curve, tagged with the slot it came from.

    Points are (x, y) pairs sorted by x. Axis semantics depend on curve_kind:
    IS/LM/AggregateDemand/FortyFiveDegree put Y on x; MoneyDemand and
    MoneySupply put real balances on x and the nominal rate on y.
    """

    curve_kind: CurveKind
    slot: int
    scenario: str
    points: tuple[tuple[float, float], ...]


@dataclass(frozen=True)
class Scenario:
    name: str
    params: Parameters
    regime: PolicyRegime
    visible_in: frozenset[PlotKind] = ALL_PLOTS

    @property
    def stale_money_slider(self) -> bool:
        """True when the stored M is not the one the solution uses (under
        interest-rate control the money supply adjusts endogenously while the
        slider keeps its last hand-set value)."""
        return self.regime.kind is RegimeKind.INTEREST_RATE


@dataclass(frozen=True)
class ScenarioSet:
    """Exactly three ordered scenario slots, addressed 1 to 3."""

    slots: tuple[Scenario, Scenario, Scenario]

    def __post_init__(self):
        if len(self.slots) != 3:
            raise ValueError("a scenario set holds exactly 3 slots")
        names = [s.name for s in self.slots]
        if len(set(names)) != 3:
            raise ValueError(f"scenario names must be unique, got {names}")

    def slot(self, slot: int) -> Scenario:
        _check_slot(slot)
        return self.slots[slot - 1]


def _check_slot(slot: int) -> None:
    if not (isinstance(slot, int) and not isinstance(slot, bool) and 1 <= slot <= 3):
        raise InvalidSlot(f"slot must be 1, 2 or 3, got {slot!r}")


def _with_slot(s: ScenarioSet, slot: int, scenario: Scenario) -> ScenarioSet:
    slots = list(s.slots)
    slots[slot - 1] = scenario
    return ScenarioSet(tuple(slots))


def create_scenario_set() -> ScenarioSet:
    """Fresh set: all three slots at the default calibration under
    money-supply control."""
    return ScenarioSet(
        tuple(
            Scenario(name=name, params=DEFAULT_PARAMETERS, regime=MONEY_SUPPLY_CONTROL)
            for name in SLOT_NAMES
        )
    )


def reset_defaults(s: ScenarioSet, slot: int = 1) -> ScenarioSet:
    """Restore slot 1 to the shipped defaults. Only slot 1 resets to defaults;
    the other slots copy their predecessor instead (assign_from_previous)."""
    _check_slot(slot)
    if slot != 1:
        raise InvalidSlot(f"only slot 1 resets to defaults, got slot {slot}")
    fresh = replace(
        s.slots[0], params=DEFAULT_PARAMETERS, regime=MONEY_SUPPLY_CONTROL
    )
    return _with_slot(s, 1, fresh)


def assign_from_previous(s: ScenarioSet, slot: int) -> ScenarioSet:
    """Copy slot-1's parameters and regime into `slot` (2 or 3). Parameters
    and regimes are immutable values, so the copy is independent by
    construction."""
    _check_slot(slot)
    if slot == 1:
        raise InvalidSlot("slot 1 has no previous slot; use reset_defaults")
    source = s.slots[slot - 2]
    target = replace(s.slots[slot - 1], params=source.params, regime=source.regime)
    return _with_slot(s, slot, target)


def set_parameter(s: ScenarioSet, slot: int, name: str, value: float) -> ScenarioSet:
    """Slider-style edit of one parameter, checked against its legal range."""
    _check_slot(slot)
    if name not in PARAMETER_NAMES:
        raise UnknownParameter(
            f"unknown parameter {name!r}; expected one of {', '.join(PARAMETER_NAMES)}"
        )
    legal = SLIDER_RANGES[name]
    value = float(value)
    if not legal.contains(value):
        raise OutOfRange(name, value, str(legal))
    scenario = s.slots[slot - 1]
    return _with_slot(s, slot, replace(scenario, params=replace(scenario.params, **{name: value})))


def set_regime(s: ScenarioSet, slot: int, regime: PolicyRegime) -> ScenarioSet:
    """Switch a slot's policy regime. The stored M is kept as-is; under
    interest-rate control it is merely stale for display (see
    Scenario.stale_money_slider)."""
    _check_slot(slot)
    if not isinstance(regime, PolicyRegime):
        raise InvalidRegime(f"expected a PolicyRegime, got {regime!r}")
    if regime.kind is RegimeKind.INTEREST_RATE and not I_BAR_RANGE.contains(regime.i_bar):
        raise OutOfRange("i_bar", regime.i_bar, str(I_BAR_RANGE))
    return _with_slot(s, slot, replace(s.slots[slot - 1], regime=regime))


def set_visibility(s: ScenarioSet, slot: int, plot: PlotKind, visible: bool) -> ScenarioSet:
    """Toggle a slot's membership in one plot."""
    _check_slot(slot)
    scenario = s.slots[slot - 1]
    shown = set(scenario.visible_in)
    (shown.add if visible else shown.discard)(plot)
    return _with_slot(s, slot, replace(scenario, visible_in=frozenset(shown)))


def solve_slot(s: ScenarioSet, slot: int) -> Equilibrium:
    _check_slot(slot)
    scenario = s.slots[slot - 1]
    return model.solve_equilibrium(scenario.params, scenario.regime)


@dataclass(frozen=True)
class ComparisonColumn:
    """Solved values for one selected slot."""

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


@dataclass(frozen=True)
class ComparisonDelta:
    """Differences between two consecutive selected slots (later minus earlier)."""

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


@dataclass(frozen=True)
class ComparisonTable:
    columns: tuple[ComparisonColumn, ...]
    deltas: tuple[ComparisonDelta, ...]


def compare(s: ScenarioSet, slots: list[int] | tuple[int, ...]) -> ComparisonTable:
    """Solve the selected slots side by side with consecutive-pair deltas.

    Selection must be 1 to 3 distinct slots; output is ordered by slot index.
    """
    if len(slots) == 0:
        raise EmptySelection("select at least one slot to compare")
    for slot in slots:
        _check_slot(slot)
    if len(set(slots)) != len(slots):
        raise DuplicateSlot(f"duplicate slot selection: {list(slots)}")

    columns = []
    for slot in sorted(slots):
        scenario = s.slots[slot - 1]
        eq = solve_slot(s, slot)
        columns.append(
            ComparisonColumn(
                slot=slot,
                name=scenario.name,
                Y_star=eq.Y_star,
                i_star=eq.i_star,
                M_realized=eq.M_realized,
                C=eq.composition.C,
                I=eq.composition.I,
                G=eq.composition.G,
                NX=eq.composition.NX,
                budget_balance=eq.budget_balance,
                at_zlb=eq.at_zlb,
            )
        )

    deltas = []
    for earlier, later in zip(columns, columns[1:]):
        deltas.append(
            ComparisonDelta(
                from_slot=earlier.slot,
                to_slot=later.slot,
                Y_star=later.Y_star - earlier.Y_star,
                i_star=later.i_star - earlier.i_star,
                M_realized=later.M_realized - earlier.M_realized,
                C=later.C - earlier.C,
                I=later.I - earlier.I,
                G=later.G - earlier.G,
                NX=later.NX - earlier.NX,
                budget_balance=later.budget_balance - earlier.budget_balance,
            )
        )
    return ComparisonTable(columns=tuple(columns), deltas=tuple(deltas))


def _linspace(lo: float, hi: float, n: int) -> list[float]:
    step = (hi - lo) / (n - 1)
    xs = [lo + step * k for k in range(n)]
    xs[-1] = hi  # close the range exactly despite rounding
    return xs


def default_grid(s: ScenarioSet, plot: PlotKind = PlotKind.ISLM) -> GridSpec:
    """Grid covering every equilibrium visible in the plot, with headroom:
    [0, 2*max(Y*)] for the output-based plots, [0, 2*max(i*)] for the money
    market (fallback spans when the maxima are not positive)."""
    visible = [k for k in (1, 2, 3) if plot in s.slots[k - 1].visible_in]
    if not visible:
        visible = [1, 2, 3]
    solved = [solve_slot(s, k) for k in visible]
    if plot is PlotKind.MONEY:
        hi = 2.0 * max(eq.i_star for eq in solved)
        return GridSpec(0.0, hi if hi > 0.0 else 10.0, 201)
    hi = 2.0 * max(eq.Y_star for eq in solved)
    return GridSpec(0.0, hi if hi > 0.0 else 1.0, 201)


def sample_curves(
    s: ScenarioSet,
    slot: int,
    plot: PlotKind | str,
    grid: GridSpec | None = None,
) -> list[CurveSeries]:
    """Sample the requested plot's curves for one slot.

    IS-LM: IS and LM rates over a shared Y-grid; the LM kink is inserted as an
    extra node whenever it falls strictly inside the grid. Money market: money
    demand at the slot's equilibrium output across the rate grid, plus the
    vertical supply line at realized real balances. Goods market: aggregate
    demand at the slot's equilibrium rate over the Y-grid, plus the 45-degree
    line. Under interest-rate control the money-side curves use the realized
    money supply, so the equilibrium stays on the plotted LM curve.
    """
    _check_slot(slot)
    if isinstance(plot, str):
        plot = parse_plot(plot)
    if grid is None:
        grid = default_grid(s, plot)
    scenario = s.slots[slot - 1]
    p = scenario.params
    eq = solve_slot(s, slot)
    M_eff = eq.M_realized

    def series(kind: CurveKind, points: list[tuple[float, float]]) -> CurveSeries:
        return CurveSeries(
            curve_kind=kind, slot=slot, scenario=scenario.name, points=tuple(points)
        )

    if plot is PlotKind.ISLM:
        ys = _linspace(grid.min, grid.max, grid.n)
        kink = model.lm_kink_output(p, M_eff)
        if grid.min < kink < grid.max and kink not in ys:
            bisect.insort(ys, kink)
        return [
            series(CurveKind.IS, [(Y, model.is_rate(p, Y)) for Y in ys]),
            series(CurveKind.LM, [(Y, model.lm_rate(p, Y, M_eff)) for Y in ys]),
        ]

    if plot is PlotKind.MONEY:
        rates = _linspace(grid.min, grid.max, grid.n)
        demand = [(model.money_demand(p, eq.Y_star, i), i) for i in rates]
        demand.reverse()  # demand falls in i, so reversing sorts by x
        m_star = M_eff / p.P
        supply = [(m_star, i) for i in rates]
        return [
            series(CurveKind.MONEY_DEMAND, demand),
            series(CurveKind.MONEY_SUPPLY, supply),
        ]

    ys = _linspace(grid.min, grid.max, grid.n)
    return [
        series(
            CurveKind.AGGREGATE_DEMAND,
            [(Y, model.aggregate_demand(p, Y, eq.i_star)) for Y in ys],
        ),
        series(CurveKind.FORTY_FIVE_DEGREE, [(Y, Y) for Y in ys]),
    ]
