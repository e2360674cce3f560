"""Interactive comparative-statics workbench for a short-run macro model with
a zero lower bound, exposed as a library, a CLI and a JSON HTTP service."""

from .errors import (
    BranchAmbiguous,
    DocumentError,
    DuplicateSlot,
    EmptySelection,
    InvalidGrid,
    InvalidParameters,
    InvalidRegime,
    InvalidSlot,
    OutOfRange,
    UnknownParameter,
    UnknownPlot,
    WorkbenchError,
)
from .model import (
    MONEY_SUPPLY_CONTROL,
    PARAMETER_NAMES,
    REL_TOL,
    Diagnostic,
    Equilibrium,
    GdpComposition,
    Parameters,
    PolicyRegime,
    RegimeKind,
    aggregate_demand,
    alpha,
    budget_balance,
    consumption,
    fiscal_multiplier,
    gdp_composition,
    interest_rate_control,
    investment,
    is_output,
    is_rate,
    lm_kink_output,
    lm_rate,
    money_demand,
    solve_equilibrium,
    unconstrained_intersection,
)
from .scenarios import (
    ALL_PLOTS,
    DEFAULT_PARAMETERS,
    I_BAR_RANGE,
    SLIDER_RANGES,
    SLOT_NAMES,
    ComparisonColumn,
    ComparisonDelta,
    ComparisonTable,
    CurveKind,
    CurveSeries,
    GridSpec,
    PlotKind,
    Scenario,
    ScenarioSet,
    SliderRange,
    assign_from_previous,
    compare,
    create_scenario_set,
    default_grid,
    parse_plot,
    reset_defaults,
    sample_curves,
    set_parameter,
    set_regime,
    set_visibility,
    solve_slot,
)

__version__ = "0.1.0"
