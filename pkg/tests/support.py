"""Shared assertion helpers, hypothesis strategies, and document generators."""

from __future__ import annotations

from hypothesis import strategies as st

from islm_workbench.model import REL_TOL, Parameters
from islm_workbench.scenarios import SLIDER_RANGES
from islm_workbench.schema import ScenarioDocument, ScenarioEntry, ScenarioParams


def rel_close(value: float, ref: float, tol: float = REL_TOL) -> bool:
    """Relative closeness with an absolute floor of 1.0, the convention used
    for every closed-form identity check."""
    return abs(value - ref) <= tol * max(1.0, abs(ref))


def parameters_strategy(**overrides) -> st.SearchStrategy[Parameters]:
    """Draws valid Parameters from well inside the legal slider box."""
    fields = dict(
        A=st.floats(0.0, 1000.0),
        c=st.floats(0.02, 0.98),
        T=st.floats(-500.0, 1000.0),
        B=st.floats(0.0, 1000.0),
        b=st.floats(0.1, 100.0),
        pi_e=st.floats(-10.0, 10.0),
        G=st.floats(-500.0, 1000.0),
        NX=st.floats(-500.0, 1000.0),
        h1=st.floats(0.01, 2.0),
        h2=st.floats(0.1, 100.0),
        M=st.floats(0.0, 2000.0),
        P=st.floats(0.1, 10.0),
    )
    fields.update(overrides)
    return st.builds(Parameters, **fields)


def random_parameter_values(rng) -> dict[str, float]:
    """Uniform draw from the legal slider box (open bounds pulled in a hair)."""
    values = {}
    for name, legal in SLIDER_RANGES.items():
        lo, hi = legal.lo, legal.hi
        if legal.lo_open or legal.hi_open:
            span = hi - lo
            lo, hi = lo + 0.001 * span, hi - 0.001 * span
        values[name] = float(rng.uniform(lo, hi))
    return values


def random_document(rng) -> ScenarioDocument:
    """Valid random scenario document with 1 to 3 entries, mixed regimes."""
    entries = []
    for k in range(int(rng.integers(1, 4))):
        rate_control = bool(rng.random() < 0.4)
        if rate_control:
            # keep a fair share of pinned-at-zero cases in the mix
            i_bar = 0.0 if rng.random() < 0.2 else float(rng.uniform(0.0, 30.0))
        else:
            i_bar = None
        entries.append(
            ScenarioEntry(
                name=f"Case {k + 1}",
                regime="interest_rate" if rate_control else "money_supply",
                i_bar=i_bar,
                params=ScenarioParams(**random_parameter_values(rng)),
            )
        )
    return ScenarioDocument(scenarios=entries)
