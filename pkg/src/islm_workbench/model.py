"""Closed-form equilibrium engine for the short-run goods/financial-market model.

Output and the nominal interest rate are jointly determined by a linear
goods-market relation and a money-market relation that is floored at a zero
nominal rate, under one of two central-bank regimes: an exogenous money supply
(the rate adjusts) or an exogenous target rate (the money supply adjusts).
The model is linear on each branch, so every solve is exact arithmetic; no
iteration is involved.

Interest rates are expressed in percentage points throughout (5.0 means 5%),
quantities in currency units (CU).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

from .errors import BranchAmbiguous, InvalidParameters, InvalidRegime

#: relative tolerance for closed-form identities (residual checks, round trips)
REL_TOL = 1e-9


@dataclass(frozen=True)
class Parameters:
    """The twelve exogenous model inputs.

    A, B, G, NX, T, M are currency units; c, h1, P are dimensionless;
    b and h2 are CU per percentage point; pi_e is percentage points.
    """

    A: float  # autonomous consumption
    c: float  # marginal propensity to consume, in (0, 1)
    T: float  # lump-sum taxes
    B: float  # autonomous investment
    b: float  # investment response to the real rate
    pi_e: float  # expected inflation
    G: float  # government spending
    NX: float  # net exports
    h1: float  # money-demand response to income
    h2: float  # money-demand response to the nominal rate
    M: float  # nominal money supply
    P: float  # price level

    def __post_init__(self):
        problems = []
        for name in ("A", "c", "T", "B", "b", "pi_e", "G", "NX", "h1", "h2", "M", "P"):
            if not math.isfinite(getattr(self, name)):
                problems.append(f"{name} must be finite")
        if not 0.0 < self.c < 1.0:
            problems.append(f"c={self.c:g} violates 0 < c < 1")
        for name, value in (("b", self.b), ("h1", self.h1), ("h2", self.h2), ("P", self.P)):
            if not value > 0.0:
                problems.append(f"{name}={value:g} must be > 0")
        if not self.M >= 0.0:
            problems.append(f"M={self.M:g} must be >= 0")
        if problems:
            raise InvalidParameters("; ".join(problems))


PARAMETER_NAMES = ("A", "c", "T", "B", "b", "pi_e", "G", "NX", "h1", "h2", "M", "P")


class RegimeKind(str, Enum):
    """How the central bank closes the financial market."""

    MONEY_SUPPLY = "money_supply"  # M exogenous, rate adjusts
    INTEREST_RATE = "interest_rate"  # target rate exogenous, M adjusts


@dataclass(frozen=True)
class PolicyRegime:
    """Central-bank regime; `i_bar` is the target rate, present only under
    interest-rate control."""

    kind: RegimeKind
    i_bar: float | None = None

    def __post_init__(self):
        if self.kind is RegimeKind.INTEREST_RATE:
            if self.i_bar is None:
                raise InvalidRegime("interest-rate control requires a target rate i_bar")
            if not (math.isfinite(self.i_bar) and self.i_bar >= 0.0):
                raise InvalidRegime(f"i_bar={self.i_bar:g} must be finite and >= 0")
        elif self.i_bar is not None:
            raise InvalidRegime("i_bar is only meaningful under interest-rate control")


MONEY_SUPPLY_CONTROL = PolicyRegime(RegimeKind.MONEY_SUPPLY)


def interest_rate_control(i_bar: float) -> PolicyRegime:
    return PolicyRegime(RegimeKind.INTEREST_RATE, i_bar)


class Diagnostic(str, Enum):
    """Non-fatal warnings attached to a solved equilibrium.

    The linear model does not bound investment, money demand, or (under
    interest-rate control) the implied money supply; clamping them would break
    the defining identities, so out-of-range values are flagged instead.
    """

    NEGATIVE_INVESTMENT = "negative_investment"
    NEGATIVE_MONEY_DEMAND = "negative_money_demand"
    NEGATIVE_IMPLIED_MONEY_SUPPLY = "negative_implied_money_supply"


@dataclass(frozen=True)
class GdpComposition:
    """Demand-side composition of output; components sum to equilibrium Y."""

    C: float
    I: float
    G: float
    NX: float

    @property
    def total(self) -> float:
        return self.C + self.I + self.G + self.NX


@dataclass(frozen=True)
class Equilibrium:
    """Jointly solved state of the goods and financial markets."""

    Y_star: float  # equilibrium output (CU)
    i_star: float  # equilibrium nominal rate (pp), never negative
    r_star: float  # real rate, i_star - pi_e
    M_realized: float  # money supply consistent with the solution (CU)
    at_zlb: bool  # True iff the unconstrained rate was negative and i = 0 was used
    composition: GdpComposition
    budget_balance: float  # T - G, negative = deficit
    diagnostics: tuple[Diagnostic, ...] = ()


def alpha(p: Parameters) -> float:
    """Autonomous-spending multiplier 1/(1-c)."""
    return 1.0 / (1.0 - p.c)


def autonomous_demand(p: Parameters) -> float:
    """Rate-independent part of goods demand: A + B + G + NX - c*T + b*pi_e."""
    return p.A + p.B + p.G + p.NX - p.c * p.T + p.b * p.pi_e


def consumption(p: Parameters, Y: float) -> float:
    """C = A + c*(Y - T)."""
    return p.A + p.c * (Y - p.T)


def investment(p: Parameters, i: float) -> float:
    """I = B - b*(i - pi_e); may be negative (flagged, not clamped)."""
    return p.B - p.b * (i - p.pi_e)


def aggregate_demand(p: Parameters, Y: float, i: float) -> float:
    """ZZ = C + I + G + NX at the given output and nominal rate."""
    return consumption(p, Y) + investment(p, i) + p.G + p.NX


def is_output(p: Parameters, i: float) -> float:
    """Goods-market-clearing output at rate i: the fixed point of Y = ZZ(Y, i)."""
    return alpha(p) * autonomous_demand(p) - (p.b / (1.0 - p.c)) * i


def is_rate(p: Parameters, Y: float) -> float:
    """Rate at which the goods market clears at output Y (inverse of is_output).

    Unconstrained: the goods-market relation itself admits negative rates,
    only the solved equilibrium rate is floored at zero.
    """
    return (autonomous_demand(p) - (1.0 - p.c) * Y) / p.b


def lm_rate(p: Parameters, Y: float, M: float | None = None) -> float:
    """Money-market-clearing rate at output Y, floored at zero:
    max(0, (h1/h2)*Y - M/(h2*P)).

    `M` overrides p.M so the relation can be evaluated at the realized money
    supply under interest-rate control (which may fall outside the range
    Parameters accepts).
    """
    M = p.M if M is None else M
    return max(0.0, (p.h1 / p.h2) * Y - M / (p.h2 * p.P))


def lm_kink_output(p: Parameters, M: float | None = None) -> float:
    """Output level M/(h1*P) at which the money-market rate leaves the zero floor."""
    M = p.M if M is None else M
    return M / (p.h1 * p.P)


def money_demand(p: Parameters, Y: float, i: float) -> float:
    """Real money demand h1*Y - h2*i; may be negative (flagged, not clamped)."""
    return p.h1 * Y - p.h2 * i


def unconstrained_intersection(p: Parameters) -> tuple[float, float]:
    """Intersection of the goods-market relation with the un-floored
    money-market relation; the rate may be negative here."""
    a = alpha(p)
    Y_u = (a * autonomous_demand(p) + a * p.b * p.M / (p.h2 * p.P)) / (
        1.0 + a * p.b * p.h1 / p.h2
    )
    i_u = (p.h1 / p.h2) * Y_u - p.M / (p.h2 * p.P)
    return Y_u, i_u


def budget_balance(p: Parameters) -> float:
    """Signed government balance T - G; negative values are deficits."""
    return p.T - p.G


def gdp_composition(p: Parameters, Y: float, i: float) -> GdpComposition:
    """Composition (C, I, G, NX) at an equilibrium point; sums to Y there."""
    return GdpComposition(
        C=consumption(p, Y), I=investment(p, i), G=p.G, NX=p.NX
    )


def solve_equilibrium(p: Parameters, regime: PolicyRegime) -> Equilibrium:
    """Solve both markets jointly under the given regime.

    Money-supply control takes the unconstrained intersection if its rate is
    non-negative, otherwise the zero-rate branch (output is then purely
    goods-market determined). A rate of exactly zero counts as interior.
    Interest-rate control reads output off the goods-market relation at the
    target rate and backs out the money supply that supports it; the stored M
    is ignored for the solution.
    """
    if regime.kind is RegimeKind.MONEY_SUPPLY:
        Y_u, i_u = unconstrained_intersection(p)
        if i_u >= 0.0:
            Y, i, at_zlb = Y_u, i_u, False
        else:
            Y, i, at_zlb = alpha(p) * autonomous_demand(p), 0.0, True
        M_realized = p.M
    else:
        i = regime.i_bar
        Y = is_output(p, i)
        M_realized = p.P * (p.h1 * Y - p.h2 * i)
        at_zlb = i == 0.0

    comp = gdp_composition(p, Y, i)
    diags = []
    if comp.I < 0.0:
        diags.append(Diagnostic.NEGATIVE_INVESTMENT)
    if money_demand(p, Y, i) < 0.0:
        diags.append(Diagnostic.NEGATIVE_MONEY_DEMAND)
    if regime.kind is RegimeKind.INTEREST_RATE and M_realized < 0.0:
        diags.append(Diagnostic.NEGATIVE_IMPLIED_MONEY_SUPPLY)

    return Equilibrium(
        Y_star=Y,
        i_star=i,
        r_star=i - p.pi_e,
        M_realized=M_realized,
        at_zlb=at_zlb,
        composition=comp,
        budget_balance=budget_balance(p),
        diagnostics=tuple(diags),
    )


def fiscal_multiplier(p: Parameters, regime: PolicyRegime) -> float:
    """Equilibrium change in output per unit of government spending.

    Under interest-rate control, or on the zero-rate branch, the rate does not
    respond and the full multiplier 1/(1-c) applies. Under money-supply
    control away from the floor, the induced rate rise damps it to
    alpha / (1 + alpha*b*h1/h2). Exactly on the kink the two one-sided values
    differ and BranchAmbiguous reports both.
    """
    a = alpha(p)
    if regime.kind is RegimeKind.INTEREST_RATE:
        return a
    damped = a / (1.0 + a * p.b * p.h1 / p.h2)
    _, i_u = unconstrained_intersection(p)
    if i_u > 0.0:
        return damped
    if i_u < 0.0:
        return a
    raise BranchAmbiguous(zlb_side=a, interior_side=damped)
