"""Brute-force grid-search reference solver used to cross-check the closed
forms. It never touches the solution formulas under test: equilibria are
located by exhaustively scanning a (Y, i) grid for the point minimizing the
worst market-clearing residual.

Tolerances for comparing the two solvers are derived from the grid spacing
and the system's own slopes (see agreement_tolerance), so every bound is a
theorem about the grid, not a fudge factor.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from islm_workbench.model import Parameters

#: multiplicative slack over the exact conditioning bounds, for float rounding
SAFETY = 1.0 + 1e-6


def goods_residual(p: Parameters, Y, i):
    """|ZZ(Y, i) - Y| in currency units, vectorized."""
    F = p.A + p.B + p.G + p.NX - p.c * p.T + p.b * p.pi_e
    return np.abs(F - (1.0 - p.c) * np.asarray(Y) - p.b * np.asarray(i))


def money_residual(p: Parameters, Y, i, M: float | None = None):
    """|h2*i - max(0, h1*Y - M/P)| in currency units, vectorized.

    Zero exactly on the floored money-market relation, including the flat
    branch where the relation pins i = 0.
    """
    M = p.M if M is None else M
    target = np.maximum(0.0, p.h1 * np.asarray(Y) - M / p.P)
    return np.abs(p.h2 * np.asarray(i) - target)


@dataclass(frozen=True)
class OracleSolution:
    Y: float
    i: float
    M: float
    residual: float  # worst residual at the chosen grid point
    dY: float
    di: float

    def best_possible_residual(self, p: Parameters) -> float:
        """Upper bound on the worst residual at the grid node nearest the true
        equilibrium (Lipschitz bound); the exhaustive argmin can only do
        better, so residual must not exceed this if the box holds the truth."""
        half_y, half_i = self.dY / 2.0, self.di / 2.0
        return max(
            (1.0 - p.c) * half_y + p.b * half_i,
            p.h1 * half_y + p.h2 * half_i,
        )


def solve_money_supply(
    p: Parameters, Y_max: float, i_max: float, nY: int = 1601, ni: int = 801
) -> OracleSolution:
    """Exhaustive argmin of max(goods, money) residual over [0, Y_max] x [0, i_max]."""
    Y = np.linspace(0.0, Y_max, nY)
    i = np.linspace(0.0, i_max, ni)
    worst = np.maximum(
        goods_residual(p, Y[:, None], i[None, :]),
        money_residual(p, Y[:, None], i[None, :]),
    )
    flat = int(np.argmin(worst))
    ky, ki = divmod(flat, ni)
    return OracleSolution(
        Y=float(Y[ky]),
        i=float(i[ki]),
        M=p.M,
        residual=float(worst[ky, ki]),
        dY=float(Y[1] - Y[0]),
        di=float(i[1] - i[0]),
    )


def solve_interest_rate(
    p: Parameters, i_bar: float, Y_max: float, nY: int = 100_001
) -> OracleSolution:
    """With the rate pinned, scan output alone for goods-market clearing and
    read the accommodating money supply off the money-demand schedule."""
    Y = np.linspace(0.0, Y_max, nY)
    g = goods_residual(p, Y, i_bar)
    ky = int(np.argmin(g))
    Y_hat = float(Y[ky])
    return OracleSolution(
        Y=Y_hat,
        i=i_bar,
        M=p.P * (p.h1 * Y_hat - p.h2 * i_bar),
        residual=float(g[ky]),
        dY=float(Y[1] - Y[0]),
        di=0.0,
    )


def agreement_tolerance(
    p: Parameters, sol: OracleSolution, i_closed_form: float, at_zlb: bool
) -> tuple[float, float]:
    """(tol_Y, tol_i) within which the closed form must match the grid argmin.

    Derivation sketch, with B0 the best-possible grid residual: both residuals
    at the found node are <= B0. Away from the kink the two linearized
    clearing conditions give errors bounded by Cramer's rule with determinant
    det = (1-c)*h2 + b*h1. On the zero-rate branch the goods condition alone
    bounds Y (the grid contains the i = 0 row exactly), and the money residual
    caps how far above zero the found rate can sit. Near the kink the found
    node may land on either branch, so the bounds take the worse of the two.
    """
    B0 = sol.best_possible_residual(p)
    one_minus_c = 1.0 - p.c
    det = one_minus_c * p.h2 + p.b * p.h1

    if at_zlb:
        tol_i = B0 * (1.0 + p.h1 / one_minus_c) / p.h2
        tol_y = B0 * (1.0 + p.b / p.h2) / one_minus_c
        return tol_y * SAFETY, tol_i * SAFETY

    tol_y = B0 * (p.h2 + p.b) / det
    tol_i = B0 * (p.h1 + one_minus_c) / det
    if i_closed_form < B0 / p.h2:
        # the argmin may sit on the flat branch of the money relation
        tol_i = max(tol_i, i_closed_form + B0 / p.h2)
        tol_y = max(tol_y, (B0 + p.b * tol_i) / one_minus_c)
    return tol_y * SAFETY, tol_i * SAFETY


def rate_control_tolerance(p: Parameters, sol: OracleSolution) -> tuple[float, float]:
    """(tol_Y, tol_M) for the pinned-rate scan: the goods residual is V-shaped
    with slope 1-c, so the argmin sits within half a grid step of the truth."""
    tol_y = sol.dY / 2.0
    return tol_y * SAFETY, p.P * p.h1 * tol_y * SAFETY


def draw_parameters(rng: np.random.Generator) -> Parameters:
    """One uniform draw from the legal slider box."""
    from islm_workbench.scenarios import SLIDER_RANGES

    values = {}
    for name, legal in SLIDER_RANGES.items():
        lo, hi = legal.lo, legal.hi
        if legal.lo_open or legal.hi_open:
            span = hi - lo
            lo, hi = lo + 0.001 * span, hi - 0.001 * span
        values[name] = float(rng.uniform(lo, hi))
    return Parameters(**values)
