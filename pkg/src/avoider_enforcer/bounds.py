"""Closed-form move-count bounds checked by the harness.

An *asserted* bound is a hard inequality on every match's loss round; a
margin spec is report-only (second-order behaviour whose constant is not
pinned).  Loss round None means Avoider never lost: that satisfies any
lower bound and violates any upper bound.
"""

from __future__ import annotations

import math
from collections.abc import Callable
from dataclasses import dataclass

from .board import edge_count
from .errors import ConfigError


@dataclass(frozen=True)
class BoundSpec:
    name: str
    direction: str  # "lower" or "upper"
    value: Callable[[int], float]
    formula: str
    asserted: bool = True
    margin_unit: Callable[[int], float] | None = None

    def satisfied(self, n: int, loss_round: int | None) -> bool:
        bound = self.value(n)
        if loss_round is None:
            return self.direction == "lower"
        if self.direction == "lower":
            return loss_round >= bound
        return loss_round <= bound

    def margin(self, n: int, loss_round: int | None) -> float | None:
        if loss_round is None:
            return None
        raw = (
            loss_round - self.value(n)
            if self.direction == "lower"
            else self.value(n) - loss_round
        )
        if self.margin_unit is not None:
            return raw / self.margin_unit(n)
        return raw


def _half_clique(n: int) -> float:
    return edge_count(n - 1) / 2


def _log2_ceil(n: int) -> int:
    return max(1, (n - 1).bit_length())


def planar_survival_lower() -> BoundSpec:
    return BoundSpec(
        name="planar_survival_lower",
        direction="lower",
        value=lambda n: math.ceil(3 * n - 28 * math.sqrt(n)),
        formula="ceil(3n - 28*sqrt(n))",
    )


def odd_cycle_forcing_upper() -> BoundSpec:
    return BoundSpec(
        name="odd_cycle_forcing_upper",
        direction="upper",
        value=lambda n: n * n / 8 + n / 2 + 1,
        formula="n^2/8 + n/2 + 1",
    )


def bipartite_survival_lower() -> BoundSpec:
    return BoundSpec(
        name="bipartite_survival_lower",
        direction="lower",
        value=lambda n: math.ceil(n * n / 8 + (n - 2) / 12),
        formula="ceil(n^2/8 + (n-2)/12), even n",
    )


def spanning_forcing_upper() -> BoundSpec:
    return BoundSpec(
        name="spanning_forcing_upper",
        direction="upper",
        value=lambda n: _half_clique(n) + 2 * _log2_ceil(n) + 1,
        formula="C(n-1,2)/2 + 2*ceil(log2 n) + 1",
    )


def isolated_survival_lower() -> BoundSpec:
    return BoundSpec(
        name="isolated_survival_lower",
        direction="lower",
        value=lambda n: _half_clique(n) + 1,
        formula="C(n-1,2)/2 + 1",
    )


def isolated_survival_lower_log(epsilon: float = 0.1) -> BoundSpec:
    coefficient = (1 - 4 * epsilon) / 2
    return BoundSpec(
        name="isolated_survival_lower_log",
        direction="lower",
        value=lambda n: _half_clique(n) + coefficient * math.log(n) / 2,
        formula=f"C(n-1,2)/2 + ((1-4*{epsilon})/2)*ln(n)/2, large n",
    )


def odd_cycle_linear_margin() -> BoundSpec:
    return BoundSpec(
        name="odd_cycle_linear_margin",
        direction="lower",
        value=lambda n: n * n / 8,
        formula="(loss_round - n^2/8) / n",
        asserted=False,
        margin_unit=lambda n: n,
    )


def spanning_log_margin() -> BoundSpec:
    return BoundSpec(
        name="spanning_log_margin",
        direction="lower",
        value=_half_clique,
        formula="(loss_round - C(n-1,2)/2) / ln(n)",
        asserted=False,
        margin_unit=math.log,
    )


def catalog() -> dict[str, BoundSpec]:
    specs = [
        planar_survival_lower(),
        odd_cycle_forcing_upper(),
        bipartite_survival_lower(),
        spanning_forcing_upper(),
        isolated_survival_lower(),
        isolated_survival_lower_log(),
        odd_cycle_linear_margin(),
        spanning_log_margin(),
    ]
    return {spec.name: spec for spec in specs}


def get_bound(name: str) -> BoundSpec:
    try:
        return catalog()[name]
    except KeyError:
        raise ConfigError(
            f"unknown bound {name!r}; known: {', '.join(sorted(catalog()))}"
        ) from None
