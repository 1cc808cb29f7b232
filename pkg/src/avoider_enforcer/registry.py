"""Strategy id resolution.

Ids double as CLI flags and transcript header names:

* ``planarity_avoider``, ``bibunch_avoider``, ``extremal_avoider:<property>``
* ``isolated_vertex_avoider`` (optionally ``isolated_vertex_avoider:<eps>``)
* ``odd_cycle_enforcer``, ``connectivity_enforcer``
* ``adversary:random``, ``adversary:lex``, ``adversary:greedy``,
  ``adversary:greedy:<target>``
"""

from __future__ import annotations

import random

from .avoiders import (
    BiBunchAvoider,
    ExtremalAvoider,
    IsolatedVertexAvoider,
    PlanarityAvoider,
)
from .enforcers import ConnectivityEnforcer, GreedyAttack, LexAdversary, RandomAdversary, OddCycleEnforcer
from .errors import ConfigError
from .match import StrategyFactory
from .strategy import Strategy

_PLAIN = {
    "planarity_avoider": PlanarityAvoider,
    "bibunch_avoider": BiBunchAvoider,
    "odd_cycle_enforcer": OddCycleEnforcer,
    "connectivity_enforcer": ConnectivityEnforcer,
    "adversary:random": RandomAdversary,
    "adversary:lex": LexAdversary,
}


def resolve_strategy(spec: str) -> StrategyFactory:
    """Turn a strategy id into a factory ``(n, rng) -> Strategy``."""
    if spec in _PLAIN:
        return _PLAIN[spec]
    if spec == "isolated_vertex_avoider":
        return IsolatedVertexAvoider
    if spec.startswith("isolated_vertex_avoider:"):
        eps = spec.split(":", 1)[1]
        try:
            float(eps)
        except ValueError:
            raise ConfigError(f"bad epsilon in strategy id {spec!r}") from None
        return lambda n, rng: IsolatedVertexAvoider(n, rng, epsilon=eps)
    if spec.startswith("extremal_avoider:"):
        prop = spec.split(":", 1)[1]
        from .properties import get_property

        get_property(prop)  # fail fast on unknown property ids
        return lambda n, rng: ExtremalAvoider(n, rng, prop=prop)
    if spec == "adversary:greedy":
        return GreedyAttack
    if spec.startswith("adversary:greedy:"):
        target = spec.split(":", 2)[2]
        factory = lambda n, rng: GreedyAttack(n, rng, target=target)  # noqa: E731
        GreedyAttack(2, random.Random(0), target=target)  # validate target now
        return factory
    raise ConfigError(f"unknown strategy id {spec!r}")


def strategy_ids() -> list[str]:
    return sorted(_PLAIN) + [
        "isolated_vertex_avoider",
        "extremal_avoider:<property>",
        "adversary:greedy",
        "adversary:greedy:<target>",
    ]
