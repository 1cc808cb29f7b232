"""Board, referee, and match-loop behaviour."""

import pytest

from avoider_enforcer import (
    AuditLevel,
    IllegalMoveError,
    InvalidEdgeError,
    InvalidParameterError,
    Mode,
    Player,
    apply_move,
    avoider_loss_round,
    edge_count,
    legal_moves,
    new_game,
    resolve_strategy,
    run_match,
)
from avoider_enforcer.strategy import ScriptedStrategy, Strategy

from conftest import enumerate_matches, first_loss_by_scan
from avoider_enforcer.properties import has_min_degree_one


LEX = resolve_strategy("adversary:lex")
RANDOM = resolve_strategy("adversary:random")


def test_new_game_fresh_board():
    state = new_game(3)
    assert len(legal_moves(state)) == 3
    assert state.next_player is Player.AVOIDER
    assert state.round == 0
    assert not state.avoider_edges and not state.enforcer_edges


def test_new_game_two_vertices():
    assert legal_moves(new_game(2)) == [(0, 1)]


@pytest.mark.parametrize("bad", [1, 0, -3])
def test_new_game_rejects_degenerate(bad):
    with pytest.raises(InvalidParameterError):
        new_game(bad)


def test_legal_moves_excludes_claims():
    state = new_game(3)
    apply_move(state, (0, 1))
    apply_move(state, (0, 2))
    assert legal_moves(state) == [(1, 2)]
    apply_move(state, (1, 2))
    assert legal_moves(state) == []


def test_apply_move_updates_round_and_turn():
    state = new_game(3)
    apply_move(state, (0, 1))
    assert state.avoider_edges == {(0, 1)}
    assert state.round == 1
    assert state.next_player is Player.ENFORCER
    apply_move(state, (0, 2))
    assert len(state.avoider_edges) - len(state.enforcer_edges) == 0
    assert state.round == 1


def test_apply_move_rejects_replay():
    state = new_game(3)
    apply_move(state, (0, 1))
    with pytest.raises(IllegalMoveError):
        apply_move(state, (0, 1))


@pytest.mark.parametrize("edge", [(1, 0), (0, 0), (0, 9), ("a", 1), (1,)])
def test_apply_move_rejects_bad_edges(edge):
    state = new_game(3)
    with pytest.raises(InvalidEdgeError):
        apply_move(state, edge)


def test_state_invariants_along_random_play():
    state = new_game(6)
    strategy = RANDOM(6, __import__("random").Random(5))
    while state.unclaimed_count:
        apply_move(state, strategy.choose(state))
        assert state.check_invariants() == []


def test_least_unclaimed_edge_with_exclusion():
    state = new_game(4)
    apply_move(state, (0, 1))
    assert state.least_unclaimed_edge() == (0, 2)
    assert state.least_unclaimed_edge(exclude=2) == (0, 3)
    assert state.least_unclaimed_edge(exclude=0) == (1, 2)


# -- run_match -------------------------------------------------------------


def test_match_k3_min_degree_lex_both():
    result = run_match(3, LEX, LEX, "min_degree_one")
    assert result.loss_round == 2


def test_k3_min_degree_loss_is_2_for_every_play_order():
    # Oracle: any two distinct edges of K_3 touch all three vertices, so
    # exhaustive enumeration of all play orders gives loss round 2 always.
    for avoider_seq in enumerate_matches(3, None, None):
        assert first_loss_by_scan(has_min_degree_one, 3, avoider_seq) == 2


def test_match_k2_spanning_loses_immediately():
    result = run_match(2, LEX, LEX, "connected_spanning")
    assert result.loss_round == 1


def test_match_k4_non_planar_never_lost():
    result = run_match(4, LEX, LEX, "non_planar", mode=Mode.PLAY_OUT)
    assert result.loss_round is None
    assert len(result.final_state.avoider_edges) == 3  # ceil(6/2)


def test_avoider_takes_final_move_when_odd():
    # C(3, 2) = 3 is odd: Avoider claims 2 edges, Enforcer 1.
    result = run_match(3, LEX, LEX, "non_planar", mode=Mode.PLAY_OUT)
    state = result.final_state
    assert len(state.avoider_edges) == 2
    assert len(state.enforcer_edges) == 1


def test_stop_at_loss_halts_early():
    # Lex vs lex on K_5 loses min_degree_one at round 4 (vertex 3 covered
    # by Avoider's (0, 3) and the fifth vertex by (1, 4)).
    stopped = run_match(5, LEX, LEX, "min_degree_one", mode=Mode.STOP_AT_LOSS)
    played = run_match(5, LEX, LEX, "min_degree_one", mode=Mode.PLAY_OUT)
    assert stopped.loss_round == played.loss_round == 4
    assert stopped.moves[-1][1] is Player.AVOIDER
    assert stopped.moves[-1][0] == stopped.loss_round
    assert len(stopped.moves) < len(played.moves)
    assert len(played.moves) == edge_count(5)


def test_lex_on_k4_keeps_a_vertex_isolated():
    result = run_match(4, LEX, LEX, "min_degree_one", mode=Mode.PLAY_OUT)
    assert result.loss_round is None


def test_replay_determinism():
    a = run_match(10, RANDOM, RANDOM, "non_bipartite", seed=42)
    b = run_match(10, RANDOM, RANDOM, "non_bipartite", seed=42)
    assert a.moves == b.moves
    assert a.loss_round == b.loss_round
    c = run_match(10, RANDOM, RANDOM, "non_bipartite", seed=43)
    assert c.moves != a.moves


def test_loss_round_matches_offline_rescore():
    for seed in range(6):
        for prop in ("min_degree_one", "non_bipartite", "connected_spanning", "non_planar"):
            result = run_match(8, RANDOM, RANDOM, prop, seed=seed, mode=Mode.PLAY_OUT)
            assert avoider_loss_round(result.transcript()) == result.loss_round


def test_monotone_latch_in_playout():
    # Once lost, later prefixes stay lost: the recorded loss round is the
    # first satisfied prefix of the full playout.
    result = run_match(6, RANDOM, RANDOM, "min_degree_one", seed=1, mode=Mode.PLAY_OUT)
    seq = result.avoider_sequence()
    assert result.loss_round is not None
    assert first_loss_by_scan(has_min_degree_one, 6, seq) == result.loss_round


class _ClaimedEdgeStrategy(Strategy):
    name = "broken"

    def choose(self, state):
        return (0, 1)


def test_strategy_fault_attributed():
    result = run_match(4, LEX, _ClaimedEdgeStrategy, "min_degree_one")
    assert result.fault is not None
    assert result.fault.player is Player.ENFORCER
    assert "claimed" in result.fault.reason


def test_full_audit_clean_on_honest_play():
    result = run_match(
        8, RANDOM, RANDOM, "non_bipartite", seed=9, audit_level=AuditLevel.FULL
    )
    assert result.invariant_violations == []


def test_scripted_strategy_replays():
    script = [(0, 1), (1, 2)]
    strategy = ScriptedStrategy(4, None, script=script)
    state = new_game(4)
    assert strategy.choose(state) == (0, 1)
    apply_move(state, (0, 1))
    apply_move(state, (0, 2))
    assert strategy.choose(state) == (1, 2)
