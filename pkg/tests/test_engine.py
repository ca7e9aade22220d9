import json
import random

import pytest

from nail import engine
from nail.engine import (
    GameFormatError, GameValidationError, bundled_game, bundled_games_dir, introspect, load_game,
    reset, step,
)
from nail.engine.world import GRUE_DEATH, RESTART_QUESTION

BUNDLED = ("balances", "compass", "dungeon", "hitchhiker", "minizork")


def tiny_game(**overrides):
    doc = {
        "meta": {"game_id": "tiny", "start_room": "a", "max_score": 3},
        "rooms": [
            {"id": "a", "name": "Room A", "description": "A bare room. A door leads north.",
             "exits": {"north": "b"}},
            {"id": "b", "name": "Room B", "description": "Another bare room.", "exits": {"s": "a"},
             "score_on_first_visit": 1},
        ],
        "objects": [
            {"id": "coin", "names": ["gold coin", "coin"], "location": "a", "portable": True,
             "take_score": 2, "room_text": "A coin lies here."},
        ],
    }
    doc.update(overrides)
    return doc


def test_bundled_minizork_shape(minizork):
    assert len(minizork.rooms) == 8
    assert minizork.max_score == 45


@pytest.mark.parametrize("name", BUNDLED)
def test_bundled_games_validate_and_sum(name):
    spec = bundled_game(name)
    assert spec.game_id == name
    assert sum(spec.score_events().values()) == spec.max_score


def test_bundled_dir_lists_games():
    assert sorted(p.stem for p in bundled_games_dir().glob("*.game")) == list(BUNDLED)


def test_tiny_game_loads():
    spec = load_game(json.dumps(tiny_game()))
    assert spec.rooms["b"].exits["south"].to == "a"
    assert spec.objects["coin"].name == "gold coin"


def test_exit_to_undeclared_room_is_rejected():
    doc = tiny_game()
    doc["rooms"][0]["exits"]["east"] = "nowhere"
    with pytest.raises(GameValidationError) as err:
        load_game(json.dumps(doc))
    assert err.value.invariant == "exit-target"


def test_empty_document_is_a_parse_error():
    with pytest.raises(GameFormatError):
        load_game("")
    with pytest.raises(GameFormatError):
        load_game("{not json")


def test_max_score_must_match_events():
    doc = tiny_game()
    doc["meta"]["max_score"] = 4
    with pytest.raises(GameValidationError) as err:
        load_game(json.dumps(doc))
    assert err.value.invariant == "max-score"


def test_non_canonical_direction_is_rejected():
    doc = tiny_game()
    doc["rooms"][0]["exits"]["sideways"] = "b"
    with pytest.raises(GameValidationError) as err:
        load_game(json.dumps(doc))
    assert err.value.invariant == "canonical-directions"


def test_start_room_must_exist():
    doc = tiny_game()
    doc["meta"]["start_room"] = "zz"
    with pytest.raises(GameValidationError):
        load_game(json.dumps(doc))


def test_reset_observation_starts_at_west_of_house(minizork):
    _, obs = reset(minizork, 7)
    assert obs.text.startswith("West of House")


def test_reset_is_deterministic(minizork):
    assert reset(minizork, 7)[1] == reset(minizork, 7)[1]


def test_flavor_text_only_appends(minizork):
    flavors = [f.text for f in minizork.flavor_texts["west_of_house"]]
    texts = [reset(minizork, seed)[1].text for seed in range(30)]
    assert any(flavors[0] in t for t in texts) and any(flavors[0] not in t for t in texts)
    stripped = set()
    for t in texts:
        for f in flavors:
            t = t.replace(" " + f, "")
        stripped.add(t)
    assert len(stripped) == 1
    assert not any(f in next(iter(stripped)) for f in flavors)


def test_step_examples(minizork):
    state, _ = reset(minizork, 7)
    assert step(state, "open mailbox").text == "Opening the small mailbox reveals a leaflet."
    assert step(state, "xyzzy").text == "I don't know the word xyzzy."
    state, _ = reset(minizork, 7)
    assert step(state, "east").text != "You can't go that way."
    state.player_room = "north_of_house"
    assert step(state, "north").text == "You can't go that way."


def test_unknown_word_reports_first_unknown(minizork):
    state, _ = reset(minizork, 1)
    assert step(state, "take frobozz from qwerty").text == "I don't know the word frobozz."


def test_take_all_itemised(hitchhiker):
    state, _ = reset(hitchhiker, 1)
    lines = step(state, "take all").text.splitlines()
    assert len(lines) == 4
    assert lines[0].startswith("telephone: You lunge for it")
    assert introspect(state).inventory == ("gown",)


def test_take_all_unsupported():
    state, _ = reset(bundled_game("balances"), 1)
    assert step(state, "take all").text == "You can't see any such thing."


def test_introspect_after_reset_and_moves(minizork):
    state, _ = reset(minizork, 3)
    gt = introspect(state)
    assert gt.player_room == minizork.start_room and gt.inventory == ()
    step(state, "open mailbox")
    step(state, "take leaflet")
    assert "leaflet" in introspect(state).inventory
    step(state, "north")
    assert introspect(state).player_room == "north_of_house"


def test_score_events_fire_once(minizork):
    state, _ = reset(minizork, 3)
    step(state, "open mailbox")
    first = step(state, "take leaflet")
    assert first.score_delta > 0
    step(state, "drop leaflet")
    assert step(state, "take leaflet").score_delta == 0


def test_yes_no_prompt(hitchhiker):
    state, _ = reset(hitchhiker, 1)
    for a in ("get out of bed", "south"):
        obs = step(state, a)
    assert obs.text.rstrip().endswith("in front of my machine?")
    assert step(state, "yes").score_delta == 3


def test_dark_room_grue_and_restart():
    spec = bundled_game("dungeon")
    state, _ = reset(spec, 5)
    state.player_room = "storeroom"
    assert engine.PITCH_BLACK in step(state, "look").text
    obs = step(state, "west")
    assert GRUE_DEATH.split(".")[0] in obs.text and RESTART_QUESTION in obs.text
    assert "Please answer" in step(state, "north").text
    obs = step(state, "restart")
    assert obs.text.startswith("Damp Cell")
    assert state.seed == 5 and state.restarts == 1
    assert introspect(state).score == 0


def test_step_after_finish_raises():
    spec = bundled_game("compass")
    state, _ = reset(spec, 1)
    state.finished = True
    with pytest.raises(RuntimeError):
        step(state, "look")


def test_random_play_conserves_objects_and_score():
    spec = bundled_game("minizork")
    actions = ["north", "south", "east", "west", "up", "down", "take all", "open window",
               "open mailbox", "take leaflet", "drop leaflet", "read leaflet", "turn on lantern", "look"]
    rng = random.Random(11)
    state, _ = reset(spec, 11)
    last = 0
    for _ in range(400):
        if state.finished:
            break
        obs = step(state, rng.choice(actions))
        gt = introspect(state)
        assert set(gt.object_places) == set(spec.objects)
        assert 0 <= gt.score <= spec.max_score
        if state.restarts == 0:
            assert gt.score >= last
        last = gt.score
        assert obs.moves == state.moves


def test_same_actions_same_observations(minizork):
    actions = ["open mailbox", "take leaflet", "north", "east", "open window", "west", "look"]
    runs = []
    for _ in range(2):
        state, obs = reset(minizork, 9)
        runs.append([obs] + [step(state, a) for a in actions])
    assert runs[0] == runs[1]
