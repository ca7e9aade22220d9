import pytest

from nail import kg as kgmod
from nail.kg import (
    INVENTORY, KGError, KnowledgeGraph, add_entity, add_location, apply_action_effects, connect,
    export_kg, find_location, has_attempted, has_failed, import_kg, is_blocked, merge_location,
    move_entity, note_unrecognized, record_action,
)

FOREST = "Forest\nThis is a dimly lit forest, with large trees all around. To the east there appears to be sunlight."


def fresh(*descs):
    kg = KnowledgeGraph()
    for i, d in enumerate(descs or ("Start\nA plain room.",)):
        add_location(kg, f"L{i}", d)
    return kg


def test_first_location_is_current():
    kg = fresh()
    assert kg.current_location == 0 and kg.current.location_id == 0


def test_duplicate_description_creates_new_location():
    kg = fresh("Hall\nA hall.", "Hall\nA hall.")
    assert len(kg.locations) == 2


def test_empty_description_rejected():
    with pytest.raises(KGError):
        add_location(KnowledgeGraph(), "x", "  ")


def test_find_location():
    kg = fresh(FOREST, "Kitchen\nYou are in the kitchen of the white house.")
    loc, r = find_location(kg, FOREST)
    assert loc.location_id == 0 and r == 1.0
    hit = find_location(kg, FOREST + " A bird sings.")
    assert hit is not None and hit[0].location_id == 0
    assert find_location(kg, "Attic\nThis is the attic. The only exit is a stairway leading down.") is None


def test_connect():
    kg = fresh("A\none", "B\ntwo")
    connect(kg, 0, "north", 1)
    connect(kg, 0, "north", 1)
    assert kg.connections == [(0, "north", 1)]
    assert kg.locations[0].navigation["north"] == ("succeeded", 1)
    with pytest.raises(KGError):
        connect(kg, 0, "south", 7)


def test_alias_merge():
    kg = fresh()
    a = add_entity(kg, 0, "brass lantern")
    b = add_entity(kg, 0, "lantern")
    assert a is b and a.names == ["brass lantern", "lantern"]
    assert len(kg.entities_at(0)) == 1


def test_same_name_two_places():
    kg = fresh("A\none", "B\ntwo")
    assert add_entity(kg, 0, "mailbox") is not add_entity(kg, 1, "mailbox")
    with pytest.raises(KGError):
        add_entity(kg, 0, "")


def test_record_and_has_failed():
    kg = fresh()
    record_action(kg, 0, "push wall", "Nothing happens.", 0.2)
    assert has_failed(kg, 0, "push wall")
    record_action(kg, 0, "push wall", "The wall slides.", 0.9)
    assert not has_failed(kg, 0, "push wall")
    record_action(kg, 0, "open door", "Opened.", 0.9)
    assert not has_failed(kg, 0, "open door")
    assert len(kg.current.action_records) == 3


def test_has_attempted_by_epoch():
    kg = fresh()
    record_action(kg, 0, "pull lever", "Nothing.", 0.2)
    assert has_attempted(kg, 0, "pull lever", 0)
    kg.epoch = 1
    assert has_attempted(kg, 0, "pull lever")
    assert not has_attempted(kg, 0, "pull lever", 1)
    assert kgmod.ever_failed(kg, 0, "pull lever")


def test_take_effect_moves_to_inventory():
    kg = fresh()
    add_entity(kg, 0, "leaflet")
    apply_action_effects(kg, "take leaflet", "Taken.", 0.9)
    assert [e.name for e in kg.entities_at(INVENTORY)] == ["leaflet"]
    assert kg.entities_at(0) == []
    apply_action_effects(kg, "drop leaflet", "Dropped.", 0.9)
    assert [e.name for e in kg.entities_at(0)] == ["leaflet"]


def test_effects_gated_and_uncommon_verbs_ignored():
    kg = fresh()
    add_entity(kg, 0, "leaflet")
    apply_action_effects(kg, "take leaflet", "You can't.", 0.2)
    assert kg.inventory == []
    before = export_kg(kg)
    apply_action_effects(kg, "push wall", "Pushed.", 0.9)
    assert export_kg(kg) == before


def test_state_effects():
    kg = fresh()
    door = add_entity(kg, 0, "wooden door")
    apply_action_effects(kg, "open door", "Opened.", 0.9)
    assert door.state["open"] is True and "openable" in door.attributes
    apply_action_effects(kg, "unlock door with key", "Unlocked.", 0.9)
    assert door.state["locked"] is False
    apple = add_entity(kg, 0, "apple")
    apply_action_effects(kg, "eat apple", "Delicious.", 0.9)
    assert apple.state["used"] is True and kg.places[apple.entity_id] is None


def test_unrecognized_words():
    kg = fresh()
    assert not is_blocked(kg, "open door")
    note_unrecognized(kg, "Xyzzy")
    assert is_blocked(kg, "say xyzzy") and is_blocked(kg, "SAY XYZZY")
    assert not is_blocked(kg, "say xyzzyx")


def test_export_single_location():
    kg = fresh()
    doc = export_kg(kg, "json")
    assert '"location_id": 0' in doc and doc.count('"location_id"') == 1


def test_dot_chain_has_two_edges():
    kg = fresh("A\none", "B\ntwo", "C\nthree")
    connect(kg, 0, "north", 1)
    connect(kg, 1, "east", 2)
    dot = export_kg(kg, "dot")
    assert dot.count("->") == 2 and 'label="north"' in dot and 'label="east"' in dot
    with pytest.raises(ValueError):
        export_kg(kg, "yaml")


def test_roundtrip():
    kg = fresh("A\none", "B\ntwo")
    connect(kg, 0, "north", 1)
    add_entity(kg, 0, "brass lantern", "A lamp.")
    add_entity(kg, INVENTORY, "leaflet", "Welcome.")
    record_action(kg, 0, "open lantern", "No.", 0.1)
    note_unrecognized(kg, "frob")
    kg.locations[0].examined.add("lantern")
    again = import_kg(export_kg(kg))
    assert again == kg
    assert export_kg(again) == export_kg(kg)


def test_move_entity_and_merge():
    kg = fresh("A\none", "B\ntwo")
    e = add_entity(kg, 1, "rope")
    move_entity(kg, e.entity_id, INVENTORY)
    assert kg.inventory == [e.entity_id] and kg.locations[1].entities == []
    add_entity(kg, 1, "stick")
    connect(kg, 1, "up", 0)
    merge_location(kg, 1, 0)
    assert 1 not in kg.locations
    assert [x.name for x in kg.entities_at(0)] == ["stick"]
    assert (0, "up", 0) in kg.connections or kg.connections == []
