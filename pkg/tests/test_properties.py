from hypothesis import given, settings
from hypothesis import strategies as st

from nail import _pykernels, engine, kernels
from nail import kg as kgmod
from nail.agent import arbitrate
from nail.harness import expected_winner
from nail.agent import MODULE_ORDER
from nail.textutils import fuzzy_ratio, tokenize
from test_kernels import full_matrix_levenshtein

words = st.text(alphabet="abcdefgh ", max_size=30)
prose = st.text(alphabet=st.sampled_from(list("abc XYZ.,!'\"\n’")), max_size=60)


@given(words, words)
def test_fuzzy_symmetric_and_bounded(a, b):
    r = fuzzy_ratio(a, b)
    assert r == fuzzy_ratio(b, a)
    assert 0.0 <= r <= 1.0
    assert fuzzy_ratio(a, a) == 1.0


@given(prose)
def test_tokenize_idempotent(text):
    toks = tokenize(text)
    assert tokenize(" ".join(toks)) == toks
    assert all(t == t.lower() and t.strip() for t in toks)


@given(st.text(max_size=25), st.text(max_size=25))
@settings(max_examples=300)
def test_levenshtein_matches_oracle(a, b):
    want = full_matrix_levenshtein(a, b)
    assert kernels.levenshtein(a, b) == want
    assert _pykernels.levenshtein(a, b) == want


@given(st.lists(st.sampled_from(["north", "south", "east", "west", "take all", "look", "inventory",
                                 "drop", "up", "down", "yes"]), max_size=80), st.integers(0, 5))
@settings(max_examples=40, deadline=None)
def test_engine_object_exclusivity(actions, seed):
    spec = engine.bundled_game("minizork")
    state, _ = engine.reset(spec, seed)
    for a in actions:
        if state.finished:
            break
        engine.step(state, a)
        truth = engine.introspect(state)
        assert set(truth.inventory) == {o for o, p in truth.object_places.items() if p == "inventory"}


@given(st.lists(st.tuples(st.sampled_from(["lamp", "rope", "key", "box"]),
                          st.sampled_from([0, 1, kgmod.INVENTORY])), max_size=30))
def test_kg_entity_in_one_place(moves):
    kg = kgmod.KnowledgeGraph()
    kgmod.add_location(kg, "A", "A\none")
    kgmod.add_location(kg, "B", "B\ntwo")
    ids = {}
    for name, place in moves:
        if name not in ids:
            ids[name] = kgmod.add_entity(kg, place, name).entity_id
        else:
            kgmod.move_entity(kg, ids[name], place)
    for eid in ids.values():
        holders = [loc.location_id for loc in kg.locations.values() if eid in loc.entities]
        holders += ["inv"] if eid in kg.inventory else []
        assert len(holders) == 1


@given(st.lists(st.sampled_from([0.0, 0.01, 0.1, 0.5, 0.85, 0.9, 0.99]), min_size=len(MODULE_ORDER),
                max_size=len(MODULE_ORDER)),
       st.sets(st.sampled_from(MODULE_ORDER)))
def test_arbitration_agrees_with_validator(values, excluded):
    bids = dict(zip(MODULE_ORDER, values))
    live = [(i, bids[n]) for i, n in enumerate(MODULE_ORDER) if n not in excluded]
    idx = arbitrate(live)
    want = expected_winner(bids, excluded)
    assert (MODULE_ORDER[idx] if idx >= 0 else None) == want
    if want is not None:
        assert all(bids[want] >= v for n, v in bids.items() if n not in excluded)
