import itertools

import pytest

from nail.engine import bundled_game
from nail.textutils import (
    MAX_NOUN_PHRASES, PosLexicon, default_lexicon, extract_noun_phrases, fuzzy_ratio, tokenize,
)


def oracle_ratio(a, b):
    # Straight from the definition, with its own tokeniser and a memoised recursive edit distance.
    import functools
    import re

    def key(s):
        s = s.replace("’", "'").lower()
        return " ".join(sorted(set(re.findall(r"[a-z0-9]+(?:['\-][a-z0-9]+)*", s))))

    x, y = key(a), key(b)

    @functools.lru_cache(maxsize=None)
    def dist(i, j):
        if i == 0 or j == 0:
            return i + j
        return min(dist(i - 1, j) + 1, dist(i, j - 1) + 1, dist(i - 1, j - 1) + (x[i - 1] != y[j - 1]))

    if x == y:
        return 1.0
    return 1.0 - dist(len(x), len(y)) / max(len(x), len(y))


def test_tokenize_examples():
    assert tokenize("Open the mailbox.") == ["open", "the", "mailbox"]
    assert tokenize("") == []
    assert tokenize("song-bird chirps") == ["song-bird", "chirps"]
    assert tokenize("You can’t go") == ["you", "can't", "go"]


def test_tokenize_join_idempotent():
    toks = tokenize("The brass lantern (lit) is here; it glows!")
    assert tokenize(" ".join(toks)) == toks


def test_noun_phrase_examples():
    assert [np.text for np in extract_noun_phrases("There is a small mailbox here.")] == ["small mailbox"]
    nps = extract_noun_phrases("You hear the chirping of a song bird.")
    assert [np.text for np in nps] == ["chirping", "song bird"]
    assert nps[1].head == "bird"
    assert extract_noun_phrases("") == []


def test_noun_phrase_cap():
    text = " ".join(f"There is a red box{i} here." for i in range(40))
    assert len(extract_noun_phrases(text)) == MAX_NOUN_PHRASES


def test_noun_phrases_do_not_cross_sentences():
    texts = [np.text for np in extract_noun_phrases("You see a lamp. Door opens.")]
    assert "lamp door" not in texts


def test_lexicon_lookup_case_insensitive():
    lex = PosLexicon.from_text("Lamp\tnoun\nopen\tverb,adjective\n")
    assert lex.tags("LAMP") == {"noun"}
    assert lex.tags("zzz") == frozenset()
    assert "open" in lex and len(lex) == 2
    with pytest.raises(ValueError):
        PosLexicon.from_text("lamp\tnounish\n")
    assert len(default_lexicon()) > 1000


def test_fuzzy_identity_and_sets():
    s = "West of House\nYou are standing in an open field."
    assert fuzzy_ratio(s, s) == 1.0
    assert fuzzy_ratio("the door the door", "door the") == 1.0
    assert fuzzy_ratio("", "") == 1.0


def test_fuzzy_forest_golden():
    a, b = "Forest.", "Forest. You hear in the distance the chirping of a song bird."
    r = fuzzy_ratio(a, b)
    assert r == pytest.approx(oracle_ratio(a, b), abs=1e-12)
    # 1 - 49/55: the stored text is one word, the query adds ten more unique tokens.
    assert r == pytest.approx(6 / 55, abs=1e-12)
    assert 0.0 < r < 1.0


def test_fuzzy_flavor_on_full_description_stays_above_threshold():
    room = bundled_game("minizork").rooms["forest"]
    desc = room.name + "\n" + room.description
    assert fuzzy_ratio(desc, desc + " You hear in the distance the chirping of a song bird.") >= 0.80


def test_distinct_bundled_rooms_stay_below_threshold():
    for name in ("minizork", "hitchhiker", "balances", "dungeon", "compass"):
        rooms = bundled_game(name).rooms.values()
        for a, b in itertools.combinations(rooms, 2):
            assert fuzzy_ratio(a.name + "\n" + a.description, b.name + "\n" + b.description) < 0.8
    mz = bundled_game("minizork").rooms
    assert fuzzy_ratio(mz["west_of_house"].description, mz["kitchen"].description) < 0.8


@pytest.mark.parametrize("a,b", [
    ("open door", "door open now"), ("kitten", "sitting"), ("Behind House", "Behind the House"),
    ("a", ""), ("x y z", "z"),
])
def test_fuzzy_matches_oracle(a, b):
    assert fuzzy_ratio(a, b) == pytest.approx(oracle_ratio(a, b), abs=1e-12)
    assert fuzzy_ratio(a, b) == fuzzy_ratio(b, a)
