import numpy as np
import pytest

from nail.validity import (
    DEFAULT_DIM, DEFAULT_SEED, RULE_FAILURE_P, VALID_THRESHOLD, LabeledResponse, ValidityModel,
    featurize, is_valid, load_corpus, p_valid, parse_corpus, rule_failure, split_corpus, train,
    unknown_word,
)


def fnv_bucket(feature, dim=DEFAULT_DIM, seed=DEFAULT_SEED):
    h = 0xCBF29CE484222325 ^ seed
    for byte in feature.encode("utf-8"):
        h = ((h ^ byte) * 0x100000001B3) % 2**64
    return h % dim


def small_corpus():
    rows = [("success", "Taken."), ("success", "The door opens."), ("success", "You eat the apple."),
            ("failure", "You can't see any such thing."), ("failure", "That's hardly portable."),
            ("failure", "The door is locked.")]
    return [LabeledResponse(t, label) for label, t in rows]


def test_featurize_empty_and_single():
    assert featurize("") == {}
    vec = featurize("door")
    assert vec == {fnv_bucket("door"): 1.0}


def test_featurize_unigrams_and_bigrams():
    vec = featurize("you can't go")
    feats = ["you", "can't", "go", "you can't", "can't go"]
    expected = {}
    for f in feats:
        expected[fnv_bucket(f)] = expected.get(fnv_bucket(f), 0.0) + 0.2
    assert vec.keys() == expected.keys()
    for k in vec:
        assert vec[k] == pytest.approx(expected[k])
    assert sum(vec.values()) == pytest.approx(1.0)


def test_featurize_rejects_tiny_dim():
    with pytest.raises(ValueError):
        featurize("x", feature_dim=16)


def test_train_requires_both_classes():
    with pytest.raises(ValueError):
        train([LabeledResponse("Taken.", "success")])


def test_train_deterministic():
    a = train(small_corpus(), epochs=5, seed=3)
    b = train(small_corpus(), epochs=5, seed=3)
    assert np.array_equal(a.weights, b.weights) and a.bias == b.bias


def test_untrained_model_refuses():
    with pytest.raises(RuntimeError):
        p_valid(ValidityModel(), "Taken.")


def test_labeled_response_checks():
    with pytest.raises(ValueError):
        LabeledResponse("", "success")
    with pytest.raises(ValueError):
        LabeledResponse("Taken.", "maybe")


def test_parse_corpus():
    rows = parse_corpus("success\tTaken.\n\nfailure\tLine one\\nline two\n")
    assert rows[1].text == "Line one\nline two"
    with pytest.raises(ValueError):
        parse_corpus("no tab here\n")


def test_split_is_seeded_80_20():
    corpus = load_corpus()
    tr, ho = split_corpus(corpus, 0)
    assert len(tr) + len(ho) == len(corpus) and len(ho) == round(0.2 * len(corpus))
    assert split_corpus(corpus, 0) == (tr, ho)
    assert split_corpus(corpus, 1)[1] != ho


def test_rule_layer():
    assert rule_failure("You can't go that way.")
    assert rule_failure("You can’t go that way.")
    assert rule_failure("I don't know the word xyzzy.")
    assert not rule_failure("The grating opens.")
    assert unknown_word("I don't know the word \"frob\".") == "frob"
    assert unknown_word("Taken.") is None


def test_reference_examples(validity_model):
    assert p_valid(validity_model, "You can't go that way.") == RULE_FAILURE_P
    assert not is_valid(validity_model, "You can't go that way.")
    assert p_valid(validity_model, "The grating opens.") >= VALID_THRESHOLD
    assert p_valid(validity_model, "The cyclops seems somewhat agitated.") >= VALID_THRESHOLD


def test_predictions_inside_unit_interval(validity_model):
    for text in ("Taken.", "x " * 200, "You can't see any such thing.", "?"):
        assert 0.0 < p_valid(validity_model, text) < 1.0


def test_bundled_accuracy(validity_model):
    assert validity_model.held_out_accuracy >= 0.90


def test_save_load_roundtrip(tmp_path):
    model = train(small_corpus(), epochs=3)
    path = tmp_path / "model.txt"
    model.save(path)
    loaded = ValidityModel.load(path)
    assert np.array_equal(loaded.weights, model.weights) and loaded.bias == model.bias
    assert p_valid(loaded, "The door opens.") == p_valid(model, "The door opens.")
