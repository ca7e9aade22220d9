"""Acceptance criteria for the agent, its models and the harness.

Each test prints one line, ``PASS <criterion>: detail`` or ``FAIL ...``, and
the same lines are repeated in the terminal summary.
"""
import subprocess
import sys
import time

import pytest
from helpers import HITCHHIKER_TAKE_ALL, drive, make_ctx
from test_lm import matched_pairs

from nail import engine
from nail import kg as kgmod
from nail.agent import Hoarder, run_episode
from nail.harness import ablate, evaluate_suite, navigation_audit, validate_transcript
from nail.lm import default_lm, log_prob
from nail.validity import load_corpus, p_valid, split_corpus, train

RESULTS = []
SEEDS = [1, 2, 3]
BUDGET = 1000

# Responses and published probabilities; curly apostrophes as printed.
TABLE_1 = [
    ("I didn’t understand that sentence.", 0.0),
    ("You can’t go that way.", 0.0),
    ("You can’t use multiple objects with that verb.", 0.0008),
    ("You try to push past, but vines block your way.", 0.0009),
    ("I don’t know the word xyzzy.", 0.1145),
    ("Even with a lamp, you would not chance these stairs in the darkness.", 0.6366),
    ("The gentle tapping sounds again.", 0.9387),
    ("Help! You hurtle through the cave opening!", 0.9835),
    ("The grating opens.", 0.9998),
    ("The cyclops seems somewhat agitated.", 0.9998),
]


def report(name, ok, detail):
    line = f"{'PASS' if ok else 'FAIL'} {name}: {detail}"
    RESULTS.append(line)
    print(line)
    assert ok, line


@pytest.fixture(scope="module")
def suite():
    t0 = time.perf_counter()
    rep = evaluate_suite(str(engine.bundled_games_dir()), "nail", SEEDS)
    return rep, time.perf_counter() - t0


def test_validity_threshold_agreement():
    t0 = time.perf_counter()
    train_set, held_out = split_corpus(load_corpus(), seed=0)
    model = train(train_set, seed=0, held_out=held_out)
    hits, checked, notes = 0, 0, []
    for text, published in TABLE_1:
        p = p_valid(model, text)
        if published <= 0.0009 or published == 0.1145:
            want = False
        elif published >= 0.9387:
            want = True
        else:
            notes.append(f"{published} row scored {p:.3f}")
            continue
        checked += 1
        hits += (p >= 0.5) == want
    elapsed = time.perf_counter() - t0
    report("validity threshold agreement", hits == checked and elapsed < 60,
           f"{hits}/{checked} rows agree, {elapsed:.1f}s; unasserted: {'; '.join(notes)}")


def test_validity_held_out_accuracy():
    accs = []
    for seed in (0, 1, 2):
        tr, ho = split_corpus(load_corpus(), seed=seed)
        accs.append(train(tr, seed=seed, held_out=ho).held_out_accuracy)
    ok = min(accs) >= 0.90 and max(accs) - min(accs) <= 0.06
    ok = ok and all(abs(a - sum(accs) / 3) <= 0.03 for a in accs)
    report("validity held-out accuracy", ok, " ".join(f"{a:.3f}" for a in accs))


def test_lm_ordering_and_short_actions():
    lm = default_lm()
    a, b, c = (log_prob(lm, s) for s in ("open the door", "open the torch", "light the door"))
    pairs = matched_pairs()
    share = sum(log_prob(lm, two) > log_prob(lm, four) for two, four in pairs) / len(pairs)
    report("lm ordering", a > b > c and share >= 0.95,
           f"{a:.2f} > {b:.2f} > {c:.2f}; {share:.1%} of {len(pairs)} pairs prefer 2 words")


def test_navigator_mapping():
    spec = engine.bundled_game("minizork")
    assert len(spec.rooms) == 8 and spec.flavor_texts
    outcomes = []
    for seed in range(1, 6):
        audit = navigation_audit(spec, seed, step_budget=BUDGET)
        outcomes.append((seed, audit.exact, len(audit.truth_edges), len(audit.duplicates)))
    ok = all(exact and dups == 0 for _, exact, _, dups in outcomes)
    report("navigator mapping", ok,
           ", ".join(f"seed {s} {'exact' if e else 'mismatch'} ({n} edges, {d} dup)" for s, e, n, d in outcomes))


def test_hoarder_parsing(validity_model, lm_model):
    ctx = make_ctx(validity_model, lm_model, "Bedroom\nThe bedroom is a mess.")
    drive(Hoarder(0), ctx, [HITCHHIKER_TAKE_ALL])
    n_ent = len(ctx.kg.entities)
    inv = [e.name for e in ctx.kg.entities_at(kgmod.INVENTORY)]
    report("hoarder parsing", n_ent == 4 and len(inv) == 1, f"{n_ent} entities, inventory {inv}")


def test_dependencies(suite):
    rep, elapsed = suite
    by_kind = rep.deps_by_kind()
    nonzero = sum(g["nonzero"] for g in rep.per_game())
    ok = (by_kind["LocDep"] == 1.0 and by_kind["EntDep"] == 1.0 and by_kind["all"] >= 0.80
          and nonzero >= 4 and rep.summary()["max_steps_used"] <= BUDGET and elapsed < 120)
    kinds = " ".join(f"{k}={v:.0%}" for k, v in by_kind.items() if v is not None)
    report("dependencies", ok, f"{kinds}; non-zero on {nonzero}/5 games; {elapsed:.1f}s")


def test_ablation_monotonicity():
    curve = ablate(str(engine.bundled_games_dir()), SEEDS)
    values = dict(curve)
    labels = [label for label, _ in curve]
    non_decreasing = all(b >= a for (_, a), (_, b) in zip(curve, curve[1:]))
    strict = all(values[s] > values[labels[labels.index(s) - 1]]
                 for s in ("+navigator", "+hoarder", "+examiner", "+interactor"))
    report("ablation monotonicity", non_decreasing and strict,
           " -> ".join(f"{label} {v:.3f}" for label, v in curve))


def test_baseline_separation(suite):
    nail = suite[0].summary()["mean_normalized_score"]
    rnd = evaluate_suite(str(engine.bundled_games_dir()), "random", SEEDS).summary()["mean_normalized_score"]
    report("baseline separation", nail > rnd, f"nail {nail:.4f} vs random {rnd:.4f}")


def test_determinism(tmp_path):
    outs = []
    for i in (1, 2):
        path = tmp_path / f"report{i}.json"
        proc = subprocess.run([sys.executable, "-m", "nail", "eval", str(engine.bundled_games_dir()),
                               "--seeds", "1,2,3", "--json", str(path), "--jobs", "2"],
                              capture_output=True, text=True, check=False)
        assert proc.returncode == 0, proc.stderr
        outs.append(path.read_bytes())
    report("determinism", outs[0] == outs[1], f"two eval reports, {len(outs[0])} bytes, identical={outs[0] == outs[1]}")


def test_budget_and_arbitration():
    problems, episodes, max_steps = [], 0, 0
    for path in sorted(engine.bundled_games_dir().glob("*.game")):
        spec = engine.load_game_file(path)
        for seed in SEEDS:
            res = run_episode(spec, seed=seed, step_budget=BUDGET)
            episodes += 1
            max_steps = max(max_steps, res.steps)
            problems += [f"{spec.game_id}/{seed}: {p}"
                         for p in validate_transcript(res.transcript.entries, BUDGET)]
    report("budget and arbitration", not problems and max_steps <= BUDGET,
           f"{episodes} episodes replayed, max steps {max_steps}, {len(problems)} violations")
