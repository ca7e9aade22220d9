"""Winner-take-all arbitration loop and episode transcripts."""
from __future__ import annotations

import json
import logging
import random
from dataclasses import dataclass, field

from nail import engine
from nail import kg as kgmod
from nail.agent.base import (
    DEFAULT_BUDGET, MODULE_ORDER, PROTECTED_WORDS, AgentContext, RunConfig, load_verbs,
)
from nail.agent.modules import (
    MODULE_CLASSES, core_description, first_line, is_dark, is_restart_prompt,
)
from nail.lm import default_lm
from nail.textutils import tokenize
from nail.validity import VALID_THRESHOLD, default_model, unknown_word

log = logging.getLogger(__name__)

NOT_A_VERB = "that's not a verb i recognise."
UNMINED_ACTIONS = frozenset(engine.DIRECTIONS) | {"look", "inventory", "take all", "restart", "yes", "no"}


@dataclass
class Transcript:
    """Grant and step annotations, in order."""

    entries: list = field(default_factory=list)

    def grant(self, module: str, eagerness: dict, excluded: list, step: int) -> None:
        self.entries.append({"type": "grant", "module": module, "eagerness": eagerness,
                             "excluded": sorted(excluded), "step": step})

    def step(self, module, action, response, p, score_delta, score, step) -> None:
        self.entries.append({"type": "step", "module": module, "action": action, "response": response,
                             "p_valid": round(p, 6), "score_delta": score_delta, "score": score,
                             "step": step})

    def steps(self) -> list:
        return [e for e in self.entries if e["type"] == "step"]

    def to_text(self) -> str:
        out = []
        for e in self.entries:
            if e["type"] == "grant":
                bids = " ".join(f"{k}={v:.4f}" for k, v in e["eagerness"].items())
                out.append(f"# grant {e['module']} at step {e['step']} [{bids}]")
            else:
                out.append(f"[{e['step']:4d}] {e['module']:<10} > {e['action']}")
                out.append(f"       p_valid={e['p_valid']:.3f} score_delta={e['score_delta']} score={e['score']}")
                for line in e["response"].splitlines():
                    out.append("       | " + line)
        return "\n".join(out) + "\n"

    def to_json(self) -> str:
        return json.dumps(self.entries, indent=1, sort_keys=True)


@dataclass
class EpisodeResult:
    game_id: str
    raw_score: int
    final_score: int
    max_score: int
    steps: int
    transcript: Transcript
    kg: kgmod.KnowledgeGraph
    finished: bool = False

    @property
    def normalized_score(self) -> float:
        return self.raw_score / self.max_score if self.max_score else 0.0


def build_modules(names=None) -> list:
    """Instantiate modules in canonical registration order."""
    names = list(MODULE_ORDER) if names is None else list(names)
    unknown = [n for n in names if n not in MODULE_CLASSES]
    if unknown:
        raise ValueError(f"unknown modules: {', '.join(unknown)}")
    ordered = [n for n in MODULE_ORDER if n in names]
    return [MODULE_CLASSES[n](i) for i, n in enumerate(ordered)]


def arbitrate(bids: list[tuple[int, float]]) -> int:
    """Index of the winning module: highest eagerness, then lowest registration index."""
    best = None
    for idx, value in bids:
        if value <= 0.0:
            continue
        if best is None or value > best[1] or (value == best[1] and idx < best[0]):
            best = (idx, value)
    return -1 if best is None else best[0]


def note_failure_words(kg, action: str, response: str) -> None:
    word = unknown_word(response)
    if word is not None:
        if word not in PROTECTED_WORDS:
            kgmod.note_unrecognized(kg, word)
        return
    if " ".join(response.split()).lower() == NOT_A_VERB:
        toks = tokenize(action)
        if toks and toks[0] not in PROTECTED_WORDS:
            kgmod.note_unrecognized(kg, toks[0])


def run_episode(spec, seed: int = 0, step_budget: int = DEFAULT_BUDGET, modules=None,
                validity=None, lm=None, config: RunConfig | None = None, on_event=None,
                verbs=None) -> EpisodeResult:
    """Play one episode of ``spec`` with the given module set.

    ``on_event(kg, ground_truth, observation, action, module_name, settled)`` is called
    after every engine step once the acting module has seen the observation;
    ``settled`` is true when that module's grant has ended.
    """
    config = config or RunConfig()
    if modules is None:
        modules = config.modules
    if step_budget is None:
        step_budget = config.step_budget
    mods = build_modules(modules)
    state, obs = engine.reset(spec, seed)
    kg = kgmod.KnowledgeGraph()
    start = kgmod.add_location(kg, first_line(obs.text), core_description(obs.text))
    start.pending_text.append(obs.text)
    ctx = AgentContext(kg=kg, validity=validity or default_model(), lm=lm or default_lm(),
                       verbs=verbs if verbs is not None else load_verbs(), rng=random.Random(seed),
                       last_observation=obs, step_budget=step_budget, eagerness=dict(config.eagerness))
    transcript = Transcript()
    best_score = 0
    excluded: set[int] = set()  # modules whose last grant produced no action, until the next step

    while ctx.step_count < step_budget and not state.finished:
        bids = {m.name: round(float(m.eagerness(ctx)), 6) for m in mods}
        live = [(m.registration_index, bids[m.name]) for m in mods if m.registration_index not in excluded]
        winner = arbitrate(live)
        if winner < 0:
            break
        module = mods[winner]
        transcript.grant(module.name, bids, [mods[i].name for i in excluded], ctx.step_count)
        gen = module.take_control(ctx)
        try:
            action = next(gen)
        except StopIteration:
            excluded.add(winner)
            continue
        excluded.clear()
        while True:
            if kgmod.is_blocked(kg, action):
                log.warning("%s emitted blocked action %r; grant ended", module.name, action)
                gen.close()
                break
            loc_id = kg.current_location
            obs = engine.step(state, action)
            ctx.step_count += 1
            ctx.last_observation = obs
            best_score = max(best_score, obs.score)
            p = ctx.p_valid(obs.text)
            kgmod.record_action(kg, loc_id, action, obs.text, p)
            kgmod.apply_action_effects(kg, action, obs.text, p)
            note_failure_words(kg, action, obs.text)
            if (p >= VALID_THRESHOLD and action not in UNMINED_ACTIONS and not is_dark(obs.text)
                    and not is_restart_prompt(obs.text)):
                kg.locations[loc_id].pending_text.append(obs.text)
            transcript.step(module.name, action, obs.text, p, obs.score_delta, obs.score, ctx.step_count)
            settled = False
            nxt = None
            if state.finished or ctx.step_count >= step_budget:
                try:
                    gen.send(obs)
                except StopIteration:
                    pass
                gen.close()
                settled = True
            else:
                try:
                    nxt = gen.send(obs)
                except StopIteration:
                    settled = True
            if on_event is not None:
                on_event(kg, engine.introspect(state), obs, action, module.name, settled)
            if settled:
                break
            action = nxt

    return EpisodeResult(spec.game_id, best_score, state.score, spec.max_score, ctx.step_count,
                         transcript, kg, state.finished)
