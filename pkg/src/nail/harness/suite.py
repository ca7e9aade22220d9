"""Episode runner, suite evaluation, the random baseline and the ablation driver."""
from __future__ import annotations

import json
import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from pathlib import Path

from nail import engine
from nail import kg as kgmod
from nail.agent import MODULE_ORDER, SPECIALIZED, RunConfig, run_episode
from nail.agent.loop import Transcript
from nail.harness.deps import KINDS, DependencyTracker, find_deps

RANDOM_ACTIONS = ("north", "south", "east", "west", "up", "down", "look", "inventory",
                  "take all", "drop", "yes")
AGENTS = ("nail", "random")
DEFAULT_SEEDS = (1, 2, 3)

# Each stage adds modules to everything before it.
ABLATION_STAGES = (
    ("look-only", ("lookonly",)),
    ("+navigator", ("navigator",)),
    ("+hoarder", ("hoarder",)),
    ("+examiner", ("examiner",)),
    ("+interactor", ("interactor",)),
    ("+idler", ("idler",)),
    ("+specialized", SPECIALIZED),
)


@dataclass
class EpisodeReport:
    game_id: str
    seed: int
    agent: str
    raw_score: int
    max_score: int
    steps_used: int
    deps: list = field(default_factory=list)  # [kind, label, satisfied]
    transcript_path: str | None = None
    kg_path: str | None = None

    @property
    def normalized_score(self) -> float:
        return self.raw_score / self.max_score if self.max_score else 0.0

    def to_dict(self) -> dict:
        d = asdict(self)
        d["normalized_score"] = round(self.normalized_score, 6)
        return d


def run_random_episode(spec, seed: int = 0, step_budget: int = 1000, on_event=None):
    """Uniform random play over a small fixed action set; returns (raw score, steps, transcript)."""
    rng = random.Random(seed)
    state, _ = engine.reset(spec, seed)
    transcript = Transcript()
    best = steps = 0
    while steps < step_budget and not state.finished:
        action = rng.choice(RANDOM_ACTIONS)
        obs = engine.step(state, action)
        steps += 1
        best = max(best, obs.score)
        transcript.step("random", action, obs.text, 0.0, obs.score_delta, obs.score, steps)
        if on_event is not None:
            on_event(None, engine.introspect(state), obs, action, "random", True)
    return best, steps, transcript


def run_game(spec, seed: int, agent: str = "nail", config: RunConfig | None = None, deps=None,
             step_budget: int | None = None, out_dir=None) -> EpisodeReport:
    """One episode with dependency tracking; writes transcript and KG dump under ``out_dir``."""
    if agent not in AGENTS:
        raise ValueError(f"unknown agent {agent!r}; choose from {', '.join(AGENTS)}")
    config = config or RunConfig()
    budget = config.step_budget if step_budget is None else step_budget
    tracker = DependencyTracker(deps or [])

    def on_event(kg, truth, obs, action, module, settled):
        tracker.update(kg, truth, obs)

    kg = None
    if agent == "random":
        raw, steps, transcript = run_random_episode(spec, seed, budget, on_event)
    else:
        result = run_episode(spec, seed=seed, step_budget=budget, config=config, on_event=on_event)
        raw, steps, transcript, kg = result.raw_score, result.steps, result.transcript, result.kg
    report = EpisodeReport(spec.game_id, seed, agent, raw, spec.max_score, steps,
                           [[d.kind, d.label, ok] for d, ok in zip(tracker.deps, tracker.satisfied)])
    if out_dir is not None:
        out = Path(out_dir)
        out.mkdir(parents=True, exist_ok=True)
        stem = f"{spec.game_id}-{agent}-seed{seed}"
        (out / f"{stem}.transcript.txt").write_text(transcript.to_text(), encoding="utf-8")
        report.transcript_path = f"{stem}.transcript.txt"
        if kg is not None:
            (out / f"{stem}.kg.json").write_text(kgmod.export_kg(kg, "json"), encoding="utf-8")
            report.kg_path = f"{stem}.kg.json"
    return report


def load_suite(suite_dir) -> list:
    """Every ``*.game`` file in ``suite_dir``, sorted by file name."""
    base = Path(suite_dir)
    if not base.is_dir():
        raise FileNotFoundError(f"no such suite directory: {suite_dir}")
    games = [engine.load_game_file(p) for p in sorted(base.glob("*.game"))]
    if not games:
        raise FileNotFoundError(f"no .game files in {suite_dir}")
    return games


def _job(args):
    spec, seed, agent, config, deps, out_dir = args
    return run_game(spec, seed, agent, config, deps, out_dir=out_dir)


@dataclass
class SuiteReport:
    agent: str
    seeds: list
    modules: list
    episodes: list  # EpisodeReport, ordered by (game, seed)

    def per_game(self) -> list[dict]:
        rows = []
        for gid in sorted({e.game_id for e in self.episodes}):
            eps = [e for e in self.episodes if e.game_id == gid]
            deps = [ok for e in eps for _, _, ok in e.deps]
            rows.append({
                "game_id": gid,
                "max_score": eps[0].max_score,
                "mean_raw_score": round(sum(e.raw_score for e in eps) / len(eps), 6),
                "mean_normalized_score": round(sum(e.normalized_score for e in eps) / len(eps), 6),
                "nonzero": any(e.raw_score > 0 for e in eps),
                "deps_satisfied": round(sum(deps) / len(deps), 6) if deps else None,
            })
        return rows

    def deps_by_kind(self) -> dict:
        out = {}
        for kind in KINDS:
            flags = [ok for e in self.episodes for k, _, ok in e.deps if k == kind]
            out[kind] = round(sum(flags) / len(flags), 6) if flags else None
        flags = [ok for e in self.episodes for _, _, ok in e.deps]
        out["all"] = round(sum(flags) / len(flags), 6) if flags else None
        return out

    def summary(self) -> dict:
        games = self.per_game()
        return {
            "mean_normalized_score": round(sum(e.normalized_score for e in self.episodes) / len(self.episodes), 6),
            "completion_pct": round(100 * sum(e.normalized_score for e in self.episodes) / len(self.episodes), 4),
            "nonzero_pct": round(100 * sum(g["nonzero"] for g in games) / len(games), 4),
            "deps_satisfied": self.deps_by_kind(),
            "max_steps_used": max(e.steps_used for e in self.episodes),
        }

    def to_json(self) -> str:
        doc = {"agent": self.agent, "seeds": list(self.seeds), "modules": list(self.modules),
               "summary": self.summary(), "games": self.per_game(),
               "episodes": [e.to_dict() for e in self.episodes]}
        return json.dumps(doc, indent=2, sort_keys=True) + "\n"

    def to_text(self) -> str:
        s = self.summary()
        lines = [f"agent={self.agent} seeds={','.join(map(str, self.seeds))}",
                 f"{'game':<14}{'max':>5}{'raw':>9}{'norm':>8}{'nonzero':>9}{'deps':>7}"]
        for g in self.per_game():
            deps = "-" if g["deps_satisfied"] is None else f"{g['deps_satisfied']:.2f}"
            lines.append(f"{g['game_id']:<14}{g['max_score']:>5}{g['mean_raw_score']:>9.2f}"
                         f"{g['mean_normalized_score']:>8.3f}{('yes' if g['nonzero'] else 'no'):>9}{deps:>7}")
        lines.append(f"mean normalized score {s['mean_normalized_score']:.4f}  "
                     f"completion {s['completion_pct']:.2f}%  non-zero {s['nonzero_pct']:.1f}%")
        kinds = "  ".join(f"{k} {'-' if v is None else f'{100 * v:.1f}%'}" for k, v in s["deps_satisfied"].items())
        lines.append(f"deps satisfied: {kinds}")
        return "\n".join(lines) + "\n"


def evaluate_suite(games, agent: str = "nail", seeds=DEFAULT_SEEDS, config: RunConfig | None = None,
                   suite_dir=None, out_dir=None, jobs: int = 1) -> SuiteReport:
    """Run every game under every seed; ``games`` is a list of GameSpecs or a suite directory."""
    if agent not in AGENTS:
        raise ValueError(f"unknown agent {agent!r}; choose from {', '.join(AGENTS)}")
    if isinstance(games, (str, Path)):
        suite_dir = games
        games = load_suite(games)
    config = config or RunConfig()
    seeds = list(seeds)
    jobs_args = []
    for spec in sorted(games, key=lambda g: g.game_id):
        deps = find_deps(spec, suite_dir)
        for seed in seeds:
            jobs_args.append((spec, seed, agent, config, deps, out_dir))
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            episodes = list(pool.map(_job, jobs_args))
    else:
        episodes = [_job(a) for a in jobs_args]
    modules = list(config.modules) if agent == "nail" else []
    return SuiteReport(agent, seeds, [m for m in MODULE_ORDER if m in modules], episodes)


def ablation_stages(stages=ABLATION_STAGES) -> list[tuple[str, list[str]]]:
    """Cumulative module sets, one per stage."""
    out, acc = [], []
    for label, mods in stages:
        unknown = [m for m in mods if m not in MODULE_ORDER]
        if unknown:
            raise ValueError(f"unknown modules: {', '.join(unknown)}")
        acc = acc + [m for m in mods if m not in acc]
        out.append((label, list(acc)))
    return out


def ablate(games, seeds=DEFAULT_SEEDS, stages=ABLATION_STAGES, step_budget: int | None = None,
           suite_dir=None, jobs: int = 1) -> list[tuple[str, float]]:
    """Mean normalized score for each cumulative stage."""
    if isinstance(games, (str, Path)):
        suite_dir = games
        games = load_suite(games)
    curve = []
    for label, mods in ablation_stages(stages):
        cfg = RunConfig(modules=mods)
        if step_budget is not None:
            cfg.step_budget = step_budget
        report = evaluate_suite(games, "nail", seeds, cfg, suite_dir=suite_dir, jobs=jobs)
        curve.append((label, report.summary()["mean_normalized_score"]))
    return curve


@dataclass
class NavigationAudit:
    kg_edges: set  # (room, direction, room) through the location -> room mapping
    truth_edges: set  # moves the player actually made
    room_of: dict  # KG location id -> ground-truth rooms seen while there
    duplicates: list  # rooms claimed by more than one KG location

    @property
    def exact(self) -> bool:
        consistent = all(len(rooms) == 1 for rooms in self.room_of.values())
        return consistent and not self.duplicates and self.kg_edges == self.truth_edges


def navigation_audit(spec, seed: int, step_budget: int = 1000, config: RunConfig | None = None) -> NavigationAudit:
    """Compare the agent's recovered map with the moves the engine actually made."""
    truth_edges = set()
    room_of: dict = {}
    prev = {"room": spec.start_room}

    def on_event(kg, truth, obs, action, module, settled):
        if action in engine.DIRECTIONS and truth.player_room != prev["room"] and not obs.done:
            truth_edges.add((prev["room"], action, truth.player_room))
        prev["room"] = truth.player_room
        if settled and kg.current_location is not None:
            room_of.setdefault(kg.current_location, set()).add(truth.player_room)

    result = run_episode(spec, seed=seed, step_budget=step_budget, config=config, on_event=on_event)
    mapping = {loc: next(iter(rooms)) for loc, rooms in room_of.items() if len(rooms) == 1}
    kg_edges = {(mapping.get(a), d, mapping.get(b)) for a, d, b in result.kg.connections}
    claimed: dict = {}
    for loc in result.kg.locations:
        if loc in mapping:
            claimed.setdefault(mapping[loc], []).append(loc)
    duplicates = sorted(r for r, locs in claimed.items() if len(locs) > 1)
    return NavigationAudit(kg_edges, truth_edges, room_of, duplicates)
