"""Decision-module interface, agent context and the eagerness configuration table."""
from __future__ import annotations

import json
import random
from dataclasses import dataclass, field
from importlib import resources
from typing import Generator

from nail import kg as kgmod
from nail.engine.spec import DIRECTIONS
from nail.engine.world import Observation
from nail.lm import NGramModel
from nail.validity import ValidityModel, p_valid

DEFAULT_BUDGET = 1000

# One table for every constant the arbitration depends on.
EAGERNESS = {
    "restart": 0.99,
    "darkness": 0.99,
    "yesno": 0.99,
    "youhaveto": 0.97,
    "hoarder": 0.95,
    "examiner": 0.90,
    "interactor": 0.85,
    "navigator": 0.10,
    "idler": 0.01,
    "lookonly": 0.005,
}

# Registration order; ties in eagerness go to the earliest entry.
MODULE_ORDER = ("restart", "darkness", "yesno", "youhaveto", "hoarder", "examiner",
                "interactor", "navigator", "idler", "lookonly")
SPECIALIZED = ("restart", "darkness", "yesno", "youhaveto")

# Words the agent must never learn to avoid, and verbs it must not probe with.
PROTECTED_WORDS = frozenset(DIRECTIONS) | {"look", "inventory", "take", "all", "yes", "no", "restart", "turn", "on"}
NON_INTERACTIVE_VERBS = frozenset(DIRECTIONS) | {
    "look", "inventory", "restart", "restore", "quit", "save", "score", "yes", "no", "wait",
    "go", "walk", "run", "again", "undo", "verbose", "brief", "script", "version", "help", "hint",
}

ActionIterator = Generator[str, Observation, None]


@dataclass
class AgentContext:
    kg: kgmod.KnowledgeGraph
    validity: ValidityModel
    lm: NGramModel
    verbs: list[str]
    rng: random.Random
    last_observation: Observation | None = None
    step_count: int = 0
    step_budget: int = DEFAULT_BUDGET
    eagerness: dict = field(default_factory=lambda: dict(EAGERNESS))
    _p_cache: dict = field(default_factory=dict, repr=False)

    def p_valid(self, text: str) -> float:
        if text not in self._p_cache:
            self._p_cache[text] = p_valid(self.validity, text)
        return self._p_cache[text]

    @property
    def last_text(self) -> str:
        return self.last_observation.text if self.last_observation else ""

    @property
    def steps_left(self) -> int:
        return self.step_budget - self.step_count


class DecisionModule:
    """Bids for control with ``eagerness`` and, once granted, yields actions one at a time.

    ``take_control`` is a generator: each ``yield`` hands an action to the agent
    loop and receives that action's Observation back. Returning ends the grant.
    """

    name = "module"
    max_actions = 1  # per grant

    def __init__(self, registration_index: int = 0):
        self.registration_index = registration_index

    def eagerness(self, ctx: AgentContext) -> float:
        raise NotImplementedError

    def take_control(self, ctx: AgentContext) -> ActionIterator:
        raise NotImplementedError
        yield  # pragma: no cover

    def reset(self) -> None:
        """Forget per-episode state."""


def load_verbs(path=None) -> list[str]:
    if path is None:
        text = resources.files("nail").joinpath("data/verbs.txt").read_text(encoding="utf-8")
    else:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
    return [line.strip() for line in text.splitlines() if line.strip()]


@dataclass
class RunConfig:
    modules: list[str] = field(default_factory=lambda: list(MODULE_ORDER))
    eagerness: dict = field(default_factory=lambda: dict(EAGERNESS))
    step_budget: int = DEFAULT_BUDGET

    @classmethod
    def from_dict(cls, doc: dict) -> "RunConfig":
        cfg = cls()
        if "modules" in doc:
            cfg.modules = list(doc["modules"])
        unknown = [m for m in cfg.modules if m not in EAGERNESS]
        if unknown:
            raise ValueError(f"unknown modules: {', '.join(unknown)}")
        for name, value in doc.get("eagerness", {}).items():
            if name not in EAGERNESS:
                raise ValueError(f"unknown module in eagerness table: {name}")
            if not 0.0 < float(value) < 1.0:
                raise ValueError(f"eagerness for {name} must lie in (0, 1)")
            cfg.eagerness[name] = float(value)
        cfg.step_budget = int(doc.get("step_budget", cfg.step_budget))
        return cfg

    @classmethod
    def load(cls, path) -> "RunConfig":
        with open(path, encoding="utf-8") as fh:
            return cls.from_dict(json.load(fh))
