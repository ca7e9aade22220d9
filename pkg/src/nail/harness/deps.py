"""Dependency milestones toward a game's first points, and their sticky checking."""
from __future__ import annotations

import json
from dataclasses import dataclass
from importlib import resources
from pathlib import Path

KINDS = ("EntDep", "ActDep", "LocDep", "InvDep")


class DepsError(ValueError):
    """A dependency file is malformed or refers to something the game lacks."""


@dataclass(frozen=True)
class Dependency:
    kind: str
    label: str
    room: str | None = None  # EntDep, LocDep
    names: tuple[str, ...] = ()  # EntDep
    action: str | None = None  # ActDep
    text: str | None = None  # ActDep
    obj: str | None = None  # InvDep

    def __str__(self) -> str:
        if self.kind == "EntDep":
            return f"EntDep({list(self.names)}, loc={self.room})"
        if self.kind == "ActDep":
            return f"ActDep({self.action!r}, {self.text!r})"
        if self.kind == "LocDep":
            return f"LocDep({self.label!r}, loc={self.room})"
        return f"InvDep({self.label!r}, {self.obj})"


def _dep_from(doc: dict, i: int) -> Dependency:
    kind = doc.get("kind")
    if kind not in KINDS:
        raise DepsError(f"dependency {i}: kind must be one of {', '.join(KINDS)}")
    try:
        if kind == "EntDep":
            names = tuple(n.lower() for n in doc["names"])
            if not names:
                raise DepsError(f"dependency {i}: EntDep needs at least one name")
            return Dependency(kind, names[0], room=doc["room"], names=names)
        if kind == "ActDep":
            return Dependency(kind, doc["action"], action=doc["action"], text=doc["text"])
        if kind == "LocDep":
            return Dependency(kind, doc.get("name", doc["room"]), room=doc["room"])
        return Dependency(kind, doc.get("name", doc["object"]), obj=doc["object"])
    except KeyError as exc:
        raise DepsError(f"dependency {i}: {kind} is missing {exc.args[0]!r}") from None


def validate_deps(deps, spec) -> None:
    for i, d in enumerate(deps):
        if d.room is not None and d.room not in spec.rooms:
            raise DepsError(f"dependency {i}: unknown room {d.room!r} in {spec.game_id}")
        if d.obj is not None and d.obj not in spec.objects:
            raise DepsError(f"dependency {i}: unknown object {d.obj!r} in {spec.game_id}")


def load_deps(text: str, spec=None) -> list[Dependency]:
    """Parse a JSON dependency document; with ``spec``, also check its ids."""
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise DepsError(f"line {exc.lineno}: {exc.msg}") from None
    if not isinstance(doc, dict) or not isinstance(doc.get("deps"), list):
        raise DepsError("expected an object with a 'deps' list")
    if spec is not None and doc.get("game_id", spec.game_id) != spec.game_id:
        raise DepsError(f"deps are for {doc['game_id']!r}, not {spec.game_id!r}")
    deps = [_dep_from(d, i) for i, d in enumerate(doc["deps"])]
    if spec is not None:
        validate_deps(deps, spec)
    return deps


def load_deps_file(path, spec=None) -> list[Dependency]:
    return load_deps(Path(path).read_text(encoding="utf-8"), spec)


def bundled_deps(game_id: str, spec=None) -> list[Dependency] | None:
    res = resources.files("nail").joinpath(f"data/deps/{game_id}.deps")
    if not res.is_file():
        return None
    return load_deps(res.read_text(encoding="utf-8"), spec)


def find_deps(spec, suite_dir=None) -> list[Dependency] | None:
    """Deps for ``spec`` from ``suite_dir/deps``, its sibling ``deps`` dir, or the bundled set."""
    if suite_dir is not None:
        base = Path(suite_dir)
        for cand in (base / "deps", base.parent / "deps"):
            path = cand / f"{spec.game_id}.deps"
            if path.is_file():
                return load_deps_file(path, spec)
    return bundled_deps(spec.game_id, spec)


def _entity_here(kg, names) -> bool:
    if kg.current_location is None:
        return False
    wanted = set(names)
    return any(wanted.intersection(e.names) for e in kg.entities_at(kg.current_location))


class DependencyTracker:
    """Feeds on (kg, ground truth, observation) events; satisfaction never reverts."""

    def __init__(self, deps):
        self.deps = list(deps)
        self.satisfied = [False] * len(self.deps)

    def update(self, kg, truth, observation) -> list[bool]:
        text = observation.text.lower() if observation is not None else ""
        for i, d in enumerate(self.deps):
            if self.satisfied[i]:
                continue
            if d.kind == "LocDep":
                ok = truth.player_room == d.room
            elif d.kind == "InvDep":
                ok = d.obj in truth.inventory
            elif d.kind == "ActDep":
                ok = d.text.lower() in text
            else:
                ok = truth.player_room == d.room and kg is not None and _entity_here(kg, d.names)
            self.satisfied[i] = ok
        return list(self.satisfied)


def check_dependencies(deps, events) -> list[bool]:
    """Sticky satisfaction of ``deps`` over an iterable of (kg, ground truth, observation)."""
    tracker = DependencyTracker(deps)
    for kg, truth, obs in events:
        tracker.update(kg, truth, obs)
    return tracker.satisfied
