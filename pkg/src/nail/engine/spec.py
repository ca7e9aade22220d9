"""Declarative game definitions: data types, JSON loading and validation."""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from importlib import resources
from pathlib import Path
from typing import Any

from nail.textutils import tokenize

DIRECTIONS = ("north", "south", "east", "west", "northeast", "northwest",
              "southeast", "southwest", "up", "down", "enter", "exit")
DIRECTION_ALIASES = {
    "n": "north", "s": "south", "e": "east", "w": "west", "ne": "northeast",
    "nw": "northwest", "se": "southeast", "sw": "southwest", "u": "up", "d": "down",
    "in": "enter", "out": "exit", "inside": "enter", "outside": "exit",
}
ARTICLES = frozenset({"the", "a", "an"})
PREPOSITIONS = ("with", "in", "into", "on", "onto", "to", "about", "at", "from",
                "under", "inside", "behind", "through", "over")
ATTRIBUTES = frozenset({"openable", "lockable", "switchable", "consumable"})
SPECIAL_PLACES = ("inventory", "nowhere")

# Verb phrases every game understands; each maps to the engine's handler name.
BUILTIN_VERBS = {
    "take": "take", "get": "take", "pick up": "take", "grab": "take",
    "drop": "drop", "put down": "drop", "discard": "drop",
    "examine": "examine", "x": "examine", "look at": "examine", "inspect": "examine",
    "check": "examine", "describe": "examine", "look": "examine",
    "read": "read",
    "open": "open", "close": "close", "shut": "close",
    "lock": "lock", "unlock": "unlock",
    "turn on": "turn_on", "switch on": "turn_on", "light": "turn_on",
    "turn off": "turn_off", "switch off": "turn_off", "extinguish": "turn_off",
    "put": "put", "insert": "put", "place": "put",
    "eat": "eat", "drink": "eat", "consume": "eat",
    "search": "search", "look in": "search", "look inside": "search",
    "look under": "search", "look behind": "search",
    "wear": "wear", "remove": "remove", "take off": "remove",
    "push": "generic", "press": "generic", "pull": "generic", "move": "generic",
    "turn": "generic", "climb": "generic", "enter": "generic", "exit": "generic",
    "give": "generic", "show": "generic", "ask": "generic", "tell": "generic",
    "attack": "generic", "kill": "generic", "hit": "generic", "break": "generic",
    "throw": "generic", "tie": "generic", "cut": "generic", "burn": "generic",
    "fill": "generic", "empty": "generic", "pour": "generic", "dig": "generic",
    "touch": "generic", "feel": "generic", "rub": "generic", "shake": "generic",
    "wave": "generic", "kiss": "generic", "wake": "generic", "knock on": "generic",
    "ring": "generic", "smell": "generic", "listen to": "generic", "talk to": "generic",
    "use": "generic", "sit on": "generic", "lie on": "generic", "stand on": "generic",
    "get in": "generic", "get on": "generic", "get out of": "generic", "get off": "generic",
    "climb up": "generic", "climb down": "generic", "kick": "generic", "squeeze": "generic",
    "lift": "generic", "raise": "generic", "lower": "generic", "play": "generic",
    "jump": "generic", "sing": "generic", "pray": "generic", "sleep": "generic",
    "stand": "generic", "stand up": "generic", "sit": "generic", "lie down": "generic",
    "yell": "generic", "shout": "generic", "say": "generic", "wait": "generic",
    "listen": "generic", "dance": "generic",
}
BUILTIN_SHORTCUTS = frozenset({
    "look", "l", "inventory", "i", "go", "walk", "run", "all", "everything",
    "yes", "y", "no", "restart", "restore", "quit", "score", "z", "again",
    "it", "them", "here", "room", "you", "me", "myself",
}) | frozenset(DIRECTIONS) | frozenset(DIRECTION_ALIASES)

DEFAULT_FAILURES = (
    "Nothing happens.",
    "That doesn't seem to do anything.",
    "You can't {verb} the {name}.",
    "Nothing obvious happens.",
)


class GameFormatError(ValueError):
    """The game document is not well-formed; ``line`` is 1-based."""

    def __init__(self, message: str, line: int):
        super().__init__(f"line {line}: {message}")
        self.line = line


class GameValidationError(ValueError):
    """The document parsed but violates an invariant; ``invariant`` names it."""

    def __init__(self, invariant: str, message: str):
        super().__init__(f"{invariant}: {message}")
        self.invariant = invariant


@dataclass(frozen=True)
class Condition:
    kind: str          # "flag", "state", "carrying"
    target: str
    value: Any = True


@dataclass(frozen=True)
class Effects:
    flags: tuple[tuple[str, bool], ...] = ()
    states: tuple[tuple[str, str, bool], ...] = ()
    moves: tuple[tuple[str, str], ...] = ()
    death: str | None = None
    finish: bool = False
    prompt: str | None = None


@dataclass(frozen=True)
class Response:
    verb: str
    text: str
    prep: str | None = None
    second: str | None = None
    effects: Effects = Effects()
    score: int = 0
    requires: tuple[Condition, ...] = ()
    event_id: str = ""


@dataclass(frozen=True)
class Exit:
    to: str | None
    requires: tuple[Condition, ...] = ()
    blocked: str = "You can't go that way."
    death: str | None = None


@dataclass(frozen=True)
class RoomSpec:
    room_id: str
    name: str
    description: str
    exits: dict[str, Exit]
    is_dark: bool = False
    score_on_first_visit: int = 0
    responses: tuple[Response, ...] = ()


@dataclass(frozen=True)
class ObjectSpec:
    object_id: str
    names: tuple[str, ...]
    location: str
    portable: bool = False
    attributes: frozenset[str] = frozenset()
    examine_text: str = ""
    responses: tuple[Response, ...] = ()
    container: bool = False
    scenery: bool = False
    provides_light: bool = False
    usable_in_dark: bool = False
    room_text: str | None = None
    take_text: str = "Taken."
    take_fail: str = "That's hardly portable."
    take_score: int = 0
    key: str | None = None
    initial_state: tuple[tuple[str, bool], ...] = ()

    @property
    def name(self) -> str:
        return self.names[0]


@dataclass(frozen=True)
class PromptSpec:
    prompt_id: str
    text: str
    enter_room: str | None
    answers: dict[str, Response]
    repeat: bool = True


@dataclass(frozen=True)
class FlavorText:
    text: str
    p: float


@dataclass(frozen=True)
class GameSpec:
    game_id: str
    rooms: dict[str, RoomSpec]
    objects: dict[str, ObjectSpec]
    vocabulary: frozenset[str]
    canned_failures: tuple[str, ...]
    max_score: int
    start_room: str
    supports_take_all: bool
    flavor_texts: dict[str, tuple[FlavorText, ...]]
    prompts: dict[str, PromptSpec]
    verbs: dict[str, str] = field(default_factory=dict)
    title: str = ""

    def score_events(self) -> dict[str, int]:
        events = {}
        for room in self.rooms.values():
            if room.score_on_first_visit:
                events[f"visit:{room.room_id}"] = room.score_on_first_visit
            for r in room.responses:
                if r.score:
                    events[r.event_id] = r.score
        for obj in self.objects.values():
            if obj.take_score:
                events[f"take:{obj.object_id}"] = obj.take_score
            for r in obj.responses:
                if r.score:
                    events[r.event_id] = r.score
        for prompt in self.prompts.values():
            for r in prompt.answers.values():
                if r.score:
                    events[r.event_id] = r.score
        return events


# --------------------------------------------------------------------------- loading

def load_game(spec_text: str) -> GameSpec:
    """Parse and validate a game-definition document (JSON)."""
    if not spec_text.strip():
        raise GameFormatError("empty document", 1)
    try:
        doc = json.loads(spec_text)
    except json.JSONDecodeError as exc:
        raise GameFormatError(exc.msg, exc.lineno) from None
    if not isinstance(doc, dict):
        raise GameFormatError("top level must be an object", 1)
    return _build(doc)


def load_game_file(path) -> GameSpec:
    return load_game(Path(path).read_text(encoding="utf-8"))


def bundled_games_dir() -> Path:
    return Path(str(resources.files("nail").joinpath("data/games")))


def bundled_game(name: str) -> GameSpec:
    if not name.endswith(".game"):
        name += ".game"
    return load_game_file(bundled_games_dir() / name)


def _require(doc, key, where):
    if key not in doc:
        raise GameValidationError("schema", f"{where} is missing '{key}'")
    return doc[key]


def _conditions(raw, where):
    out = []
    for c in raw or ():
        if "flag" in c:
            out.append(Condition("flag", c["flag"], bool(c.get("is", True))))
        elif "state" in c:
            obj, _, flag = c["state"].partition(".")
            if not flag:
                raise GameValidationError("schema", f"{where}: state condition needs obj.flag")
            out.append(Condition("state", c["state"], bool(c.get("is", True))))
        elif "carrying" in c:
            out.append(Condition("carrying", c["carrying"], bool(c.get("is", True))))
        else:
            raise GameValidationError("schema", f"{where}: unknown condition {c}")
    return tuple(out)


def _effects(raw, where):
    raw = raw or {}
    flags = tuple((k, bool(v)) for k, v in raw.get("flags", {}).items())
    states = []
    for obj, st in raw.get("state", {}).items():
        for flag, v in st.items():
            states.append((obj, flag, bool(v)))
    moves = tuple((k, v) for k, v in raw.get("move", {}).items())
    unknown = set(raw) - {"flags", "state", "move", "death", "finish", "prompt"}
    if unknown:
        raise GameValidationError("schema", f"{where}: unknown effects {sorted(unknown)}")
    return Effects(flags, tuple(states), moves, raw.get("death"), bool(raw.get("finish")),
                   raw.get("prompt"))


def _response(raw, event_id, where):
    verb = " ".join(tokenize(_require(raw, "verb", where)))
    return Response(
        verb=verb,
        text=_require(raw, "text", where),
        prep=raw.get("prep"),
        second=raw.get("second"),
        effects=_effects(raw.get("effects"), where),
        score=int(raw.get("score", 0)),
        requires=_conditions(raw.get("requires"), where),
        event_id=event_id,
    )


def _build(doc: dict) -> GameSpec:
    meta = _require(doc, "meta", "document")
    game_id = _require(meta, "game_id", "meta")
    rooms = {}
    for i, r in enumerate(_require(doc, "rooms", "document")):
        rid = _require(r, "id", f"rooms[{i}]")
        if rid in rooms:
            raise GameValidationError("unique-ids", f"duplicate room id {rid!r}")
        exits = {}
        for direction, ex in r.get("exits", {}).items():
            direction = DIRECTION_ALIASES.get(direction, direction)
            if direction not in DIRECTIONS:
                raise GameValidationError(
                    "canonical-directions", f"room {rid!r} uses non-canonical direction {direction!r}")
            if isinstance(ex, str):
                exits[direction] = Exit(ex)
            else:
                exits[direction] = Exit(
                    ex.get("to"), _conditions(ex.get("requires"), f"room {rid}"),
                    ex.get("blocked", "You can't go that way."), ex.get("death"))
        responses = tuple(
            _response(x, f"room:{rid}:{j}", f"room {rid}") for j, x in enumerate(r.get("responses", ())))
        rooms[rid] = RoomSpec(
            room_id=rid, name=_require(r, "name", f"room {rid}"),
            description=r.get("description", ""), exits=exits,
            is_dark=bool(r.get("dark", False)),
            score_on_first_visit=int(r.get("score_on_first_visit", 0)),
            responses=responses)

    objects = {}
    for i, o in enumerate(doc.get("objects", [])):
        oid = _require(o, "id", f"objects[{i}]")
        if oid in objects or oid in rooms:
            raise GameValidationError("unique-ids", f"duplicate object id {oid!r}")
        names = tuple(" ".join(tokenize(n)) for n in o.get("names", ()))
        attrs = frozenset(o.get("attributes", ()))
        if attrs - ATTRIBUTES:
            raise GameValidationError("attributes", f"object {oid!r}: unknown {sorted(attrs - ATTRIBUTES)}")
        responses = tuple(
            _response(x, f"obj:{oid}:{j}", f"object {oid}") for j, x in enumerate(o.get("responses", ())))
        init = tuple((k, bool(v)) for k, v in o.get("state", {}).items())
        objects[oid] = ObjectSpec(
            object_id=oid, names=names, location=_require(o, "location", f"object {oid}"),
            portable=bool(o.get("portable", False)), attributes=attrs,
            examine_text=o.get("examine", ""), responses=responses,
            container=bool(o.get("container", False)), scenery=bool(o.get("scenery", False)),
            provides_light=bool(o.get("provides_light", False)),
            usable_in_dark=bool(o.get("usable_in_dark", False)),
            room_text=o.get("room_text"), take_text=o.get("take_text", "Taken."),
            take_fail=o.get("take_fail", "That's hardly portable."),
            take_score=int(o.get("take_score", 0)), key=o.get("key"), initial_state=init)

    prompts = {}
    for i, p in enumerate(doc.get("prompts", [])):
        pid = _require(p, "id", f"prompts[{i}]")
        answers = {}
        for ans in ("yes", "no"):
            raw = _require(p, ans, f"prompt {pid}")
            answers[ans] = _response({"verb": ans, **raw}, f"prompt:{pid}:{ans}", f"prompt {pid}")
        prompts[pid] = PromptSpec(pid, _require(p, "text", f"prompt {pid}"), p.get("enter"),
                                  answers, bool(p.get("repeat", True)))

    flavor = {}
    for rid, items in doc.get("flavor", {}).items():
        flavor[rid] = tuple(FlavorText(f["text"], float(f.get("p", 0.5))) for f in items)

    verbs = dict(BUILTIN_VERBS)
    extra = frozenset(w for v in doc.get("vocabulary_extra", ()) for w in tokenize(v))
    vocab = set(BUILTIN_SHORTCUTS) | set(ARTICLES) | set(PREPOSITIONS) | extra
    for phrase in BUILTIN_VERBS:
        vocab.update(phrase.split())
    for obj in objects.values():
        for n in obj.names:
            vocab.update(n.split())
    for phrase in meta.get("verbs", ()):
        phrase = " ".join(tokenize(phrase))
        verbs.setdefault(phrase, "generic")
        vocab.update(phrase.split())

    spec = GameSpec(
        game_id=game_id, rooms=rooms, objects=objects, vocabulary=frozenset(vocab),
        canned_failures=tuple(meta.get("canned_failures", DEFAULT_FAILURES)),
        max_score=int(meta.get("max_score", -1)), start_room=_require(meta, "start_room", "meta"),
        supports_take_all=bool(meta.get("supports_take_all", True)), flavor_texts=flavor,
        prompts=prompts, verbs=verbs, title=meta.get("title", game_id))
    _validate(spec, meta)
    return spec


def _validate(spec: GameSpec, meta: dict) -> None:
    if spec.start_room not in spec.rooms:
        raise GameValidationError("start-room", f"start_room {spec.start_room!r} is not a declared room")
    places = set(spec.rooms) | set(spec.objects) | set(SPECIAL_PLACES)
    for room in spec.rooms.values():
        if not room.description.strip():
            raise GameValidationError("room-description", f"room {room.room_id!r} has an empty description")
        for direction, ex in room.exits.items():
            if ex.to is not None and ex.to not in spec.rooms:
                raise GameValidationError(
                    "exit-target", f"room {room.room_id!r} exit {direction} leads to undeclared room {ex.to!r}")
            if ex.to is None and ex.death is None:
                raise GameValidationError("exit-target", f"room {room.room_id!r} exit {direction} goes nowhere")
            _check_conditions(spec, ex.requires, f"room {room.room_id} exit {direction}")
        for r in room.responses:
            _check_response(spec, r, places, f"room {room.room_id}")
    for obj in spec.objects.values():
        if not obj.names or not all(obj.names):
            raise GameValidationError("object-names", f"object {obj.object_id!r} has no names")
        if obj.location not in places:
            raise GameValidationError("object-location", f"object {obj.object_id!r} is in unknown place {obj.location!r}")
        if obj.key is not None and obj.key not in spec.objects:
            raise GameValidationError("object-key", f"object {obj.object_id!r} key {obj.key!r} is undeclared")
        for r in obj.responses:
            _check_response(spec, r, places, f"object {obj.object_id}")
    for oid in spec.objects:
        seen, cur = set(), oid
        while cur in spec.objects:
            if cur in seen:
                raise GameValidationError("containment", f"object {oid!r} is inside itself")
            seen.add(cur)
            cur = spec.objects[cur].location
    for prompt in spec.prompts.values():
        if prompt.enter_room is not None and prompt.enter_room not in spec.rooms:
            raise GameValidationError("prompt-trigger", f"prompt {prompt.prompt_id!r} enters unknown room")
        for r in prompt.answers.values():
            _check_effects(spec, r.effects, places, f"prompt {prompt.prompt_id}")
    for rid, items in spec.flavor_texts.items():
        if rid not in spec.rooms:
            raise GameValidationError("flavor", f"flavor text for unknown room {rid!r}")
        for f in items:
            if not 0.0 <= f.p <= 1.0:
                raise GameValidationError("flavor", f"flavor probability {f.p} out of range")
    for obj in spec.objects.values():
        for name in obj.names:
            missing = [w for w in name.split() if w not in spec.vocabulary]
            if missing:  # pragma: no cover - names feed the vocabulary
                raise GameValidationError("vocabulary", f"object {obj.object_id!r} name words {missing}")
    total = sum(spec.score_events().values())
    if spec.max_score != total:
        raise GameValidationError(
            "max-score", f"max_score {spec.max_score} != sum of score events {total}")


def _check_conditions(spec, conds, where):
    for c in conds:
        target = c.target.partition(".")[0]
        if c.kind in ("state", "carrying") and target not in spec.objects:
            raise GameValidationError("condition", f"{where}: unknown object {target!r}")


def _check_effects(spec, eff, places, where):
    for obj, _flag, _v in eff.states:
        if obj not in spec.objects:
            raise GameValidationError("effect", f"{where}: unknown object {obj!r}")
    for obj, place in eff.moves:
        if obj not in spec.objects or (place not in places and place != "here"):
            raise GameValidationError("effect", f"{where}: bad move {obj!r} -> {place!r}")
    if eff.prompt is not None and eff.prompt not in spec.prompts:
        raise GameValidationError("effect", f"{where}: unknown prompt {eff.prompt!r}")


def _check_response(spec, r, places, where):
    if r.verb not in spec.verbs:
        raise GameValidationError("response-verb", f"{where}: verb {r.verb!r} is not in the vocabulary")
    if r.second is not None and r.second not in spec.objects:
        raise GameValidationError("response-object", f"{where}: unknown second object {r.second!r}")
    _check_conditions(spec, r.requires, where)
    _check_effects(spec, r.effects, places, where)
