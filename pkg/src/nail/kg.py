"""Knowledge graph: locations, entities, connections, inventory and action records."""
from __future__ import annotations

import json
import logging
from dataclasses import asdict, dataclass, field

from nail.textutils import fuzzy_ratio, tokenize
from nail.validity import VALID_THRESHOLD

log = logging.getLogger(__name__)

INVENTORY = "inventory"
SAME_LOCATION_THRESHOLD = 0.80
STATE_FLAGS = ("open", "locked", "on", "used")
ARTICLES = frozenset({"the", "a", "an"})

# Heuristic attribute hints from entity names; effects observed later refine them.
ATTRIBUTE_HINTS = {
    "switchable": {"lamp", "lantern", "torch", "flashlight", "light", "switch", "radio", "machine",
                   "computer", "television", "tv", "candle", "stove"},
    "openable": {"door", "box", "mailbox", "chest", "window", "gate", "trapdoor", "grating", "drawer",
                 "cabinet", "cupboard", "case", "sack", "bag", "jar", "bottle", "safe", "hatch",
                 "lid", "crate", "trunk", "wardrobe", "closet", "locker", "envelope", "package"},
    "lockable": {"door", "chest", "gate", "safe", "trapdoor", "grating", "locker", "trunk", "cabinet"},
}

# Common verbs whose effects on the graph are encoded; everything else is record-only.
EFFECT_VERBS = {
    "take": "take", "get": "take", "pick up": "take", "grab": "take",
    "drop": "drop", "put down": "drop", "discard": "drop",
    "open": "open", "close": "close", "shut": "close",
    "lock": "lock", "unlock": "unlock",
    "turn on": "turn_on", "switch on": "turn_on", "light": "turn_on",
    "turn off": "turn_off", "switch off": "turn_off", "extinguish": "turn_off",
    "eat": "consume", "drink": "consume", "consume": "consume",
}


class KGError(ValueError):
    pass


def infer_attributes(name: str) -> set[str]:
    toks = set(tokenize(name))
    return {attr for attr, words in ATTRIBUTE_HINTS.items() if toks & words}


def _tokset(name: str) -> frozenset[str]:
    return frozenset(t for t in tokenize(name) if t not in ARTICLES)


@dataclass
class Entity:
    entity_id: int
    names: list[str]
    description: str = ""
    contained: list[int] = field(default_factory=list)
    state: dict = field(default_factory=lambda: {f: None for f in STATE_FLAGS})
    attributes: set[str] = field(default_factory=set)

    @property
    def name(self) -> str:
        return self.names[0]

    def matches(self, name: str) -> bool:
        """True when ``name`` is a token-subset of one of our names, or vice versa."""
        want = _tokset(name)
        if not want:
            return False
        for n in self.names:
            have = _tokset(n)
            if want <= have or have <= want:
                return True
        return False


@dataclass
class ActionRecord:
    action: str
    response: str
    p_valid: float
    epoch: int = 0  # bumped on every game restart


@dataclass
class Location:
    location_id: int
    name: str
    description: str
    entities: list[int] = field(default_factory=list)
    action_records: list[ActionRecord] = field(default_factory=list)
    # direction -> ("failed", None) or ("succeeded", location id); absent means untried
    navigation: dict = field(default_factory=dict)
    # agent bookkeeping: narrative text not yet mined for objects, and one-shot flags
    pending_text: list[str] = field(default_factory=list)
    examined: set[str] = field(default_factory=set)
    hoarded: bool = False

    def last_record(self, action: str) -> ActionRecord | None:
        for rec in reversed(self.action_records):
            if rec.action == action:
                return rec
        return None

    def navigation_status(self, direction: str) -> str:
        return self.navigation.get(direction, ("untried", None))[0]


@dataclass
class KnowledgeGraph:
    locations: dict = field(default_factory=dict)
    entities: dict = field(default_factory=dict)
    places: dict = field(default_factory=dict)  # entity id -> location id | "inventory" | None
    connections: list = field(default_factory=list)  # (from, direction, to) in creation order
    current_location: int | None = None
    inventory: list[int] = field(default_factory=list)
    unrecognized_words: set[str] = field(default_factory=set)
    next_location_id: int = 0
    next_entity_id: int = 0
    epoch: int = 0

    @property
    def current(self) -> Location:
        return self.locations[self.current_location]

    def location_of(self, entity_id: int):
        return self.places.get(entity_id)

    def entities_at(self, place) -> list[Entity]:
        if place == INVENTORY:
            return [self.entities[e] for e in self.inventory]
        return [self.entities[e] for e in self.locations[place].entities]

    def nearby_entities(self) -> list[Entity]:
        """Entities at the current location followed by inventory entities."""
        out = []
        if self.current_location is not None:
            out.extend(self.entities_at(self.current_location))
        out.extend(self.entities_at(INVENTORY))
        return out

    def find_entity(self, name: str, places=None) -> Entity | None:
        """Best match for ``name`` among the given places (default: here, then inventory)."""
        if places is None:
            places = [self.current_location, INVENTORY] if self.current_location is not None else [INVENTORY]
        want = _tokset(name)
        best = None
        for place in places:
            for ent in self.entities_at(place):
                for n in ent.names:
                    have = _tokset(n)
                    if have == want:
                        return ent
                    if want and (want <= have or have <= want):
                        score = len(want & have) / len(want | have)
                        if best is None or score > best[0]:
                            best = (score, ent)
        return best[1] if best else None


# ----------------------------------------------------------------------- operations

def add_location(kg: KnowledgeGraph, name: str, description: str) -> Location:
    if not description or not description.strip():
        raise KGError("location description must be non-empty")
    loc = Location(kg.next_location_id, name, description)
    kg.locations[loc.location_id] = loc
    kg.next_location_id += 1
    if kg.current_location is None:
        kg.current_location = loc.location_id
    return loc


def find_location(kg: KnowledgeGraph, description: str):
    """(Location, similarity) for the best stored match at or above the threshold, else None."""
    best = None
    for loc_id in sorted(kg.locations):
        loc = kg.locations[loc_id]
        r = fuzzy_ratio(loc.description, description)
        if best is None or r > best[1]:
            best = (loc, r)
    if best is not None and best[1] >= SAME_LOCATION_THRESHOLD:
        return best
    return None


def connect(kg: KnowledgeGraph, from_id: int, direction: str, to_id: int) -> KnowledgeGraph:
    if from_id not in kg.locations or to_id not in kg.locations:
        raise KGError(f"cannot connect unknown locations {from_id} -> {to_id}")
    edge = (from_id, direction, to_id)
    if edge not in kg.connections:
        kg.connections.append(edge)
    kg.locations[from_id].navigation[direction] = ("succeeded", to_id)
    return kg


def _check_place(kg, place):
    if place != INVENTORY and place not in kg.locations:
        raise KGError(f"unknown place {place!r}")


def add_entity(kg: KnowledgeGraph, place, name: str, description: str = "") -> Entity:
    _check_place(kg, place)
    name = " ".join(t for t in tokenize(name) if t not in ARTICLES)
    if not name:
        raise KGError("entity name must be non-empty")
    for ent in kg.entities_at(place):
        if ent.matches(name):
            if name not in ent.names:
                ent.names.append(name)
            if description and not ent.description:
                ent.description = description
            ent.attributes |= infer_attributes(name)
            return ent
    ent = Entity(kg.next_entity_id, [name], description, attributes=infer_attributes(name))
    kg.next_entity_id += 1
    kg.entities[ent.entity_id] = ent
    _place(kg, ent.entity_id, place)
    return ent


def _unplace(kg, eid):
    place = kg.places.get(eid)
    if place == INVENTORY:
        kg.inventory.remove(eid)
    elif place is not None:
        kg.locations[place].entities.remove(eid)
    kg.places[eid] = None


def _place(kg, eid, place):
    _unplace(kg, eid)
    if place == INVENTORY:
        kg.inventory.append(eid)
    elif place is not None:
        kg.locations[place].entities.append(eid)
    kg.places[eid] = place


def move_entity(kg: KnowledgeGraph, entity_id: int, place) -> None:
    if place is not None:
        _check_place(kg, place)
    _place(kg, entity_id, place)


def record_action(kg: KnowledgeGraph, location_id: int, action: str, response: str, p_valid: float) -> ActionRecord:
    if location_id not in kg.locations:
        raise KGError(f"unknown location {location_id}")
    rec = ActionRecord(action, response, float(p_valid), kg.epoch)
    kg.locations[location_id].action_records.append(rec)
    return rec


def has_failed(kg: KnowledgeGraph, location_id: int, action: str) -> bool:
    rec = kg.locations[location_id].last_record(action)
    return rec is not None and rec.p_valid < VALID_THRESHOLD


def ever_failed(kg: KnowledgeGraph, location_id: int, action: str) -> bool:
    """Whether any try of ``action`` here was judged a failure, however long ago."""
    return any(r.action == action and r.p_valid < VALID_THRESHOLD
               for r in kg.locations[location_id].action_records)


def has_attempted(kg: KnowledgeGraph, location_id: int, action: str, epoch: int | None = None) -> bool:
    """Whether ``action`` was tried here; with ``epoch``, only counting tries since that restart."""
    rec = kg.locations[location_id].last_record(action)
    return rec is not None and (epoch is None or rec.epoch >= epoch)


def merge_location(kg: KnowledgeGraph, src: int, dst: int) -> None:
    """Fold location ``src`` into ``dst``: edges, entities and records move over."""
    if src == dst:
        return
    a, b = kg.locations[src], kg.locations[dst]
    for eid in list(a.entities):
        _place(kg, eid, dst)
    b.action_records.extend(a.action_records)
    edges = []
    for f, d, t in kg.connections:
        e = (dst if f == src else f, d, dst if t == src else t)
        if e not in edges:
            edges.append(e)
    kg.connections = edges
    for loc in kg.locations.values():
        for d, (status, to) in list(loc.navigation.items()):
            if to == src:
                loc.navigation[d] = (status, dst)
    for d, v in a.navigation.items():
        b.navigation.setdefault(d, v)
    del kg.locations[src]
    if kg.current_location == src:
        kg.current_location = dst


def _split_action(action: str):
    toks = [t for t in tokenize(action) if t not in ARTICLES]
    for n in (2, 1):
        verb = " ".join(toks[:n])
        if len(toks) > n and verb in EFFECT_VERBS:
            rest = toks[n:]
            for i, t in enumerate(rest):
                if t in ("with", "in", "into", "on", "to", "from") and i > 0:
                    rest = rest[:i]
                    break
            if rest in (["all"], ["everything"]):
                return None, ""
            return EFFECT_VERBS[verb], " ".join(rest)
    return None, ""


def apply_action_effects(kg: KnowledgeGraph, action: str, response: str, p_valid: float) -> KnowledgeGraph:
    """Apply the encoded effect of a common verb when the action succeeded."""
    if p_valid < VALID_THRESHOLD:
        return kg
    effect, obj = _split_action(action)
    if effect is None or kg.current_location is None:
        return kg
    ent = kg.find_entity(obj)
    if ent is None:
        log.debug("effect of %r refers to unknown entity %r", action, obj)
        return kg
    state = ent.state
    if effect == "take":
        if kg.places.get(ent.entity_id) != INVENTORY:
            _place(kg, ent.entity_id, INVENTORY)
    elif effect == "drop":
        if kg.places.get(ent.entity_id) == INVENTORY:
            _place(kg, ent.entity_id, kg.current_location)
    elif effect in ("open", "close"):
        state["open"] = effect == "open"
        ent.attributes.add("openable")
    elif effect in ("lock", "unlock"):
        state["locked"] = effect == "lock"
        ent.attributes.add("lockable")
    elif effect in ("turn_on", "turn_off"):
        state["on"] = effect == "turn_on"
        ent.attributes.add("switchable")
    elif effect == "consume":
        state["used"] = True
        _place(kg, ent.entity_id, None)
    return kg


def note_unrecognized(kg: KnowledgeGraph, word: str) -> None:
    w = word.strip().lower()
    if w:
        kg.unrecognized_words.add(w)


def is_blocked(kg: KnowledgeGraph, action: str) -> bool:
    return any(t in kg.unrecognized_words for t in tokenize(action))


# ----------------------------------------------------------------------- export

def _entity_doc(kg, eid):
    ent = kg.entities[eid]
    d = asdict(ent)
    d["attributes"] = sorted(ent.attributes)
    return d


def export_kg(kg: KnowledgeGraph, fmt: str = "json") -> str:
    if fmt in ("json", "structured-json"):
        doc = {
            "locations": [],
            "connections": [list(e) for e in kg.connections],
            "current_location": kg.current_location,
            "inventory": [_entity_doc(kg, e) for e in kg.inventory],
            "detached": [_entity_doc(kg, e) for e, p in sorted(kg.places.items()) if p is None],
            "unrecognized_words": sorted(kg.unrecognized_words),
            "next_location_id": kg.next_location_id,
            "next_entity_id": kg.next_entity_id,
            "epoch": kg.epoch,
        }
        for lid in sorted(kg.locations):
            loc = kg.locations[lid]
            doc["locations"].append({
                "location_id": lid,
                "name": loc.name,
                "description": loc.description,
                "entities": [_entity_doc(kg, e) for e in loc.entities],
                "action_records": [asdict(r) for r in loc.action_records],
                "navigation": {d: list(v) for d, v in sorted(loc.navigation.items())},
                "pending_text": list(loc.pending_text),
                "examined": sorted(loc.examined),
                "hoarded": loc.hoarded,
            })
        return json.dumps(doc, indent=2, sort_keys=True)
    if fmt in ("dot", "graphviz-dot"):
        lines = ["digraph kg {", "  node [shape=box];"]
        for lid in sorted(kg.locations):
            loc = kg.locations[lid]
            names = [kg.entities[e].name for e in loc.entities]
            label = loc.name + ("\\n" + "\\n".join(names) if names else "")
            style = ", penwidth=2" if lid == kg.current_location else ""
            lines.append(f'  L{lid} [label="{_dot_escape(label)}"{style}];')
        if kg.inventory:
            inv = "\\n".join(kg.entities[e].name for e in kg.inventory)
            lines.append(f'  inventory [shape=note, label="inventory\\n{_dot_escape(inv)}"];')
        for a, d, b in kg.connections:
            lines.append(f'  L{a} -> L{b} [label="{d}"];')
        lines.append("}")
        return "\n".join(lines) + "\n"
    raise ValueError(f"unknown export format {fmt!r}")


def _dot_escape(s: str) -> str:
    return s.replace('"', '\\"')


def _entity_from(d) -> Entity:
    return Entity(d["entity_id"], list(d["names"]), d["description"], list(d["contained"]),
                  dict(d["state"]), set(d["attributes"]))


def import_kg(text: str) -> KnowledgeGraph:
    doc = json.loads(text)
    kg = KnowledgeGraph()
    for ld in doc["locations"]:
        loc = Location(ld["location_id"], ld["name"], ld["description"])
        loc.action_records = [ActionRecord(**r) for r in ld["action_records"]]
        loc.navigation = {d: tuple(v) for d, v in ld["navigation"].items()}
        loc.pending_text = list(ld["pending_text"])
        loc.examined = set(ld["examined"])
        loc.hoarded = ld["hoarded"]
        kg.locations[loc.location_id] = loc
        for ed in ld["entities"]:
            ent = _entity_from(ed)
            kg.entities[ent.entity_id] = ent
            loc.entities.append(ent.entity_id)
            kg.places[ent.entity_id] = loc.location_id
    for ed in doc["inventory"]:
        ent = _entity_from(ed)
        kg.entities[ent.entity_id] = ent
        kg.inventory.append(ent.entity_id)
        kg.places[ent.entity_id] = INVENTORY
    for ed in doc["detached"]:
        ent = _entity_from(ed)
        kg.entities[ent.entity_id] = ent
        kg.places[ent.entity_id] = None
    kg.connections = [tuple(e) for e in doc["connections"]]
    kg.current_location = doc["current_location"]
    kg.unrecognized_words = set(doc["unrecognized_words"])
    kg.next_location_id = doc["next_location_id"]
    kg.next_entity_id = doc["next_entity_id"]
    kg.epoch = doc.get("epoch", 0)
    return kg
