"""Runtime for a loaded GameSpec: parser, world model and step semantics."""
from __future__ import annotations

import random
from dataclasses import dataclass, field

from nail.engine.spec import (
    ARTICLES, DIRECTION_ALIASES, DIRECTIONS, PREPOSITIONS, Condition, Effects,
    GameSpec, ObjectSpec, Response,
)
from nail.textutils import tokenize

PITCH_BLACK = "It is pitch black. You are likely to be eaten by a grue."
RESTART_QUESTION = "Would you like to RESTART, RESTORE a saved game or QUIT?"
DEATH_BANNER = "    ****  You have died  ****"
WIN_BANNER = "    ****  You have won  ****"
GRUE_DEATH = "Oh, no! You have walked into the slavering fangs of a lurking grue!"
NO_VERB = "That's not a verb I recognise."
NOT_HERE = "You can't see any such thing."
RESTART_PROMPT = "__restart__"
META_COMMANDS = frozenset({"look", "inventory", "score", "wait"})


@dataclass
class Observation:
    text: str
    score_delta: int = 0
    moves: int = 0
    score: int = 0
    done: bool = False


@dataclass(frozen=True)
class GroundTruth:
    player_room: str
    inventory: tuple[str, ...]
    object_places: dict
    visited: frozenset
    score: int


@dataclass
class GameState:
    spec: GameSpec
    seed: int
    player_room: str = ""
    object_locations: dict = field(default_factory=dict)
    object_states: dict = field(default_factory=dict)
    flags: dict = field(default_factory=dict)
    score: int = 0
    max_score_reached: int = 0
    moves: int = 0
    rng: random.Random = None
    visited: set = field(default_factory=set)
    fired_events: set = field(default_factory=set)
    answered_prompts: set = field(default_factory=set)
    pending_prompt: str | None = None
    finished: bool = False
    restarts: int = 0
    start_credit_pending: bool = True

    # ------------------------------------------------------------ queries
    def visible_objects(self) -> list[str]:
        """Objects in the room, in the inventory, or inside open containers there."""
        out = []
        for oid in self.spec.objects:
            if self._reachable(oid):
                out.append(oid)
        return out

    def _reachable(self, oid: str) -> bool:
        place = self.object_locations[oid]
        seen = set()
        while place in self.spec.objects:
            if place in seen:  # pragma: no cover - validated acyclic
                return False
            seen.add(place)
            if not self.object_states[place].get("open", False):
                return False
            place = self.object_locations[place]
        return place == self.player_room or place == "inventory"

    def inventory(self) -> list[str]:
        return [o for o, p in self.object_locations.items() if p == "inventory"]

    def is_lit(self) -> bool:
        room = self.spec.rooms[self.player_room]
        if not room.is_dark:
            return True
        for oid, obj in self.spec.objects.items():
            if obj.provides_light and self.object_states[oid].get("on") and self._reachable(oid):
                return True
        return False


def reset(spec: GameSpec, seed: int = 0) -> tuple[GameState, Observation]:
    state = GameState(spec=spec, seed=seed)
    _reset_in_place(state, seed)
    return state, Observation(describe_room(state), 0, 0, 0, False)


def _reset_in_place(state: GameState, seed: int) -> None:
    spec = state.spec
    state.rng = random.Random(seed)
    state.player_room = spec.start_room
    state.object_locations = {oid: o.location for oid, o in spec.objects.items()}
    state.object_states = {}
    for oid, o in spec.objects.items():
        st = {"open": False, "locked": False, "on": False, "used": False, "worn": False}
        st.update(dict(o.initial_state))
        state.object_states[oid] = st
    state.flags = {}
    state.score = 0
    state.moves = 0
    state.visited = {spec.start_room}
    state.fired_events = set()
    state.answered_prompts = set()
    state.pending_prompt = None
    state.finished = False
    state.start_credit_pending = True
    _trigger_enter_prompt(state)


def introspect(state: GameState) -> GroundTruth:
    return GroundTruth(
        player_room=state.player_room,
        inventory=tuple(sorted(state.inventory())),
        object_places=dict(state.object_locations),
        visited=frozenset(state.visited),
        score=state.score,
    )


# ------------------------------------------------------------------ text

def _a(name: str) -> str:
    if name.startswith(("your ", "some ")):
        return name
    return ("an " if name[0] in "aeiou" else "a ") + name


def _list_names(names: list[str]) -> str:
    items = [_a(n) for n in names]
    if len(items) == 1:
        return items[0]
    return ", ".join(items[:-1]) + " and " + items[-1]


def describe_room(state: GameState, with_prompt: bool = True) -> str:
    if not state.is_lit():
        text = PITCH_BLACK
    else:
        room = state.spec.rooms[state.player_room]
        desc = room.description
        for flav in state.spec.flavor_texts.get(room.room_id, ()):
            if state.rng.random() < flav.p:
                desc += " " + flav.text
        lines = [room.name, desc]
        for oid, obj in state.spec.objects.items():
            if state.object_locations[oid] != room.room_id or obj.scenery:
                continue
            if obj.room_text is not None:
                if not obj.room_text:
                    continue
                lines.append(obj.room_text)
            else:
                lines.append(f"There is {_a(obj.name)} here.")
            contents = _contents(state, oid)
            if contents and state.object_states[oid]["open"]:
                lines.append(f"The {obj.name} contains {_list_names(contents)}.")
        text = "\n".join(lines)
    if with_prompt and state.pending_prompt and state.pending_prompt != RESTART_PROMPT:
        text += "\n\n" + state.spec.prompts[state.pending_prompt].text
    return text


def _contents(state: GameState, oid: str) -> list[str]:
    return [state.spec.objects[o].name for o, p in state.object_locations.items() if p == oid]


# ------------------------------------------------------------------ stepping

def step(state: GameState, action: str) -> Observation:
    if state.finished:
        raise RuntimeError("the game has finished; reset before stepping")
    before = state.score
    state.moves += 1
    if state.start_credit_pending:
        state.start_credit_pending = False
        room = state.spec.rooms[state.spec.start_room]
        _award(state, f"visit:{room.room_id}", room.score_on_first_visit)
    text = _dispatch(state, action)
    state.max_score_reached = max(state.max_score_reached, state.score)
    return Observation(text, state.score - before, state.moves, state.score, state.finished)


def _award(state: GameState, event: str, points: int) -> None:
    if points and event not in state.fired_events:
        state.fired_events.add(event)
        state.score += points


def _dispatch(state: GameState, action: str) -> str:
    spec = state.spec
    tokens = [t for t in tokenize(action) if t not in ARTICLES]
    for t in tokenize(action):
        if t not in spec.vocabulary:
            return f"I don't know the word {t}."

    if state.pending_prompt == RESTART_PROMPT:
        if tokens in (["restart"],):
            return _restart(state)
        if tokens == ["restore"]:
            return "There is no saved game to restore.\n\n" + RESTART_QUESTION
        if tokens == ["quit"]:
            return "You can't quit now.\n\n" + RESTART_QUESTION
        return "Please answer RESTART, RESTORE or QUIT.\n\n" + RESTART_QUESTION

    if not tokens:
        return "I beg your pardon?"

    # Shortcuts.
    head = tokens[0]
    if tokens in (["yes"], ["y"], ["no"]):
        if state.pending_prompt:
            return _answer_prompt(state, "no" if head == "no" else "yes")
        return "That was a rhetorical question."
    shortcut = _shortcut(tokens)
    # A yes/no question survives only meta commands; anything else cancels it.
    if state.pending_prompt and shortcut not in META_COMMANDS:
        state.pending_prompt = None
    if shortcut == "look":
        return describe_room(state)
    if shortcut == "inventory":
        inv = [spec.objects[o].name for o in state.inventory()]
        if not inv:
            return "You are empty-handed."
        return "You are carrying:\n" + "\n".join("  " + _a(n) for n in inv)
    if shortcut == "score":
        return f"Your score is {state.score} (total of {spec.max_score} points), in {state.moves} moves."
    if shortcut == "wait":
        return "Time passes."
    if shortcut == "restart":
        return _restart(state)
    if shortcut == "restore":
        return "There is no saved game to restore."
    if shortcut == "quit":
        return "You can't quit now."
    if shortcut == "take_all":
        return _take_all(state)
    if shortcut is not None and shortcut.startswith("go:"):
        return _move(state, shortcut[3:])

    verb, rest = _match_verb(spec, tokens)
    if verb is None:
        return NO_VERB
    obj_toks, prep, obj2_toks = _split_objects(rest)

    if not state.is_lit():
        return _dark_action(state, verb, obj_toks)

    if not obj_toks:
        for r in spec.rooms[state.player_room].responses:
            if r.verb == verb and r.prep is None and _conditions_hold(state, r.requires):
                return _apply_response(state, r)
        return _intransitive(state, verb)

    obj = _resolve(state, obj_toks)
    if obj is None:
        return NOT_HERE
    obj2 = None
    if obj2_toks:
        obj2 = _resolve(state, obj2_toks)
        if obj2 is None:
            return NOT_HERE
    ospec = spec.objects[obj]
    for r in ospec.responses:
        if r.verb != verb or not _conditions_hold(state, r.requires):
            continue
        if r.second is not None and r.second != obj2:
            continue
        if r.prep is not None and r.prep != prep:
            continue
        if r.second is None and obj2 is not None:
            continue
        return _apply_response(state, r)
    handler = spec.verbs.get(verb, "generic")
    return _builtin(state, handler, verb, obj, prep, obj2)


def _shortcut(tokens: list[str]) -> str | None:
    if len(tokens) == 1:
        t = tokens[0]
        if t in ("look", "l"):
            return "look"
        if t in ("inventory", "i"):
            return "inventory"
        if t in ("wait", "z"):
            return "wait"
        if t in ("score", "restart", "restore", "quit"):
            return t
        d = DIRECTION_ALIASES.get(t, t)
        if d in DIRECTIONS:
            return "go:" + d
    if len(tokens) == 2 and tokens[0] in ("go", "walk", "run"):
        d = DIRECTION_ALIASES.get(tokens[1], tokens[1])
        if d in DIRECTIONS:
            return "go:" + d
    if tokens in (["take", "all"], ["get", "all"], ["take", "everything"], ["pick", "up", "all"]):
        return "take_all"
    return None


def _match_verb(spec: GameSpec, tokens: list[str]):
    for n in range(min(4, len(tokens)), 0, -1):
        phrase = " ".join(tokens[:n])
        if phrase in spec.verbs:
            return phrase, tokens[n:]
    return None, tokens


def _split_objects(rest: list[str]):
    for i, t in enumerate(rest):
        if i > 0 and t in PREPOSITIONS:
            return rest[:i], t, rest[i + 1:]
    return rest, None, []


def _resolve(state: GameState, toks: list[str]) -> str | None:
    want = set(toks)
    best = None
    for oid in state.visible_objects():
        for name in state.spec.objects[oid].names:
            words = set(name.split())
            if want <= words:
                score = len(want) / len(words)
                if best is None or score > best[0]:
                    best = (score, oid)
    return best[1] if best else None


def _conditions_hold(state: GameState, conds: tuple[Condition, ...]) -> bool:
    for c in conds:
        if c.kind == "flag":
            ok = bool(state.flags.get(c.target, False))
        elif c.kind == "state":
            obj, _, flag = c.target.partition(".")
            ok = bool(state.object_states[obj].get(flag, False))
        else:
            ok = state.object_locations[c.target] == "inventory"
        if ok != c.value:
            return False
    return True


def _apply_effects(state: GameState, eff: Effects) -> str | None:
    for name, value in eff.flags:
        state.flags[name] = value
    for obj, flag, value in eff.states:
        state.object_states[obj][flag] = value
    for obj, place in eff.moves:
        state.object_locations[obj] = state.player_room if place == "here" else place
    if eff.prompt is not None and eff.prompt not in state.answered_prompts:
        state.pending_prompt = eff.prompt
        return state.spec.prompts[eff.prompt].text
    return None


def _apply_response(state: GameState, r: Response) -> str:
    text = r.text
    extra = _apply_effects(state, r.effects)
    _award(state, r.event_id, r.score)
    if extra:
        text += "\n\n" + extra
    if r.effects.death:
        return _die(state, text + "\n\n" + r.effects.death)
    if r.effects.finish:
        state.finished = True
        return text + "\n\n" + WIN_BANNER
    return text


def _die(state: GameState, text: str) -> str:
    state.pending_prompt = RESTART_PROMPT
    return f"{text}\n\n{DEATH_BANNER}\n\n{RESTART_QUESTION}"


def _restart(state: GameState) -> str:
    state.restarts += 1
    _reset_in_place(state, state.seed + state.restarts)
    return describe_room(state)


def _trigger_enter_prompt(state: GameState) -> None:
    for p in state.spec.prompts.values():
        if p.enter_room == state.player_room and p.prompt_id not in state.answered_prompts:
            state.pending_prompt = p.prompt_id


def _answer_prompt(state: GameState, answer: str) -> str:
    pid = state.pending_prompt
    prompt = state.spec.prompts[pid]
    state.pending_prompt = None
    if answer == "yes" or not prompt.repeat:
        state.answered_prompts.add(pid)
    return _apply_response(state, prompt.answers[answer])


def _move(state: GameState, direction: str) -> str:
    room = state.spec.rooms[state.player_room]
    if not state.is_lit():
        return _die(state, GRUE_DEATH)
    ex = room.exits.get(direction)
    if ex is None:
        return "You can't go that way."
    if not _conditions_hold(state, ex.requires):
        return ex.blocked
    if ex.death is not None:
        return _die(state, ex.death)
    state.player_room = ex.to
    first = ex.to not in state.visited
    state.visited.add(ex.to)
    if first:
        _award(state, f"visit:{ex.to}", state.spec.rooms[ex.to].score_on_first_visit)
    _trigger_enter_prompt(state)
    return describe_room(state)


def _dark_action(state: GameState, verb: str, obj_toks: list[str]) -> str:
    handler = state.spec.verbs.get(verb)
    if handler == "turn_on" and obj_toks:
        obj = _resolve(state, obj_toks)
        if obj is not None and (state.object_locations[obj] == "inventory"
                                or state.spec.objects[obj].usable_in_dark):
            ospec = state.spec.objects[obj]
            for r in ospec.responses:
                if r.verb == verb and _conditions_hold(state, r.requires):
                    return _apply_response(state, r)
            return _builtin(state, "turn_on", verb, obj, None, None)
    return PITCH_BLACK


def _intransitive(state: GameState, verb: str) -> str:
    canned = {
        "jump": "You jump on the spot, fruitlessly.",
        "sing": "Your singing is abominable.",
        "pray": "Nothing practical results from your prayer.",
        "sleep": "You aren't feeling especially drowsy.",
        "listen": "You hear nothing unexpected.",
        "yell": "Nobody hears you.",
        "shout": "Nobody hears you.",
        "dance": "You dance a little jig. Nobody is impressed.",
        "smell": "You smell nothing unexpected.",
        "wait": "Time passes.",
    }
    if verb in canned:
        return canned[verb]
    return f"What do you want to {verb}?"


def _take(state: GameState, oid: str) -> str:
    obj = state.spec.objects[oid]
    if state.object_locations[oid] == "inventory":
        return "You already have that."
    if not obj.portable:
        return obj.take_fail
    state.object_locations[oid] = "inventory"
    _award(state, f"take:{oid}", obj.take_score)
    return obj.take_text


def _take_all(state: GameState) -> str:
    if not state.spec.supports_take_all:
        return NOT_HERE
    if not state.is_lit():
        return PITCH_BLACK
    here = [oid for oid, o in state.spec.objects.items()
            if state.object_locations[oid] == state.player_room and not o.scenery]
    if not here:
        return "There are none at all available!"
    if len(here) == 1:
        return _take(state, here[0])
    return "\n".join(f"{state.spec.objects[o].name}: {_take(state, o)}" for o in here)


def _builtin(state: GameState, handler: str, verb: str, oid: str, prep, oid2) -> str:
    obj: ObjectSpec = state.spec.objects[oid]
    st = state.object_states[oid]
    name = obj.name
    if handler == "take":
        return _take(state, oid)
    if handler == "drop":
        if state.object_locations[oid] != "inventory":
            return "You haven't got that."
        state.object_locations[oid] = state.player_room
        return "Dropped."
    if handler == "examine":
        text = obj.examine_text or f"You see nothing special about the {name}."
        if obj.container and st["open"]:
            contents = _contents(state, oid)
            text += f" The {name} contains {_list_names(contents)}." if contents else f" The {name} is empty."
        elif "openable" in obj.attributes:
            text += f" It is {'open' if st['open'] else 'closed'}."
        if "switchable" in obj.attributes:
            text += f" It is switched {'on' if st['on'] else 'off'}."
        return text
    if handler == "read":
        return f"There's nothing written on the {name}."
    if handler == "open":
        if "openable" not in obj.attributes:
            return f"The {name} isn't something you can open."
        if st["locked"]:
            return f"The {name} is locked."
        if st["open"]:
            return "It's already open."
        st["open"] = True
        contents = _contents(state, oid)
        if contents:
            return f"Opening the {name} reveals {_list_names(contents)}."
        return "Opened."
    if handler == "close":
        if "openable" not in obj.attributes:
            return f"The {name} isn't something you can close."
        if not st["open"]:
            return "It's already closed."
        st["open"] = False
        return "Closed."
    if handler in ("lock", "unlock"):
        if "lockable" not in obj.attributes:
            return f"The {name} doesn't have a lock."
        if oid2 is None:
            return f"What do you want to {verb} the {name} with?"
        if oid2 != obj.key:
            return "That doesn't seem to fit the lock."
        if state.object_locations[oid2] != "inventory":
            return f"You aren't holding the {state.spec.objects[oid2].name}."
        want = handler == "lock"
        if st["locked"] == want:
            return f"It's already {handler}ed."
        st["locked"] = want
        if want:
            st["open"] = False
        return f"You {handler} the {name}."
    if handler == "turn_on":
        if "switchable" not in obj.attributes:
            return "That's not something you can switch on."
        if st["on"]:
            return "It's already on."
        was_lit = state.is_lit()
        st["on"] = True
        text = f"The {name} is now on."
        if not was_lit and state.is_lit():
            text += "\n\n" + describe_room(state, with_prompt=False)
        return text
    if handler == "turn_off":
        if "switchable" not in obj.attributes:
            return "That's not something you can switch off."
        if not st["on"]:
            return "It's already off."
        st["on"] = False
        text = f"The {name} is now off."
        if not state.is_lit():
            text += "\n\n" + PITCH_BLACK
        return text
    if handler == "put":
        if oid2 is None:
            return f"What do you want to put the {name} in?"
        if state.object_locations[oid] != "inventory":
            return "You haven't got that."
        target = state.spec.objects[oid2]
        if not target.container:
            return "That can't contain things."
        if not state.object_states[oid2]["open"]:
            return f"The {target.name} is closed."
        state.object_locations[oid] = oid2
        return f"You put the {name} in the {target.name}."
    if handler == "eat":
        if "consumable" not in obj.attributes:
            return "That's plainly inedible."
        st["used"] = True
        state.object_locations[oid] = "nowhere"
        return f"You {verb} the {name}. That really hit the spot."
    if handler == "search":
        if obj.container and st["open"]:
            contents = _contents(state, oid)
            if contents:
                return f"In the {name} you see {_list_names(contents)}."
            return f"The {name} is empty."
        return "You find nothing of interest."
    if handler == "wear":
        return "You can't wear that!"
    if handler == "remove":
        return "You aren't wearing that."
    failures = state.spec.canned_failures
    return state.rng.choice(failures).format(verb=verb, name=name)
