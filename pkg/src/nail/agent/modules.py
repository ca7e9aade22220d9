"""The decision modules."""
from __future__ import annotations

import re

from nail import kg as kgmod
from nail.agent.base import NON_INTERACTIVE_VERBS, AgentContext, DecisionModule
from nail.engine.spec import DIRECTIONS
from nail.lm import rank_actions
from nail.textutils import extract_noun_phrases, fuzzy_ratio, tokenize
from nail.validity import VALID_THRESHOLD

DARK_PHRASES = ("pitch black", "too dark to see")
RESTART_WORDS = ("restart", "restore", "quit")
TAKE_ALL_LINE = re.compile(r"^\s*([^:\n]{1,60}?)\s*:\s+(.+?)\s*$")
CARRYING_LINE = re.compile(r"^\s+(?:an?\s+|some\s+)?(.+?)\s*$")
YES_NO_RE = re.compile(
    r"(?:^|[.!?:]\s+)(do|does|did|would|will|are|is|shall|should|can|could|have|may)\s+(you|i|we)\b[^?.!]*\?\s*$",
    re.IGNORECASE)
HINT_PATTERNS = (
    (re.compile(r"you(?:'ll| will) have to (.+?) first", re.IGNORECASE), 1),
    (re.compile(r"you (?:need|must) (?:to )?(.+?)(?: first)?[.!]", re.IGNORECASE), 1),
)
DIRECTION_SYNONYMS = {"upward": "up", "upwards": "up", "upstairs": "up", "downward": "down",
                      "downwards": "down", "downstairs": "down"}
VOPO_TEMPLATES = (
    "put {x} in {y}", "open {x} with {y}", "unlock {x} with {y}", "give {x} to {y}",
    "attack {x} with {y}", "tie {x} to {y}", "pour {x} on {y}", "show {x} to {y}",
    "ask {x} about {y}", "use {x} on {y}",
)
EXAMINE_CAP = 30  # examine actions per location
NP_STOPWORDS = frozenset({"nothing", "something", "anything", "everything", "none", "all", "it",
                          "them", "you", "yourself", "way", "time", "moment", "lot", "bit"})


def is_dark(text: str) -> bool:
    low = text.lower()
    return any(p in low for p in DARK_PHRASES)


def is_restart_prompt(text: str) -> bool:
    words = set(tokenize(text))
    return all(w in words for w in RESTART_WORDS)


def first_line(text: str) -> str:
    for line in text.splitlines():
        if line.strip():
            return line.strip()
    return text.strip()


def core_description(text: str) -> str:
    """The room-name line and the first description paragraph of a look response.

    Object listings and prompts follow on later lines, so they are left out of
    location matching.
    """
    lines = [ln.strip() for ln in text.strip().splitlines()]
    core = []
    for ln in lines:
        if not ln:
            if core:
                break
            continue
        core.append(ln)
        if len(core) == 2:
            break
    return "\n".join(core) if core else text.strip()


def _content_words(phrase: str) -> list[str]:
    return [t for t in tokenize(phrase) if t not in kgmod.ARTICLES]


# --------------------------------------------------------------------- core modules

class Examiner(DecisionModule):
    """Mines narrative text for noun phrases and examines each one."""

    name = "examiner"
    max_actions = 200

    def eagerness(self, ctx):
        kg = ctx.kg
        if kg.current_location is None or not kg.current.pending_text:
            return 0.0
        return ctx.eagerness[self.name]

    def reduce(self, ctx, name):
        """Drop words the game has said it doesn't know; None when nothing useful remains."""
        toks = [t for t in name.split() if t not in ctx.kg.unrecognized_words]
        if not toks or toks[-1] != name.split()[-1]:
            return None
        return " ".join(toks)

    def wanted(self, ctx, loc, name):
        kg = ctx.kg
        if name is None or name in loc.examined or kgmod.is_blocked(kg, name):
            return False
        toks = name.split()
        if any(t in DIRECTIONS or t in DIRECTION_SYNONYMS or t in NP_STOPWORDS for t in toks):
            return False
        return not any(e.matches(name) for e in kg.nearby_entities())

    def take_control(self, ctx):
        kg = ctx.kg
        loc = kg.current
        while loc.pending_text:
            text = loc.pending_text.pop(0)
            if is_dark(text):
                continue
            for np in extract_noun_phrases(text):
                name = self.reduce(ctx, np.text)
                while self.wanted(ctx, loc, name):
                    if len(loc.examined) >= EXAMINE_CAP or ctx.steps_left <= 0:
                        loc.pending_text.clear()
                        return
                    loc.examined.add(name)
                    obs = yield f"examine {name}"
                    if kg.current_location != loc.location_id:
                        return
                    if ctx.p_valid(obs.text) >= VALID_THRESHOLD and not is_dark(obs.text):
                        kgmod.add_entity(kg, loc.location_id, name, obs.text)
                        break
                    # An unknown modifier may hide a known noun: retry without it.
                    name = self.reduce(ctx, name)


class Hoarder(DecisionModule):
    """On first arrival somewhere, tries "take all" and parses what happened."""

    name = "hoarder"
    max_actions = 2

    def eagerness(self, ctx):
        kg = ctx.kg
        if kg.current_location is None or kg.current.hoarded:
            return 0.0
        return ctx.eagerness[self.name]

    def take_control(self, ctx):
        kg = ctx.kg
        loc = kg.current
        loc.hoarded = True
        obs = yield "take all"
        pairs = parse_take_all(obs.text)
        if pairs:
            for name, response in pairs:
                ok = ctx.p_valid(response) >= VALID_THRESHOLD
                _put_entity(kg, name, kgmod.INVENTORY if ok else loc.location_id, response)
            return
        if ctx.p_valid(obs.text) >= VALID_THRESHOLD and not is_dark(obs.text):
            inv = yield "inventory"
            for name in parse_inventory(inv.text):
                _put_entity(kg, name, kgmod.INVENTORY, "")


def parse_take_all(text: str) -> list[tuple[str, str]]:
    """Split an itemised take-all response into (object name, response) pairs."""
    pairs = []
    for line in text.splitlines():
        if not line.strip():
            continue
        m = TAKE_ALL_LINE.match(line)
        if not m:
            return []
        pairs.append((m.group(1).strip().lower(), m.group(2)))
    return pairs


def parse_inventory(text: str) -> list[str]:
    lines = text.splitlines()
    if not lines or "carrying" not in lines[0].lower():
        return []
    names = []
    for line in lines[1:]:
        m = CARRYING_LINE.match(line)
        if m and line.strip():
            names.append(m.group(1).lower().rstrip("."))
    return names


def _put_entity(kg, name, place, description):
    """Add ``name`` at ``place``, moving an already-known entity there instead of duplicating it."""
    here = kg.current_location
    for where in (here, kgmod.INVENTORY):
        if where is None:
            continue
        for ent in kg.entities_at(where):
            if ent.matches(name):
                if where != place:
                    kgmod.move_entity(kg, ent.entity_id, place)
                return kgmod.add_entity(kg, place, name, description)
    return kgmod.add_entity(kg, place, name, description)


class Interactor(DecisionModule):
    """Tries LM-ranked verb-object and verb-object-preposition-object actions, one per grant."""

    name = "interactor"
    max_actions = 1

    def __init__(self, registration_index=0):
        super().__init__(registration_index)
        self._lists = {}  # (location, epoch, names) -> ranked candidates
        self._consumed = {}  # same key -> actions taken from that list

    def reset(self):
        self._lists.clear()
        self._consumed.clear()

    def _key(self, ctx):
        names = tuple(sorted({e.name for e in ctx.kg.nearby_entities()}))
        return (ctx.kg.current_location, ctx.kg.epoch, names)

    def _ranked(self, ctx, key):
        if key not in self._lists:
            self._lists[key] = rank_by_head_noun(ctx.lm, ctx.verbs, list(key[2]))
        return self._lists[key]

    def next_action(self, ctx):
        kg = ctx.kg
        if kg.current_location is None:
            return None, None
        key = self._key(ctx)
        if not key[2]:
            return None, key
        # Skip anything tried since the last restart, and anything that ever failed here.
        done = {r.action for r in kg.current.action_records
                if r.epoch >= kg.epoch or r.p_valid < VALID_THRESHOLD}
        for action in self._ranked(ctx, key):
            if action in done or kgmod.is_blocked(kg, action):
                continue
            return action, key
        return None, key

    def eagerness(self, ctx):
        action, key = self.next_action(ctx)
        if action is None:
            return 0.0
        k = self._consumed.get(key, 0)
        return ctx.eagerness[self.name] / (1 + k)

    def take_control(self, ctx):
        action, key = self.next_action(ctx)
        if action is None:
            return
        self._consumed[key] = self._consumed.get(key, 0) + 1
        yield action


def rank_by_head_noun(lm, verbs, names) -> list[str]:
    """Candidates ordered by the LM score of their head-noun form.

    Scoring "open door" rather than "open heavy iron door" keeps long entity
    names from being pushed to the bottom of the list by extra n-gram terms.
    """
    heads = {n: n.split()[-1] for n in names}
    proxy = {}
    for x in names:
        for action in generate_candidates(verbs, [x]):
            proxy[action] = action[: len(action) - len(x)] + heads[x]
        for y in names:
            if x != y:
                for t in VOPO_TEMPLATES:
                    proxy[t.format(x=x, y=y)] = t.format(x=heads[x], y=heads[y])
    order = {a: i for i, a in enumerate(rank_actions(lm, sorted(set(proxy.values()))))}
    return sorted(proxy, key=lambda a: (order[proxy[a]], a))


def generate_candidates(verbs, names) -> list[str]:
    verbs = [v for v in verbs if v not in NON_INTERACTIVE_VERBS]
    out = [f"{v} {n}" for v in verbs for n in names]
    for x in names:
        for y in names:
            if x != y:
                out.extend(t.format(x=x, y=y) for t in VOPO_TEMPLATES)
    return out


class Navigator(DecisionModule):
    """Moves in one of the twelve directions and maps where that led."""

    name = "navigator"
    max_actions = 2

    def eagerness(self, ctx):
        return ctx.eagerness[self.name] if ctx.kg.current_location is not None else 0.0

    @staticmethod
    def _stale(loc, direction, epoch):
        """A failed direction is worth retrying after a later success here, or after a restart."""
        last = None
        for i, rec in enumerate(loc.action_records):
            if rec.action == direction:
                last = i
        if last is None:
            return True
        if loc.action_records[last].epoch < epoch:
            return True
        for rec in loc.action_records[last + 1:]:
            if rec.p_valid >= VALID_THRESHOLD and rec.action not in DIRECTIONS and rec.action not in (
                    "look", "inventory", "take all") and not rec.action.startswith("examine "):
                return True
        return False

    def choose(self, ctx):
        kg = ctx.kg
        loc = kg.current
        words = set(tokenize(loc.description))
        mentioned = {DIRECTION_SYNONYMS.get(w, w) for w in words} & set(DIRECTIONS)

        def eligible(d):
            status = loc.navigation_status(d)
            return status == "untried" or (status == "failed" and self._stale(loc, d, kg.epoch))

        open_dirs = [d for d in DIRECTIONS if eligible(d) and not kgmod.is_blocked(kg, d)]
        tier1 = [d for d in open_dirs if d in mentioned]
        if tier1:
            return tier1[0]
        if open_dirs:
            return open_dirs[0]
        known = [d for d in DIRECTIONS if loc.navigation_status(d) == "succeeded"]
        if known:
            return ctx.rng.choice(known)
        return ctx.rng.choice(DIRECTIONS)

    def take_control(self, ctx):
        kg = ctx.kg
        prev = kg.current
        direction = self.choose(ctx)
        obs = yield direction
        text = obs.text
        if is_restart_prompt(text):
            prev.navigation[direction] = ("failed", None)
            return
        if is_dark(text):
            target = self._dark_target(kg, prev, direction)
            kgmod.connect(kg, prev.location_id, direction, target.location_id)
            kg.current_location = target.location_id
            return
        if ctx.p_valid(text) < VALID_THRESHOLD:
            prev.navigation[direction] = ("failed", None)
            return
        match = kgmod.find_location(kg, core_description(text))
        if match is None:
            if ctx.steps_left <= 0:
                return
            look = yield "look"
            text = look.text
            if is_dark(text):
                target = self._dark_target(kg, prev, direction)
                kgmod.connect(kg, prev.location_id, direction, target.location_id)
                kg.current_location = target.location_id
                return
            if fuzzy_ratio(prev.description, core_description(text)) >= kgmod.SAME_LOCATION_THRESHOLD:
                prev.navigation[direction] = ("failed", None)
                return
            match = kgmod.find_location(kg, core_description(text))
        if match is not None:
            target = match[0]
        else:
            target = kgmod.add_location(kg, first_line(text), core_description(text))
            target.pending_text.append(text)
        kgmod.connect(kg, prev.location_id, direction, target.location_id)
        kg.current_location = target.location_id

    @staticmethod
    def _dark_target(kg, prev, direction):
        status, to = prev.navigation.get(direction, ("untried", None))
        if status == "succeeded" and to in kg.locations:
            return kg.locations[to]
        loc = kgmod.add_location(kg, "Darkness", "It is too dark to see. (unlit location)")
        return loc


class Idler(DecisionModule):
    """Last resort: a random verb with a random nearby entity, untried here."""

    name = "idler"

    def eagerness(self, ctx):
        return ctx.eagerness[self.name]

    def take_control(self, ctx):
        kg = ctx.kg
        verbs = [v for v in ctx.verbs if v not in NON_INTERACTIVE_VERBS]
        names = [e.name for e in kg.nearby_entities()]
        loc = kg.current_location
        for _ in range(50):
            verb = ctx.rng.choice(verbs)
            action = f"{verb} {ctx.rng.choice(names)}" if names else verb
            if kgmod.is_blocked(kg, action):
                continue
            if loc is not None and kgmod.has_attempted(kg, loc, action, kg.epoch):
                continue
            yield action
            return
        yield "look"


class LookOnly(DecisionModule):
    """Baseline stub: always looks."""

    name = "lookonly"

    def eagerness(self, ctx):
        return ctx.eagerness[self.name]

    def take_control(self, ctx):
        yield "look"


# --------------------------------------------------------------------- specialized

class Darkness(DecisionModule):
    """Reacts to darkness by switching on a light source, then re-reads the room."""

    name = "darkness"
    max_actions = 2

    def __init__(self, registration_index=0):
        super().__init__(registration_index)
        self._tried = {}  # (location, epoch) -> actions already tried in the dark

    def reset(self):
        self._tried.clear()

    def _options(self, ctx):
        kg = ctx.kg
        opts = [f"turn on {e.name}" for e in kg.entities_at(kgmod.INVENTORY) if "switchable" in e.attributes]
        opts.append("turn on light")
        tried = self._tried.get((kg.current_location, kg.epoch), set())
        return [a for a in opts if a not in tried and not kgmod.is_blocked(kg, a)]

    def eagerness(self, ctx):
        if ctx.kg.current_location is None or not is_dark(ctx.last_text) or is_restart_prompt(ctx.last_text):
            return 0.0
        return ctx.eagerness[self.name] if self._options(ctx) else 0.0

    def take_control(self, ctx):
        kg = ctx.kg
        action = self._options(ctx)[0]
        self._tried.setdefault((kg.current_location, kg.epoch), set()).add(action)
        obs = yield action
        if is_dark(obs.text) or ctx.p_valid(obs.text) < VALID_THRESHOLD or ctx.steps_left <= 0:
            return
        look = yield "look"
        if is_dark(look.text) or is_restart_prompt(look.text):
            return
        refresh_location(kg, look.text)


def refresh_location(kg, text):
    """Give the current (possibly placeholder) location its lit description."""
    loc = kg.current
    core = core_description(text)
    match = kgmod.find_location(kg, core)
    if match is not None and match[0].location_id != loc.location_id:
        target = match[0]
        kgmod.merge_location(kg, loc.location_id, target.location_id)
        loc = target
    else:
        loc.name = first_line(text)
        loc.description = core
    loc.pending_text.append(text)
    loc.hoarded = False


class Restart(DecisionModule):
    """Answers the death prompt with "restart" and resynchronises the graph."""

    name = "restart"
    max_actions = 1

    def eagerness(self, ctx):
        return ctx.eagerness[self.name] if is_restart_prompt(ctx.last_text) else 0.0

    def take_control(self, ctx):
        kg = ctx.kg
        obs = yield "restart"
        if is_restart_prompt(obs.text):
            return
        kg.epoch += 1
        for eid in list(kg.inventory):
            kgmod.move_entity(kg, eid, None)
        for loc in kg.locations.values():
            loc.hoarded = False
        match = kgmod.find_location(kg, core_description(obs.text))
        if match is not None:
            kg.current_location = match[0].location_id
        elif obs.text.strip() and not is_dark(obs.text):
            loc = kgmod.add_location(kg, first_line(obs.text), core_description(obs.text))
            loc.pending_text.append(obs.text)
            kg.current_location = loc.location_id


class YesNo(DecisionModule):
    """Answers a yes/no question at random."""

    name = "yesno"

    def eagerness(self, ctx):
        text = ctx.last_text.strip()
        if not text or is_restart_prompt(text):
            return 0.0
        last = text.splitlines()[-1]
        return ctx.eagerness[self.name] if YES_NO_RE.search(last) else 0.0

    def take_control(self, ctx):
        yield ctx.rng.choice(("yes", "no"))


class YouHaveTo(DecisionModule):
    """Follows explicit hints such as "You'll have to X first"."""

    name = "youhaveto"

    @staticmethod
    def hinted_action(text: str) -> str | None:
        for pattern, group in HINT_PATTERNS:
            m = pattern.search(text)
            if m:
                phrase = m.group(group).strip().rstrip(".!").lower()
                if 1 <= len(_content_words(phrase)) <= 5:
                    return phrase
        return None

    def _action(self, ctx):
        kg = ctx.kg
        if kg.current_location is None:
            return None
        action = self.hinted_action(ctx.last_text)
        if action is None or kgmod.is_blocked(kg, action):
            return None
        if kgmod.has_attempted(kg, kg.current_location, action, kg.epoch):
            return None
        return action

    def eagerness(self, ctx):
        return ctx.eagerness[self.name] if self._action(ctx) else 0.0

    def take_control(self, ctx):
        action = self._action(ctx)
        if action:
            yield action


MODULE_CLASSES = {
    cls.name: cls for cls in (Restart, Darkness, YesNo, YouHaveTo, Hoarder, Examiner,
                              Interactor, Navigator, Idler, LookOnly)
}
