#!/usr/bin/env python3
"""Regenerate the bundled data files under src/nail/data.

    python tools/build_data.py --brill /path/to/pattern3/text/en

The Brill directory is only needed for the lexicon and the verb list fill;
the two corpora are generated from the word lists in if_words.py alone.
Output is deterministic.
"""
import argparse
import json
import random
import re
from pathlib import Path

from if_words import (ADJECTIVES, CORE_VERBS, LEXICON_OVERRIDES, NOUN_CLASSES,
                      PHRASAL_VERBS)

DATA = Path(__file__).resolve().parent.parent / "src" / "nail" / "data"
N_VERBS = 561
LEXICON_SIZE = 9000

PENN = {
    "NN": "noun", "NNS": "noun", "NNP": "noun", "NNPS": "noun",
    "VB": "verb", "VBD": "verb", "VBG": "verb", "VBN": "verb", "VBP": "verb", "VBZ": "verb",
    "MD": "verb",
    "JJ": "adjective", "JJR": "adjective", "JJS": "adjective",
    "DT": "determiner", "PDT": "determiner", "WDT": "determiner", "PRP$": "determiner",
    "IN": "preposition", "TO": "preposition",
    "PRP": "pronoun", "WP": "pronoun", "WP$": "pronoun",
}

# Sentences from the response tables used to check the detector; never emitted verbatim.
HELD_OUT_RESPONSES = {
    "I didn't understand that sentence.",
    "You can't go that way.",
    "You can't use multiple objects with that verb.",
    "You try to push past, but vines block your way.",
    "I don't know the word xyzzy.",
    "Even with a lamp, you would not chance these stairs in the darkness.",
    "The gentle tapping sounds again.",
    "Help! You hurtle through the cave opening!",
    "The grating opens.",
    "The cyclops seems somewhat agitated.",
}


# --------------------------------------------------------------------------- lexicon

def build_lexicon(brill_dir):
    tags = {}
    for line in (brill_dir / "en-lexicon.txt").read_text(encoding="utf-8").splitlines():
        if line.startswith(";") or not line.strip():
            continue
        word, tag = line.split()
        tags.setdefault(word.lower(), set()).add(tag)
    ranked = []
    for line in (brill_dir / "en-frequency.txt").read_text(encoding="utf-8").splitlines():
        parts = line.split()
        if len(parts) == 2 and re.fullmatch(r"[a-z][a-z'\-]*", parts[0]):
            ranked.append(parts[0])
    infinitives = set()
    for line in (brill_dir / "en-verbs.txt").read_text(encoding="utf-8").splitlines():
        if line.startswith(";") or "," not in line:
            continue
        infinitives.update(f.lower() for f in line.split(",") if f)

    lexicon = {}
    for word in ranked:
        if word in lexicon or word not in tags:
            continue
        coarse = {PENN.get(t, "other") for t in tags[word]}
        if "VBG" in tags[word]:
            coarse.add("noun")
        if word in infinitives:
            coarse.add("verb")
        lexicon[word] = coarse
        if len(lexicon) >= LEXICON_SIZE:
            break
    words = set(CORE_VERBS) | {p.split()[0] for p in PHRASAL_VERBS}
    for word in words:
        lexicon.setdefault(word, set()).add("verb")
    for cls in NOUN_CLASSES.values():
        for noun in cls:
            lexicon.setdefault(noun, set()).add("noun")
    for adj in ADJECTIVES:
        lexicon.setdefault(adj, set()).add("adjective")
    for word, spec in LEXICON_OVERRIDES.items():
        lexicon[word] = set(spec.split(","))
    lines = [f"{w}\t{','.join(sorted(t))}" for w, t in sorted(lexicon.items())]
    (DATA / "lexicon.tsv").write_text("\n".join(lines) + "\n", encoding="utf-8")
    return len(lines)


# --------------------------------------------------------------------------- verbs

STOP_VERBS = set("be is are was were been have has had do does did get got go make say "
                 "let may might must shall should will would can could need ought".split())


def build_verbs(brill_dir):
    verbs = list(dict.fromkeys(CORE_VERBS + PHRASAL_VERBS))
    if len(verbs) < N_VERBS:
        base = {}
        for line in (brill_dir / "en-lexicon.txt").read_text(encoding="utf-8").splitlines():
            if line.startswith(";") or not line.strip():
                continue
            word, tag = line.split()
            if tag == "VB":
                base[word.lower()] = True
        for line in (brill_dir / "en-frequency.txt").read_text(encoding="utf-8").splitlines():
            parts = line.split()
            if len(parts) != 2:
                continue
            w = parts[0]
            if (w in base and w not in STOP_VERBS and w not in verbs
                    and re.fullmatch(r"[a-z]{3,}", w)):
                verbs.append(w)
                if len(verbs) == N_VERBS:
                    break
    verbs = verbs[:N_VERBS]
    assert len(verbs) == N_VERBS, len(verbs)
    (DATA / "verbs.txt").write_text("\n".join(verbs) + "\n", encoding="utf-8")
    return verbs


# --------------------------------------------------------------------------- LM corpus

C = NOUN_CLASSES
ALL_NOUNS = sorted({n for cls in C.values() for n in cls})

# verb -> (weight, noun classes it takes)
VERB_PREFS = {
    "take": (30, ["portable", "readable", "edible", "wearable", "lightable"]),
    "get": (12, ["portable", "readable", "edible", "wearable"]),
    "pick up": (6, ["portable", "readable"]),
    "drop": (6, ["portable", "readable", "edible"]),
    "open": (22, ["openable"]),
    "close": (5, ["openable"]),
    "examine": (26, list(C)),
    "x": (6, list(C)),
    "look at": (6, list(C)),
    "read": (9, ["readable"]),
    "search": (7, ["searchable", "openable"]),
    "look in": (3, ["openable", "searchable"]),
    "look under": (3, ["searchable", "fixed"]),
    "push": (5, ["pushable"]),
    "press": (3, ["pushable"]),
    "pull": (4, ["pushable"]),
    "move": (4, ["pushable", "searchable"]),
    "turn on": (6, ["lightable"]),
    "light": (4, ["lightable"]),
    "turn off": (2, ["lightable"]),
    "eat": (4, ["edible"]),
    "drink": (3, ["drinkable"]),
    "wear": (4, ["wearable"]),
    "remove": (2, ["wearable"]),
    "unlock": (3, ["openable"]),
    "lock": (1, ["openable"]),
    "climb": (4, ["climbable"]),
    "attack": (3, ["character"]),
    "kill": (3, ["character"]),
    "talk to": (3, ["character"]),
    "wake": (1, ["character"]),
    "throw": (2, ["portable"]),
    "break": (2, ["fixed", "openable"]),
    "enter": (2, ["fixed", "openable"]),
    "knock on": (1, ["openable"]),
    "ring": (1, ["pushable"]),
    "wave": (1, ["portable"]),
    "shake": (1, ["portable"]),
    "smell": (1, ["edible", "drinkable"]),
    "touch": (1, list(C)),
    "fill": (1, ["openable"]),
    "dig": (1, ["searchable"]),
    "burn": (1, ["readable"]),
    "tie": (1, ["climbable"]),
    "cut": (1, ["climbable"]),
}

# The ten verb-object-preposition-object templates, with the classes of x and y.
VOPO = [
    ("put", "in", ["portable", "edible", "readable"], ["openable"]),
    ("open", "with", ["openable"], ["portable"]),
    ("unlock", "with", ["openable"], ["portable"]),
    ("give", "to", ["portable", "edible"], ["character"]),
    ("attack", "with", ["character"], ["portable"]),
    ("tie", "to", ["climbable"], ["fixed", "climbable"]),
    ("pour", "on", ["drinkable"], ["lightable", "fixed"]),
    ("show", "to", ["portable", "readable"], ["character"]),
    ("ask", "about", ["character"], ["portable", "character", "readable"]),
    ("use", "on", ["portable"], ["fixed", "openable", "character"]),
]

SINGLE = {"north": 10, "south": 10, "east": 10, "west": 10, "northeast": 3,
          "northwest": 3, "southeast": 3, "southwest": 3, "up": 6, "down": 6,
          "enter": 2, "exit": 2, "look": 14, "inventory": 10, "wait": 3, "n": 4,
          "s": 4, "e": 4, "w": 4, "i": 3, "l": 3, "jump": 1, "listen": 1, "score": 1,
          "take all": 4, "yes": 1, "no": 1}

# Object keys never used with the preposition-free form of some verbs.
PREPS_VPO = ["in", "under", "behind", "on", "through"]


def _pick(rng, weighted):
    items = list(weighted.items())
    total = sum(w for _, w in items)
    r = rng.uniform(0, total)
    for k, w in items:
        r -= w
        if r <= 0:
            return k
    return items[-1][0]


def _noun(rng, classes):
    cls = rng.choice(classes)
    return rng.choice(C[cls])


def _np(rng, noun, article_p=0.35, adj_p=0.1):
    words = []
    if rng.random() < article_p:
        words.append("the")
    if rng.random() < adj_p:
        words.append(rng.choice(ADJECTIVES))
    words.append(noun)
    return " ".join(words)


def build_lm_corpus(verbs, n=50000, seed=2018):
    rng = random.Random(seed)
    verb_weights = {v: w for v, (w, _) in VERB_PREFS.items()}
    rare = [v for v in verbs if v not in VERB_PREFS]
    lines = []
    while len(lines) < n:
        r = rng.random()
        if r < 0.28:
            lines.append(_pick(rng, SINGLE))
        elif r < 0.80:
            verb = _pick(rng, verb_weights)
            lines.append(f"{verb} {_np(rng, _noun(rng, VERB_PREFS[verb][1]))}")
        elif r < 0.86:
            verb = rng.choice(rare)
            lines.append(f"{verb} {_np(rng, rng.choice(ALL_NOUNS), article_p=0.2)}")
        elif r < 0.90:
            verb = rng.choice(["look", "search", "hide", "climb", "crawl", "reach"])
            prep = rng.choice(PREPS_VPO)
            lines.append(f"{verb} {prep} {_np(rng, _noun(rng, ['searchable', 'fixed', 'openable']))}")
        else:
            verb, prep, xs, ys = rng.choice(VOPO)
            x = _noun(rng, xs)
            y = _noun(rng, ys)
            if x == y:
                continue
            art = 0.3
            lines.append(f"{verb} {_np(rng, x, art, 0.05)} {prep} {_np(rng, y, art, 0.05)}")
    lines = [ln for ln in lines if len(ln.split()) <= 5 and ln not in ("open the torch", "light the door")]
    (DATA / "lm_corpus.txt").write_text("\n".join(lines) + "\n", encoding="utf-8")
    return len(lines)


# --------------------------------------------------------------------------- validity corpus

NONSENSE = ["xyzzy", "plugh", "frobozz", "blorb", "zorkmid", "quendor", "gnusto",
            "rezrov", "frotz", "yomin", "kulcad", "flurb", "glorf", "snarf", "wibble"]
DIRS = ["north", "south", "east", "west", "northeast", "northwest", "southeast",
        "southwest", "up", "down"]
ROOMS = ["kitchen", "cellar", "attic", "hallway", "study", "library", "garden", "cave",
         "chamber", "passage", "clearing", "forest", "tower", "crypt", "vault", "hut",
         "barn", "shed", "bedroom", "bathroom", "dungeon", "gallery", "temple", "grotto",
         "courtyard", "corridor", "ballroom", "pantry", "workshop", "observatory"]
ROOM_ADJ = ["dusty", "dark", "narrow", "large", "small", "cold", "damp", "quiet",
            "cluttered", "bright", "ancient", "musty", "cramped", "spacious", "gloomy"]
CREATURES = ["troll", "thief", "guard", "wizard", "dragon", "gnome", "old man", "dog",
             "cyclops", "merchant", "priest", "bat", "spider", "ghost", "robot"]
MOODS = ["angry", "agitated", "annoyed", "puzzled", "pleased", "nervous", "hungry",
         "sleepy", "curious", "amused", "restless", "suspicious"]
ADVS = ["somewhat", "rather", "very", "slightly", "increasingly", "quite", "a little"]
SOUNDS = ["tapping", "knocking", "rumbling", "humming", "ringing", "whistling",
          "scratching", "dripping", "chanting", "buzzing"]
SOUND_ADJ = ["gentle", "faint", "distant", "loud", "muffled", "steady", "eerie", "soft"]
SOUND_VERB = ["sounds again", "grows louder", "stops abruptly", "echoes around you",
              "fades away", "starts up again", "continues", "comes closer"]
SURFACES = ["floor", "carpet", "ground", "table", "rug", "flagstones"]
OBSTACLES = ["vines", "rocks", "thorns", "bushes", "branches", "cobwebs", "roots",
             "boulders", "bars", "weeds"]
ACTIONS = ["push past", "squeeze through", "climb over", "force your way through",
           "get past", "crawl through", "slip by", "step around"]
MOVE_VERBS = ["walk", "stumble", "climb", "crawl", "wander", "slide", "hurtle", "tumble",
              "squeeze", "scramble"]
OPENINGS = ["cave opening", "narrow gap", "trapdoor", "hole", "crack", "doorway",
            "archway", "tunnel", "chute", "window"]

GENERIC_NOUNS = sorted({n for k in ("openable", "portable", "readable", "fixed",
                                    "searchable", "pushable", "edible", "wearable",
                                    "lightable", "climbable") for n in C[k]})


def _a(word):
    return ("an " if word[0] in "aeiou" else "a ") + word


def _room_description(rng):
    room = rng.choice(ROOMS)
    adj = rng.choice(ROOM_ADJ)
    parts = [room.title(), f"You are in {_a(adj)} {room}."]
    for _ in range(rng.randint(1, 4)):
        kind = rng.randrange(5)
        n = rng.choice(GENERIC_NOUNS)
        if kind == 0:
            parts.append(f"There is {_a(n)} here.")
        elif kind == 1:
            parts.append(f"Passages lead {rng.choice(DIRS)} and {rng.choice(DIRS)}.")
        elif kind == 2:
            parts.append(f"{_a(rng.choice(ADJECTIVES)).capitalize()} {n} stands against the wall.")
        elif kind == 3:
            parts.append(f"The {rng.choice(SOUND_ADJ)} {rng.choice(SOUNDS)} of water fills the air.")
        else:
            parts.append(f"To the {rng.choice(DIRS)} you can see {_a(rng.choice(ROOM_ADJ))} {rng.choice(ROOMS)}.")
    sep = "\n" if rng.random() < 0.6 else " "
    return parts[0] + sep + " ".join(parts[1:])


def _success(rng):
    n = rng.choice(GENERIC_NOUNS)
    n2 = rng.choice(GENERIC_NOUNS)
    adj = rng.choice(ADJECTIVES)
    k = rng.randrange(28)
    if k == 0:
        return rng.choice(["Taken.", "Dropped.", "Opened.", "Closed.", "Done.", "Unlocked.",
                           "Locked.", "Eaten.", "Worn.", "Removed.", "Switched on.",
                           "Switched off."])
    if k == 1:
        items = rng.sample(GENERIC_NOUNS, rng.randint(1, 4))
        return "\n".join(f"{i}: {rng.choice(['Taken.', 'Taken.', 'Dropped.', 'Removed.'])}"
                         for i in items)
    if k == 2:
        return f"Opening the {adj} {n} reveals {_a(n2)}."
    if k == 3:
        return f"The {n} {rng.choice(['opens', 'swings open', 'creaks open', 'slides open', 'closes', 'clicks shut', 'unlocks', 'opens slowly'])}."
    if k == 4:
        return f"The {rng.choice(C['lightable'])} is now {rng.choice(['on', 'off', 'lit'])}."
    if k == 5:
        return f"The {n} is {rng.choice(ADJECTIVES)} and {rng.choice(['worn', 'battered', 'well made', 'covered in dust', 'quite ordinary', 'heavier than it looks'])}."
    if k == 6:
        return f"You see nothing special about the {n}."
    if k == 7:
        return _room_description(rng)
    if k == 8:
        return f"The {rng.choice(CREATURES)} seems {rng.choice(ADVS)} {rng.choice(MOODS)}."
    if k == 9:
        return f"The {rng.choice(SOUND_ADJ)} {rng.choice(SOUNDS)} {rng.choice(SOUND_VERB)}."
    if k == 10:
        excl = rng.choice(["Help!", "Whoa!", "Aaargh!", "Oof!", "Yikes!"])
        return f"{excl} You {rng.choice(MOVE_VERBS)} through the {rng.choice(OPENINGS)}!"
    if k == 11:
        items = rng.sample(GENERIC_NOUNS, rng.randint(1, 3))
        return "You are carrying:\n" + "\n".join(f"  {_a(i)}" for i in items)
    if k == 12:
        return f"{rng.choice(['Searching', 'Rummaging through', 'Looking under'])} the {n}, you {rng.choice(['find', 'come across', 'discover', 'uncover'])} {_a(n2)}."
    if k == 13:
        return f"You find {_a(rng.choice(ADJECTIVES))} {n2}!"
    if k == 14:
        return f"Your score has just gone up by {rng.choice(['one point', 'two points', 'five points', 'ten points'])}."
    if k == 15:
        return f"You {rng.choice(['climb', 'scale', 'clamber up'])} the {rng.choice(C['climbable'])}. {rng.choice(['The view is spectacular.', 'It wobbles a little.', 'You can see for miles.'])}"
    if k == 16:
        return f"You eat the {rng.choice(C['edible'])}. {rng.choice(['Delicious.', 'It was rather stale.', 'That really hit the spot.'])}"
    if k == 17:
        return f"The {rng.choice(CREATURES)} {rng.choice(['swings', 'lunges', 'strikes'])} at you and {rng.choice(['kills you', 'knocks you senseless', 'wounds you badly'])}."
    if k == 18:
        return f"The {n} {rng.choice(['rumbles loudly', 'begins to glow', 'hums faintly', 'falls over with a crash', 'shatters into pieces', 'starts to spin'])}."
    if k == 19:
        return f"{rng.choice(['WELCOME', 'NOTICE', 'ATTENTION'])}! {rng.choice(['This is a game of adventure.', 'Trespassers will be prosecuted.', 'The management is not responsible.'])}"
    if k == 20:
        return f"Luckily, the {n} is {rng.choice(['large', 'light', 'small'])} enough for you to {rng.choice(['get hold of', 'carry', 'grab'])}. {rng.choice(['You notice something in the pocket.', 'It feels warm.', ''])}".strip()
    if k == 21:
        return f"You {rng.choice(['get out of', 'climb out of', 'crawl out of', 'roll out of'])} the {rng.choice(['bed', 'hammock', 'coffin', 'barrel', 'boat'])}. {rng.choice(['The room spins.', 'Your head throbs.', 'You feel better.', ''])}".strip()
    if k == 22:
        return f"{rng.choice(['A voice booms', 'The old man asks', 'The guard says'])}: \"{rng.choice(['Do you seek wisdom?', 'Will you help me?', 'Do you want to pass?'])}\" (yes or no)"
    if k == 23:
        return f"It is pitch black. You are likely to be eaten by a grue."
    if k == 24:
        return f"You unlock the {rng.choice(C['openable'])} and {rng.choice(['swing it open', 'pull it open', 'push it open'])}."
    if k == 25:
        return f"The {n} is {adj} but {rng.choice(['not very useful', 'not especially interesting', 'not quite level', 'hardly remarkable', 'not in bad shape'])}."
    if k == 26:
        tail = rng.choice(["", " " + rng.choice(EXAMINE_SUFFIX)])
        return f"The {n} is slightly {rng.choice(['ajar', 'bent', 'open', 'scratched', 'tilted'])}, but {rng.choice(['not enough to matter', 'not by much', 'nothing more than that', 'not enough to reach inside'])}.{tail}"
    return f"You put the {n} {rng.choice(['in', 'on', 'into'])} the {n2}."


def _failure(rng):
    n = rng.choice(GENERIC_NOUNS)
    verb = rng.choice(CORE_VERBS)
    k = rng.randrange(24)
    if k == 0:
        w = rng.choice(NONSENSE + GENERIC_NOUNS + ROOMS)
        return rng.choice([f"I don't know the word {w}.", f"I don't know the word \"{w}\"."])
    if k == 1:
        return rng.choice(["You can't go that way", f"You can't go {rng.choice(DIRS)} from here.",
                           f"There is no way to go {rng.choice(DIRS)}.",
                           f"You can't go {rng.choice(DIRS)}.", "There's no exit in that direction."])
    if k == 2:
        return rng.choice(["You can't see any such thing.", f"You can't see any {n} here.",
                           f"There is no {n} here.", f"I don't see any {n} here."])
    if k == 3:
        return rng.choice(["That's not a verb I recognise.", "That's not a verb I recognize.",
                           "I didn't understand that.", "I don't understand that sentence.",
                           f"I only understood you as far as wanting to {verb}.",
                           "I beg your pardon?", "There was no verb in that sentence!"])
    if k == 4:
        return rng.choice([f"You can't use multiple objects with \"{verb}\".",
                           f"You can't {verb} multiple objects at once.",
                           f"You can't use multiple objects with the verb {verb}.",
                           "You can only do that to one thing at a time."])
    if k == 5:
        return f"You try to {rng.choice(ACTIONS)}, but {rng.choice(OBSTACLES)} block your way."
    if k == 6:
        return f"You try to {verb} the {n}, but {rng.choice(['it will not budge', 'nothing happens', 'it is too heavy', 'your hands slip', 'it refuses to move'])}."
    if k == 7:
        return f"You {rng.choice(['lunge', 'reach', 'grab', 'dive'])} for it, but the {rng.choice(['room', 'world', 'floor', 'ceiling'])} {rng.choice(['spins nauseatingly away', 'lurches sideways', 'tilts away from you', 'swims before your eyes'])}."
    if k == 8:
        return f"It slips through your {rng.choice(['fumbling', 'clumsy', 'shaking', 'numb'])} fingers and {rng.choice(['hits', 'lands on', 'clatters onto', 'bounces off'])} the {rng.choice(SURFACES)} with a {rng.choice(['loud', 'nerve-shattering', 'dull', 'sharp'])} {rng.choice(['bang', 'thud', 'clang', 'crash'])}."
    if k == 9:
        return rng.choice(["That's hardly portable.", "It is fixed in place.",
                           f"The {n} is fixed in place.", "You can't take that.",
                           f"The {n} is too heavy to carry.", "That's fixed in place."])
    if k == 10:
        return rng.choice(["You already have that.", "You don't have that.",
                           f"You aren't carrying the {n}.", f"You don't have the {n}.",
                           f"You're not holding the {n}.", "You already have it."])
    if k == 11:
        return f"The {rng.choice(C['openable'])} is {rng.choice(['locked', 'closed', 'already open', 'already closed', 'stuck', 'shut tight'])}."
    if k == 12:
        return rng.choice(["Nothing happens.", "Nothing obvious happens.",
                           "That doesn't seem to do anything.", "Nothing seems to happen.",
                           f"{verb.capitalize()}ing the {n} has no effect.",
                           f"{verb.capitalize()}ing the {n} doesn't help."])
    if k == 13:
        return rng.choice([f"That's not something you can {verb}.", f"You can't {verb} that.",
                           f"You can't {verb} the {n}.", f"How does one {verb} {_a(n)}?",
                           f"The {n} isn't something you can {verb}."])
    if k == 14:
        return rng.choice([f"What do you want to {verb}?", f"What do you want to {verb} the {n} with?",
                           f"What do you want to {verb} that with?", "Who do you want to talk to?"])
    if k == 15:
        return rng.choice(["You'll have to get out of bed first.",
                           f"You'll have to open the {n} first.",
                           f"You will have to take the {n} first.",
                           f"You need to be holding the {n} first.",
                           f"You must unlock the {rng.choice(C['openable'])} with a key.",
                           f"You need to open the {rng.choice(C['openable'])} first.",
                           f"You'll have to stand up first."])
    if k == 16:
        return rng.choice(["Violence isn't the answer to this one.", "Time passes.",
                           "You jump on the spot, fruitlessly.", "You hear nothing unexpected.",
                           "You smell nothing unexpected.", "You feel nothing unexpected.",
                           "Your singing is abominable.", "Nothing to be gained by that."])
    if k == 17:
        return rng.choice(["Please answer yes or no.", "That was a rhetorical question.",
                           "Please type RESTART, RESTORE or QUIT.", "There is no saved game."])
    if k == 18:
        return f"The {n} {rng.choice(['is not a container', 'is not open', 'is empty', 'cannot be opened', 'will not open'])}."
    if k == 19:
        return rng.choice([f"It's too dark to {verb} anything.",
                           f"You would need more light to {verb} that.",
                           "Even in the dark you would not risk that."])
    if k == 20:
        return rng.choice(["There is nothing here to take.", "There are none at all available!",
                           "There is nothing to take.", f"There is nothing in the {n}."])
    if k == 21:
        return rng.choice(["You can't reach it from here.", f"The {n} is out of reach.",
                           f"You can't reach the {n}.", "It's just out of reach."])
    if k == 22:
        return rng.choice([f"The {rng.choice(CREATURES)} {rng.choice(['ignores you', 'pays no attention', 'does not respond', 'shakes his head'])}.",
                           "There is no reply.", "Nobody answers."])
    return rng.choice(["You can't do that.", "That's not possible.", "You can't.",
                       "That would be less than useful.", "Not that you can see.",
                       "You are unable to do that.", "That's not going to work."])


HINT_MARKERS = ("first.", "you need", "you must", "you'll have to", "you will have to")

# Built-in mock-engine messages, with {n} standing for an object name.
ENGINE_SUCCESS = [
    "You see nothing special about the {n}.", "The {n} is now on.", "The {n} is now off.",
    "Opening the {n} reveals a {m}.", "You put the {n} in the {m}.", "You unlock the {n}.",
    "You lock the {n}.", "In the {n} you see a {m}.", "The {n} is empty.", "Dropped.", "Opened.",
    "Closed.", "You eat the {n}. That really hit the spot.", "The {n} contains a {m}.",
]
ENGINE_FAILURE = [
    "The {n} isn't something you can open.", "The {n} isn't something you can close.",
    "It's already open.", "It's already closed.", "The {n} is locked.", "The {n} doesn't have a lock.",
    "That doesn't seem to fit the lock.", "You aren't holding the {n}.", "It's already on.",
    "It's already off.", "That's not something you can switch on.",
    "That's not something you can switch off.", "What do you want to put the {n} in?",
    "That can't contain things.", "The {n} is closed.", "That's plainly inedible.",
    "You find nothing of interest.", "You can't wear that!", "You aren't wearing that.",
    "You haven't got that.", "There's nothing written on the {n}.", "What do you want to unlock the {n} with?",
    "There are none at all available!", "I beg your pardon?", "That was a rhetorical question.",
    "There is no saved game to restore.", "Please answer RESTART, RESTORE or QUIT.",
    "You can't {v} the {n}.", "That seems pointless.",
]
EXAMINE_SUFFIX = ["It is open.", "It is closed.", "It is switched on.", "It is switched off."]


def _engine_rows(rng):
    """Responses the bundled games and the engine can produce, with their labels."""
    rows = []
    for path in sorted((DATA / "games").glob("*.game")):
        doc = json.loads(path.read_text(encoding="utf-8"))
        for room in doc["rooms"]:
            rows.append(("success", room["name"] + "\n" + room["description"]))
            for ex in room.get("exits", {}).values():
                if isinstance(ex, dict):
                    if ex.get("blocked"):
                        rows.append(("failure", ex["blocked"]))
                    if ex.get("death"):
                        rows.append(("success", ex["death"]))
            for r in room.get("responses", []):
                rows.append(("success", r["text"]))
        for obj in doc.get("objects", []):
            if obj.get("examine"):
                rows.append(("success", obj["examine"]))
                rows.append(("success", obj["examine"] + " " + rng.choice(EXAMINE_SUFFIX)))
            if obj.get("portable"):
                rows.append(("success", obj.get("take_text", "Taken.")))
            elif obj.get("take_fail"):
                rows.append(("failure", obj["take_fail"]))
            for r in obj.get("responses", []):
                hint = any(m in r["text"].lower() for m in HINT_MARKERS)
                rows.append(("failure" if hint else "success", r["text"]))
        for p in doc.get("prompts", []):
            rows.append(("success", p["text"]))
            for ans in ("yes", "no"):
                rows.append(("success", p[ans]["text"]))
    for _ in range(3):
        for t in ENGINE_SUCCESS:
            rows.append(("success", t.format(n=rng.choice(GENERIC_NOUNS), m=rng.choice(GENERIC_NOUNS))))
        for t in ENGINE_FAILURE:
            rows.append(("failure", t.format(n=rng.choice(GENERIC_NOUNS), v=rng.choice(CORE_VERBS))))
    for _ in range(40):
        n = rng.choice(GENERIC_NOUNS)
        desc = f"The {n} is {rng.choice(ADJECTIVES)} and {rng.choice(['worn', 'battered', 'quite ordinary'])}."
        rows.append(("success", desc + " " + rng.choice(EXAMINE_SUFFIX)))
    return rows


def build_validity_corpus(n_success=1500, n_failure=900, seed=1337):
    rng = random.Random(seed)
    rows = []
    seen = set()

    def add(label, text):
        if text in HELD_OUT_RESPONSES or text.replace("'", "’") in HELD_OUT_RESPONSES:
            return False
        if text in seen:
            return False
        seen.add(text)
        rows.append((label, text))
        return True

    for label, text in _engine_rows(rng):
        add(label, text)
    count = sum(1 for label, _ in rows if label == "success")
    while count < n_success:
        count += add("success", _success(rng))
    count = sum(1 for label, _ in rows if label == "failure")
    tries = 0
    while count < n_failure and tries < 200000:
        tries += 1
        count += add("failure", _failure(rng))
    rng.shuffle(rows)
    out = [f"{label}\t{text.replace(chr(10), chr(92) + 'n')}" for label, text in rows]
    (DATA / "validity_corpus.tsv").write_text("\n".join(out) + "\n", encoding="utf-8")
    return len(rows)


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--brill", type=Path, help="pattern3/text/en directory")
    args = ap.parse_args()
    DATA.mkdir(parents=True, exist_ok=True)
    if args.brill:
        print("lexicon entries:", build_lexicon(args.brill))
        verbs = build_verbs(args.brill)
    else:
        verbs = (DATA / "verbs.txt").read_text(encoding="utf-8").split("\n")
        verbs = [v for v in verbs if v]
    print("verbs:", len(verbs))
    print("lm corpus lines:", build_lm_corpus(verbs))
    print("validity examples:", build_validity_corpus())


if __name__ == "__main__":
    main()
