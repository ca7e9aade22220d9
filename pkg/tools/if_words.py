"""Hand-curated word lists used by build_data.py to generate the bundled data files."""

# Verbs commonly recognised by IF parsers, roughly in order of usefulness.
CORE_VERBS = """
take get drop open close examine look read search push pull move turn
put insert unlock lock light extinguish eat drink wear remove give show
ask tell attack kill hit break climb enter exit go throw tie untie cut
burn fill empty pour dig jump wait listen smell touch feel rub shake wave
kiss wake knock ring buy sell play sing pray shout yell say answer
press squeeze lift raise lower fix repair clean wash dry wind unwind
inflate deflate mount dismount board ride swim wade cross follow
hide kick punch stab slash chop saw drill tap taste lick bite chew swallow
sleep rest sit stand lie kneel crawl jump hop run walk leave
count measure weigh compare check inspect study observe watch
unfold fold roll unroll spin twist bend straighten stretch tear rip
light ignite melt freeze heat cool boil cook bake fry stir mix blend
plant water grow pick harvest feed pet hug slap tickle comfort
load unload fire shoot aim cock reload wield brandish swing
open shut seal unseal wrap unwrap pack unpack hang unhang
attach detach connect disconnect plug unplug switch flip toggle
pay trade offer borrow lend steal rob free release rescue save
call phone dial type write draw paint erase sign stamp
wear don doff button unbutton zip unzip lace unlace
search scratch dust sweep mop polish shine
listen hear sniff taste
drink sip gulp eat nibble devour consume
oil grease lubricate
pump squeeze crush smash shatter destroy demolish
raise hoist haul drag carry tow tug yank
kick shove nudge prod poke jab
climb descend ascend scale
jump leap vault skip dive
unlock pick open force pry
read decipher translate
pray worship meditate chant
light kindle
""".split()

PHRASAL_VERBS = """
turn on|turn off|switch on|switch off|pick up|put down|look at|look in|look under|
look behind|look through|look inside|get in|get out|get out of|get on|get off|
climb up|climb down|climb on|climb in|climb into|climb out|climb over|go in|go out|
go up|go down|go through|lie on|lie down|lie in|sit on|sit in|sit down|stand up|
stand on|wake up|give up|take off|put on|hang up|blow out|blow up|blow on|
knock on|listen to|talk to|speak to|shout at|yell at|wave at|point at|
jump on|jump over|jump off|jump into|push on|pull on|hold on|let go|let go of|
fill up|empty out|pour out|dig in|dig up|cut up|tear up|break open|pry open|
squeeze into|crawl under|crawl into|crawl through|hide in|hide behind|hide under|
swim in|wade in|dive into|lean on|rest on|step on|stomp on|wipe off|clean up|
read from|drink from|eat from|search in|feel in|reach in|reach into|
unlock with|type on|write on|tap on|ring up|call out|hold up|lift up|
turn over|roll over|kick over|knock over|turn around|look around|walk around|
""".replace("\n", "").split("|")

PHRASAL_VERBS = [p.strip() for p in PHRASAL_VERBS if p.strip()]

# Extra IF-flavoured lexicon entries; tags override or extend the tagger lexicon.
LEXICON_OVERRIDES = {
    "open": "adjective,verb",
    "closed": "adjective",
    "light": "noun,verb,adjective",
    "brass": "noun,adjective",
    "lantern": "noun",
    "key": "noun",
    "lamp": "noun",
    "mailbox": "noun",
    "leaflet": "noun",
    "grating": "noun",
    "trapdoor": "noun",
    "grue": "noun",
    "cyclops": "noun",
    "troll": "noun",
    "gown": "noun",
    "toothbrush": "noun",
    "screwdriver": "noun",
    "flathead": "adjective",
    "elvish": "adjective",
    "jeweled": "adjective",
    "sack": "noun",
    "garlic": "noun",
    "trophy": "noun",
    "song": "noun",
    "bird": "noun",
    "oats": "noun",
    "scroll": "noun",
    "straw": "noun",
    "lever": "noun",
    "wooden": "adjective",
    "rusty": "adjective",
    "iron": "noun,adjective",
    "stone": "noun,adjective",
    "silver": "noun,adjective",
    "golden": "adjective",
    "gold": "noun,adjective",
    "shiny": "adjective",
    "small": "adjective",
    "large": "adjective",
    "white": "adjective,noun",
    "front": "noun,adjective",
    "boarded": "adjective,verb",
    "here": "other",
    "there": "other",
    "north": "other",
    "south": "other",
    "east": "other",
    "west": "other",
    "northeast": "other",
    "northwest": "other",
    "southeast": "other",
    "southwest": "other",
    "up": "preposition,other",
    "down": "preposition,other",
}

# Noun classes for the action corpus; each verb prefers one or more classes.
NOUN_CLASSES = {
    "openable": "door mailbox window chest box gate trapdoor grating drawer cabinet cupboard "
                "case lid sack bag jar bottle book safe locker hatch curtain coffin crate "
                "suitcase envelope package closet wardrobe trunk".split(),
    "lightable": "lamp lantern torch candle match fire flashlight stove fireplace "
                 "candles matches".split(),
    "readable": "leaflet book scroll note letter sign map paper label inscription "
                "newspaper diary page manual card plaque notice poster".split(),
    "edible": "apple bread food lunch garlic biscuits cake cheese sandwich fish carrot "
              "meat fruit berries mushroom oats".split(),
    "drinkable": "water wine potion milk beer coffee tea".split(),
    "wearable": "gown coat cloak hat ring boots gloves helmet mask glasses robe "
                "jacket amulet".split(),
    "character": "troll man woman guard wizard cyclops thief dragon old man "
                 "priest king queen dog cat bird gnome dwarf elf merchant".replace(
                     " ", "_").split(),
    "pushable": "button switch lever rock boulder rug statue bell doorbell panel "
                "wall cart".split(),
    "searchable": "furniture desk bed pile leaves straw drawer pocket body table "
                  "shelf bush sand hay ashes debris rubble couch sofa".split(),
    "portable": "key sword knife rope coin gem egg jewel bottle sword axe shovel "
                "stick torch lamp lantern screwdriver toothbrush wrench hammer "
                "bucket ball towel bone feather scroll leaflet coins".split(),
    "climbable": "tree ladder stairs rope wall cliff mountain hill tower fence "
                 "staircase".split(),
    "fixed": "table altar statue fountain tree house wall floor ceiling "
             "telephone mirror painting window".split(),
}

ADJECTIVES = ("small large old rusty brass wooden iron silver golden shiny "
              "broken dusty ancient heavy tiny glass red blue green white black "
              "strange elvish jeweled leather").split()
