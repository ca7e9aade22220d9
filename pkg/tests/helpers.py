import random

from nail.agent import AgentContext, load_verbs
from nail.engine.world import Observation
from nail.kg import KnowledgeGraph, add_location

HITCHHIKER_TAKE_ALL = (
    "telephone: You lunge for it, but the room spins nauseatingly away.\n"
    "flathead screwdriver: It slips through your fumbling fingers and hits the carpet with a "
    "nerve-shattering bang.\n"
    "toothbrush: You lunge for it, but the room spins nauseatingly away.\n"
    "your gown: Luckily, this is large enough for you to get hold of. You notice something in the pocket."
)


def make_ctx(validity, lm, text="Room\nA plain room.", seed=0):
    kg = KnowledgeGraph()
    loc = add_location(kg, text.splitlines()[0], text)
    loc.pending_text.append(text)
    return AgentContext(kg=kg, validity=validity, lm=lm, verbs=load_verbs(), rng=random.Random(seed),
                        last_observation=Observation(text))


def drive(module, ctx, responses):
    """Run one grant, answering each action with the next canned response; returns the actions."""
    gen = module.take_control(ctx)
    actions = []
    try:
        action = next(gen)
        for text in responses:
            actions.append(action)
            obs = Observation(text)
            ctx.last_observation = obs
            action = gen.send(obs)
        actions.append(action)
    except StopIteration:
        pass
    return actions
