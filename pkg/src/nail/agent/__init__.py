"""The agent: decision modules, arbitration and the episode loop."""
from nail.agent.base import (
    DEFAULT_BUDGET, EAGERNESS, MODULE_ORDER, SPECIALIZED, AgentContext, DecisionModule, RunConfig,
    load_verbs,
)
from nail.agent.loop import EpisodeResult, Transcript, arbitrate, build_modules, run_episode
from nail.agent.modules import (
    MODULE_CLASSES, VOPO_TEMPLATES, Darkness, Examiner, Hoarder, Idler, Interactor, LookOnly,
    Navigator, Restart, YesNo, YouHaveTo, generate_candidates, parse_inventory, parse_take_all,
)

__all__ = [
    "DEFAULT_BUDGET", "EAGERNESS", "MODULE_ORDER", "SPECIALIZED", "AgentContext", "DecisionModule",
    "RunConfig", "load_verbs", "EpisodeResult", "Transcript", "arbitrate", "build_modules",
    "run_episode", "MODULE_CLASSES", "VOPO_TEMPLATES", "Darkness", "Examiner", "Hoarder", "Idler",
    "Interactor", "LookOnly", "Navigator", "Restart", "YesNo", "YouHaveTo", "generate_candidates",
    "parse_inventory", "parse_take_all",
]
