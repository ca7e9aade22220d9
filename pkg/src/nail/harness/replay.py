"""Checks a recorded transcript against the arbitration and budget rules."""
from __future__ import annotations

from nail.agent.base import MODULE_ORDER


def expected_winner(eagerness: dict, excluded) -> str | None:
    """Highest bid among modules not excluded; ties go to the earliest registered module."""
    best = None
    for name in sorted(eagerness, key=MODULE_ORDER.index):
        if name in excluded:
            continue
        value = eagerness[name]
        if value > 0.0 and (best is None or value > eagerness[best]):
            best = name
    return best


def validate_transcript(entries, step_budget: int) -> list[str]:
    """Violations found in ``entries`` (a Transcript's entry list); empty when it replays cleanly."""
    problems = []
    steps = 0
    granted = None
    for i, e in enumerate(entries):
        if e["type"] == "grant":
            want = expected_winner(e["eagerness"], set(e["excluded"]))
            if want != e["module"]:
                problems.append(f"entry {i}: grant to {e['module']} but {want} bid highest")
            if e["step"] != steps:
                problems.append(f"entry {i}: grant at step {e['step']}, expected {steps}")
            granted = e["module"]
        elif e["type"] == "step":
            steps += 1
            if e["step"] != steps:
                problems.append(f"entry {i}: step numbered {e['step']}, expected {steps}")
            if granted is not None and e["module"] != granted:
                problems.append(f"entry {i}: {e['module']} acted during a grant to {granted}")
        else:
            problems.append(f"entry {i}: unknown entry type {e['type']!r}")
    if steps > step_budget:
        problems.append(f"{steps} steps exceed the budget of {step_budget}")
    return problems
