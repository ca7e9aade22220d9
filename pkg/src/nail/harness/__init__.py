"""Evaluation tooling: dependency milestones, suite runs, ablation and the CLI."""
from nail.harness.deps import (
    KINDS, Dependency, DependencyTracker, DepsError, bundled_deps, check_dependencies, find_deps,
    load_deps, load_deps_file, validate_deps,
)
from nail.harness.replay import expected_winner, validate_transcript
from nail.harness.suite import (
    ABLATION_STAGES, AGENTS, DEFAULT_SEEDS, RANDOM_ACTIONS, EpisodeReport, NavigationAudit, SuiteReport,
    ablate, ablation_stages, evaluate_suite, load_suite, navigation_audit, run_game, run_random_episode,
)

__all__ = [
    "KINDS", "Dependency", "DependencyTracker", "DepsError", "bundled_deps", "check_dependencies",
    "find_deps", "load_deps", "load_deps_file", "validate_deps", "expected_winner",
    "validate_transcript", "ABLATION_STAGES", "AGENTS", "DEFAULT_SEEDS", "RANDOM_ACTIONS",
    "EpisodeReport", "NavigationAudit", "SuiteReport", "ablate", "ablation_stages", "evaluate_suite", "load_suite",
    "navigation_audit", "run_game", "run_random_episode",
]
