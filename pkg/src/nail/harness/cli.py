"""Command-line entry point: run, eval, ablate, train-validity, train-lm, deps."""
from __future__ import annotations

import argparse
import json
import logging
import sys
from pathlib import Path

from nail import __version__, engine
from nail import kg as kgmod
from nail import lm as lmmod
from nail import validity as vmod
from nail.agent import MODULE_ORDER, RunConfig, run_episode
from nail.harness.deps import DependencyTracker, DepsError, find_deps, load_deps_file
from nail.harness.replay import validate_transcript
from nail.harness.suite import AGENTS, DEFAULT_SEEDS, ablate, evaluate_suite

log = logging.getLogger("nail")


class ConfigError(Exception):
    pass


def _game(arg: str):
    """A game file path, or the name of a bundled game."""
    path = Path(arg)
    if path.is_file():
        return engine.load_game_file(path)
    try:
        return engine.bundled_game(arg)
    except FileNotFoundError:
        raise ConfigError(f"unknown game: {arg}") from None


def _seeds(text: str) -> list[int]:
    try:
        seeds = [int(s) for s in text.split(",") if s.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"seeds must be comma-separated integers: {text!r}") from None
    if not seeds:
        raise argparse.ArgumentTypeError("at least one seed is required")
    return seeds


def _modules(text: str) -> list[str]:
    mods = [m.strip() for m in text.split(",") if m.strip()]
    unknown = [m for m in mods if m not in MODULE_ORDER]
    if unknown:
        raise argparse.ArgumentTypeError(f"unknown modules: {', '.join(unknown)}")
    return mods


def _config(args) -> RunConfig:
    cfg = RunConfig.load(args.config) if getattr(args, "config", None) else RunConfig()
    if getattr(args, "modules", None):
        cfg.modules = args.modules
    if getattr(args, "steps", None) is not None:
        if args.steps < 1:
            raise ConfigError("--steps must be positive")
        cfg.step_budget = args.steps
    return cfg


def cmd_run(args) -> int:
    spec = _game(args.game)
    cfg = _config(args)
    deps = find_deps(spec)
    tracker = DependencyTracker(deps or [])
    result = run_episode(spec, seed=args.seed, step_budget=cfg.step_budget, config=cfg,
                         on_event=lambda kg, gt, obs, *_: tracker.update(kg, gt, obs))
    text = result.transcript.to_text()
    if args.transcript:
        Path(args.transcript).write_text(text, encoding="utf-8")
    elif not args.quiet:
        sys.stdout.write(text)
    if args.dump_kg:
        fmt = "dot" if args.dump_kg.endswith(".dot") else "json"
        Path(args.dump_kg).write_text(kgmod.export_kg(result.kg, fmt), encoding="utf-8")
    problems = validate_transcript(result.transcript.entries, cfg.step_budget)
    for p in problems:
        print(f"replay: {p}", file=sys.stderr)
    print(f"{spec.game_id} seed={args.seed} score={result.raw_score}/{result.max_score} "
          f"normalized={result.normalized_score:.4f} steps={result.steps}")
    if deps:
        print(f"deps satisfied {sum(tracker.satisfied)}/{len(deps)}")
    return 1 if problems else 0


def cmd_eval(args) -> int:
    report = evaluate_suite(args.suite, args.agent, args.seeds, _config(args), out_dir=args.out_dir,
                            jobs=args.jobs)
    if args.json:
        Path(args.json).write_text(report.to_json(), encoding="utf-8")
    sys.stdout.write(report.to_text())
    return 0


def cmd_ablate(args) -> int:
    curve = ablate(args.suite, args.seeds, step_budget=args.steps, jobs=args.jobs)
    if args.json:
        doc = {"seeds": args.seeds, "curve": [{"stage": s, "mean_normalized_score": v} for s, v in curve]}
        Path(args.json).write_text(json.dumps(doc, indent=2, sort_keys=True) + "\n", encoding="utf-8")
    for stage, value in curve:
        print(f"{stage:<14}{value:.4f}")
    return 0


def cmd_train_validity(args) -> int:
    corpus = vmod.load_corpus(args.corpus)
    train_set, held_out = vmod.split_corpus(corpus, args.seed)
    model = vmod.train(train_set, epochs=args.epochs, seed=args.seed, held_out=held_out)
    model.save(args.out)
    print(f"trained on {len(train_set)} responses; held-out accuracy {model.held_out_accuracy:.4f}")
    return 0


def cmd_train_lm(args) -> int:
    model = lmmod.train_lm(lmmod.load_corpus(args.corpus), order=args.order)
    model.save(args.out)
    print(f"trained order-{args.order} model on {sum(model.counts[1].values())} tokens")
    return 0


def cmd_deps(args) -> int:
    spec = _game(args.game)
    deps = load_deps_file(args.deps_file, spec)
    tracker = DependencyTracker(deps)
    if args.agent == "random":
        from nail.harness.suite import run_random_episode
        run_random_episode(spec, args.seed, args.steps, lambda kg, gt, obs, *_: tracker.update(kg, gt, obs))
    else:
        run_episode(spec, seed=args.seed, step_budget=args.steps,
                    on_event=lambda kg, gt, obs, *_: tracker.update(kg, gt, obs))
    for d, ok in zip(deps, tracker.satisfied):
        print(f"{'yes' if ok else 'no ':<4}{d}")
    print(f"{sum(tracker.satisfied)}/{len(deps)} satisfied")
    return 0


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="nail", description="Interactive fiction agent and evaluation harness.")
    ap.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    ap.add_argument("-v", "--verbose", action="store_true", help="log debug messages")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("run", help="play one episode and print its transcript")
    p.add_argument("game", help="game file or bundled game name")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--steps", type=int, default=None, help="step budget (default 1000)")
    p.add_argument("--modules", type=_modules, help="comma-separated module names")
    p.add_argument("--config", help="JSON run configuration")
    p.add_argument("--dump-kg", help="write the final knowledge graph (.dot or .json)")
    p.add_argument("--transcript", help="write the transcript here instead of stdout")
    p.add_argument("-q", "--quiet", action="store_true", help="print only the final score")
    p.set_defaults(func=cmd_run)

    p = sub.add_parser("eval", help="evaluate an agent on every game in a directory")
    p.add_argument("suite", help="directory of .game files")
    p.add_argument("--seeds", type=_seeds, default=list(DEFAULT_SEEDS))
    p.add_argument("--agent", choices=AGENTS, default="nail")
    p.add_argument("--steps", type=int, default=None)
    p.add_argument("--modules", type=_modules)
    p.add_argument("--config")
    p.add_argument("--json", help="write the structured report here")
    p.add_argument("--out-dir", help="directory for transcripts and KG dumps")
    p.add_argument("--jobs", type=int, default=1, help="episodes to run in parallel")
    p.set_defaults(func=cmd_eval)

    p = sub.add_parser("ablate", help="score curve as modules are added one stage at a time")
    p.add_argument("suite")
    p.add_argument("--seeds", type=_seeds, default=list(DEFAULT_SEEDS))
    p.add_argument("--steps", type=int, default=None)
    p.add_argument("--json")
    p.add_argument("--jobs", type=int, default=1)
    p.set_defaults(func=cmd_ablate)

    p = sub.add_parser("train-validity", help="train the response validity classifier")
    p.add_argument("corpus", help="TSV of label<TAB>response")
    p.add_argument("--out", required=True)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--epochs", type=int, default=20)
    p.set_defaults(func=cmd_train_validity)

    p = sub.add_parser("train-lm", help="train the n-gram action language model")
    p.add_argument("corpus", help="one action per line")
    p.add_argument("--order", type=int, default=5)
    p.add_argument("--out", required=True)
    p.set_defaults(func=cmd_train_lm)

    p = sub.add_parser("deps", help="check a dependency file against one episode")
    p.add_argument("game")
    p.add_argument("deps_file")
    p.add_argument("--seed", type=int, default=1)
    p.add_argument("--steps", type=int, default=1000)
    p.add_argument("--agent", choices=AGENTS, default="nail")
    p.set_defaults(func=cmd_deps)
    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    try:
        return args.func(args)
    except (ConfigError, DepsError, engine.GameFormatError, engine.GameValidationError,
            FileNotFoundError, ValueError) as exc:
        print(f"nail: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
