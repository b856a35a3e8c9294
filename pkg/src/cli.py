"""``lab`` console script: run configured experiments and write their artifacts."""

from __future__ import annotations

import argparse
import json
import logging
import sys
from pathlib import Path
from typing import Any, Sequence

from pydantic import ValidationError

from .application import LabContext, RunLabUseCase, oracle_names
from .domain.errors import BudgetExceededError, LabConfigError, LabError
from .models.lab import LabConfig, LabTask, ProductSpec, RunSummary
from .platform import ArtifactStore, get_settings, load_lab_config
from .platform.artifacts import dumps

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_INVARIANT = 1
EXIT_CONFIG = 2
EXIT_BUDGET = 3

_SUBCOMMANDS: dict[str, tuple[str, ...]] = {
    "profile": ("build",),
    "group": ("check",),
    "folner": ("stats",),
    "zcoupling": ("verify", "sums"),
    "ddcoupling": ("verify", "audit", "sums"),
}


def _common_options(*, suppress: bool) -> argparse.ArgumentParser:
    # Subcommands accept the shared flags too; SUPPRESS keeps them from
    # overwriting values given before the subcommand.
    default: Any = argparse.SUPPRESS if suppress else None
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--config", type=Path, default=default, help="TOML or JSON config")
    common.add_argument("--out", type=Path, default=default, help="Artifact directory")
    return common


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="lab",
        description="Desk-scale verification of diagonal-product couplings.",
        parents=[_common_options(suppress=False)],
    )
    shared = _common_options(suppress=True)
    commands = parser.add_subparsers(dest="command", required=True)

    run = commands.add_parser("run", parents=[shared], help="Run the config's task list")
    run.set_defaults(task=None)

    for family, actions in _SUBCOMMANDS.items():
        group = commands.add_parser(family, help=f"{family} tasks")
        verbs = group.add_subparsers(dest="action", required=True)
        for action in actions:
            leaf = verbs.add_parser(action, parents=[shared])
            leaf.set_defaults(task=f"{family}-{action}")
            if family in ("folner", "zcoupling", "ddcoupling"):
                leaf.add_argument("--n", type=int, nargs="+", help="Folner parameters n")
            if family == "ddcoupling":
                leaf.add_argument("--generator", help="Audit one generator only")
            if family == "group":
                leaf.add_argument("--table", type=Path, help="Check a marked group table file")

    oracle = commands.add_parser("oracle", parents=[shared], help="Compute a brute-force value")
    oracle.add_argument("name", help=f"One of: {', '.join(oracle_names())}")
    oracle.add_argument(
        "--arg",
        action="append",
        default=[],
        metavar="KEY=VALUE",
        help="Oracle argument; VALUE is parsed as JSON when possible",
    )
    oracle.set_defaults(task="oracle")
    return parser


def _parse_value(raw: str) -> Any:
    try:
        return json.loads(raw)
    except json.JSONDecodeError:
        return raw


def _oracle_args(pairs: Sequence[str]) -> dict[str, Any]:
    parsed: dict[str, Any] = {}
    for pair in pairs:
        key, sep, raw = pair.partition("=")
        if not sep or not key:
            raise LabConfigError(f"oracle argument {pair!r} is not KEY=VALUE", argument=pair)
        parsed[key] = _parse_value(raw)
    return parsed


def _plan(args: argparse.Namespace, config: LabConfig) -> tuple[LabConfig, list[LabTask]]:
    """Apply command-line overrides and turn the subcommand into a task list."""
    if args.task is None:
        return config, list(config.tasks)
    if getattr(args, "table", None) is not None:
        target = ProductSpec(kind="table", table=args.table, k1=config.target.k1)
        config = config.model_copy(update={"target": target})
    try:
        task = LabTask(
            name=args.task,
            n=getattr(args, "n", None),
            generator=getattr(args, "generator", None),
            oracle=getattr(args, "name", None),
            args=_oracle_args(getattr(args, "arg", [])),
        )
    except ValidationError as exc:
        raise LabConfigError("invalid task arguments", errors=str(exc)) from exc
    return config, [task]


def _exit_code(exc: LabError) -> int:
    if isinstance(exc, BudgetExceededError):
        return EXIT_BUDGET
    if isinstance(exc, LabConfigError):
        return EXIT_CONFIG
    return EXIT_INVARIANT


def _fail(store: ArtifactStore, record: dict[str, Any], code: int) -> int:
    record = {**record, "exit_code": code}
    store.write_failure(record)
    print(dumps(record))
    return code


def _failed_checks(summary: RunSummary) -> dict[str, Any]:
    failed = [outcome for outcome in summary.outcomes if not outcome.ok]
    return {
        "error": "InvariantCheckFailed",
        "message": "asserted invariants failed",
        "tasks": [outcome.task for outcome in failed],
        "summaries": [outcome.summary for outcome in failed],
    }


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    settings = get_settings()
    logging.basicConfig(
        level=settings.log_level.upper(),
        format="%(asctime)s %(levelname)s %(name)s %(message)s",
        stream=sys.stderr,
    )
    store = ArtifactStore(args.out or settings.out_dir)
    try:
        config, tasks = _plan(args, load_lab_config(args.config))
        context = LabContext.of(config, settings, store)
        summary = RunLabUseCase(context, threads=settings.threads)(tasks)
    except LabError as exc:
        logger.error("lab failed error=%s message=%s", type(exc).__name__, exc)
        return _fail(store, exc.record(), _exit_code(exc))

    if not summary.outcomes:
        return EXIT_OK
    if not summary.ok:
        return _fail(store, _failed_checks(summary), EXIT_INVARIANT)
    print(dumps(summary))
    return EXIT_OK


if __name__ == "__main__":  # pragma: no cover - convenience execution path
    sys.exit(main(sys.argv[1:]))
