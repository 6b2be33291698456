# Copyright (c) 2026 Ronald Rink, http://d-fens.ch
#
# This program is free software: you can redistribute it and/or modify
# it under the terms of the GNU General Public License as published by
# the Free Software Foundation, either version 3 of the License, or
# (at your option) any later version.
#
# This program is distributed in the hope that it will be useful,
# but WITHOUT ANY WARRANTY; without even the implied warranty of
# MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE.  See the
# GNU General Public License for more details.
#
# You should have received a copy of the GNU General Public License
# along with this program.  If not, see <https://www.gnu.org/licenses/>.

"""Arg parsing module."""

from __future__ import annotations

import argparse
import tomllib
from importlib import metadata
from pathlib import Path
from typing import ClassVar

from biz.dfch.logging import get_project_root

from .commands.command_name import CommandName


class Args:
    """
    Definition and handling of supported command line arguments.
    """

    _parser: argparse.ArgumentParser

    LOG_LEVEL_CHOICES: ClassVar[list[str]] = [
        "CRITICAL",
        "FATAL",
        "ERROR",
        "WARNING",
        "WARN",
        "INFO",
        "DEBUG",
        "NOTSET",
    ]
    _DEFAULT_LOG_LEVEL = "ERROR"
    _DISTRIBUTION = "biz-dfch-twinforge"

    def _get_version(self) -> str:
        try:
            toml = get_project_root() / "pyproject.toml"
            with open(toml, "rb") as f:
                data = tomllib.load(f)
                return data.get("project", {}).get("version", "0.0.0")
        except FileNotFoundError:
            pass
        except Exception:  # pylint: disable=W0718  # noqa: BLE001
            return "0.0.0"

        # Installed without the source tree.
        try:
            return metadata.version(self._DISTRIBUTION)
        except metadata.PackageNotFoundError:
            return "0.0.0"

    @staticmethod
    def _common() -> argparse.ArgumentParser:
        common = argparse.ArgumentParser(add_help=False)
        common.add_argument(
            "--log-level",
            "-l",
            dest="log_level",
            choices=Args.LOG_LEVEL_CHOICES,
            help=f"Logging level (default: {Args._DEFAULT_LOG_LEVEL}).",
        )
        common.add_argument(
            "-v",
            action="count",
            default=0,
            help="Increase verbosity (-v = WARNING, -vv = INFO, -vvv = DEBUG).",
        )
        common.add_argument("--config", "-c", type=Path, metavar="PATH", help="JSON run configuration.")
        common.add_argument("--seed", type=int, nargs="+", metavar="SEED", help="Seeds; overrides `seeds`.")
        return common

    @staticmethod
    def _merge_options() -> argparse.ArgumentParser:
        options = argparse.ArgumentParser(add_help=False)
        options.add_argument("--method", help="Merge method: average, task-arithmetic, ties or twin.")
        options.add_argument("--rank", type=int, help="Twin vector rank; omit for full rank.")
        options.add_argument("--density", type=float, help="Ties trim density.")
        options.add_argument("--drop-rate", dest="drop_rate", type=float, help="Drop-and-rescale rate.")
        options.add_argument(
            "--gamma", type=float, nargs="+", help="Task arithmetic coefficients (one or one per task)."
        )
        return options

    @staticmethod
    def _eval_options() -> argparse.ArgumentParser:
        options = argparse.ArgumentParser(add_help=False)
        options.add_argument("--mode", help="Inference mode: per-sample or grouped.")
        options.add_argument("--group-count", dest="group_count", type=int, help="Groups per batch in grouped mode.")
        return options

    @staticmethod
    def _input(
        parser: argparse.ArgumentParser, name: str, help_: str, many: bool = False, required: bool = False
    ) -> None:
        parser.add_argument(
            f"--{name}",
            type=Path,
            nargs="+" if many else None,
            metavar="PATH",
            required=required,
            help=help_,
        )

    def __init__(self):

        common = self._common()
        merge = self._merge_options()
        evaluation = self._eval_options()

        prog_name = "twinforge"
        self._parser = argparse.ArgumentParser(
            description=f"{prog_name}, v{self._get_version()}. Model merging with shared and exclusive knowledge.",
            formatter_class=argparse.RawDescriptionHelpFormatter,
            prog=prog_name,
            epilog="Copyright 2026 Ronald Rink. Licensed under GPLv3.",
        )

        subparsers = self._parser.add_subparsers(dest="command", required=True, help="Available commands.")

        subparsers.add_parser(CommandName.GEN_SUITE, parents=[common], help="Generates a synthetic task suite.")

        parser = subparsers.add_parser(
            CommandName.TRAIN_EXPERTS,
            parents=[common],
            help="Trains the base and one expert per task.",
        )
        self._input(parser, "suite", "Suite file; generated from the configuration if omitted.")

        parser = subparsers.add_parser(CommandName.MERGE, parents=[common, merge], help="Merges experts statically.")
        self._input(parser, "base", "Base checkpoint.", required=True)
        self._input(parser, "experts", "Expert checkpoints.", many=True, required=True)
        self._input(parser, "suite", "Suite file for the validation coefficient search.")

        parser = subparsers.add_parser(
            CommandName.TWIN_PREP,
            parents=[common, merge],
            help="Builds the shared expert and the twin vectors.",
        )
        self._input(parser, "base", "Base checkpoint.", required=True)
        self._input(parser, "experts", "Expert checkpoints.", many=True, required=True)
        self._input(parser, "suite", "Suite file for the validation coefficient search.")

        parser = subparsers.add_parser(
            CommandName.TRAIN_ROUTER,
            parents=[common],
            help="Trains the router on shared expert embeddings.",
        )
        self._input(parser, "shared", "Shared expert checkpoint.", required=True)
        self._input(parser, "suite", "Suite file.", required=True)

        parser = subparsers.add_parser(
            CommandName.INFER,
            parents=[common, evaluation],
            help="Runs dynamic merging on the test mixture.",
        )
        self._input(parser, "shared", "Shared expert checkpoint.", required=True)
        self._input(parser, "twins", "Twin vector files in task order.", many=True, required=True)
        self._input(parser, "router", "Router file; optional for a single task.")
        self._input(parser, "suite", "Suite file.", required=True)
        self._input(parser, "experts", "Expert checkpoints holding the reference scores.", many=True, required=True)
        parser.add_argument("--oracle", action="store_true", help="Route every input to its own task.")

        subparsers.add_parser(
            CommandName.EVAL,
            parents=[common, merge, evaluation],
            help="Runs the whole pipeline per seed.",
        )

        parser = subparsers.add_parser(
            CommandName.SWEEP,
            parents=[common, merge, evaluation],
            help="Runs a controlled experiment.",
        )
        parser.add_argument("--experiment", help="Experiment name, e.g. compare, sparsity or grouping.")
        parser.add_argument("--values", nargs="+", help="Knob values; coefficient pairs as g1;g2.")
        parser.add_argument("--jobs", type=int, help="Parallel experiment cells (default: 1).")

        parser = subparsers.add_parser(CommandName.STORAGE, parents=[common], help="Computes the storage accounting.")
        parser.add_argument("--tasks", "-T", dest="tasks", type=int, required=True, help="Number of tasks.")
        parser.add_argument("--params", dest="params", type=int, required=True, help="Parameters of one model.")
        parser.add_argument("--adapted", dest="adapted", type=int, help="Adapted parameters per expert (default: all).")
        parser.add_argument("--router-params", dest="router_params", type=int, default=0, help="Router parameters.")
        parser.add_argument("--ratio", "-k", dest="ratio", type=float, default=1.0, help="Compression ratio in (0, 1].")

        subparsers.add_parser(CommandName.SELFTEST, parents=[common], help="Runs the numeric self checks.")

    @staticmethod
    def get_effective_log_level_name(args) -> str:
        """Returns the effective log level name."""

        result = Args._DEFAULT_LOG_LEVEL

        # Explicit specification of --log-level takes precedence.
        if hasattr(args, "log_level") and args.log_level:
            result = args.log_level.upper()
            return result

        # Return default log level if no "-v" is specified.
        if not hasattr(args, "v"):
            return result

        if args.v >= 3:
            return "DEBUG"

        if args.v == 2:
            return "INFO"

        if args.v == 1:
            return "WARNING"

        return result

    def invoke(self) -> argparse.ArgumentParser:
        """
        Initialise supported command line arguments.
        """

        return self._parser
