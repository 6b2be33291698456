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

"""Main app module."""

from __future__ import annotations

import argparse
import sys
from collections.abc import Sequence

from rich.console import Console

from biz.dfch.logging import log, set_level

from ..errors import TwinforgeError
from ..harness import write_json
from .args import Args
from .commands import COMMANDS, CommandContext, CommandName
from .run_config import CONFIG_ECHO_NAME, RunConfig


class App:  # pylint: disable=R0903
    """The application."""

    _VERSION_REQUIRED_MAJOR = 3
    _VERSION_REQUIRED_MINOR = 11

    _parser: argparse.ArgumentParser
    _args: argparse.Namespace
    _console: Console

    def __init__(
        self,
        parser: argparse.ArgumentParser,
        argv: Sequence[str] | None = None,
        console: Console | None = None,
    ):

        required = (self._VERSION_REQUIRED_MAJOR, self._VERSION_REQUIRED_MINOR)
        if sys.version_info < required:
            raise OSError(f"'{sys.version_info}' < '{required[0]}.{required[1]}'")

        assert isinstance(parser, argparse.ArgumentParser)
        self._parser = parser
        self._args = parser.parse_args(argv)
        self._console = console if console is not None else Console()

    def _run(self) -> None:
        name = CommandName(self._args.command)
        config = RunConfig.load(self._args.config).with_arguments(self._args).with_environment()
        run_dir = config.run_directory(name)

        write_json(config.to_dict(), run_dir / CONFIG_ECHO_NAME)
        log.info("Running '%s' in '%s'.", name, run_dir)

        context = CommandContext(args=self._args, config=config, run_dir=run_dir, console=self._console)
        COMMANDS[name]().invoke(context)

    def invoke(self) -> int:
        """Main entry point for this class. Returns the process exit code."""

        set_level(Args.get_effective_log_level_name(self._args))

        log.debug(self._parser.description)

        try:
            self._run()
        except TwinforgeError as ex:
            log.error("%s: %s", type(ex).__name__, ex)
            Console(stderr=True).print(f"[red]{type(ex).__name__}: {ex}[/red]")
            return ex.exit_code

        return 0
