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

"""StorageCommand class."""

from ...harness import ResultRenderer, storage_report, write_json
from .command_base import CommandBase

STORAGE_FILE = "storage.json"


class StorageCommand(CommandBase):  # pylint: disable=R0903
    """Evaluates the storage formulas for given parameter counts."""

    def invoke(self, context) -> None:
        super().invoke(context)

        args = context.args
        adapted = args.params if args.adapted is None else args.adapted
        account = storage_report(
            T=args.tasks,
            P=args.params,
            P_a=adapted,
            P_f=args.params - adapted,
            P_r=args.router_params,
            k=args.ratio,
        )

        write_json(account.to_dict(), context.output(STORAGE_FILE))
        ResultRenderer().show_storage(context.console, account)
