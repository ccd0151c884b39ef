import logging

from commands.closure.closure_config import CLOSURE_CAP
from commands.command_interface import CommandInterface
from expr_io import read_map
from jonq_group import JonqElement, subgroup_closure
from jonquieres_consts import DocumentException, ExitStatus, Report


class Command(CommandInterface):
    """Enumerate the subgroup generated by finitely many elements"""

    settings = {"CLOSURE_CAP": (CLOSURE_CAP, int)}

    def __init__(self):
        self.name = "closure"
        self.logger = logging.getLogger("Group")
        CommandInterface.__init__(self)

    def add_arguments(self, parser):
        parser.add_argument("generators", nargs="+", help="Map documents of the generators.")
        parser.add_argument(
            "--cap",
            type=int,
            default=CLOSURE_CAP,
            help=f"Largest closure enumerated (default {CLOSURE_CAP}).",
        )

    def run(self, args):
        gens = [read_map(path) for path in args.generators]
        if not all(isinstance(g, JonqElement) for g in gens):
            raise DocumentException("closure generators must be J or Jhat elements")
        result = subgroup_closure(gens, args.cap)
        if result.overflow:
            lines = [f"overflow: more than {result.cap} elements"]
            return Report(self.name, result.to_dict(), lines, ExitStatus.INCONCLUSIVE)
        shape = "abelian" if result.abelian else "non-abelian"
        lines = [f"finite subgroup of order {result.size}, {shape}"]
        return Report(self.name, result.to_dict(), lines)
