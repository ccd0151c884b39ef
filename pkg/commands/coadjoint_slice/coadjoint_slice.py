import logging

from commands.coadjoint_slice.coadjoint_slice_config import CANDIDATES
from commands.command_interface import CommandInterface, parse_constants
from commands.slice.slice import slice_report
from expr_io import read_algebra
from unipotent_slice import coadjoint_flows


class Command(CommandInterface):
    """Linear cross-section of the coadjoint action of a nilpotent algebra"""

    settings = {"CANDIDATES": (CANDIDATES, list)}

    def __init__(self):
        self.name = "coadjoint-slice"
        self.logger = logging.getLogger("Slice")
        CommandInterface.__init__(self)

    def add_arguments(self, parser):
        parser.add_argument("algebra", help="Algebra document (brackets [i, j, k, c]).")
        parser.add_argument(
            "--constants",
            default=None,
            help=f"Comma separated constants tried per cut (default {CANDIDATES}).",
        )

    def run(self, args):
        algebra = read_algebra(args.algebra)
        flows = coadjoint_flows(algebra)
        self.logger.debug(f"{sum(not f.is_trivial() for f in flows)} nontrivial coadjoint flows")
        candidates = parse_constants(args.constants) if args.constants else CANDIDATES
        return slice_report(self.name, flows, candidates)
