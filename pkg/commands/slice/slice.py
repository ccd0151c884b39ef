import logging

from commands.command_interface import CommandInterface, parse_constants
from commands.slice.slice_config import CANDIDATES
from expr_io import read_flows
from jonquieres_consts import ConsistencyException, Report
from unipotent_slice import slice_chain, verify_cross_section


def slice_report(name, flows, candidates):
    """
    Run the slicing induction and check the result before reporting it.
    """
    result = slice_chain(flows, candidates)
    if not verify_cross_section(flows, result):
        raise ConsistencyException("computed subspace failed cross-section verification")
    data = result.to_dict()
    data["verified"] = True
    subspace = ", ".join(f"x{i} = {c}" for i, c in result.subspace) or "whole space"
    lines = [
        f"subspace: {subspace}",
        "invariants: " + (", ".join(str(f) for f in result.invariants) or "none"),
        "free coordinates: " + (", ".join(f"x{i}" for i in result.free_indices) or "none"),
    ]
    return Report(name, data, lines)


class Command(CommandInterface):
    """Linear cross-section of a unipotent action given by additive flows"""

    settings = {"CANDIDATES": (CANDIDATES, list)}

    def __init__(self):
        self.name = "slice"
        self.logger = logging.getLogger("Slice")
        CommandInterface.__init__(self)

    def add_arguments(self, parser):
        parser.add_argument("flows", help="Flow document (a list of flows).")
        parser.add_argument(
            "--constants",
            default=None,
            help=f"Comma separated constants tried per cut (default {CANDIDATES}).",
        )

    def run(self, args):
        flows = read_flows(args.flows)
        candidates = parse_constants(args.constants) if args.constants else CANDIDATES
        return slice_report(self.name, flows, candidates)
