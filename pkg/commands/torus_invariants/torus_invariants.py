import logging

from commands.command_interface import CommandInterface
from core_arith import kernel_basis, parse_weights
from invariant_fields import check_independence, torus_monomial_invariants
from jonquieres_consts import Report
from torus_weights import WeightAction, faithfulness_report


class Command(CommandInterface):
    """Faithfulness and monomial invariants of a diagonal torus action"""

    def __init__(self):
        self.name = "torus-invariants"
        self.logger = logging.getLogger("Torus")
        CommandInterface.__init__(self)

    def add_arguments(self, parser):
        parser.add_argument(
            "--weights",
            required=True,
            help='Weight matrix, rows separated by ";" (e.g. "5,3;1,1").',
        )

    def run(self, args):
        action = WeightAction(parse_weights(args.weights))
        report = faithfulness_report(action)
        exponents = kernel_basis(action.weights)
        invariants = torus_monomial_invariants(action.weights)
        independent = check_independence(invariants)
        data = report.to_dict()
        data.update(
            {
                "exponents": [list(v) for v in exponents],
                "invariants": [str(f) for f in invariants],
                "independent": independent,
            }
        )
        lines = [
            f"faithful: {'yes' if report.faithful else 'no'}",
            f"rank: {report.rank}",
            f"transcendence degree: {report.trdeg}",
            "invariants: " + (", ".join(str(f) for f in invariants) or "none"),
        ]
        return Report(self.name, data, lines)
