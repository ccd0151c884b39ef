import logging

from commands.command_interface import CommandInterface
from commands.invariants.invariants_config import (
    CERTIFY_TRIVIAL,
    MAX_COEFF_DEGREE,
    MAX_DEGREE_IN_T,
)
from expr_io import read_map
from invariant_fields import invariant_chain
from jonq_group import JonqElement
from jonquieres_consts import (
    AnsatzBounds,
    DocumentException,
    ExitStatus,
    LevelStatus,
    Report,
    ValidationException,
)


class Command(CommandInterface):
    """Chain of generators of the invariant field, level by level"""

    settings = {
        "MAX_DEGREE_IN_T": (MAX_DEGREE_IN_T, int),
        "MAX_COEFF_DEGREE": (MAX_COEFF_DEGREE, int),
        "CERTIFY_TRIVIAL": (CERTIFY_TRIVIAL, bool),
    }

    def __init__(self):
        self.name = "invariants"
        self.logger = logging.getLogger("Invariants")
        CommandInterface.__init__(self)

    def add_arguments(self, parser):
        parser.add_argument("generators", nargs="+", help="Map documents of the generators.")
        parser.add_argument(
            "--deg",
            type=int,
            default=MAX_DEGREE_IN_T,
            help=f"Largest degree in x_i (default {MAX_DEGREE_IN_T}).",
        )
        parser.add_argument(
            "--coeff-deg",
            type=int,
            default=MAX_COEFF_DEGREE,
            help=f"Largest coefficient degree (default {MAX_COEFF_DEGREE}).",
        )
        parser.add_argument(
            "--certify-trivial",
            default=CERTIFY_TRIVIAL,
            action="store_true",
            help="Report translation-only levels as trivial.",
        )

    def run(self, args):
        gens = [read_map(path) for path in args.generators]
        if not all(isinstance(g, JonqElement) for g in gens):
            raise DocumentException("invariant generators must be J or Jhat elements")
        try:
            bounds = AnsatzBounds(args.deg, args.coeff_deg)
        except ValueError as e:
            raise ValidationException(str(e))
        result = invariant_chain(gens, bounds, certify_trivial=args.certify_trivial)
        lines = []
        for level in result.levels:
            if level.status == LevelStatus.CERTIFIED:
                lines.append(f"level {level.index}: certified {level.generator}")
            elif level.status == LevelStatus.TRIVIAL:
                lines.append(f"level {level.index}: trivial")
            else:
                lines.append(
                    f"level {level.index}: unresolved within degree "
                    f"{bounds.max_degree_in_t}, coefficient degree {bounds.max_coeff_degree}"
                )
        lines.append(f"pure certified: {'yes' if result.pure_certified else 'no'}")
        unresolved = any(level.status == LevelStatus.UNRESOLVED for level in result.levels)
        status = ExitStatus.INCONCLUSIVE if unresolved else ExitStatus.SUCCESS
        return Report(self.name, result.to_dict(), lines, status)
