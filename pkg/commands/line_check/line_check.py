import logging

from commands.command_interface import CommandInterface
from commands.line_check.line_check_config import SWEEP_MAX
from jonquieres_consts import Report, ValidationException
from torus_weights import line_certificate_sweep, no_affine_line_certificate


def certificate_lines(certificate):
    lines = [f"(d1, d2) = ({certificate.d1}, {certificate.d2})"]
    for name, holds in certificate.conditions.items():
        lines.append(f"  {name}: {'yes' if holds else 'no'}")
    for case in certificate.cases:
        lines.append(f"  {case.label}: {case.generic_count}")
    if certificate.no_line:
        lines.append("  no affine line is a rational cross-section")
    else:
        lines.append(f"  candidate line: {certificate.candidate}")
    return lines


class Command(CommandInterface):
    """Root-count certificate ruling out affine lines as cross-sections"""

    settings = {"SWEEP_MAX": (SWEEP_MAX, int)}

    def __init__(self):
        self.name = "line-check"
        self.logger = logging.getLogger("Torus")
        CommandInterface.__init__(self)

    def add_arguments(self, parser):
        parser.add_argument("--d1", type=int, default=None, help="Weight of x1.")
        parser.add_argument("--d2", type=int, default=None, help="Weight of x2.")
        parser.add_argument(
            "--sweep",
            type=int,
            nargs="?",
            const=SWEEP_MAX,
            default=None,
            help=f"Check every coprime 2 <= d2 < d1 <= N with d1 - d2 >= 2 (default N = {SWEEP_MAX}).",
        )

    def run(self, args):
        if args.sweep is not None:
            certificates = line_certificate_sweep(args.sweep)
            lines = [line for c in certificates for line in certificate_lines(c)]
            verdict = all(c.no_line for c in certificates)
            lines.append(f"every pair concludes no_line: {'yes' if verdict else 'no'}")
            data = {
                "max_d": args.sweep,
                "certificates": [c.to_dict() for c in certificates],
                "all_no_line": verdict,
            }
            return Report(self.name, data, lines)
        if args.d1 is None or args.d2 is None:
            raise ValidationException("line-check needs --d1 and --d2, or --sweep")
        certificate = no_affine_line_certificate(args.d1, args.d2)
        return Report(self.name, certificate.to_dict(), certificate_lines(certificate))
