import logging

from commands.command_interface import CommandInterface
from commands.order.order_config import ORDER_CAP
from expr_io import read_map
from jonq_group import JonqElement, order
from jonquieres_consts import DocumentException, ExitStatus, OrderKind, Report


class Command(CommandInterface):
    """Order of an element: finite(m), infinite or unknown(cap)"""

    settings = {"ORDER_CAP": (ORDER_CAP, int)}

    def __init__(self):
        self.name = "order"
        self.logger = logging.getLogger("Group")
        CommandInterface.__init__(self)

    def add_arguments(self, parser):
        parser.add_argument("element", help="Map document of g.")
        parser.add_argument(
            "--cap",
            type=int,
            default=ORDER_CAP,
            help=f"Powers tried for Jhat elements (default {ORDER_CAP}).",
        )

    def run(self, args):
        g = read_map(args.element)
        if not isinstance(g, JonqElement):
            raise DocumentException(f"{args.element} is not a J or Jhat element")
        result = order(g, args.cap)
        status = (
            ExitStatus.INCONCLUSIVE if result.kind == OrderKind.UNKNOWN else ExitStatus.SUCCESS
        )
        return Report(self.name, {"order": result.to_dict()}, [str(result)], status)
