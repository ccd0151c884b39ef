import logging

from commands.command_interface import CommandInterface
from expr_io import parse, read_map, render
from jonq_group import JonqElement, apply
from jonquieres_consts import DocumentException, Report


class Command(CommandInterface):
    """Act with an element on a rational function"""

    def __init__(self):
        self.name = "apply"
        self.logger = logging.getLogger("Group")
        CommandInterface.__init__(self)

    def add_arguments(self, parser):
        parser.add_argument("element", help="Map document of g.")
        parser.add_argument("--expr", required=True, help="Rational function f.")

    def run(self, args):
        g = read_map(args.element)
        if not isinstance(g, JonqElement):
            raise DocumentException(f"{args.element} is not a J or Jhat element")
        f = parse(args.expr)
        result = apply(g, f)
        data = {"expr": render(f), "result": render(result)}
        return Report(self.name, data, [render(result)])
