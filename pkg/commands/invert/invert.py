import logging

from commands.command_interface import CommandInterface, element_lines
from expr_io import dump_map, read_map, write_map
from jonq_group import JonqElement, invert
from jonquieres_consts import DocumentException, Report


class Command(CommandInterface):
    """Inverse of an element"""

    def __init__(self):
        self.name = "invert"
        self.logger = logging.getLogger("Group")
        CommandInterface.__init__(self)

    def add_arguments(self, parser):
        parser.add_argument("element", help="Map document of g.")
        parser.add_argument("--output", default=None, help="Save g^-1 as a map document.")

    def run(self, args):
        g = read_map(args.element)
        if not isinstance(g, JonqElement):
            raise DocumentException(f"{args.element} is not a J or Jhat element")
        result = invert(g)
        if args.output:
            write_map(result, args.output)
        return Report(self.name, {"element": dump_map(result)}, element_lines(result))
