import logging

from commands.command_interface import CommandInterface, element_lines
from expr_io import dump_map, read_map, write_map
from jonq_group import JonqElement, compose
from jonquieres_consts import DocumentException, Report


class Command(CommandInterface):
    """Compose two elements, g1·g2"""

    def __init__(self):
        self.name = "compose"
        self.logger = logging.getLogger("Group")
        CommandInterface.__init__(self)

    def add_arguments(self, parser):
        parser.add_argument("first", help="Map document of g1.")
        parser.add_argument("second", help="Map document of g2.")
        parser.add_argument(
            "--output", default=None, help="Save g1·g2 as a map document."
        )

    def run(self, args):
        g1 = read_map(args.first)
        g2 = read_map(args.second)
        for path, g in ((args.first, g1), (args.second, g2)):
            if not isinstance(g, JonqElement):
                raise DocumentException(f"{path} is not a J or Jhat element")
        result = compose(g1, g2)
        self.logger.debug(f"composed {args.first} with {args.second}")
        if args.output:
            write_map(result, args.output)
        return Report(self.name, {"element": dump_map(result)}, element_lines(result))
