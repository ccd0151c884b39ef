import argparse
import importlib
import json
import logging
import os
import re
import sys
from typing import Dict, Optional

import colorlog
import config
from config import LOG_FILE, LOG_TO_FILE
from jonquieres_consts import ExitStatus, JonqException, Report

from commands.command_interface import CommandInterface

COMMANDS_DIR = os.path.join(os.path.dirname(os.path.abspath(__file__)), "commands")

logger = logging.getLogger("Jonquieres")


class ConfigTypeException(TypeError):
    def __init__(self, name, val):
        logger.error(f"{name} is not of {val}.")
        super().__init__(f"{name} is not of {val}")


def discover_commands() -> Dict[str, CommandInterface]:
    """
    Every directory under commands/ holding a module of its own name is a sub-command.
    Underscores in the directory name become dashes on the command line.
    """
    commands = {}
    for entry in sorted(os.listdir(COMMANDS_DIR)):
        path = os.path.join(COMMANDS_DIR, entry)
        if not os.path.isdir(path) or entry.startswith("__"):
            continue
        modules = [
            x for x in os.listdir(path) if not re.search(r"_config|__|READ|\.[D|t]", x)
        ]
        if not modules:
            continue
        module = importlib.import_module(f"commands.{entry}.{modules[0].split('.')[0]}")
        command = module.Command()
        if not isinstance(command, CommandInterface):
            logger.warning(f"commands/{entry} does not implement the command interface")
            continue
        commands[entry.replace("_", "-")] = command
    return commands


def log_conf(debug):
    level = logging.DEBUG if debug else logging.INFO
    if LOG_TO_FILE:
        logging.basicConfig(
            filename=LOG_FILE,
            format="%(asctime)s: %(message)s",
            encoding="utf-8",
            level=logging.DEBUG,
            datefmt="%Y-%m-%d %H:%M:%S",
            force=True,
        )
    else:
        handler = colorlog.StreamHandler(sys.stderr)
        handler.setFormatter(
            colorlog.ColoredFormatter(
                "%(log_color)s%(asctime)s:%(levelname)s:%(name)s: %(message)s",
                datefmt="%Y-%m-%d %H:%M:%S",
            )
        )
        logging.basicConfig(handlers=[handler], level=level, force=True)


def report_error_handler(func):
    """
    Turn the library failures of a command run into an error Report with exit status 1.
    """

    def report_handler(command, args):
        try:
            return func(command, args)
        except JonqException as e:
            logger.error(f"{command.name}: {e}")
            message = str(e)
        except (OSError, UnicodeDecodeError, json.JSONDecodeError) as e:
            logger.error(f"{command.name}: cannot read input: {e}")
            message = f"cannot read input: {e}"
        report = Report(command.name, {"error": message}, [f"error: {message}"], ExitStatus.ERROR)
        return report

    return report_handler


@report_error_handler
def run_command(command, args) -> Report:
    logger.debug(f"running {command.name}")
    return command.run(args)


def format_report(report: Report, as_json: bool) -> str:
    if as_json:
        return json.dumps(
            {
                "command": report.command,
                "status": report.status.value,
                "result": report.data,
            },
            sort_keys=True,
            indent=2,
        )
    return "\n".join(report.lines)


def obtain_args(commands, argv=None):
    parser = argparse.ArgumentParser(
        description="Exact computations in rational de Jonquieres groups",
        prefix_chars="--",
        formatter_class=argparse.RawTextHelpFormatter,
        epilog="",
    )
    parser.add_argument(
        "--json",
        default=False,
        action="store_true",
        help="Print the result as a JSON document.",
    )
    parser.add_argument(
        "--debug",
        default=False,
        action="store_true",
        help="Set DEBUG log level.",
    )
    subparsers = parser.add_subparsers(dest="command", metavar="COMMAND")
    subparsers.required = True
    for name, command in commands.items():
        subparser = subparsers.add_parser(name, help=(type(command).__doc__ or "").strip())
        command.add_arguments(subparser)
    return parser.parse_args(argv)


def check_config(commands) -> bool:
    ok = True
    for name, expected in [
        ("LOG_TO_FILE", bool),
        ("LOG_FILE", str),
        ("MAX_VARIABLES", int),
        ("RENDER_CACHE_SIZE", int),
        ("VERIFY_COMPOSITION", bool),
        ("PARALLEL_JOBS", int),
    ]:
        if not isinstance(getattr(config, name), expected):
            ConfigTypeException(name, expected)
            ok = False
    for command in commands.values():
        for name, (value, expected) in command.settings.items():
            if not isinstance(value, expected):
                ConfigTypeException(f"{command.name}.{name}", expected)
                ok = False
    if config.MAX_VARIABLES < 1 or config.PARALLEL_JOBS < 1:
        logger.error("MAX_VARIABLES and PARALLEL_JOBS must be positive.")
        ok = False
    return ok


def main(argv: Optional[list] = None) -> int:
    commands = discover_commands()
    try:
        args = obtain_args(commands, argv)
    except SystemExit as e:
        # usage errors share status 1 with every other failure
        return ExitStatus.ERROR.value if e.code else 0
    log_conf(args.debug)

    if not check_config(commands):
        logger.error(
            "Correct configurations and re-run. Note that lists should be wrapped in square brackets, []."
        )
        return ExitStatus.ERROR.value

    report = run_command(commands[args.command], args)
    out = sys.stderr if report.status == ExitStatus.ERROR else sys.stdout
    print(format_report(report, args.json), file=out)
    return report.status.value


if __name__ == "__main__":
    sys.exit(main())
