import os
import shutil
import sys
from glob import glob
from pathlib import Path

import questionary

BASE_DIR = os.path.dirname(os.path.abspath(__file__))


def read_settings(file):
    """Assignments of a config file as {NAME: source text}, comments skipped"""
    confs = {}
    with open(file, "r") as f:
        for line in f:
            if line[0] in ["#", "\n"] or " = " not in line:
                continue
            val = line.strip().split(" = ", 1)
            confs[val[0]] = val[1]
    return confs


def write_settings(file, confs):
    """Rewrite the assignments named in confs, every other line is kept as is"""
    with open(file, "r") as f:
        data = f.readlines()

    with open(file, "w") as f:
        for line in data:
            variable = line.split(" = ")[0]
            if variable in confs:
                f.write(f"{variable} = {confs[variable]}\n")
            else:
                f.write(line)


def prompt_settings(confs, skip=()):
    """Ask for a new value of each setting; an empty answer keeps the current one"""
    for conf in confs:
        if conf in skip:
            continue
        arg = questionary.text(f"Configure {conf} (current: {confs[conf]}): ").unsafe_ask()
        if arg != "":
            confs[conf] = arg
    return confs


def configure():
    file = os.path.join(BASE_DIR, "config.py")
    if not Path(file).is_file():
        shutil.copy(os.path.join(BASE_DIR, "config_template.py"), file)

    confs = read_settings(file)
    skip = ["LOG_FILE"] if confs.get("LOG_TO_FILE") == "False" else []
    write_settings(file, prompt_settings(confs, skip))

    # Per-command defaults
    for command_config in sorted(glob(os.path.join(BASE_DIR, "commands", "*", "*_config.py"))):
        command = os.path.basename(os.path.dirname(command_config)).replace("_", "-")
        if not questionary.confirm(f"Configure {command}? ", default=False).unsafe_ask():
            continue
        write_settings(command_config, prompt_settings(read_settings(command_config)))


if __name__ == "__main__":
    try:
        configure()
    except KeyboardInterrupt:
        sys.exit()
