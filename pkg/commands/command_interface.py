import abc
import argparse

from jonquieres_consts import Report


class CommandInterface(metaclass=abc.ABCMeta):
    @classmethod
    def __subclasshook__(cls, subclass):
        return (hasattr(subclass, 'add_arguments') and
                callable(subclass.add_arguments) and
                hasattr(subclass, 'run') and
                callable(subclass.run) or
                NotImplemented)

    # settings checked by the entry script: name -> (value, expected type)
    settings = {}

    def __init__(self):
        pass

    @abc.abstractmethod
    def add_arguments(self, parser: argparse.ArgumentParser) -> None:
        """
        Register the sub-command's positional arguments and flags
        """
        raise NotImplementedError

    @abc.abstractmethod
    def run(self, args: argparse.Namespace) -> Report:
        """
        Execute the sub-command
        :rtype: Report holding the JSON data, the text lines and the exit status
        """
        raise NotImplementedError


def element_lines(element):
    """Human readable 'x_i -> g·x_i' lines of an element"""
    return [f"x{i} -> {element.image(i)}" for i in range(1, element.n + 1)]


def parse_constants(text):
    """'0,1,-1' -> ['0', '1', '-1']"""
    return [entry.strip() for entry in text.split(",") if entry.strip()]
