from enum import Enum, auto, unique


class JonqException(Exception):
    def __init__(self, message, index=None):
        """
        Base exception for every failure raised by the library.

        :param message: human readable diagnostic
        :param index: offending variable/flag index when the failure is local to one level
        """
        self.message = message
        self.index = index
        body = message if index is None else f"{message} (index {index})"
        super().__init__(body)


class ArithmeticException(JonqException):
    """Specific Exception"""


class ZeroDenominatorException(ArithmeticException):
    """Specific Exception"""


class UndefinedMapException(JonqException):
    """Specific Exception"""


class ParseException(JonqException):
    def __init__(self, message, line, column):
        """
        Syntax error inside an expression.

        :param line: 1-based line of the offending character
        :param column: 1-based column of the offending character
        """
        self.line = line
        self.column = column
        super().__init__(f"{message} at line {line}, column {column}")


class SemanticException(ParseException):
    """Specific Exception"""


class DocumentException(JonqException):
    """Specific Exception"""


class ValidationException(JonqException):
    """Specific Exception"""


class ConsistencyException(JonqException):
    """Specific Exception"""


class DegenerateConstantException(JonqException):
    """Specific Exception"""


class CandidatesExhaustedException(JonqException):
    """Specific Exception"""


@unique
class ExitStatus(Enum):
    SUCCESS = 0
    ERROR = 1
    INCONCLUSIVE = 2


@unique
class OrderKind(Enum):
    FINITE = auto()
    INFINITE = auto()
    UNKNOWN = auto()


class OrderResult:
    def __init__(self, kind, value=None):
        """
        Outcome of an order computation.

        :param kind: OrderKind
        :param value: the order m for FINITE, the iteration cap for UNKNOWN
        """
        if kind == OrderKind.FINITE and (value is None or value < 1):
            raise ValueError("finite order must be a positive integer")
        self.kind = kind
        self.value = value

    @classmethod
    def finite(cls, m):
        return cls(OrderKind.FINITE, m)

    @classmethod
    def infinite(cls):
        return cls(OrderKind.INFINITE)

    @classmethod
    def unknown(cls, cap):
        return cls(OrderKind.UNKNOWN, cap)

    def __eq__(self, other):
        if not isinstance(other, OrderResult):
            return NotImplemented
        return self.kind == other.kind and self.value == other.value

    def __repr__(self):
        return f"OrderResult({self})"

    def __str__(self):
        if self.kind == OrderKind.FINITE:
            return f"finite({self.value})"
        if self.kind == OrderKind.UNKNOWN:
            return f"unknown({self.value})"
        return "infinite"

    def to_dict(self):
        return {"kind": self.kind.name.lower(), "value": self.value}


class ClosureResult:
    def __init__(self, elements=None, cap=None, abelian=None):
        """
        Result of a subgroup closure.
        elements is None when the closure grew past the cap (overflow).
        """
        self.elements = elements
        self.cap = cap
        self.abelian = abelian

    @property
    def overflow(self):
        return self.elements is None

    @property
    def size(self):
        return None if self.elements is None else len(self.elements)

    def to_dict(self):
        return {
            "overflow": self.overflow,
            "cap": self.cap,
            "size": self.size,
            "abelian": self.abelian,
        }


class AnsatzBounds:
    def __init__(self, max_degree_in_t=6, max_coeff_degree=6):
        if max_degree_in_t < 1 or max_coeff_degree < 1:
            raise ValueError("ansatz bounds must both be at least 1")
        self.max_degree_in_t = max_degree_in_t
        self.max_coeff_degree = max_coeff_degree

    def to_dict(self):
        return {
            "max_degree_in_t": self.max_degree_in_t,
            "max_coeff_degree": self.max_coeff_degree,
        }


@unique
class LevelStatus(Enum):
    CERTIFIED = "certified"
    TRIVIAL = "trivial"
    UNRESOLVED = "unresolved"


class ChainLevel:
    def __init__(self, index, status, generator=None, bounds=None):
        self.index = index
        self.status = status
        self.generator = generator
        self.bounds = bounds

    def to_dict(self):
        data = {"index": self.index, "status": self.status.value}
        if self.generator is not None:
            data["generator"] = str(self.generator)
        if self.status == LevelStatus.UNRESOLVED and self.bounds is not None:
            data["bounds"] = self.bounds.to_dict()
        return data


class ChainResult:
    def __init__(self, levels, generators, pure_certified):
        # levels run from i = n down to 1
        self.levels = levels
        self.generators = generators
        self.pure_certified = pure_certified

    def to_dict(self):
        return {
            "levels": [level.to_dict() for level in self.levels],
            "generators": [str(z) for z in self.generators],
            "pure_certified": self.pure_certified,
        }


class SlopeData:
    def __init__(self, d, s):
        self.d = d
        self.s = s

    def to_dict(self):
        return {"d": self.d, "s": str(self.s)}


class SliceLevel:
    def __init__(self, coordinates, pivot, slope, constant):
        """
        One step of the slicing induction.

        :param coordinates: original indices of the current coordinates, in order
        :param pivot: the pivot AdditiveFlow in the current coordinates
        :param slope: SlopeData of the pivot (d is a current coordinate position)
        :param constant: the constant c used for x_d = c
        """
        self.coordinates = coordinates
        self.pivot = pivot
        self.slope = slope
        self.constant = constant

    @property
    def original_index(self):
        return self.coordinates[self.slope.d - 1]


class SliceResult:
    def __init__(self, n, indices, constants, invariants, free_indices, levels):
        self.n = n
        self.indices = indices
        self.constants = constants
        self.invariants = invariants
        self.free_indices = free_indices
        self.levels = levels

    @property
    def subspace(self):
        return list(zip(self.indices, self.constants))

    def to_dict(self):
        return {
            "n": self.n,
            "indices": list(self.indices),
            "constants": [str(c) for c in self.constants],
            "subspace": [f"x{i} = {c}" for i, c in self.subspace],
            "free_coordinates": [f"x{i}" for i in self.free_indices],
            "invariants": [str(f) for f in self.invariants],
            "slopes": [
                {"index": level.original_index, "s": str(level.slope.s)}
                for level in self.levels
            ],
        }


class FaithfulnessReport:
    def __init__(self, faithful, trdeg, rank, invariant_factors):
        self.faithful = faithful
        self.trdeg = trdeg
        self.rank = rank
        self.invariant_factors = invariant_factors

    def to_dict(self):
        return {
            "faithful": self.faithful,
            "trdeg": self.trdeg,
            "rank": self.rank,
            "invariant_factors": list(self.invariant_factors),
        }


class RootCase:
    def __init__(self, label, mu1, mu2, nu, generic_count):
        self.label = label
        self.mu1 = mu1
        self.mu2 = mu2
        self.nu = nu
        self.generic_count = generic_count

    def to_dict(self):
        return {
            "case": self.label,
            "mu1": str(self.mu1),
            "mu2": str(self.mu2),
            "nu": str(self.nu),
            "generic_count": self.generic_count,
        }


class LineCertificate:
    def __init__(self, d1, d2, cases, conditions, candidate=None):
        self.d1 = d1
        self.d2 = d2
        self.cases = cases
        self.conditions = conditions
        # a line description when some case meets generic orbits exactly once
        self.candidate = candidate

    @property
    def no_line(self):
        return all(case.generic_count != 1 for case in self.cases)

    @property
    def conclusion(self):
        return "no_line" if self.no_line else "candidate"

    def to_dict(self):
        return {
            "d1": self.d1,
            "d2": self.d2,
            "conditions": dict(self.conditions),
            "cases": [case.to_dict() for case in self.cases],
            "conclusion": self.conclusion,
            "candidate": self.candidate,
        }


class Report:
    def __init__(self, command, data, lines, status=ExitStatus.SUCCESS):
        """
        Output of one sub-command.

        :param command: sub-command name
        :param data: JSON-serializable mapping mirroring the result type
        :param lines: human readable formatting of the same data
        :param status: ExitStatus of the run
        """
        self.command = command
        self.data = data
        self.lines = lines
        self.status = status
