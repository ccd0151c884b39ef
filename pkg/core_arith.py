"""
Exact scalars and integer matrices.

Scalars are ``fractions.Fraction`` at every public boundary; integer matrices are
``IntMatrix`` values backed by a sympy ``DomainMatrix`` over ZZ.
"""
import logging
from fractions import Fraction

from sympy import QQ, ZZ
from sympy.polys.matrices import DomainMatrix

from jonquieres_consts import DocumentException

logger = logging.getLogger("JONQ")

Rational = Fraction


def to_rational(value) -> Fraction:
    """
    Convert an int, a Fraction, a "p/q" string or a sympy QQ element to a Fraction.
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        try:
            return Fraction(value.strip())
        except (ValueError, ZeroDivisionError):
            raise DocumentException(f"not a rational number: {value!r}")
    if hasattr(value, "numerator") and hasattr(value, "denominator"):
        return Fraction(int(value.numerator), int(value.denominator))
    raise DocumentException(f"not a rational number: {value!r}")


def to_ground(value):
    """Fraction (or anything to_rational accepts) -> QQ element"""
    q = to_rational(value)
    return QQ(q.numerator, q.denominator)


class IntMatrix:
    def __init__(self, rows):
        """
        Immutable integer matrix.

        :param rows: sequence of equally long sequences of integers
        """
        rows = [[int(x) for x in row] for row in rows]
        if not rows or not rows[0]:
            raise DocumentException("integer matrix must be nonempty")
        if any(len(row) != len(rows[0]) for row in rows):
            raise DocumentException("ragged integer matrix")
        self._rows = tuple(tuple(row) for row in rows)
        self._dm = DomainMatrix(
            [[ZZ(x) for x in row] for row in rows], (len(rows), len(rows[0])), ZZ
        )

    @classmethod
    def identity(cls, n):
        return cls([[1 if i == j else 0 for j in range(n)] for i in range(n)])

    @classmethod
    def _from_domain(cls, dm):
        return cls([[int(x) for x in row] for row in dm.to_list()])

    @property
    def rows(self):
        return self._dm.shape[0]

    @property
    def cols(self):
        return self._dm.shape[1]

    @property
    def shape(self):
        return self._dm.shape

    def to_list(self):
        return [list(row) for row in self._rows]

    def __getitem__(self, key):
        i, j = key
        return self._rows[i][j]

    def __matmul__(self, other):
        return IntMatrix._from_domain(self._dm * other._dm)

    def transpose(self):
        return IntMatrix._from_domain(self._dm.transpose())

    def apply(self, vector):
        """M·v for an integer vector v"""
        if len(vector) != self.cols:
            raise ValueError("vector length does not match column count")
        return [sum(a * b for a, b in zip(row, vector)) for row in self.to_list()]

    def __eq__(self, other):
        if not isinstance(other, IntMatrix):
            return NotImplemented
        return self.to_list() == other.to_list()

    def __hash__(self):
        return hash(self._rows)

    def __repr__(self):
        return f"IntMatrix({self.to_list()})"


def rank(matrix: IntMatrix) -> int:
    return matrix._dm.convert_to(QQ).rank()


def determinant(matrix: IntMatrix) -> int:
    if matrix.rows != matrix.cols:
        raise ValueError("determinant of a non-square matrix")
    # fraction-free Bareiss elimination over ZZ
    return int(matrix._dm.det())


def parse_weights(text: str) -> IntMatrix:
    """
    Parse "5,3;1,1" into a weight matrix, rows separated by ';'.
    """
    try:
        rows = [
            [int(entry) for entry in row.split(",")]
            for row in text.split(";")
            if row.strip()
        ]
    except ValueError:
        raise DocumentException(f"malformed weight matrix: {text!r}")
    return IntMatrix(rows)


def smith_normal_form(matrix: IntMatrix):
    """
    Smith normal form with transforms.

    Elementary row and column operations with the smallest nonzero entry as pivot.

    :param matrix: nonempty IntMatrix M
    :return: (U, D, V) with U·M·V = D, U and V unimodular, D diagonal with
             d_1 | d_2 | ... and every d_j >= 0
    """
    m, n = matrix.shape
    d = matrix.to_list()
    u = [[1 if i == j else 0 for j in range(m)] for i in range(m)]
    v = [[1 if i == j else 0 for j in range(n)] for i in range(n)]

    def swap_rows(i, j):
        d[i], d[j] = d[j], d[i]
        u[i], u[j] = u[j], u[i]

    def swap_columns(i, j):
        for mat in (d, v):
            for row in mat:
                row[i], row[j] = row[j], row[i]

    def add_row(target, source, factor):
        # row[target] += factor * row[source]
        for mat in (d, u):
            mat[target] = [a + factor * b for a, b in zip(mat[target], mat[source])]

    def add_column(target, source, factor):
        for mat in (d, v):
            for row in mat:
                row[target] += factor * row[source]

    for t in range(min(m, n)):
        while True:
            nonzero = [
                (abs(d[i][j]), i, j)
                for i in range(t, m)
                for j in range(t, n)
                if d[i][j] != 0
            ]
            if not nonzero:
                break
            _, i, j = min(nonzero)
            swap_rows(t, i)
            swap_columns(t, j)
            pivot = d[t][t]

            clean = True
            for i in range(t + 1, m):
                if d[i][t]:
                    add_row(i, t, -(d[i][t] // pivot))
                    clean = clean and d[i][t] == 0
            for j in range(t + 1, n):
                if d[t][j]:
                    add_column(j, t, -(d[t][j] // pivot))
                    clean = clean and d[t][j] == 0
            if not clean:
                continue

            offender = next(
                (
                    i
                    for i in range(t + 1, m)
                    for j in range(t + 1, n)
                    if d[i][j] % pivot != 0
                ),
                None,
            )
            if offender is None:
                break
            add_row(t, offender, 1)
        if not any(d[i][j] for i in range(t, m) for j in range(t, n)):
            break
        if d[t][t] < 0:
            d[t] = [-x for x in d[t]]
            u[t] = [-x for x in u[t]]

    return IntMatrix(u), IntMatrix(d), IntMatrix(v)


def invariant_factors(matrix: IntMatrix):
    """Nonzero diagonal of the Smith normal form"""
    _, d, _ = smith_normal_form(matrix)
    return [d[k, k] for k in range(min(d.shape)) if d[k, k] != 0]


def hermite_rows(vectors):
    """
    Row Hermite normal form of the lattice spanned by integer vectors.

    Every pivot (first nonzero entry of a row) is positive and entries above a
    pivot are reduced into [0, pivot). Zero rows are dropped.
    """
    rows = [list(map(int, vector)) for vector in vectors]
    if not rows:
        return []
    width = len(rows[0])
    r = 0
    for col in range(width):
        if r == len(rows):
            break
        while True:
            candidates = [i for i in range(r, len(rows)) if rows[i][col] != 0]
            if not candidates:
                break
            p = min(candidates, key=lambda i: abs(rows[i][col]))
            rows[r], rows[p] = rows[p], rows[r]
            done = True
            for i in range(r + 1, len(rows)):
                if rows[i][col]:
                    q = rows[i][col] // rows[r][col]
                    rows[i] = [a - q * b for a, b in zip(rows[i], rows[r])]
                    done = done and rows[i][col] == 0
            if done:
                break
        if rows[r][col] == 0:
            continue
        if rows[r][col] < 0:
            rows[r] = [-a for a in rows[r]]
        for i in range(r):
            q = rows[i][col] // rows[r][col]
            if q:
                rows[i] = [a - q * b for a, b in zip(rows[i], rows[r])]
        r += 1
    return [tuple(row) for row in rows[:r]]


def kernel_basis(matrix: IntMatrix):
    """
    Basis of the integer kernel lattice {v : M·v = 0}, Hermite reduced.

    :return: list of integer tuples, cols - rank(M) of them
    """
    _, d, v = smith_normal_form(matrix)
    r = sum(1 for k in range(min(d.shape)) if d[k, k] != 0)
    columns = v.transpose().to_list()[r:]
    basis = hermite_rows(columns)
    logger.debug(f"kernel of {matrix!r} has rank {len(basis)}")
    return basis
