"""Matrices of Laurent polynomials and their exact determinants.

Determinants clear each row to ordinary polynomials by a monomial unit,
run fraction-free elimination there, and multiply the unit back in, so the
result is the exact determinant (not just an associate).  Cofactor
expansion handles sizes below 4; Bareiss handles the rest.
"""

from __future__ import annotations

from dataclasses import dataclass

from .laurent import LaurentPoly
from .polygcd import poly_divexact


@dataclass(frozen=True)
class LaurentMatrix:
    """A rectangular grid of Laurent polynomials over one variable list."""

    row_labels: tuple
    col_labels: tuple
    entries: tuple  # tuple of row tuples of LaurentPoly

    def __post_init__(self):
        object.__setattr__(self, "row_labels", tuple(self.row_labels))
        object.__setattr__(self, "col_labels", tuple(self.col_labels))
        object.__setattr__(
            self, "entries", tuple(tuple(row) for row in self.entries)
        )
        if len(self.entries) != len(self.row_labels):
            raise ValueError("row count does not match row labels")
        for row in self.entries:
            if len(row) != len(self.col_labels):
                raise ValueError("ragged matrix")
        vars = self.vars
        for row in self.entries:
            for e in row:
                if e.vars != vars:
                    raise ValueError("entries over different variable lists")

    @property
    def vars(self):
        if self.entries and self.entries[0]:
            return self.entries[0][0].vars
        return ()

    @property
    def shape(self):
        return len(self.row_labels), len(self.col_labels)

    def entry(self, row_label, col_label):
        return self.entries[self.row_labels.index(row_label)][
            self.col_labels.index(col_label)
        ]

    def delete_row(self, label):
        i = self.row_labels.index(label)
        return LaurentMatrix(
            self.row_labels[:i] + self.row_labels[i + 1 :],
            self.col_labels,
            self.entries[:i] + self.entries[i + 1 :],
        )

    def __matmul__(self, other):
        if len(self.col_labels) != len(other.row_labels):
            raise ValueError("shape mismatch")
        vars = self.vars or other.vars
        zero = LaurentPoly.zero(vars)
        rows = []
        for i in range(len(self.row_labels)):
            row = []
            for j in range(len(other.col_labels)):
                acc = zero
                for k in range(len(self.col_labels)):
                    acc = acc + self.entries[i][k] * other.entries[k][j]
                row.append(acc)
            rows.append(tuple(row))
        return LaurentMatrix(self.row_labels, other.col_labels, rows)

    def to_json(self):
        return {
            "vars": list(self.vars),
            "row_labels": list(self.row_labels),
            "col_labels": list(self.col_labels),
            "entries": [[e.to_json()["terms"] for e in row] for row in self.entries],
        }

    @classmethod
    def from_json(cls, data):
        vars = tuple(data["vars"])
        rows = []
        for row in data["entries"]:
            rows.append(
                tuple(
                    LaurentPoly(vars, {tuple(t["exp"]): t["coef"] for t in terms})
                    for terms in row
                )
            )
        return cls(tuple(data["row_labels"]), tuple(data["col_labels"]), rows)

    def table(self):
        """Aligned plain-text rendering."""
        headers = [""] + [str(c) for c in self.col_labels]
        body = [
            [str(label)] + [str(e) for e in row]
            for label, row in zip(self.row_labels, self.entries)
        ]
        widths = [
            max(len(line[i]) for line in [headers] + body)
            for i in range(len(headers))
        ]
        lines = []
        for line in [headers] + body:
            lines.append("  ".join(cell.ljust(w) for cell, w in zip(line, widths)).rstrip())
        return "\n".join(lines)


def _det_cofactor(rows, vars):
    n = len(rows)
    if n == 0:
        return LaurentPoly.constant(vars, 1)
    if n == 1:
        return rows[0][0]
    if n == 2:
        return rows[0][0] * rows[1][1] - rows[0][1] * rows[1][0]
    acc = LaurentPoly.zero(vars)
    for j in range(n):
        if rows[0][j].is_zero:
            continue
        minor = [r[:j] + r[j + 1 :] for r in rows[1:]]
        term = rows[0][j] * _det_cofactor(minor, vars)
        acc = acc + term if j % 2 == 0 else acc - term
    return acc


def _det_bareiss(rows, vars):
    n = len(rows)
    m = [list(r) for r in rows]
    one = LaurentPoly.constant(vars, 1)
    prev = one
    sign = 1
    for k in range(n - 1):
        if m[k][k].is_zero:
            swap = next((i for i in range(k + 1, n) if not m[i][k].is_zero), None)
            if swap is None:
                return LaurentPoly.zero(vars)
            m[k], m[swap] = m[swap], m[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                num = m[i][j] * m[k][k] - m[i][k] * m[k][j]
                m[i][j] = poly_divexact(num, prev)
            m[i][k] = LaurentPoly.zero(vars)
        prev = m[k][k]
    det = m[n - 1][n - 1]
    return det if sign > 0 else -det


def determinant(matrix):
    """Exact determinant of a square LaurentMatrix.

    >>> from .laurent import parse_poly
    >>> p = lambda s: parse_poly(s, ("x",))
    >>> m = LaurentMatrix(("a", "b"), ("c", "d"),
    ...                   ((p("x"), p("1")), (p("1"), p("x"))))
    >>> print(determinant(m))
    x^2 - 1
    """
    nrows, ncols = matrix.shape
    if nrows != ncols:
        raise ValueError("determinant of a non-square matrix")
    vars = matrix.vars
    if nrows == 0:
        return LaurentPoly.constant(vars, 1)
    # clear each row by its minimal-exponent monomial so entries are polynomials
    unit_exp = [0] * len(vars)
    cleared = []
    for row in matrix.entries:
        mins = [0] * len(vars)
        for e in row:
            if e.is_zero:
                continue
            for i, v in enumerate(e.min_exponents()):
                mins[i] = min(mins[i], v)
        cleared.append(tuple(e.shift(tuple(-m for m in mins)) for e in row))
        for i, v in enumerate(mins):
            unit_exp[i] += v
    if nrows < 4:
        det = _det_cofactor(cleared, vars)
    else:
        det = _det_bareiss(cleared, vars)
    return det.shift(tuple(unit_exp))
