"""Exact scalar arithmetic over Q or F_p, and dense exact linear algebra.

Every computation in the package funnels through this module: scalars are
``fractions.Fraction`` (field Q) or ``FpScalar`` (field F_p, p prime), and
rank / kernel / solve are done by exact Gaussian elimination.  There are no
tolerances anywhere; equality is literal equality of canonical forms.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    d = 2
    while d * d <= p:
        if p % d == 0:
            return False
        d += 1
    return True


@dataclass(frozen=True)
class FpScalar:
    """Residue modulo a prime; always normalized to 0 <= value < p."""

    value: int
    p: int

    def _lift(self, other):
        if isinstance(other, FpScalar):
            if other.p != self.p:
                raise ValueError(f"mixed moduli {self.p} and {other.p}")
            return other
        if isinstance(other, int):
            return FpScalar(other % self.p, self.p)
        return NotImplemented

    def __add__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return NotImplemented
        return FpScalar((self.value + other.value) % self.p, self.p)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return NotImplemented
        return FpScalar((self.value - other.value) % self.p, self.p)

    def __rsub__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return NotImplemented
        return other - self

    def __mul__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return NotImplemented
        return FpScalar((self.value * other.value) % self.p, self.p)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return NotImplemented
        if other.value == 0:
            raise ZeroDivisionError("division by zero in F_p")
        return self * FpScalar(pow(other.value, self.p - 2, self.p), self.p)

    def __neg__(self):
        return FpScalar(-self.value % self.p, self.p)

    def __bool__(self):
        return self.value != 0

    def __eq__(self, other):
        if isinstance(other, FpScalar):
            return self.p == other.p and self.value == other.value
        if isinstance(other, int):
            return self.value == other % self.p
        return NotImplemented

    def __hash__(self):
        return hash((self.value, self.p))

    def __repr__(self):
        return f"{self.value} (mod {self.p})"


class RationalField:
    """The field Q; scalars are ``fractions.Fraction`` (always canonical)."""

    tag = "Q"
    characteristic = 0

    @property
    def zero(self):
        return Fraction(0)

    @property
    def one(self):
        return Fraction(1)

    def scalar(self, num, den=1):
        return Fraction(num, den)

    def parse(self, text: str):
        """Parse "p/q" or "p"; the sign sits on the numerator."""
        return Fraction(text.strip())

    def format(self, x) -> str:
        return str(x)

    def __repr__(self):
        return "Q"

    def __eq__(self, other):
        return isinstance(other, RationalField)

    def __hash__(self):
        return hash("Q")


class PrimeField:
    """The field F_p for a prime p.

    Results computed here are advisory: the cohomology contract is stated in
    characteristic 0, and every report produced over F_p is labeled as such.
    """

    characteristic: int

    def __init__(self, p: int):
        if not _is_prime(p):
            raise ValueError(f"{p} is not prime")
        self.p = p
        self.characteristic = p
        self.tag = f"Fp:{p}"

    @property
    def zero(self):
        return FpScalar(0, self.p)

    @property
    def one(self):
        return FpScalar(1, self.p)

    def scalar(self, num, den=1):
        x = FpScalar(num % self.p, self.p)
        if den != 1:
            x = x / FpScalar(den % self.p, self.p)
        return x

    def parse(self, text: str):
        text = text.strip()
        if "/" in text:
            num, den = text.split("/")
            return self.scalar(int(num), int(den))
        return self.scalar(int(text))

    def format(self, x) -> str:
        return str(x.value)

    def __repr__(self):
        return f"F_{self.p}"

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("Fp", self.p))


QQ = RationalField()


def field_from_tag(tag) -> RationalField | PrimeField:
    """Build a field from its file tag: "Q" or {"Fp": p}."""
    if tag == "Q":
        return QQ
    if isinstance(tag, dict) and set(tag) == {"Fp"}:
        return PrimeField(int(tag["Fp"]))
    if isinstance(tag, str) and tag.startswith("Fp:"):
        return PrimeField(int(tag.split(":", 1)[1]))
    raise ValueError(f"unknown field tag {tag!r}")


class DenseMatrix:
    """Dense matrix of exact scalars, row-major."""

    def __init__(self, field, rows: int, cols: int, entries: list):
        if len(entries) != rows * cols:
            raise ValueError("entries length must be rows*cols")
        self.field = field
        self.rows = rows
        self.cols = cols
        self.entries = list(entries)

    @classmethod
    def from_rows(cls, field, row_lists):
        rows = len(row_lists)
        cols = len(row_lists[0]) if rows else 0
        flat = []
        for r in row_lists:
            if len(r) != cols:
                raise ValueError("ragged rows")
            flat.extend(r)
        return cls(field, rows, cols, flat)

    @classmethod
    def identity(cls, field, n: int):
        z, o = field.zero, field.one
        return cls.from_rows(field, [[o if i == j else z for j in range(n)] for i in range(n)])

    @classmethod
    def zero(cls, field, rows: int, cols: int):
        return cls(field, rows, cols, [field.zero] * (rows * cols))

    def at(self, i: int, j: int):
        return self.entries[i * self.cols + j]

    def row(self, i: int) -> list:
        return self.entries[i * self.cols : (i + 1) * self.cols]

    def row_lists(self) -> list:
        return [self.row(i) for i in range(self.rows)]

    def mul_vec(self, v: list) -> list:
        if len(v) != self.cols:
            raise ValueError("dimension mismatch")
        zero = self.field.zero
        out = []
        for i in range(self.rows):
            base = i * self.cols
            acc = zero
            for j, x in enumerate(v):
                if x:
                    acc = acc + self.entries[base + j] * x
            out.append(acc)
        return out

    def mul(self, other: "DenseMatrix") -> "DenseMatrix":
        if self.cols != other.rows:
            raise ValueError("dimension mismatch")
        zero = self.field.zero
        out = DenseMatrix.zero(self.field, self.rows, other.cols)
        for i in range(self.rows):
            row = self.row(i)
            for k, f in enumerate(row):
                if not f:
                    continue
                obase = k * other.cols
                base = i * other.cols
                for j in range(other.cols):
                    x = other.entries[obase + j]
                    if x:
                        out.entries[base + j] = out.entries[base + j] + f * x
        return out

    def is_zero(self) -> bool:
        return all(not x for x in self.entries)

    def __eq__(self, other):
        return (
            isinstance(other, DenseMatrix)
            and self.rows == other.rows
            and self.cols == other.cols
            and self.entries == other.entries
        )

    def __repr__(self):
        return f"DenseMatrix({self.rows}x{self.cols})"


def _rref(field, rows: list) -> tuple[list, list]:
    """Reduced row echelon form in place; returns (rows, pivot column list).

    Pivot selection is deterministic: scan columns left to right, take the
    first row (top to bottom among remaining rows) with a nonzero entry.
    """
    nrows = len(rows)
    ncols = len(rows[0]) if nrows else 0
    pivots = []
    prow = 0
    for col in range(ncols):
        if prow >= nrows:
            break
        sel = -1
        for r in range(prow, nrows):
            if rows[r][col]:
                sel = r
                break
        if sel < 0:
            continue
        rows[prow], rows[sel] = rows[sel], rows[prow]
        pivot_row = rows[prow]
        inv = field.one / pivot_row[col]
        if inv != field.one:
            rows[prow] = pivot_row = [x * inv for x in pivot_row]
        for r in range(nrows):
            if r == prow:
                continue
            f = rows[r][col]
            if f:
                rr = rows[r]
                rows[r] = [a if not b else a - f * b for a, b in zip(rr, pivot_row)]
        pivots.append(col)
        prow += 1
    return rows, pivots


def rank_and_kernel(m: DenseMatrix) -> tuple[int, list]:
    """Exact rank and a deterministic kernel basis.

    The kernel basis comes from the reduced row echelon form, one vector per
    free column in increasing column order, with the free coordinate set to 1.
    Always rank + len(kernel) == cols.
    """
    rows, pivots = _rref(m.field, m.row_lists())
    rank = len(pivots)
    pivot_set = set(pivots)
    free_cols = [c for c in range(m.cols) if c not in pivot_set]
    zero, one = m.field.zero, m.field.one
    kernel = []
    for fc in free_cols:
        v = [zero] * m.cols
        v[fc] = one
        for r, pc in enumerate(pivots):
            coeff = rows[r][fc]
            if coeff:
                v[pc] = -coeff
        kernel.append(v)
    return rank, kernel


def solve(m: DenseMatrix, b: list) -> list | None:
    """One exact solution of M x = b, or None when inconsistent.

    When the system is underdetermined the free variables are set to zero,
    which makes the returned solution canonical for a fixed input.
    """
    if len(b) != m.rows:
        raise ValueError("right-hand side length must equal rows")
    aug = [m.row(i) + [b[i]] for i in range(m.rows)]
    if m.cols == 0:
        return [] if all(not x for x in b) else None
    rows, pivots = _rref(m.field, aug)
    # A pivot in the augmented column marks an inconsistent system.
    if m.cols in pivots:
        return None
    zero = m.field.zero
    x = [zero] * m.cols
    for r, pc in enumerate(pivots):
        x[pc] = rows[r][m.cols]
    return x


class RowSpan:
    """Incrementally built row space; used for membership and rank queries."""

    def __init__(self, field, dim: int):
        self.field = field
        self.dim = dim
        self.rows = []  # reduced rows
        self.pivot_cols = []

    def _reduce(self, v: list) -> list:
        v = list(v)
        for row, pc in zip(self.rows, self.pivot_cols):
            f = v[pc]
            if f:
                v = [a if not b else a - f * b for a, b in zip(v, row)]
        return v

    def contains(self, v: list) -> bool:
        return all(not x for x in self._reduce(v))

    def add(self, v: list) -> bool:
        """Add v to the span; returns True when the rank grew."""
        v = self._reduce(v)
        for c, x in enumerate(v):
            if x:
                inv = self.field.one / x
                if inv != self.field.one:
                    v = [a * inv for a in v]
                self.rows.append(v)
                self.pivot_cols.append(c)
                return True
        return False

    @property
    def rank(self) -> int:
        return len(self.rows)
