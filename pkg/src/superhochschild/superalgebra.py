"""Finite-dimensional associative superalgebras given by structure constants.

An algebra lives on a basis e_0..e_{d-1} with Z_2 parities and a table
c[i][j][k] meaning e_i * e_j = sum_k c[i][j][k] e_k.  Validators check the
grading rule (the product of parities alpha and beta lands in parity
alpha+beta mod 2) and associativity, reporting witnesses instead of raising.
"""

from __future__ import annotations

from dataclasses import dataclass

from .exactfield import QQ


@dataclass(frozen=True)
class SuperElement:
    """Element in basis coordinates; parity is declared only when homogeneous."""

    coords: tuple
    parity: int | None = None

    def __add__(self, other: "SuperElement") -> "SuperElement":
        if len(self.coords) != len(other.coords):
            raise ValueError("dimension mismatch")
        parity = self.parity if self.parity == other.parity else None
        return SuperElement(tuple(a + b for a, b in zip(self.coords, other.coords)), parity)

    def __sub__(self, other: "SuperElement") -> "SuperElement":
        return self + other.scale(-1)

    def scale(self, c) -> "SuperElement":
        return SuperElement(tuple(c * a for a in self.coords), self.parity)

    def is_zero(self) -> bool:
        return all(not a for a in self.coords)


@dataclass(frozen=True)
class Violation:
    kind: str
    witness: tuple
    detail: str = ""


@dataclass
class ValidationReport:
    violations: list

    @property
    def ok(self) -> bool:
        return not self.violations

    def __str__(self):
        if self.ok:
            return "valid"
        lines = [f"{v.kind} at {v.witness}: {v.detail}".rstrip(": ") for v in self.violations]
        return "\n".join(lines)


@dataclass(frozen=True)
class SuperAlgebra:
    """Associative superalgebra A = A_0 (+) A_1 with a fixed homogeneous basis."""

    field: object
    dim: int
    parities: tuple
    names: tuple
    table: tuple  # table[i][j][k] scalar
    unit: tuple | None = None  # coordinates of the unit, when one is known

    def __post_init__(self):
        if self.dim < 0:
            raise ValueError("dimension must be >= 0")
        if len(self.parities) != self.dim or len(self.names) != self.dim:
            raise ValueError("parities and names must have length dim")
        if any(p not in (0, 1) for p in self.parities):
            raise ValueError("parities must be 0 or 1")
        if len(self.table) != self.dim or any(
            len(row) != self.dim or any(len(cell) != self.dim for cell in row) for row in self.table
        ):
            raise ValueError("table must be dim x dim x dim")

    def basis_element(self, i: int) -> SuperElement:
        coords = [self.field.zero] * self.dim
        coords[i] = self.field.one
        return SuperElement(tuple(coords), self.parities[i])

    def element(self, coords, parity: int | None = None) -> SuperElement:
        coords = tuple(coords)
        if len(coords) != self.dim:
            raise ValueError("dimension mismatch")
        if parity is not None:
            for i, c in enumerate(coords):
                if c and self.parities[i] != parity:
                    raise ValueError(f"coordinate {i} breaks declared parity {parity}")
        return SuperElement(coords, parity)

    def multiply(self, x: SuperElement, y: SuperElement) -> SuperElement:
        """Bilinear product; parity of the result is additive when declared."""
        if len(x.coords) != self.dim or len(y.coords) != self.dim:
            raise ValueError("dimension mismatch")
        out = [self.field.zero] * self.dim
        for i, xi in enumerate(x.coords):
            if not xi:
                continue
            for j, yj in enumerate(y.coords):
                if not yj:
                    continue
                c = xi * yj
                row = self.table[i][j]
                for k in range(self.dim):
                    if row[k]:
                        out[k] = out[k] + c * row[k]
        parity = None
        if x.parity is not None and y.parity is not None:
            parity = (x.parity + y.parity) % 2
        return SuperElement(tuple(out), parity)

    def product_expansions(self) -> list:
        """For each k, the list of (i, j, c[i][j][k]) with nonzero coefficient."""
        exp = [[] for _ in range(self.dim)]
        for i in range(self.dim):
            for j in range(self.dim):
                for k, c in enumerate(self.table[i][j]):
                    if c:
                        exp[k].append((i, j, c))
        return exp


def validate(algebra: SuperAlgebra, variant: str = "standard") -> ValidationReport:
    """Check the superalgebra axioms, listing violations with witnesses.

    variant="standard" checks ordinary associativity (ab)c = a(bc).
    variant="cyclic" instead checks the nonstandard identity (ab)c = (bc)a,
    kept as a diagnostic; it fails on any noncommutative algebra.
    """
    if variant not in ("standard", "cyclic"):
        raise ValueError(f"unknown variant {variant!r}")
    violations = []
    d = algebra.dim
    par = algebra.parities
    for i in range(d):
        for j in range(d):
            expected = (par[i] + par[j]) % 2
            for k, c in enumerate(algebra.table[i][j]):
                if c and par[k] != expected:
                    violations.append(
                        Violation(
                            "grading",
                            (i, j, k),
                            f"product has component of parity {par[k]}, expected {expected}",
                        )
                    )
    for i in range(d):
        ei = algebra.basis_element(i)
        for j in range(d):
            ej = algebra.basis_element(j)
            eij = algebra.multiply(ei, ej)
            for k in range(d):
                ek = algebra.basis_element(k)
                left = algebra.multiply(eij, ek)
                if variant == "standard":
                    right = algebra.multiply(ei, algebra.multiply(ej, ek))
                    kind = "associativity"
                else:
                    right = algebra.multiply(algebra.multiply(ej, ek), ei)
                    kind = "cyclic-associativity"
                if left.coords != right.coords:
                    violations.append(Violation(kind, (i, j, k)))
    return ValidationReport(violations)


def _matrix_unit_names(p: int, q: int) -> list:
    n = p + q
    return [f"E{a + 1}{b + 1}" for a in range(n) for b in range(n)]


def make_named(name: str, field=QQ, **params) -> SuperAlgebra:
    """Constructor zoo.

    Names: ground, dual_even, dual_odd, clifford1, matrix (params p, q),
    square_zero (params base, module).
    """
    zero, one = field.zero, field.one

    def table_from(entries, d):
        t = [[[zero] * d for _ in range(d)] for _ in range(d)]
        for (i, j, k), c in entries.items():
            t[i][j][k] = c
        return tuple(tuple(tuple(cell) for cell in row) for row in t)

    if name == "ground":
        return SuperAlgebra(field, 1, (0,), ("e",), table_from({(0, 0, 0): one}, 1), (one,))
    if name == "dual_even":
        entries = {(0, 0, 0): one, (0, 1, 1): one, (1, 0, 1): one}
        return SuperAlgebra(field, 2, (0, 0), ("e", "x"), table_from(entries, 2), (one, zero))
    if name == "dual_odd":
        entries = {(0, 0, 0): one, (0, 1, 1): one, (1, 0, 1): one}
        return SuperAlgebra(field, 2, (0, 1), ("e", "eps"), table_from(entries, 2), (one, zero))
    if name == "clifford1":
        entries = {(0, 0, 0): one, (0, 1, 1): one, (1, 0, 1): one, (1, 1, 0): one}
        return SuperAlgebra(field, 2, (0, 1), ("e", "g"), table_from(entries, 2), (one, zero))
    if name == "matrix":
        p, q = int(params["p"]), int(params["q"])
        if p < 0 or q < 0 or p + q == 0:
            raise ValueError("matrix(p|q) needs p+q >= 1")
        n = p + q
        d = n * n
        blk = [0] * p + [1] * q
        idx = lambda a, b: a * n + b
        parities = tuple((blk[a] + blk[b]) % 2 for a in range(n) for b in range(n))
        entries = {}
        # E_ab E_cd = delta_bc E_ad
        for a in range(n):
            for b in range(n):
                for c in range(n):
                    entries[(idx(a, b), idx(b, c), idx(a, c))] = one
        unit = [zero] * d
        for a in range(n):
            unit[idx(a, a)] = one
        return SuperAlgebra(
            field, d, parities, tuple(_matrix_unit_names(p, q)), table_from(entries, d), tuple(unit)
        )
    if name == "square_zero":
        from .supermodule import square_zero_algebra

        return square_zero_algebra(params["base"], params["module"])
    raise ValueError(f"unknown algebra name {name!r}")


@dataclass(frozen=True)
class LinearMap:
    """Homogeneous linear map A -> A, stored by columns (images of e_j)."""

    parity: int
    columns: tuple  # columns[j] = coordinate tuple of D(e_j)

    def apply(self, coords) -> tuple:
        dim = len(self.columns)
        out = [None] * 0
        if dim == 0:
            return tuple()
        out = [self.columns[0][k] * 0 for k in range(len(self.columns[0]))]
        for j, c in enumerate(coords):
            if not c:
                continue
            col = self.columns[j]
            out = [acc + c * x for acc, x in zip(out, col)]
        return tuple(out)

    def is_zero(self) -> bool:
        return all(not x for col in self.columns for x in col)


def inner_derivation(algebra: SuperAlgebra, a: SuperElement, side: str = "left") -> LinearMap:
    """Inner derivation attached to a homogeneous element a.

    side="left":  b |-> a b - (-1)^{|a||b|} b a   (a left derivation)
    side="right": b |-> b a - (-1)^{|a||b|} a b   (a right derivation)
    Both are homogeneous of a's parity.
    """
    if a.parity is None:
        raise ValueError("inner derivations need a homogeneous element")
    if side not in ("left", "right"):
        raise ValueError("side must be 'left' or 'right'")
    cols = []
    for j in range(algebra.dim):
        b = algebra.basis_element(j)
        sign = -1 if (a.parity * algebra.parities[j]) % 2 else 1
        ab = algebra.multiply(a, b)
        ba = algebra.multiply(b, a)
        if side == "left":
            img = ab - ba.scale(algebra.field.scalar(sign))
        else:
            img = ba - ab.scale(algebra.field.scalar(sign))
        cols.append(img.coords)
    return LinearMap(a.parity, tuple(cols))


def derivation_law_witness(algebra: SuperAlgebra, d: LinearMap, side: str = "left"):
    """First basis pair (i, j) breaking the derivation law, or None.

    Left law:  D(ab) = (Da)b + (-1)^{|D||a|} a (Db)
    Right law: D(ab) = (-1)^{|D||b|} (Da)b + a (Db)
    """
    for i in range(algebra.dim):
        ei = algebra.basis_element(i)
        dei = SuperElement(d.apply(ei.coords), (d.parity + algebra.parities[i]) % 2)
        for j in range(algebra.dim):
            ej = algebra.basis_element(j)
            dej = SuperElement(d.apply(ej.coords), (d.parity + algebra.parities[j]) % 2)
            lhs = d.apply(algebra.multiply(ei, ej).coords)
            if side == "left":
                sign = -1 if (d.parity * algebra.parities[i]) % 2 else 1
                rhs = algebra.multiply(dei, ej) + algebra.multiply(ei, dej).scale(
                    algebra.field.scalar(sign)
                )
            else:
                sign = -1 if (d.parity * algebra.parities[j]) % 2 else 1
                rhs = algebra.multiply(dei, ej).scale(algebra.field.scalar(sign)) + algebra.multiply(
                    ei, dej
                )
            if tuple(lhs) != rhs.coords:
                return (i, j)
    return None


def compose_maps(d1: LinearMap, d2: LinearMap) -> LinearMap:
    cols = tuple(d1.apply(col) for col in d2.columns)
    return LinearMap((d1.parity + d2.parity) % 2, cols)


def map_super_commutator(d1: LinearMap, d2: LinearMap) -> LinearMap:
    """[D1, D2] = D1 D2 - (-1)^{|D1||D2|} D2 D1."""
    a = compose_maps(d1, d2)
    b = compose_maps(d2, d1)
    sign = -1 if (d1.parity * d2.parity) % 2 else 1
    cols = tuple(
        tuple(x - sign * y for x, y in zip(ca, cb)) for ca, cb in zip(a.columns, b.columns)
    )
    return LinearMap(a.parity, cols)


def supercommutator_table(algebra: SuperAlgebra) -> tuple:
    """Bracket table [e_i, e_j] = e_i e_j - (-1)^{|i||j|} e_j e_i."""
    d = algebra.dim
    table = []
    for i in range(d):
        row = []
        ei = algebra.basis_element(i)
        for j in range(d):
            ej = algebra.basis_element(j)
            sign = -1 if (algebra.parities[i] * algebra.parities[j]) % 2 else 1
            val = algebra.multiply(ei, ej) - algebra.multiply(ej, ei).scale(
                algebra.field.scalar(sign)
            )
            row.append(val.coords)
        table.append(tuple(row))
    return tuple(table)


def check_lie_superalgebra(field, dim: int, parities, table) -> ValidationReport:
    """Validate a bracket table against the Lie superalgebra axioms.

    Checks the grading rule, graded antisymmetry
    [a,b] = -(-1)^{|a||b|}[b,a], and the graded Jacobi identity
    (-1)^{|a||c|}[[a,b],c] + (-1)^{|b||a|}[[b,c],a] + (-1)^{|c||b|}[[c,a],b] = 0
    on all basis triples.
    """
    parities = tuple(parities)
    violations = []
    lie = SuperAlgebra(field, dim, parities, tuple(f"x{i}" for i in range(dim)), table)
    for i in range(dim):
        for j in range(dim):
            expected = (parities[i] + parities[j]) % 2
            for k, c in enumerate(table[i][j]):
                if c and parities[k] != expected:
                    violations.append(Violation("grading", (i, j, k)))
    for i in range(dim):
        xi = lie.basis_element(i)
        for j in range(dim):
            xj = lie.basis_element(j)
            sign = -1 if (parities[i] * parities[j]) % 2 else 1
            lhs = lie.multiply(xi, xj)
            rhs = lie.multiply(xj, xi).scale(field.scalar(-sign))
            if lhs.coords != rhs.coords:
                violations.append(Violation("antisymmetry", (i, j)))
    for i in range(dim):
        xi = lie.basis_element(i)
        for j in range(dim):
            xj = lie.basis_element(j)
            for k in range(dim):
                xk = lie.basis_element(k)
                s1 = -1 if (parities[i] * parities[k]) % 2 else 1
                s2 = -1 if (parities[j] * parities[i]) % 2 else 1
                s3 = -1 if (parities[k] * parities[j]) % 2 else 1
                total = (
                    lie.multiply(lie.multiply(xi, xj), xk).scale(field.scalar(s1))
                    + lie.multiply(lie.multiply(xj, xk), xi).scale(field.scalar(s2))
                    + lie.multiply(lie.multiply(xk, xi), xj).scale(field.scalar(s3))
                )
                if not total.is_zero():
                    violations.append(Violation("jacobi", (i, j, k)))
    return ValidationReport(violations)
