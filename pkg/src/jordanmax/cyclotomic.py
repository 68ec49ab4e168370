"""Exact arithmetic in cyclotomic fields and linear algebra over them.

An element of Q(zeta_d) is stored as a rational polynomial in zeta_d of
degree < phi(d), reduced modulo the d-th cyclotomic polynomial.  That
representation is canonical, so equality is coefficient equality.

Matrices hold :class:`CycNum` entries of one common order.  Rank and kernel
computations are plain Gaussian elimination with first-nonzero pivoting;
when every entry is rational the elimination runs on ``Fraction`` values,
which gives the same rank (a rational matrix has the same rank over every
extension field) at a fraction of the cost.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import gcd
from typing import Iterable, Sequence

from .errors import CommutationError, NotAComplexError

__all__ = [
    "OrderMismatchError",
    "cyclotomic_polynomial",
    "euler_phi",
    "CycNum",
    "cyc_arith",
    "ExactMatrix",
    "matrix_rank",
    "CochainComplex",
    "cohomology_dims",
    "kernel_dim_on_cohomology",
]


class OrderMismatchError(ValueError):
    pass


# ---------------------------------------------------------------------------
# integer polynomials, coefficient lists low -> high


def _poly_divmod_int(num, den):
    """Exact division of integer polynomials with monic ``den``."""
    num = list(num)
    q = [0] * max(len(num) - len(den) + 1, 1)
    lead = den[-1]
    assert lead in (1, -1)
    for k in range(len(num) - len(den), -1, -1):
        c = num[k + len(den) - 1] * lead
        q[k] = c
        if c:
            for i, b in enumerate(den):
                num[k + i] -= c * b
    rem = num[: len(den) - 1]
    return q, rem


def _poly_mul_int(a, b):
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return out


@lru_cache(maxsize=None)
def cyclotomic_polynomial(d: int) -> tuple[int, ...]:
    """Coefficients (constant term first) of the d-th cyclotomic polynomial.

    Computed as (x^d - 1) divided by the product of Phi_e over the proper
    divisors e of d.
    """
    if not isinstance(d, int) or d < 1:
        raise ValueError(f"cyclotomic order must be a positive integer, got {d!r}")
    num = [-1] + [0] * (d - 1) + [1]
    den = [1]
    for e in range(1, d):
        if d % e == 0:
            den = _poly_mul_int(den, cyclotomic_polynomial(e))
    q, rem = _poly_divmod_int(num, den)
    if any(rem):
        raise ArithmeticError(f"x^{d}-1 not divisible by the product of lower Phi_e")
    while len(q) > 1 and q[-1] == 0:
        q.pop()
    return tuple(q)


def euler_phi(d: int) -> int:
    return len(cyclotomic_polynomial(d)) - 1


@lru_cache(maxsize=None)
def _power_table(d: int) -> tuple[tuple[int, ...], ...]:
    """Row k = coefficients of x^k mod Phi_d, for 0 <= k < max(d, 2*phi(d))."""
    phi_poly = cyclotomic_polynomial(d)
    n = len(phi_poly) - 1
    rows = []
    cur = [0] * n
    cur[0] = 1
    for _ in range(max(d, 2 * n)):
        rows.append(tuple(cur))
        # multiply by x and reduce with the monic Phi_d
        top = cur[-1]
        cur = [0] + cur[:-1]
        if top:
            for i in range(n):
                cur[i] -= top * phi_poly[i]
    return tuple(rows)


# ---------------------------------------------------------------------------
# field elements


_ZERO = Fraction(0)
_ONE = Fraction(1)


class CycNum:
    """An element of the cyclotomic field Q(zeta_d)."""

    __slots__ = ("order", "coeffs", "_hash")

    def __init__(self, order: int, coeffs: Iterable = ()):
        n = euler_phi(order)
        cs = [Fraction(c) for c in coeffs]
        if len(cs) > n:
            cs = _reduce(order, cs)
        else:
            cs += [_ZERO] * (n - len(cs))
        self.order = order
        self.coeffs = tuple(cs)
        self._hash = None

    # -- constructors -----------------------------------------------------
    @classmethod
    def _raw(cls, order, coeffs):
        obj = object.__new__(cls)
        obj.order = order
        obj.coeffs = coeffs
        obj._hash = None
        return obj

    @classmethod
    def rational(cls, order: int, value) -> "CycNum":
        return cls(order, [value])

    @classmethod
    def zero(cls, order: int) -> "CycNum":
        return cls._raw(order, (_ZERO,) * euler_phi(order))

    @classmethod
    def one(cls, order: int) -> "CycNum":
        return cls(order, [1])

    @classmethod
    def zeta(cls, order: int, k: int = 1) -> "CycNum":
        """zeta_d ** k for a fixed primitive d-th root of unity zeta_d."""
        row = _power_table(order)[k % order]
        return cls._raw(order, tuple(Fraction(c) for c in row))

    # -- predicates -------------------------------------------------------
    def __bool__(self):
        return any(self.coeffs)

    def is_rational(self) -> bool:
        return not any(self.coeffs[1:])

    def as_fraction(self) -> Fraction:
        if not self.is_rational():
            raise ValueError(f"{self!r} is not rational")
        return self.coeffs[0]

    # -- arithmetic -------------------------------------------------------
    def _coerce(self, other):
        if isinstance(other, CycNum):
            if other.order != self.order:
                raise OrderMismatchError(
                    f"cannot combine elements of Q(zeta_{self.order}) and Q(zeta_{other.order})"
                )
            return other
        if isinstance(other, (int, Fraction)):
            return CycNum.rational(self.order, other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return CycNum._raw(self.order, tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    __radd__ = __add__

    def __neg__(self):
        return CycNum._raw(self.order, tuple(-a for a in self.coeffs))

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return CycNum._raw(self.order, tuple(a - b for a, b in zip(self.coeffs, other.coeffs)))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return CycNum._raw(self.order, tuple(a * other for a in self.coeffs))
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if self.is_rational():
            c = self.coeffs[0]
            return CycNum._raw(self.order, tuple(c * b for b in other.coeffs))
        if other.is_rational():
            c = other.coeffs[0]
            return CycNum._raw(self.order, tuple(a * c for a in self.coeffs))
        n = len(self.coeffs)
        prod = [_ZERO] * (2 * n - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    if b:
                        prod[i + j] += a * b
        return CycNum._raw(self.order, tuple(_reduce(self.order, prod)))

    __rmul__ = __mul__

    def inverse(self) -> "CycNum":
        if not self:
            raise ZeroDivisionError("inverse of zero in Q(zeta_%d)" % self.order)
        if self.is_rational():
            return CycNum.rational(self.order, 1 / self.coeffs[0])
        # s * a + t * Phi = 1 in Q[x]; then a^{-1} = s mod Phi
        s = _poly_inverse_mod(list(self.coeffs), [Fraction(c) for c in cyclotomic_polynomial(self.order)])
        return CycNum(self.order, s)

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self * other.inverse()

    def __rtruediv__(self, other):
        return self.inverse() * other

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        out = CycNum.one(self.order)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    # -- field maps ---------------------------------------------------------
    def galois(self, a: int) -> "CycNum":
        """Image under the automorphism zeta_d -> zeta_d**a (gcd(a, d) = 1)."""
        d = self.order
        if gcd(a, d) != 1:
            raise ValueError(f"exponent {a} is not a unit mod {d}")
        table = _power_table(d)
        out = [_ZERO] * len(self.coeffs)
        for i, c in enumerate(self.coeffs):
            if c:
                row = table[(i * a) % d]
                for k, r in enumerate(row):
                    if r:
                        out[k] += c * r
        return CycNum._raw(d, tuple(out))

    def embed(self, order: int) -> "CycNum":
        """Image in Q(zeta_order) under zeta_e -> zeta_order**(order/e)."""
        if order % self.order:
            raise OrderMismatchError(f"Q(zeta_{self.order}) does not embed in Q(zeta_{order})")
        if order == self.order:
            return self
        step = order // self.order
        table = _power_table(order)
        out = [_ZERO] * euler_phi(order)
        for i, c in enumerate(self.coeffs):
            if c:
                for k, r in enumerate(table[(i * step) % order]):
                    if r:
                        out[k] += c * r
        return CycNum._raw(order, tuple(out))

    def to_complex(self, a: int = 1) -> complex:
        """Numerical value with zeta_d = exp(2 pi i a / d).  For display and tests only."""
        import cmath

        z = cmath.exp(2j * cmath.pi * a / self.order)
        return sum(float(c) * z**i for i, c in enumerate(self.coeffs))

    # -- comparison ---------------------------------------------------------
    def __eq__(self, other):
        if isinstance(other, CycNum):
            return self.order == other.order and self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self.is_rational() and self.coeffs[0] == other
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.order, self.coeffs))
        return self._hash

    def __repr__(self):
        return f"CycNum({self.order}, {self})"

    def __str__(self):
        terms = []
        for i, c in enumerate(self.coeffs):
            if not c:
                continue
            mono = "" if i == 0 else ("z" if i == 1 else f"z^{i}")
            if not mono:
                terms.append(str(c))
            elif c == 1:
                terms.append(mono)
            elif c == -1:
                terms.append("-" + mono)
            else:
                terms.append(f"{c}*{mono}")
        return " + ".join(terms).replace("+ -", "- ") if terms else "0"


def _reduce(d, coeffs):
    n = euler_phi(d)
    if len(coeffs) <= n:
        return list(coeffs) + [_ZERO] * (n - len(coeffs))
    table = _power_table(d)
    out = list(coeffs[:n])
    for k in range(n, len(coeffs)):
        c = coeffs[k]
        if c:
            row = table[k] if k < len(table) else table[k % d]
            for i, r in enumerate(row):
                if r:
                    out[i] += c * r
    return out


def _trim(p):
    while p and not p[-1]:
        p.pop()
    return p


def _poly_divmod_q(a, b):
    a = list(a)
    q = [_ZERO] * max(len(a) - len(b) + 1, 1)
    inv = 1 / b[-1]
    for k in range(len(a) - len(b), -1, -1):
        c = a[k + len(b) - 1] * inv
        q[k] = c
        if c:
            for i, y in enumerate(b):
                a[k + i] -= c * y
    return _trim(q), _trim(a[: len(b) - 1])


def _poly_sub_mul(a, q, b):
    """a - q*b."""
    out = list(a) + [_ZERO] * max(0, len(q) + len(b) - 1 - len(a))
    for i, x in enumerate(q):
        if x:
            for j, y in enumerate(b):
                out[i + j] -= x * y
    return _trim(out)


def _poly_inverse_mod(a, m):
    """s with s*a = 1 mod m, by the extended Euclidean algorithm over Q."""
    r0, r1 = _trim(list(m)), _trim(list(a))
    s0, s1 = [], [_ONE]
    while r1:
        q, r = _poly_divmod_q(r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, _poly_sub_mul(s0, q, s1)
    if len(r0) != 1:
        raise ZeroDivisionError("element is not invertible (modulus not irreducible?)")
    c = 1 / r0[0]
    return [x * c for x in s0]


def cyc_arith(a: CycNum, b: CycNum, op: str) -> CycNum:
    """Apply ``op`` in {'add', 'sub', 'mul', 'div'}."""
    if a.order != b.order:
        raise OrderMismatchError(f"orders differ: {a.order} vs {b.order}")
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "div":
        if not b:
            raise ZeroDivisionError("division by zero in Q(zeta_%d)" % a.order)
        return a / b
    raise ValueError(f"unknown operation {op!r}")


# ---------------------------------------------------------------------------
# matrices


def _as_cyc(x, d):
    if isinstance(x, CycNum):
        if x.order != d:
            if x.order == 1 or x.is_rational():
                return CycNum.rational(d, x.coeffs[0])
            raise OrderMismatchError(f"entry of order {x.order} in a matrix over Q(zeta_{d})")
        return x
    return CycNum.rational(d, x)


class ExactMatrix:
    """Dense matrix over Q(zeta_d).  Treated as immutable."""

    __slots__ = ("rows", "cols", "order", "entries")

    def __init__(self, entries: Sequence[Sequence], order: int, cols: int | None = None):
        rows = [tuple(_as_cyc(x, order) for x in r) for r in entries]
        if cols is None:
            cols = len(rows[0]) if rows else 0
        for r in rows:
            if len(r) != cols:
                raise ValueError("ragged matrix rows")
        self.rows = len(rows)
        self.cols = cols
        self.order = order
        self.entries = tuple(rows)

    @classmethod
    def zeros(cls, rows: int, cols: int, order: int) -> "ExactMatrix":
        z = CycNum.zero(order)
        return cls([[z] * cols for _ in range(rows)], order, cols)

    @classmethod
    def identity(cls, n: int, order: int) -> "ExactMatrix":
        z, o = CycNum.zero(order), CycNum.one(order)
        return cls([[o if i == j else z for j in range(n)] for i in range(n)], order, n)

    @property
    def shape(self):
        return (self.rows, self.cols)

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i][j]

    def __eq__(self, other):
        if not isinstance(other, ExactMatrix):
            return NotImplemented
        return self.shape == other.shape and self.order == other.order and self.entries == other.entries

    def __hash__(self):
        return hash((self.shape, self.order, self.entries))

    def __repr__(self):
        body = "; ".join(", ".join(str(x) for x in r) for r in self.entries)
        return f"ExactMatrix[{self.rows}x{self.cols}, Q(zeta_{self.order})]({body})"

    def is_zero(self) -> bool:
        return not any(x for r in self.entries for x in r)

    def is_rational(self) -> bool:
        return all(x.is_rational() for r in self.entries for x in r)

    def nonzero_entries(self):
        for i, r in enumerate(self.entries):
            for j, x in enumerate(r):
                if x:
                    yield i, j, x

    # -- algebra ------------------------------------------------------------
    def _check(self, other):
        if other.order != self.order:
            raise OrderMismatchError(f"matrix orders differ: {self.order} vs {other.order}")

    def __matmul__(self, other: "ExactMatrix") -> "ExactMatrix":
        self._check(other)
        if self.cols != other.rows:
            raise ValueError(f"shape mismatch {self.shape} @ {other.shape}")
        z = CycNum.zero(self.order)
        cols_of_other = list(zip(*other.entries)) if other.rows else [() for _ in range(other.cols)]
        out = []
        for r in self.entries:
            nz = [(k, x) for k, x in enumerate(r) if x]
            row = []
            for c in cols_of_other:
                acc = z
                for k, x in nz:
                    y = c[k]
                    if y:
                        acc = acc + x * y
                row.append(acc)
            out.append(row)
        return ExactMatrix(out, self.order, other.cols)

    def __add__(self, other):
        self._check(other)
        if self.shape != other.shape:
            raise ValueError("shape mismatch")
        return ExactMatrix(
            [[a + b for a, b in zip(r, s)] for r, s in zip(self.entries, other.entries)], self.order, self.cols
        )

    def __neg__(self):
        return ExactMatrix([[-a for a in r] for r in self.entries], self.order, self.cols)

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c) -> "ExactMatrix":
        c = _as_cyc(c, self.order)
        return ExactMatrix([[c * a for a in r] for r in self.entries], self.order, self.cols)

    def transpose(self) -> "ExactMatrix":
        return ExactMatrix([list(c) for c in zip(*self.entries)], self.order, self.rows) if self.rows else \
            ExactMatrix.zeros(self.cols, 0, self.order)

    def galois(self, a: int) -> "ExactMatrix":
        return ExactMatrix([[x.galois(a) for x in r] for r in self.entries], self.order, self.cols)

    @staticmethod
    def hstack(blocks: Sequence["ExactMatrix"]) -> "ExactMatrix":
        d = blocks[0].order
        rows = blocks[0].rows
        if any(b.rows != rows or b.order != d for b in blocks):
            raise ValueError("hstack: row counts or orders differ")
        cols = sum(b.cols for b in blocks)
        return ExactMatrix([sum((b.entries[i] for b in blocks), ()) for i in range(rows)], d, cols)

    @staticmethod
    def vstack(blocks: Sequence["ExactMatrix"]) -> "ExactMatrix":
        d = blocks[0].order
        cols = blocks[0].cols
        if any(b.cols != cols or b.order != d for b in blocks):
            raise ValueError("vstack: column counts or orders differ")
        return ExactMatrix([r for b in blocks for r in b.entries], d, cols)

    # -- elimination ----------------------------------------------------------
    def _field_rows(self):
        if self.is_rational():
            return [[x.coeffs[0] for x in r] for r in self.entries]
        return [list(r) for r in self.entries]

    def rank(self) -> int:
        return len(_row_echelon(self._field_rows(), self.cols)[1])

    def nullspace(self) -> list[list[CycNum]]:
        """Basis of the right kernel, as column vectors (lists)."""
        rows, pivots = _row_echelon(self._field_rows(), self.cols, reduced=True)
        free = [c for c in range(self.cols) if c not in set(pivots)]
        basis = []
        for f in free:
            v = [CycNum.zero(self.order)] * self.cols
            v[f] = CycNum.one(self.order)
            for r, p in zip(rows, pivots):
                v[p] = _as_cyc(-r[f], self.order)
            basis.append(v)
        return basis


def _row_echelon(rows, ncols, reduced=False):
    """Gaussian elimination with first-nonzero pivoting.

    Works for any field whose elements support + - * / and truth testing.
    Returns (pivot rows normalised to leading 1, pivot columns).
    """
    rows = [list(r) for r in rows if any(r)]
    pivots = []
    out = []
    col = 0
    while rows and col < ncols:
        for k, r in enumerate(rows):
            if r[col]:
                break
        else:
            col += 1
            continue
        piv = rows.pop(k)
        inv = 1 / piv[col]
        piv = [x * inv if x else x for x in piv]
        nz = [(j, x) for j, x in enumerate(piv) if x and j > col]
        remaining = []
        for r in rows:
            c = r[col]
            if c:
                r[col] = r[col] - c
                for j, x in nz:
                    r[j] = r[j] - c * x
            if any(r):
                remaining.append(r)
        rows = remaining
        if reduced:
            for prev in out:
                c = prev[col]
                if c:
                    prev[col] = prev[col] - c
                    for j, x in nz:
                        prev[j] = prev[j] - c * x
        out.append(piv)
        pivots.append(col)
        col += 1
    return out, pivots


def matrix_rank(m: ExactMatrix) -> int:
    return m.rank()


# ---------------------------------------------------------------------------
# cochain complexes


@dataclass(frozen=True)
class CochainComplex:
    """Finite cochain complex C^0 -> C^1 -> ... -> C^N over Q(zeta_order).

    ``differentials[j]`` is the matrix of d^j : C^j -> C^{j+1}, of shape
    (dims[j+1], dims[j]).
    """

    dims: tuple[int, ...]
    differentials: tuple[ExactMatrix, ...]
    order: int = 1

    def __post_init__(self):
        object.__setattr__(self, "dims", tuple(self.dims))
        object.__setattr__(self, "differentials", tuple(self.differentials))
        if len(self.differentials) != max(len(self.dims) - 1, 0):
            raise ValueError(f"{len(self.dims)} spaces need {len(self.dims) - 1} differentials")
        for j, m in enumerate(self.differentials):
            if m.shape != (self.dims[j + 1], self.dims[j]):
                raise ValueError(f"d^{j} has shape {m.shape}, expected {(self.dims[j + 1], self.dims[j])}")
            if m.order != self.order:
                raise OrderMismatchError(f"d^{j} is over Q(zeta_{m.order}), complex over Q(zeta_{self.order})")

    def dim(self, j: int) -> int:
        return self.dims[j] if 0 <= j < len(self.dims) else 0

    def diff(self, j: int) -> ExactMatrix:
        """d^j, with zero maps outside the stored range."""
        if 0 <= j < len(self.differentials):
            return self.differentials[j]
        return ExactMatrix.zeros(self.dim(j + 1), self.dim(j), self.order)

    def check(self):
        for j in range(len(self.differentials) - 1):
            if not (self.differentials[j + 1] @ self.differentials[j]).is_zero():
                raise NotAComplexError(j)

    def ranks(self) -> list[int]:
        return [m.rank() for m in self.differentials]

    def cohomology(self) -> list[int]:
        return cohomology_dims(self.dims, self.differentials)

    def euler_characteristic(self) -> int:
        return sum((-1) ** j * c for j, c in enumerate(self.dims))

    @staticmethod
    def direct_sum(parts: Sequence["CochainComplex"], order: int, length: int) -> "CochainComplex":
        """Direct sum, padded with zero spaces up to ``length`` degrees."""
        dims = [sum(p.dim(j) for p in parts) for j in range(length)]
        diffs = []
        for j in range(length - 1):
            diffs.append(_block_diag([p.diff(j) for p in parts], dims[j + 1], dims[j], order))
        return CochainComplex(tuple(dims), tuple(diffs), order)


def _block_diag(blocks, rows, cols, order):
    out = ExactMatrix.zeros(rows, cols, order)
    grid = [list(r) for r in out.entries]
    r0 = c0 = 0
    for b in blocks:
        for i, j, x in b.nonzero_entries():
            grid[r0 + i][c0 + j] = x
        r0 += b.rows
        c0 += b.cols
    return ExactMatrix(grid, order, cols)


def cohomology_dims(spaces: Sequence[int], differentials: Sequence[ExactMatrix]) -> list[int]:
    """dim H^j = dim C^j - rank d^j - rank d^{j-1}, after checking d o d = 0."""
    spaces = list(spaces)
    if len(differentials) != max(len(spaces) - 1, 0):
        raise ValueError(f"{len(spaces)} spaces need {len(spaces) - 1} differentials")
    for j, m in enumerate(differentials):
        if m.shape != (spaces[j + 1], spaces[j]):
            raise ValueError(f"d^{j} has shape {m.shape}, expected {(spaces[j + 1], spaces[j])}")
    for j in range(len(differentials) - 1):
        if not (differentials[j + 1] @ differentials[j]).is_zero():
            raise NotAComplexError(j)
    ranks = [m.rank() for m in differentials]
    out = []
    for j, c in enumerate(spaces):
        r_out = ranks[j] if j < len(ranks) else 0
        r_in = ranks[j - 1] if j >= 1 else 0
        out.append(c - r_out - r_in)
    return out


def _check_commutes(source, target, maps, k):
    """maps[k+1] o d_S^k == d_T^k o maps[k]; silently true where undefined."""
    if k < 0 or k + 1 >= len(maps):
        return
    left = maps[k + 1] @ source.diff(k)
    right = target.diff(k) @ maps[k]
    if left != right:
        raise CommutationError(f"morphism does not commute with the differentials in degree {k}")


def kernel_dim_on_cohomology(
    source: CochainComplex,
    target: CochainComplex,
    maps: Sequence[ExactMatrix],
    j: int,
) -> int:
    """dim Ker(H^j(source) -> H^j(target)) for the morphism given by ``maps``.

    ``maps[k]`` is the degree-k component, of shape (target.dim(k), source.dim(k)).
    """
    order = source.order
    for k, m in enumerate(maps):
        if m.shape != (target.dim(k), source.dim(k)):
            raise ValueError(f"morphism in degree {k} has shape {m.shape}")
    for k in (j - 1, j, j + 1):
        _check_commutes(source, target, maps, k)
    phi = maps[j] if j < len(maps) else ExactMatrix.zeros(target.dim(j), source.dim(j), order)
    d_s = source.diff(j)
    d_s_prev = source.diff(j - 1)
    d_t_prev = target.diff(j - 1)
    s_dim, t_prev = source.dim(j), target.dim(j - 1)
    # cocycles z with phi(z) a coboundary: kernel of [[d_s, 0], [phi, -d_t_prev]] projected to z
    top = ExactMatrix.hstack([d_s, ExactMatrix.zeros(d_s.rows, t_prev, order)])
    bottom = ExactMatrix.hstack([phi, -d_t_prev])
    stacked = ExactMatrix.vstack([top, bottom])
    count = s_dim - stacked.rank() + d_t_prev.rank()
    return count - d_s_prev.rank()
