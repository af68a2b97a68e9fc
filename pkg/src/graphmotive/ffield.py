"""Exact arithmetic in small finite fields F_q, q = p^n.

Elements are coefficient vectors over F_p in a fixed polynomial basis.  The
modulus is chosen deterministically (the lexicographically least monic
irreducible of degree n, coefficients compared low-degree-first), so the same
q always yields the same element order and the same multiplication table.
For q <= 256 all four operation tables are precomputed; counting loops work
on element indices and never touch FieldElem objects.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from types import SimpleNamespace

from .errors import (
    BadParams,
    DivisionByZero,
    LengthMismatch,
    NotPrimePower,
    TooLarge,
)

MAX_ORDER = 1 << 16
TABLE_LIMIT = 256


@dataclass(frozen=True)
class FieldElem:
    """One field element: residues mod p, constant coefficient first."""

    coeffs: tuple[int, ...]

    def __repr__(self) -> str:  # keep test failure output readable
        return f"FieldElem{self.coeffs}"


def _prime_power(q: int) -> tuple[int, int]:
    """Split q into (p, n) with p prime and p**n == q, or raise."""
    if q < 2:
        raise NotPrimePower(f"field order must be >= 2, got {q}")
    for p in range(2, q + 1):
        if p * p > q:
            p = q  # q itself is prime
        if q % p:
            continue
        n = 0
        m = q
        while m % p == 0:
            m //= p
            n += 1
        if m != 1:
            raise NotPrimePower(f"{q} is not a prime power")
        # p came out of trial division, so it is the least divisor: prime.
        return p, n
    raise NotPrimePower(f"{q} is not a prime power")


# -- polynomial helpers over F_p (dense tuples, constant first) --------------


def _ptrim(a: tuple[int, ...]) -> tuple[int, ...]:
    i = len(a)
    while i > 0 and a[i - 1] == 0:
        i -= 1
    return a[:i]


def _pmul(a: tuple[int, ...], b: tuple[int, ...], p: int) -> tuple[int, ...]:
    if not a or not b:
        return ()
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] = (out[i + j] + ai * bj) % p
    return _ptrim(tuple(out))


def _pmod(a: tuple[int, ...], m: tuple[int, ...], p: int) -> tuple[int, ...]:
    """Remainder of a by monic m."""
    a = list(a)
    dm = len(m) - 1
    while len(a) > dm:
        lead = a[-1]
        if lead:
            shift = len(a) - 1 - dm
            for i in range(dm + 1):
                a[shift + i] = (a[shift + i] - lead * m[i]) % p
        a.pop()
    return _ptrim(tuple(a))


def _is_irreducible(poly: tuple[int, ...], p: int) -> bool:
    """Trial division by all monic polynomials of degree <= deg/2."""
    deg = len(poly) - 1
    if deg < 1:
        return False
    for d in range(1, deg // 2 + 1):
        for tail in itertools.product(range(p), repeat=d):
            divisor = tuple(tail) + (1,)
            if not _pmod(poly, divisor, p):
                return False
    return True


def _least_irreducible(p: int, n: int) -> tuple[int, ...]:
    if n == 1:
        return (0, 1)  # the polynomial X
    for tail in itertools.product(range(p), repeat=n):
        # itertools.product yields coefficient tuples in ascending
        # lexicographic order with the constant coefficient most significant;
        # that is exactly "compare low-degree coefficients first".
        cand = tuple(tail) + (1,)
        if _is_irreducible(cand, p):
            return cand
    raise AssertionError("no irreducible polynomial found")  # unreachable


class FieldSpec:
    """A concrete F_q with fixed basis, element order and operation tables."""

    def __init__(self, q: int):
        if q > MAX_ORDER:
            raise TooLarge(f"field order {q} exceeds {MAX_ORDER}")
        p, n = _prime_power(q)
        self.q = q
        self.p = p
        self.n = n
        self.modulus: tuple[int, ...] = _least_irreducible(p, n)
        self.elements: tuple[FieldElem, ...] = tuple(
            FieldElem(tuple(reversed(digits)))
            for digits in itertools.product(range(p), repeat=n)
        )
        # elements are in lexicographic order on (c_0, ..., c_{n-1}) with the
        # zero element first; index(e) inverts the enumeration.
        self._index = {e.coeffs: i for i, e in enumerate(self.elements)}
        self.zero = self.elements[0]
        self.one = self.element_from_int(1)
        if q <= TABLE_LIMIT:
            self._build_tables()
        else:
            self.add_table = None
            self.mul_table = None
            self.neg_table = None
            self.inv_table = None
        self._np = None

    # -- construction of the index tables ------------------------------

    def _build_tables(self) -> None:
        q, p, n = self.q, self.p, self.n
        elems = self.elements
        add = [[0] * q for _ in range(q)]
        mul = [[0] * q for _ in range(q)]
        neg = [0] * q
        for i, a in enumerate(elems):
            ac = a.coeffs
            neg[i] = self._index[tuple((-c) % p for c in ac)]
            for j in range(i, q):
                bc = elems[j].coeffs
                s = tuple((x + y) % p for x, y in zip(ac, bc))
                add[i][j] = add[j][i] = self._index[s]
                prod = _pmod(_pmul(_ptrim(ac), _ptrim(bc), p), self.modulus, p)
                prod = prod + (0,) * (n - len(prod))
                mul[i][j] = mul[j][i] = self._index[prod]
        inv: list[int | None] = [None] * q
        for i in range(1, q):
            for j in range(1, q):
                if mul[i][j] == 1:
                    inv[i] = j
                    break
            assert inv[i] is not None, "non-invertible nonzero element"
        self.add_table = add
        self.mul_table = mul
        self.neg_table = neg
        self.inv_table = inv

    # -- element <-> index ----------------------------------------------

    def index(self, a: FieldElem) -> int:
        return self._index[a.coeffs]

    def element(self, i: int) -> FieldElem:
        return self.elements[i]

    def element_from_int(self, c: int) -> FieldElem:
        """Image of an integer under Z -> F_q (c mod p as a constant)."""
        return FieldElem((c % self.p,) + (0,) * (self.n - 1))

    # -- element-level arithmetic ---------------------------------------

    def _check(self, a: FieldElem) -> None:
        if len(a.coeffs) != self.n:
            raise LengthMismatch(
                f"element has {len(a.coeffs)} coefficients, field needs {self.n}"
            )

    def add(self, a: FieldElem, b: FieldElem) -> FieldElem:
        self._check(a)
        self._check(b)
        if self.add_table is not None:
            return self.elements[self.add_table[self.index(a)][self.index(b)]]
        p = self.p
        return FieldElem(tuple((x + y) % p for x, y in zip(a.coeffs, b.coeffs)))

    def neg(self, a: FieldElem) -> FieldElem:
        self._check(a)
        if self.neg_table is not None:
            return self.elements[self.neg_table[self.index(a)]]
        return FieldElem(tuple((-x) % self.p for x in a.coeffs))

    def sub(self, a: FieldElem, b: FieldElem) -> FieldElem:
        return self.add(a, self.neg(b))

    def mul(self, a: FieldElem, b: FieldElem) -> FieldElem:
        self._check(a)
        self._check(b)
        if self.mul_table is not None:
            return self.elements[self.mul_table[self.index(a)][self.index(b)]]
        prod = _pmod(
            _pmul(_ptrim(a.coeffs), _ptrim(b.coeffs), self.p), self.modulus, self.p
        )
        return FieldElem(prod + (0,) * (self.n - len(prod)))

    def inv(self, a: FieldElem) -> FieldElem:
        self._check(a)
        if a == self.zero:
            raise DivisionByZero("inverse of zero")
        if self.inv_table is not None:
            j = self.inv_table[self.index(a)]
            assert j is not None
            return self.elements[j]
        # q > TABLE_LIMIT: inverse by Fermat, a^(q-2)
        acc = self.one
        base = a
        e = self.q - 2
        while e:
            if e & 1:
                acc = self.mul(acc, base)
            base = self.mul(base, base)
            e >>= 1
        return acc

    def div(self, a: FieldElem, b: FieldElem) -> FieldElem:
        return self.mul(a, self.inv(b))

    # -- index-level helpers for table-driven callers --------------------

    def neg_index(self, i: int) -> int:
        if self.neg_table is None:
            return self.index(self.neg(self.element(i)))
        return self.neg_table[i]

    def inv_index(self, i: int) -> int:
        if i == 0:
            raise DivisionByZero("inverse of zero")
        if self.inv_table is None:
            return self.index(self.inv(self.element(i)))
        j = self.inv_table[i]
        assert j is not None
        return j

    # -- numpy views of the tables --------------------------------------

    @property
    def np_tables(self):
        """(add, mul, neg, flat_add, flat_mul) as uint8/uint16 arrays."""
        if self._np is None:
            if self.add_table is None:
                raise TooLarge("numpy tables only built for q <= 256")
            import numpy as np

            dt = np.uint8 if self.q <= 256 else np.uint16
            add = np.array(self.add_table, dtype=dt)
            mul = np.array(self.mul_table, dtype=dt)
            neg = np.array(self.neg_table, dtype=dt)
            self._np = SimpleNamespace(
                add=add,
                mul=mul,
                neg=neg,
                flat_add=np.ascontiguousarray(add.reshape(-1)),
                flat_mul=np.ascontiguousarray(mul.reshape(-1)),
            )
        return self._np

    def __repr__(self) -> str:
        return f"FieldSpec(q={self.q}, p={self.p}, n={self.n}, modulus={self.modulus})"


@lru_cache(maxsize=None)
def make_field(q: int) -> FieldSpec:
    """Construct (and cache) the canonical F_q."""
    return FieldSpec(q)


def enumerate_elements(field: FieldSpec) -> tuple[FieldElem, ...]:
    """All q elements in the fixed deterministic order, zero first."""
    return field.elements


def arith(field: FieldSpec) -> SimpleNamespace:
    """The operation bundle for callers that want plain callables."""
    return SimpleNamespace(
        add=field.add,
        neg=field.neg,
        mul=field.mul,
        inv=field.inv,
        eq=lambda a, b: a == b,
        zero=field.zero,
        one=field.one,
    )


# -- matrices ----------------------------------------------------------------


@dataclass(frozen=True)
class FMatrix:
    """Dense matrix over one field, entries row-major."""

    rows: int
    cols: int
    entries: tuple[FieldElem, ...]

    def __post_init__(self):
        if len(self.entries) != self.rows * self.cols:
            raise LengthMismatch(
                f"{self.rows}x{self.cols} matrix needs {self.rows * self.cols} "
                f"entries, got {len(self.entries)}"
            )

    def at(self, i: int, j: int) -> FieldElem:
        return self.entries[i * self.cols + j]


def rank_from_index_rows(field: FieldSpec, rows: list[list[int]]) -> int:
    """Row-reduction rank; rows are lists of element indices (mutated copy)."""
    if not rows:
        return 0
    work = [list(r) for r in rows]
    cols = len(work[0])
    mul = field.mul_table
    add = field.add_table
    neg = field.neg_table
    inv = field.inv_table
    assert mul is not None and inv is not None
    rank = 0
    for c in range(cols):
        pivot = None
        for r in range(rank, len(work)):
            if work[r][c]:
                pivot = r
                break
        if pivot is None:
            continue
        work[rank], work[pivot] = work[pivot], work[rank]
        prow = work[rank]
        pinv = inv[prow[c]]
        assert pinv is not None
        for r in range(rank + 1, len(work)):
            head = work[r][c]
            if head:
                factor = neg[mul[head][pinv]]
                row = work[r]
                fm = mul[factor]
                for j in range(c, cols):
                    row[j] = add[row[j]][fm[prow[j]]]
        rank += 1
        if rank == len(work):
            break
    return rank


def matrix_rank(field: FieldSpec, m: FMatrix) -> int:
    idx_rows = [
        [field.index(m.at(i, j)) for j in range(m.cols)] for i in range(m.rows)
    ]
    return rank_from_index_rows(field, idx_rows)


def matrix_rank_minors(field: FieldSpec, m: FMatrix) -> int:
    """Independent rank oracle: largest k with a nonzero k x k minor."""

    def det(rows: tuple[int, ...], cols: tuple[int, ...]) -> FieldElem:
        if len(rows) == 1:
            return m.at(rows[0], cols[0])
        total = field.zero
        for pos, r in enumerate(rows):
            sub = det(rows[:pos] + rows[pos + 1 :], cols[1:])
            term = field.mul(m.at(r, cols[0]), sub)
            if pos % 2:
                term = field.neg(term)
            total = field.add(total, term)
        return total

    best = 0
    for k in range(1, min(m.rows, m.cols) + 1):
        found = False
        for rows in itertools.combinations(range(m.rows), k):
            for cols in itertools.combinations(range(m.cols), k):
                if det(rows, cols) != field.zero:
                    found = True
                    break
            if found:
                break
        if found:
            best = k
        else:
            break
    return best


def identity_rows(field: FieldSpec, n: int) -> list[list[int]]:
    """Index rows of the n x n identity (handy for span bookkeeping)."""
    one = field.index(field.one)
    return [[one if i == j else 0 for j in range(n)] for i in range(n)]
