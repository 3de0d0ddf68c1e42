"""Exact arithmetic over prime fields F_p.

Scalars are canonical integer residues in [0, p) for an odd prime p.
Matrices are immutable, carry their modulus, and reduce every entry on
construction, so all linear algebra here is exact by construction.
"""

from __future__ import annotations

PRIME_SEARCH_CEILING = 10**6


class LimitExceeded(RuntimeError):
    """A computation was refused because it exceeds a built-in size guard."""


def is_prime(m: int) -> bool:
    if m < 2:
        return False
    if m % 2 == 0:
        return m == 2
    f = 3
    while f * f <= m:
        if m % f == 0:
            return False
        f += 2
    return True


def is_odd_prime(m: int) -> bool:
    return m != 2 and is_prime(m)


def find_prime(n: int, lower_bound: int = 3) -> int:
    """Smallest odd prime p >= lower_bound with p congruent to 1 mod n.

    Such primes exist in abundance, but not necessarily below any given
    bound; the search stops at PRIME_SEARCH_CEILING and raises
    LimitExceeded there instead of running on.
    """
    if n < 3:
        raise ValueError("need n >= 3")
    if lower_bound < 3:
        raise ValueError("need lower_bound >= 3")
    p = lower_bound
    while p <= PRIME_SEARCH_CEILING:
        if p % n == 1 and p % 2 == 1 and is_prime(p):
            return p
        p += 1
    raise LimitExceeded(
        f"no odd prime p = 1 (mod {n}) with {lower_bound} <= p <= {PRIME_SEARCH_CEILING}"
    )


def find_primes(n: int, count: int, lower_bound: int = 3) -> list[int]:
    """The count smallest odd primes >= lower_bound congruent to 1 mod n."""
    out: list[int] = []
    lo = lower_bound
    while len(out) < count:
        p = find_prime(n, lo)
        out.append(p)
        lo = p + 1
    return out


def _sorted_divisors(m: int) -> list[int]:
    small, large = [], []
    f = 1
    while f * f <= m:
        if m % f == 0:
            small.append(f)
            if f * f != m:
                large.append(m // f)
        f += 1
    return small + large[::-1]


def multiplicative_order(a: int, p: int) -> int:
    if not is_odd_prime(p):
        raise ValueError(f"{p} is not an odd prime")
    a %= p
    if a == 0:
        raise ValueError("zero has no multiplicative order")
    for d in _sorted_divisors(p - 1):
        if pow(a, d, p) == 1:
            return d
    raise AssertionError("unreachable: order divides p - 1")


def primitive_root_of_unity(p: int, n: int) -> int:
    """Smallest element of F_p* of multiplicative order exactly n.

    Requires n to divide p - 1.  For n >= 2 the result is the smallest
    integer in [2, p - 1] of order n; for n == 1 it is 1.
    """
    if not is_odd_prime(p):
        raise ValueError(f"{p} is not an odd prime")
    if n < 1:
        raise ValueError("need n >= 1")
    if (p - 1) % n != 0:
        raise ValueError(f"{n} does not divide p - 1 = {p - 1}")
    if n == 1:
        return 1
    for w in range(2, p):
        if multiplicative_order(w, p) == n:
            return w
    raise AssertionError("unreachable: F_p* is cyclic of order p - 1")


class FpMatrix:
    """Immutable matrix over F_p with exact row-reduction based rank."""

    __slots__ = ("p", "rows", "cols", "data")

    def __init__(self, p: int, data) -> None:
        if not is_odd_prime(p):
            raise ValueError(f"modulus {p} is not an odd prime")
        norm = tuple(tuple(int(v) % p for v in row) for row in data)
        if not norm or not norm[0]:
            raise ValueError("matrix needs at least one row and one column")
        if any(len(row) != len(norm[0]) for row in norm):
            raise ValueError("ragged rows")
        object.__setattr__(self, "p", p)
        object.__setattr__(self, "rows", len(norm))
        object.__setattr__(self, "cols", len(norm[0]))
        object.__setattr__(self, "data", norm)

    def __setattr__(self, name, value):  # pragma: no cover
        raise AttributeError("FpMatrix is immutable")

    @classmethod
    def identity(cls, p: int, size: int) -> "FpMatrix":
        return cls(p, [[1 if i == j else 0 for j in range(size)] for i in range(size)])

    @classmethod
    def zeros(cls, p: int, rows: int, cols: int) -> "FpMatrix":
        return cls(p, [[0] * cols for _ in range(rows)])

    @classmethod
    def diagonal(cls, p: int, entries) -> "FpMatrix":
        ent = list(entries)
        return cls(p, [[ent[i] if i == j else 0 for j in range(len(ent))] for i in range(len(ent))])

    def __repr__(self) -> str:
        return f"FpMatrix(p={self.p}, {list(map(list, self.data))})"

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, FpMatrix)
            and self.p == other.p
            and self.data == other.data
        )

    def __hash__(self) -> int:
        return hash((self.p, self.data))

    def _same_shape(self, other: "FpMatrix") -> None:
        if self.p != other.p:
            raise ValueError("modulus mismatch")
        if self.rows != other.rows or self.cols != other.cols:
            raise ValueError("shape mismatch")

    def __add__(self, other: "FpMatrix") -> "FpMatrix":
        self._same_shape(other)
        p = self.p
        return FpMatrix(
            p,
            tuple(
                tuple((a + b) % p for a, b in zip(ra, rb))
                for ra, rb in zip(self.data, other.data)
            ),
        )

    def __sub__(self, other: "FpMatrix") -> "FpMatrix":
        self._same_shape(other)
        p = self.p
        return FpMatrix(
            p,
            tuple(
                tuple((a - b) % p for a, b in zip(ra, rb))
                for ra, rb in zip(self.data, other.data)
            ),
        )

    def __neg__(self) -> "FpMatrix":
        p = self.p
        return FpMatrix(p, tuple(tuple(-a % p for a in row) for row in self.data))

    def __mul__(self, other):
        p = self.p
        if isinstance(other, int):
            return FpMatrix(p, tuple(tuple(a * other % p for a in row) for row in self.data))
        if not isinstance(other, FpMatrix):
            return NotImplemented
        if self.p != other.p:
            raise ValueError("modulus mismatch")
        if self.cols != other.rows:
            raise ValueError("shape mismatch in product")
        bcols = tuple(zip(*other.data))
        return FpMatrix(
            p,
            tuple(
                tuple(sum(a * b for a, b in zip(row, col)) % p for col in bcols)
                for row in self.data
            ),
        )

    def __rmul__(self, other):
        if isinstance(other, int):
            return self * other
        return NotImplemented

    def __pow__(self, e: int) -> "FpMatrix":
        if self.rows != self.cols:
            raise ValueError("power of a non-square matrix")
        if e < 0:
            return self.inverse() ** (-e)
        result = FpMatrix.identity(self.p, self.rows)
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def transpose(self) -> "FpMatrix":
        return FpMatrix(self.p, tuple(zip(*self.data)))

    def trace(self) -> int:
        if self.rows != self.cols:
            raise ValueError("trace of a non-square matrix")
        return sum(self.data[i][i] for i in range(self.rows)) % self.p

    def apply(self, vec) -> tuple[int, ...]:
        v = tuple(int(x) % self.p for x in vec)
        if len(v) != self.cols:
            raise ValueError("vector length mismatch")
        p = self.p
        return tuple(sum(a * b for a, b in zip(row, v)) % p for row in self.data)

    def rank(self) -> int:
        p = self.p
        m = [list(row) for row in self.data]
        nrows, ncols = self.rows, self.cols
        r = 0
        for c in range(ncols):
            piv = None
            for i in range(r, nrows):
                if m[i][c]:
                    piv = i
                    break
            if piv is None:
                continue
            m[r], m[piv] = m[piv], m[r]
            inv = pow(m[r][c], -1, p)
            m[r] = [inv * v % p for v in m[r]]
            for i in range(nrows):
                if i != r and m[i][c]:
                    f = m[i][c]
                    m[i] = [(v - f * w) % p for v, w in zip(m[i], m[r])]
            r += 1
            if r == nrows:
                break
        return r

    def nullity(self) -> int:
        return self.cols - self.rank()

    def inverse(self) -> "FpMatrix":
        if self.rows != self.cols:
            raise ValueError("inverse of a non-square matrix")
        p, size = self.p, self.rows
        m = [list(row) + [1 if i == j else 0 for j in range(size)] for i, row in enumerate(self.data)]
        for c in range(size):
            piv = None
            for i in range(c, size):
                if m[i][c]:
                    piv = i
                    break
            if piv is None:
                raise ValueError("matrix is singular")
            m[c], m[piv] = m[piv], m[c]
            inv = pow(m[c][c], -1, p)
            m[c] = [inv * v % p for v in m[c]]
            for i in range(size):
                if i != c and m[i][c]:
                    f = m[i][c]
                    m[i] = [(v - f * w) % p for v, w in zip(m[i], m[c])]
        return FpMatrix(p, [row[size:] for row in m])

    def det(self) -> int:
        if self.rows != self.cols:
            raise ValueError("determinant of a non-square matrix")
        p, size = self.p, self.rows
        m = [list(row) for row in self.data]
        d = 1
        for c in range(size):
            piv = None
            for i in range(c, size):
                if m[i][c]:
                    piv = i
                    break
            if piv is None:
                return 0
            if piv != c:
                m[c], m[piv] = m[piv], m[c]
                d = -d % p
            d = d * m[c][c] % p
            inv = pow(m[c][c], -1, p)
            for i in range(c + 1, size):
                if m[i][c]:
                    f = m[i][c] * inv % p
                    m[i] = [(v - f * w) % p for v, w in zip(m[i], m[c])]
        return d

    def kron(self, other: "FpMatrix") -> "FpMatrix":
        """Kronecker product, blocks ordered row-major."""
        if self.p != other.p:
            raise ValueError("modulus mismatch")
        p = self.p
        out = []
        for arow in self.data:
            for brow in other.data:
                out.append(tuple(a * b % p for a in arow for b in brow))
        return FpMatrix(p, out)
