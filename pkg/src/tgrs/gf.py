"""Finite fields GF(p^h), polynomials over them, and subfield embeddings.

Elements are stored as integers encoding their coefficient vector in base p
(``value = sum(c_i * p**i)``, ascending degree).  Every field keeps discrete
log/exp tables with respect to a registered primitive element, so
multiplication, inversion, powers and discrete logarithms are table lookups.
Addition is XOR in characteristic 2, modular in prime fields and goes through
Zech logarithms otherwise.

Fields are capped at ``max_field_size()`` elements (default 2**20, override
with the ``TGRS_MAX_FIELD`` environment variable).
"""

from __future__ import annotations

import functools
import math
import os
from collections.abc import Iterable, Iterator, Sequence

import numpy as np

from .errors import (
    CharTwo,
    DivisionByZero,
    FieldMismatch,
    FieldTooLarge,
    NotASquare,
    NotIrreducible,
    NotPrime,
    NotSquarefree,
    SearchBoundExceeded,
    TGRSError,
)

DEFAULT_MAX_FIELD = 1 << 20


def max_field_size() -> int:
    env = os.environ.get("TGRS_MAX_FIELD")
    return int(env) if env else DEFAULT_MAX_FIELD


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def prime_factors(n: int) -> list[int]:
    out = []
    f = 2
    while f * f <= n:
        if n % f == 0:
            out.append(f)
            while n % f == 0:
                n //= f
        f += 1
    if n > 1:
        out.append(n)
    return out


################################################################################
# polynomials over the prime field GF(p) as plain int lists (ascending degree)


def _pp_trim(a: list[int]) -> list[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def _pp_mod(a: list[int], m: list[int], p: int) -> list[int]:
    a = _pp_trim([c % p for c in a])
    dm = len(m) - 1
    inv_lead = pow(m[-1], p - 2, p)
    while len(a) - 1 >= dm:
        c = a[-1] * inv_lead % p
        shift = len(a) - 1 - dm
        for i, mc in enumerate(m):
            a[shift + i] = (a[shift + i] - c * mc) % p
        _pp_trim(a)
    return a


def _pp_mulmod(a: list[int], b: list[int], m: list[int], p: int) -> list[int]:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] += ai * bj
    return _pp_mod(out, m, p)


def _pp_powmod(a: list[int], e: int, m: list[int], p: int) -> list[int]:
    result = [1]
    base = _pp_mod(list(a), m, p)
    while e:
        if e & 1:
            result = _pp_mulmod(result, base, m, p)
        base = _pp_mulmod(base, base, m, p)
        e >>= 1
    return result


def _pp_gcd(a: list[int], b: list[int], p: int) -> list[int]:
    a = _pp_trim([c % p for c in a])
    b = _pp_trim([c % p for c in b])
    while b:
        a, b = b, _pp_mod(a, b, p)
    return a


def _pp_sub(a: list[int], b: list[int], p: int) -> list[int]:
    n = max(len(a), len(b))
    a = a + [0] * (n - len(a))
    b = b + [0] * (n - len(b))
    return _pp_trim([(x - y) % p for x, y in zip(a, b)])


def is_irreducible_mod_p(f: Sequence[int], p: int) -> bool:
    """Rabin's test for a monic polynomial over GF(p)."""
    f = _pp_trim([c % p for c in f])
    h = len(f) - 1
    if h < 1:
        return False
    if h == 1:
        return True
    x = [0, 1]
    frob = [x]  # frob[j] = x^(p^j) mod f
    for _ in range(h):
        frob.append(_pp_powmod(frob[-1], p, f, p))
    if _pp_sub(frob[h], x, p):
        return False
    for r in prime_factors(h):
        g = _pp_gcd(f, _pp_sub(frob[h // r], x, p), p)
        if len(g) > 1:
            return False
    return True


@functools.lru_cache(maxsize=None)
def default_modulus(p: int, h: int) -> tuple[int, ...]:
    """Smallest monic irreducible of degree h, ordered by base-p encoding of the tail."""
    for n in range(p**h):
        tail = [(n // p**i) % p for i in range(h)]
        f = tail + [1]
        if is_irreducible_mod_p(f, p):
            return tuple(f)
    raise NotIrreducible(f"no irreducible polynomial of degree {h} over GF({p})")  # pragma: no cover


################################################################################
# fields


class Field:
    """The finite field GF(p^h) = GF(p)[x] / (modulus).

    Parameters
    ----------
    p : prime characteristic.
    h : extension degree.
    modulus : monic irreducible of degree h, ascending coefficients.  Defaults
        to :func:`default_modulus`.
    primitive_element : encoding (int) or coefficient list of a generator of
        the multiplicative group.  Defaults to x when x is primitive, else the
        smallest primitive encoding.

    Prefer :func:`GF`, which caches fields.
    """

    def __init__(
        self,
        p: int,
        h: int = 1,
        modulus: Sequence[int] | None = None,
        primitive_element: int | Sequence[int] | None = None,
    ) -> None:
        if not is_prime(p):
            raise NotPrime(f"{p} is not prime")
        if h < 1:
            raise ValueError(f"extension degree must be positive, got {h}")
        q = p**h
        if q > max_field_size():
            raise FieldTooLarge(f"GF({p}^{h}) has {q} elements, cap is {max_field_size()}")
        if modulus is None:
            modulus = default_modulus(p, h)
        modulus = tuple(int(c) % p for c in modulus)
        if len(modulus) != h + 1 or modulus[-1] != 1:
            raise NotIrreducible(f"modulus {list(modulus)} is not monic of degree {h}")
        if not is_irreducible_mod_p(modulus, p):
            raise NotIrreducible(f"modulus {list(modulus)} factors over GF({p})")
        self.p = p
        self.h = h
        self.q = q
        self.modulus = modulus
        self._q1 = q - 1
        self._weights = [p**i for i in range(h)]

        if primitive_element is None:
            gen = self._find_generator()
        else:
            gen = self._encode_any(primitive_element)
            if not self._is_generator(gen):
                raise ValueError(f"{primitive_element} is not a primitive element of {self.name}")
        self.generator = gen
        self._build_tables()
        self._bind_ops()

    # -- construction helpers ------------------------------------------------

    @property
    def name(self) -> str:
        return f"GF({self.p})" if self.h == 1 else f"GF({self.p}^{self.h})"

    def __repr__(self) -> str:
        if self.h == 1:
            return self.name
        return f"{self.name} mod {list(self.modulus)}"

    def _key(self) -> tuple:
        return (self.p, self.h, self.modulus)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Field) and self._key() == other._key()

    def __hash__(self) -> int:
        return hash(self._key())

    def _encode_any(self, x: int | Sequence[int]) -> int:
        if isinstance(x, (int, np.integer)):
            return int(x) % self.q
        coeffs = list(x)
        if len(coeffs) > self.h:
            raise ValueError(f"{len(coeffs)} coefficients given for {self.name}")
        return sum((int(c) % self.p) * w for c, w in zip(coeffs, self._weights))

    def _digits(self, a: int) -> list[int]:
        p = self.p
        out = []
        for _ in range(self.h):
            out.append(a % p)
            a //= p
        return out

    def _slow_mul(self, a: int, b: int) -> int:
        prod = _pp_mulmod(self._digits(a), self._digits(b), list(self.modulus), self.p)
        return sum(c * w for c, w in zip(prod, self._weights))

    def _slow_pow(self, a: int, e: int) -> int:
        result, base = 1, a
        while e:
            if e & 1:
                result = self._slow_mul(result, base)
            base = self._slow_mul(base, base)
            e >>= 1
        return result

    def _is_generator(self, g: int) -> bool:
        if g == 0:
            return False
        if self.q == 2:
            return g == 1
        return all(self._slow_pow(g, self._q1 // r) != 1 for r in prime_factors(self._q1))

    def _find_generator(self) -> int:
        candidates: Iterable[int] = range(1, self.q)
        if self.h > 1:
            candidates = [self.p, *range(1, self.q)]
        for g in candidates:
            if self._is_generator(g):
                return g
        raise AssertionError("multiplicative group has no generator")  # pragma: no cover

    def _mul_block(self, D: np.ndarray, c: list[int]) -> np.ndarray:
        """Multiply each digit row of D by the fixed element with digits c."""
        p, h = self.p, self.h
        m = D.shape[0]
        R = np.zeros((m, 2 * h - 1), dtype=np.int64)
        for j, cj in enumerate(c):
            if cj:
                R[:, j : j + h] += cj * D
        R %= p
        tail = np.array(self.modulus[:h], dtype=np.int64)
        for d in range(2 * h - 2, h - 1, -1):
            top = R[:, d].copy()
            R[:, d - h : d] -= top[:, None] * tail
            R[:, d - h : d] %= p
        return R[:, :h]

    def _build_tables(self) -> None:
        q1, h = self._q1, self.h
        g = self.generator
        block = math.isqrt(q1) + 1
        first = [1]
        for _ in range(block - 1):
            first.append(self._slow_mul(first[-1], g))
        D = np.array([self._digits(a) for a in first], dtype=np.int64)
        step = self._digits(self._slow_mul(first[-1], g))  # g^block
        chunks = [D]
        total = block
        while total < q1:
            D = self._mul_block(D, step)
            chunks.append(D)
            total += block
        digits = np.concatenate(chunks)[:q1]
        exp = digits @ np.array(self._weights, dtype=np.int64)
        if len(np.unique(exp)) != q1:  # pragma: no cover
            raise AssertionError(f"generator of {self.name} is not primitive")
        log = np.full(self.q, -1, dtype=np.int64)
        log[exp] = np.arange(q1, dtype=np.int64)
        self._np_exp = np.concatenate([exp, exp])
        self._np_log = log
        self._exp = self._np_exp.tolist()
        self._log = log.tolist()
        self._half = q1 // 2
        if self.p != 2 and h > 1:
            p = self.p
            low = exp % p
            plus_one = exp - low + (low + 1) % p
            zech = np.where(plus_one == 0, -1, log[plus_one])
            self._np_zech = zech
            self._zech = zech.tolist()

    def _bind_ops(self) -> None:
        if self.p == 2:
            self.add = self._add_xor
            self.neg = self._identity
            self.sub = self._add_xor
        elif self.h == 1:
            self.add = self._add_prime
            self.neg = self._neg_prime
            self.sub = self._sub_prime
        else:
            self.add = self._add_zech
            self.neg = self._neg_log
            self.sub = self._sub_zech

    # -- scalar arithmetic on encodings ----------------------------------------

    @staticmethod
    def _add_xor(a: int, b: int) -> int:
        return a ^ b

    @staticmethod
    def _identity(a: int) -> int:
        return a

    def _add_prime(self, a: int, b: int) -> int:
        s = a + b
        return s - self.p if s >= self.p else s

    def _sub_prime(self, a: int, b: int) -> int:
        s = a - b
        return s + self.p if s < 0 else s

    def _neg_prime(self, a: int) -> int:
        return self.p - a if a else 0

    def _add_zech(self, a: int, b: int) -> int:
        if not a:
            return b
        if not b:
            return a
        log = self._log
        la = log[a]
        d = log[b] - la
        if d < 0:
            d += self._q1
        z = self._zech[d]
        if z < 0:
            return 0
        return self._exp[la + z]

    def _neg_log(self, a: int) -> int:
        if not a:
            return 0
        return self._exp[self._log[a] + self._half]

    def _sub_zech(self, a: int, b: int) -> int:
        return self._add_zech(a, self._neg_log(b))

    def mul(self, a: int, b: int) -> int:
        if not a or not b:
            return 0
        return self._exp[self._log[a] + self._log[b]]

    def inv(self, a: int) -> int:
        if not a:
            raise DivisionByZero(f"inverse of zero in {self.name}")
        la = self._log[a]
        return self._exp[self._q1 - la] if la else 1

    def div(self, a: int, b: int) -> int:
        if not b:
            raise DivisionByZero(f"division by zero in {self.name}")
        if not a:
            return 0
        d = self._log[a] - self._log[b]
        return self._exp[d + self._q1 if d < 0 else d]

    def pow(self, a: int, e: int) -> int:
        if not a:
            if e < 0:
                raise DivisionByZero(f"zero to a negative power in {self.name}")
            return 1 if e == 0 else 0
        return self._exp[(self._log[a] * e) % self._q1]

    def axpy(self, y: list[int], c: int, x: Sequence[int]) -> list[int]:
        """Return y - c*x entrywise (the elimination step)."""
        if not c:
            return list(y)
        exp, log, sub = self._exp, self._log, self.sub
        lc = log[c]
        return [sub(yi, exp[lc + log[xi]]) if xi else yi for yi, xi in zip(y, x)]

    def scale(self, c: int, x: Sequence[int]) -> list[int]:
        if not c:
            return [0] * len(x)
        exp, log = self._exp, self._log
        lc = log[c]
        return [exp[lc + log[xi]] if xi else 0 for xi in x]

    def dot(self, x: Sequence[int], y: Sequence[int]) -> int:
        exp, log, add = self._exp, self._log, self.add
        acc = 0
        for a, b in zip(x, y):
            if a and b:
                acc = add(acc, exp[log[a] + log[b]])
        return acc

    def scalar_int(self, n: int) -> int:
        """Encoding of the integer n, i.e. n * 1."""
        return int(n) % self.p

    def log_of(self, a: int) -> int:
        if not a:
            raise DivisionByZero("discrete log of zero")
        return self._log[a]

    # -- vectorised arithmetic on numpy arrays of encodings -----------------

    def vmul(self, A: np.ndarray, B: np.ndarray | int) -> np.ndarray:
        A = np.asarray(A, dtype=np.int64)
        B = np.asarray(B, dtype=np.int64)
        out = self._np_exp[self._np_log[A] + self._np_log[B]]
        return np.where((A == 0) | (B == 0), 0, out)

    def vadd(self, A: np.ndarray, B: np.ndarray | int) -> np.ndarray:
        A = np.asarray(A, dtype=np.int64)
        B = np.asarray(B, dtype=np.int64)
        if self.p == 2:
            return A ^ B
        if self.h == 1:
            return (A + B) % self.p
        A, B = np.broadcast_arrays(A, B)
        la = self._np_log[A]
        d = (self._np_log[B] - la) % self._q1
        z = self._np_zech[d]
        out = np.where(z < 0, 0, self._np_exp[la + np.maximum(z, 0)])
        out = np.where(A == 0, B, out)
        return np.where(B == 0, A, out)

    # -- element-level API ---------------------------------------------------

    def __call__(self, x: int | Sequence[int] | FieldElement) -> FieldElement:
        """Coerce x: ints are integers (n * 1), sequences are coefficient vectors."""
        if isinstance(x, FieldElement):
            if x.field != self:
                raise FieldMismatch(f"{x!r} does not belong to {self.name}")
            return x
        if isinstance(x, (int, np.integer)):
            return FieldElement(self, self.scalar_int(int(x)))
        return FieldElement(self, self._encode_any(x))

    def from_int(self, value: int) -> FieldElement:
        """Element with the given base-p encoding."""
        if not 0 <= value < self.q:
            raise ValueError(f"encoding {value} out of range for {self.name}")
        return FieldElement(self, int(value))

    def from_coeffs(self, coeffs: Sequence[int]) -> FieldElement:
        return FieldElement(self, self._encode_any(coeffs))

    def power(self, e: int) -> FieldElement:
        """The registered primitive element raised to e."""
        return FieldElement(self, self._exp[e % self._q1])

    @property
    def zero(self) -> FieldElement:
        return FieldElement(self, 0)

    @property
    def one(self) -> FieldElement:
        return FieldElement(self, 1)

    @property
    def primitive_element(self) -> FieldElement:
        return FieldElement(self, self.generator)

    @property
    def x(self) -> FieldElement:
        """Class of x, the root of the modulus."""
        return FieldElement(self, self.p if self.h > 1 else self.scalar_int(-self.modulus[0]))

    def elements(self) -> Iterator[FieldElement]:
        for v in range(self.q):
            yield FieldElement(self, v)

    def nonzero(self) -> Iterator[FieldElement]:
        for v in range(1, self.q):
            yield FieldElement(self, v)

    def random(self, rng, nonzero: bool = False) -> FieldElement:
        lo = 1 if nonzero else 0
        return FieldElement(self, int(rng.integers(lo, self.q)))

    # -- serialisation -----------------------------------------------------------

    def to_dict(self) -> dict:
        return {"p": self.p, "h": self.h, "modulus": list(self.modulus)}

    @staticmethod
    def from_dict(d: dict) -> Field:
        return GF(int(d["p"]), int(d.get("h", 1)), d.get("modulus"))

    def parse(self, obj) -> FieldElement:
        """Element from its structured form: "0", "1", "b^e", an int, or {"coeffs": [...]}."""
        if isinstance(obj, FieldElement):
            return self(obj)
        if isinstance(obj, dict):
            return self.from_coeffs(obj["coeffs"])
        if isinstance(obj, (int, np.integer)):
            return self(int(obj))
        if isinstance(obj, str):
            s = obj.strip()
            if s.startswith("b^"):
                return self.power(int(s[2:]))
            if s == "b":
                return self.primitive_element
            return self(int(s))
        if isinstance(obj, (list, tuple)):
            return self.from_coeffs(obj)
        raise ValueError(f"cannot parse field element {obj!r}")


@functools.lru_cache(maxsize=64)
def _cached_field(p: int, h: int, modulus: tuple[int, ...] | None) -> Field:
    return Field(p, h, modulus)


def GF(p: int, h: int = 1, modulus: Sequence[int] | None = None) -> Field:
    """Cached field constructor."""
    if modulus is not None:
        modulus = tuple(int(c) for c in modulus)
    return _cached_field(p, h, modulus)


field_create = GF


################################################################################
# elements


class FieldElement:
    """An immutable element of a :class:`Field`.

    Arithmetic accepts Python ints on either side; they are read as integers
    (``n * 1``), so ``2 * a`` doubles ``a``.
    """

    __slots__ = ("field", "value")

    def __init__(self, field: Field, value: int) -> None:
        self.field = field
        self.value = value

    def _coerce(self, other) -> int:
        if isinstance(other, FieldElement):
            if other.field is not self.field and other.field != self.field:
                raise FieldMismatch(f"{self.field.name} vs {other.field.name}")
            return other.value
        if isinstance(other, (int, np.integer)):
            return self.field.scalar_int(int(other))
        return NotImplemented

    def __add__(self, other):
        b = self._coerce(other)
        if b is NotImplemented:
            return b
        return FieldElement(self.field, self.field.add(self.value, b))

    __radd__ = __add__

    def __sub__(self, other):
        b = self._coerce(other)
        if b is NotImplemented:
            return b
        return FieldElement(self.field, self.field.sub(self.value, b))

    def __rsub__(self, other):
        b = self._coerce(other)
        if b is NotImplemented:
            return b
        return FieldElement(self.field, self.field.sub(b, self.value))

    def __mul__(self, other):
        b = self._coerce(other)
        if b is NotImplemented:
            return b
        return FieldElement(self.field, self.field.mul(self.value, b))

    __rmul__ = __mul__

    def __truediv__(self, other):
        b = self._coerce(other)
        if b is NotImplemented:
            return b
        return FieldElement(self.field, self.field.div(self.value, b))

    def __rtruediv__(self, other):
        b = self._coerce(other)
        if b is NotImplemented:
            return b
        return FieldElement(self.field, self.field.div(b, self.value))

    def __neg__(self):
        return FieldElement(self.field, self.field.neg(self.value))

    def __pow__(self, e: int):
        return FieldElement(self.field, self.field.pow(self.value, int(e)))

    def __eq__(self, other) -> bool:
        if isinstance(other, FieldElement):
            return self.value == other.value and self.field == other.field
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.field.p, self.field.h, self.value))

    def __bool__(self) -> bool:
        return self.value != 0

    def inverse(self) -> FieldElement:
        return FieldElement(self.field, self.field.inv(self.value))

    @property
    def coeffs(self) -> list[int]:
        return self.field._digits(self.value)

    def log(self) -> int:
        """Exponent e with self = primitive_element**e."""
        return self.field.log_of(self.value)

    def sqrt(self) -> FieldElement:
        return sqrt(self)

    def is_square(self) -> bool:
        return is_square(self)

    def to_json(self, power: bool = True):
        if power and self.field.h > 1:
            return "0" if not self.value else f"b^{self.log()}"
        if self.field.h == 1:
            return self.value
        return {"coeffs": self.coeffs}

    def __str__(self) -> str:
        if self.field.h == 1:
            return str(self.value)
        return "0" if not self.value else f"b^{self.log()}"

    def __repr__(self) -> str:
        return f"{self.field.name}({self})"


def is_square(a: FieldElement) -> bool:
    """Quadratic character test a^((q-1)/2) == 1; odd characteristic only."""
    F = a.field
    if F.p == 2:
        raise CharTwo("every element of a binary field is a square")
    return F.pow(a.value, F._q1 // 2) == 1


def _coeff_key(a: FieldElement) -> list[int]:
    return a.coeffs


def sqrt(a: FieldElement) -> FieldElement:
    """Square root; in odd characteristic the lexicographically smaller of {r, -r}."""
    F = a.field
    if F.p == 2:
        return a ** (F.q // 2)
    if not a:
        return a
    if not is_square(a):
        raise NotASquare(f"{a!r} is not a square")
    r = _tonelli_shanks(a)
    if r * r != a:  # pragma: no cover - Tonelli-Shanks is exact; keep a slow net anyway
        r = next(x for x in F.elements() if x * x == a)
    return min(r, -r, key=_coeff_key)


def _tonelli_shanks(a: FieldElement) -> FieldElement:
    F = a.field
    Q, S = F._q1, 0
    while Q % 2 == 0:
        Q //= 2
        S += 1
    # any non-residue works; scan from the generator for determinism
    z = F.primitive_element
    M, c, t, R = S, z**Q, a**Q, a ** ((Q + 1) // 2)
    while t != F.one:
        i, t2 = 0, t
        while t2 != F.one:
            t2 = t2 * t2
            i += 1
        b = c ** (1 << (M - i - 1))
        M, c = i, b * b
        t, R = t * c, R * b
    return R


################################################################################
# polynomials


class Polynomial:
    """Dense univariate polynomial over a Field, ascending coefficients.

    The zero polynomial has degree -1.
    """

    __slots__ = ("field", "_c")

    def __init__(self, field: Field, coeffs: Iterable = ()) -> None:
        self.field = field
        vals = [field(c).value for c in coeffs]
        while vals and vals[-1] == 0:
            vals.pop()
        self._c = tuple(vals)

    @classmethod
    def _raw(cls, field: Field, vals: Iterable[int]) -> Polynomial:
        vals = list(vals)
        while vals and vals[-1] == 0:
            vals.pop()
        poly = cls.__new__(cls)
        poly.field = field
        poly._c = tuple(vals)
        return poly

    @classmethod
    def x(cls, field: Field) -> Polynomial:
        return cls._raw(field, [0, 1])

    @classmethod
    def monomial(cls, field: Field, n: int, c=1) -> Polynomial:
        return cls._raw(field, [0] * n + [field(c).value])

    @classmethod
    def from_roots(cls, field: Field, roots: Iterable[FieldElement]) -> Polynomial:
        """prod (x - r)."""
        acc = [1]
        for r in roots:
            rv = field(r).value
            nxt = [0] * (len(acc) + 1)
            for i, c in enumerate(acc):
                nxt[i + 1] = field.add(nxt[i + 1], c)
                nxt[i] = field.sub(nxt[i], field.mul(c, rv))
            acc = nxt
        return cls._raw(field, acc)

    @property
    def degree(self) -> int:
        return len(self._c) - 1

    @property
    def coeffs(self) -> list[FieldElement]:
        return [FieldElement(self.field, v) for v in self._c]

    def __getitem__(self, i: int) -> FieldElement:
        return FieldElement(self.field, self._c[i] if 0 <= i < len(self._c) else 0)

    @property
    def leading(self) -> FieldElement:
        return self[self.degree]

    def is_zero(self) -> bool:
        return not self._c

    def _other(self, other) -> Polynomial:
        if isinstance(other, Polynomial):
            if other.field != self.field:
                raise FieldMismatch(f"{self.field.name} vs {other.field.name}")
            return other
        return Polynomial(self.field, [other])

    def __eq__(self, other) -> bool:
        return isinstance(other, Polynomial) and self.field == other.field and self._c == other._c

    def __hash__(self) -> int:
        return hash((self.field, self._c))

    def __add__(self, other) -> Polynomial:
        o = self._other(other)
        F = self.field
        n = max(len(self._c), len(o._c))
        a = self._c + (0,) * (n - len(self._c))
        b = o._c + (0,) * (n - len(o._c))
        return Polynomial._raw(F, [F.add(x, y) for x, y in zip(a, b)])

    __radd__ = __add__

    def __neg__(self) -> Polynomial:
        return Polynomial._raw(self.field, [self.field.neg(c) for c in self._c])

    def __sub__(self, other) -> Polynomial:
        return self + (-self._other(other))

    def __rsub__(self, other) -> Polynomial:
        return self._other(other) - self

    def __mul__(self, other) -> Polynomial:
        o = self._other(other)
        F = self.field
        if not self._c or not o._c:
            return Polynomial._raw(F, [])
        out = [0] * (len(self._c) + len(o._c) - 1)
        for i, a in enumerate(self._c):
            if a:
                for j, b in enumerate(o._c):
                    if b:
                        out[i + j] = F.add(out[i + j], F.mul(a, b))
        return Polynomial._raw(F, out)

    __rmul__ = __mul__

    def __divmod__(self, other) -> tuple[Polynomial, Polynomial]:
        d = self._other(other)
        if d.is_zero():
            raise DivisionByZero("polynomial division by zero")
        F = self.field
        r = list(self._c)
        dd = d.degree
        inv_lead = F.inv(d._c[-1])
        quot = [0] * max(len(r) - dd, 0)
        while len(r) - 1 >= dd and r:
            c = F.mul(r[-1], inv_lead)
            shift = len(r) - 1 - dd
            quot[shift] = c
            for i, dc in enumerate(d._c):
                r[shift + i] = F.sub(r[shift + i], F.mul(c, dc))
            while r and r[-1] == 0:
                r.pop()
        return Polynomial._raw(F, quot), Polynomial._raw(F, r)

    def __mod__(self, other) -> Polynomial:
        return divmod(self, other)[1]

    def __floordiv__(self, other) -> Polynomial:
        return divmod(self, other)[0]

    def monic(self) -> Polynomial:
        if self.is_zero():
            return self
        inv = self.field.inv(self._c[-1])
        return Polynomial._raw(self.field, self.field.scale(inv, self._c))

    def derivative(self) -> Polynomial:
        F = self.field
        return Polynomial._raw(F, [F.mul(F.scalar_int(i), c) for i, c in enumerate(self._c)][1:])

    def __call__(self, x) -> FieldElement:
        """Horner evaluation at a point of the same field."""
        F = self.field
        xv = F(x).value
        acc = 0
        for c in reversed(self._c):
            acc = F.add(F.mul(acc, xv), c)
        return FieldElement(F, acc)

    def eval_all(self, points: np.ndarray) -> np.ndarray:
        """Vectorised Horner evaluation at an array of encodings."""
        F = self.field
        acc = np.zeros(len(points), dtype=np.int64)
        for c in reversed(self._c):
            acc = F.vadd(F.vmul(acc, points), c)
        return acc

    def powmod(self, e: int, m: Polynomial) -> Polynomial:
        result = Polynomial._raw(self.field, [1]) % m
        base = self % m
        while e:
            if e & 1:
                result = (result * base) % m
            base = (base * base) % m
            e >>= 1
        return result

    def map(self, emb: Embedding) -> Polynomial:
        """Image of this polynomial under a field embedding."""
        if emb.sub != self.field:
            raise FieldMismatch(f"embedding source {emb.sub.name} is not {self.field.name}")
        return Polynomial._raw(emb.sup, [emb.map_value(c) for c in self._c])

    def __repr__(self) -> str:
        if self.is_zero():
            return "0"
        terms = []
        for i in range(self.degree, -1, -1):
            c = self._c[i]
            if not c:
                continue
            cs = str(FieldElement(self.field, c))
            mon = "" if i == 0 else ("x" if i == 1 else f"x^{i}")
            if not mon:
                terms.append(cs)
            elif c == 1:
                terms.append(mon)
            else:
                terms.append(f"{cs}*{mon}")
        return " + ".join(terms)


def poly_derivative(g: Polynomial) -> Polynomial:
    return g.derivative()


def poly_gcd(a: Polynomial, b: Polynomial) -> Polynomial:
    """Monic gcd by Euclid."""
    if a.field != b.field:
        raise FieldMismatch(f"{a.field.name} vs {b.field.name}")
    while not b.is_zero():
        a, b = b, a % b
    return a.monic()


def poly_eval(g: Polynomial, x) -> FieldElement:
    return g(x)


################################################################################
# embeddings, roots and splitting fields


class Embedding:
    """Field homomorphism GF(p^h) -> GF(p^H), fixed by the image of x."""

    def __init__(self, sub: Field, sup: Field, image_of_sub_generator: FieldElement) -> None:
        if sub.p != sup.p or sup.h % sub.h:
            raise FieldMismatch(f"{sub.name} does not embed in {sup.name}")
        theta = sup(image_of_sub_generator)
        self.sub = sub
        self.sup = sup
        self.image_of_sub_generator = theta
        mod = Polynomial._raw(sup, [sup.scalar_int(c) for c in sub.modulus])
        if mod(theta):
            raise FieldMismatch(f"{theta!r} is not a root of the modulus of {sub.name}")
        # image of the table generator, then everything by exponentiation
        acc = 0
        for c in reversed(sub._digits(sub.generator)):
            acc = sup.add(sup.mul(acc, theta.value), sup.scalar_int(c))
        self._gen_image = acc

    def map_value(self, a: int) -> int:
        if not a:
            return 0
        return self.sup.pow(self._gen_image, self.sub._log[a])

    def __call__(self, a: FieldElement) -> FieldElement:
        return FieldElement(self.sup, self.map_value(self.sub(a).value))

    def __repr__(self) -> str:
        return f"Embedding({self.sub.name} -> {self.sup.name}, x -> {self.image_of_sub_generator})"


@functools.lru_cache(maxsize=64)
def embed(sub: Field, sup: Field) -> Embedding:
    """Embedding of sub into sup.

    When the generator norms line up (as with Conway polynomials) the image of
    sub's generator is sup's generator to the power (Q-1)/(q-1); otherwise the
    first root of sub's modulus in sup, by encoding order.
    """
    if sub.p != sup.p or sup.h % sub.h:
        raise FieldMismatch(f"{sub.name} does not embed in {sup.name}")
    if sub == sup:
        return Embedding(sub, sup, sub.x)
    if sub.h == 1:
        return Embedding(sub, sup, sup(sub.x.value))
    c = sup.pow(sup.generator, (sup.q - 1) // (sub.q - 1))
    theta = sup.pow(c, sub._log[sub.p])
    mod = Polynomial._raw(sup, [sup.scalar_int(v) for v in sub.modulus])
    if not mod(FieldElement(sup, theta)):
        return Embedding(sub, sup, FieldElement(sup, theta))
    vals = mod.eval_all(np.arange(sup.q, dtype=np.int64))
    root = int(np.flatnonzero(vals == 0)[0])
    return Embedding(sub, sup, FieldElement(sup, root))


def poly_roots_in_field(g: Polynomial, F: Field, emb: Embedding | None = None) -> list[FieldElement]:
    """All distinct roots of g in F by exhaustive evaluation, sorted by encoding."""
    if g.is_zero():
        raise ValueError("the zero polynomial has every element as a root")
    if F.q > max_field_size():
        raise FieldTooLarge(f"{F.name} exceeds the exhaustive-search cap")
    if g.field != F:
        g = g.map(emb or embed(g.field, F))
    vals = g.eval_all(np.arange(F.q, dtype=np.int64))
    return [FieldElement(F, int(v)) for v in np.flatnonzero(vals == 0)]


def split_degree(g: Polynomial, max_m: int | None = None) -> int:
    """Smallest m such that the squarefree g over GF(p^t) splits over GF(p^(t*m)).

    That is the least m with x^(q^m) = x mod g.  Raises SearchBoundExceeded
    when m would pass ``max_m`` or the field-size cap.
    """
    F = g.field
    if g.degree < 1:
        raise ValueError("need a polynomial of positive degree")
    if poly_gcd(g, g.derivative()).degree != 0:
        raise NotSquarefree(f"gcd(g, g') != 1 for g = {g!r}")
    x = Polynomial.x(F) % g
    X = x
    m = 0
    while True:
        m += 1
        if F.p ** (F.h * m) > max_field_size() or (max_m is not None and m > max_m):
            raise SearchBoundExceeded(f"{g!r} does not split below the field-size cap")
        X = X.powmod(F.q, g)
        if X == x:
            return m


def splitting_field(
    g: Polynomial,
    modulus: Sequence[int] | None = None,
    max_m: int | None = None,
) -> tuple[Field, Embedding, list[FieldElement]]:
    """Smallest GF(p^(t*m)) over which the squarefree g (over GF(p^t)) splits.

    Returns the field, the embedding of g's field, and the deg(g) roots.
    ``modulus`` optionally fixes the defining polynomial of the result.
    """
    F = g.field
    m = split_degree(g, max_m)
    if m == 1 and modulus is None:
        sup = F
    else:
        sup = GF(F.p, F.h * m, modulus)
    emb = embed(F, sup)
    roots = poly_roots_in_field(g, sup, emb)
    if len(roots) != g.degree:  # pragma: no cover
        raise TGRSError(f"found {len(roots)} roots of a degree-{g.degree} polynomial")
    return sup, emb, roots
