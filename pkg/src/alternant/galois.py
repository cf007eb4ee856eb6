"""Exact arithmetic in small finite fields and their polynomial rings.

A field is either a prime field Z_p or a single extension F_{p^m} given by a
monic irreducible modulus over Z_p (deeper towers are rejected).  Elements
are numbered canonically: the coordinate vector (constant coordinate first)
read as a base-p integer.  Enumeration therefore always starts
0, 1, ..., p-1 and, for extensions, continues with the generator itself.

Internally every element is carried as its canonical integer code, which
makes the prime-subfield embedding the identity on codes.  Fields with at
most 256 elements precompute full addition/multiplication tables; larger
fields fall back to coordinate arithmetic.
"""

from __future__ import annotations

import math
from typing import Iterable, Iterator

NEG_INF = float("-inf")  # degree of the zero polynomial

_TABLE_MAX = 256          # largest q for which full op tables are built
_ORDER_CAP = 1 << 20      # largest supported field size
_PRIME_CAP = 1 << 16      # largest supported characteristic

_FIELDS: dict = {}        # structural cache so repeated constructions share tables


def _smallest_factor(n: int) -> int:
    """Smallest prime factor of n >= 2."""
    if n % 2 == 0:
        return 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return f
        f += 2
    return n


def _prime_factors(n: int) -> list[int]:
    """Distinct prime factors of n >= 1, ascending."""
    out = []
    while n > 1:
        f = _smallest_factor(n)
        out.append(f)
        while n % f == 0:
            n //= f
    return out


class Field:
    """A prime field Z_p or an extension F_{p^m}.

    Do not call directly; use prime_field() or extension().  Arithmetic on
    raw integer codes is exposed through addc/subc/negc/mulc/invc/powc for
    hot paths; FieldElement wraps a code for operator syntax.  Instances are
    immutable once built and safe to share.
    """

    __slots__ = (
        "p", "m", "q", "modulus_codes", "gen_label", "name",
        "_add", "_neg", "_mul", "_inv", "_xpow",
        "_exp", "_log", "_gen_primitive", "_first_primitive_code",
        "zero", "one",
    )

    def __init__(self, p: int, modulus_codes: tuple[int, ...] | None = None,
                 gen_label: str = "a", name: str | None = None):
        self.p = p
        self.modulus_codes = modulus_codes
        self.m = 1 if modulus_codes is None else len(modulus_codes) - 1
        self.q = p ** self.m
        self.gen_label = gen_label
        self.name = name or (f"Z{p}" if self.m == 1 else f"F{self.q}")
        self._xpow = None if self.m == 1 else self._reduction_table()
        self._add = self._neg = self._mul = self._inv = None
        self._exp = self._log = None
        self._gen_primitive = None
        self._first_primitive_code = None
        if self.q <= _TABLE_MAX:
            self._build_tables()
        self.zero = FieldElement(self, 0)
        self.one = FieldElement(self, 1)

    # -- construction helpers -------------------------------------------------

    def _reduction_table(self) -> tuple[tuple[int, ...], ...]:
        """Coordinates of X^m .. X^(2m-2) modulo the field modulus."""
        p, m, f = self.p, self.m, self.modulus_codes
        top = [(-f[i]) % p for i in range(m)]  # X^m = -(f_0 + f_1 X + ...)
        rows = [tuple(top)]
        cur = top
        for _ in range(m - 2):
            shifted = [0] + cur[:-1]
            carry = cur[-1]
            nxt = [(shifted[i] + carry * top[i]) % p for i in range(m)]
            rows.append(tuple(nxt))
            cur = nxt
        return tuple(rows)

    def _digits(self, code: int) -> list[int]:
        p = self.p
        out = []
        for _ in range(self.m):
            code, d = divmod(code, p)
            out.append(d)
        return out

    def _encode(self, digits: Iterable[int]) -> int:
        code = 0
        for d in reversed(list(digits)):
            code = code * self.p + d
        return code

    def _add_raw(self, a: int, b: int) -> int:
        if self.m == 1:
            return (a + b) % self.p
        da, db = self._digits(a), self._digits(b)
        return self._encode((x + y) % self.p for x, y in zip(da, db))

    def _neg_raw(self, a: int) -> int:
        if self.m == 1:
            return (-a) % self.p
        return self._encode((-x) % self.p for x in self._digits(a))

    def _mul_raw(self, a: int, b: int) -> int:
        p = self.p
        if self.m == 1:
            return a * b % p
        m = self.m
        da, db = self._digits(a), self._digits(b)
        prod = [0] * (2 * m - 1)
        for i, x in enumerate(da):
            if x:
                for j, y in enumerate(db):
                    prod[i + j] = (prod[i + j] + x * y) % p
        for d in range(2 * m - 2, m - 1, -1):
            c = prod[d]
            if c:
                row = self._xpow[d - m]
                for i in range(m):
                    prod[i] = (prod[i] + c * row[i]) % p
        return self._encode(prod[:m])

    def _pow_raw(self, a: int, e: int) -> int:
        r = 1
        while e:
            if e & 1:
                r = self._mul_raw(r, a)
            a = self._mul_raw(a, a)
            e >>= 1
        return r

    def _build_tables(self):
        p, q = self.p, self.q
        if self.m == 1:
            self._add = [[(a + b) % p for b in range(p)] for a in range(p)]
            self._neg = [(-a) % p for a in range(p)]
            self._mul = [[a * b % p for b in range(p)] for a in range(p)]
            self._inv = [0] + [pow(a, -1, p) for a in range(1, p)]
            return
        self._add = [[self._add_raw(a, b) for b in range(q)] for a in range(q)]
        self._neg = [self._neg_raw(a) for a in range(q)]
        exp, log, base = self._find_power_tables()
        self._exp, self._log = exp, log
        self._gen_primitive = (base == p)
        mul = [[0] * q for _ in range(q)]
        n = q - 1
        for a in range(1, q):
            la = log[a]
            rowm = mul[a]
            for b in range(1, q):
                rowm[b] = exp[(la + log[b]) % n]
        self._mul = mul
        inv = [0] * q
        for a in range(1, q):
            inv[a] = exp[(n - log[a]) % n]
        self._inv = inv

    def _find_power_tables(self):
        """Exp/log tables for some primitive element, preferring the generator."""
        q = self.q
        if self.m == 1:
            candidates = list(range(1, q))
        else:
            candidates = [self.p] + [c for c in range(1, q) if c != self.p]
        for base in candidates:
            exp = [1]
            cur = 1
            for _ in range(q - 1):
                cur = self._mul_raw(cur, base)
                if cur == 1:
                    break
                exp.append(cur)
            if len(exp) == q - 1:
                log = [0] * q
                for k, c in enumerate(exp):
                    log[c] = k
                if self._first_primitive_code is None:
                    self._first_primitive_code = min(
                        c for c in range(1, q)
                        if (q - 1) // math.gcd(q - 1, log[c]) == q - 1
                    ) if base == self.p else base
                return exp, log, base
        raise AssertionError(f"no primitive element found in {self.name}")

    # -- integer-code arithmetic ----------------------------------------------

    def addc(self, a: int, b: int) -> int:
        t = self._add
        return t[a][b] if t is not None else self._add_raw(a, b)

    def negc(self, a: int) -> int:
        t = self._neg
        return t[a] if t is not None else self._neg_raw(a)

    def subc(self, a: int, b: int) -> int:
        if self._add is not None:
            return self._add[a][self._neg[b]]
        return self._add_raw(a, self._neg_raw(b))

    def mulc(self, a: int, b: int) -> int:
        t = self._mul
        return t[a][b] if t is not None else self._mul_raw(a, b)

    def invc(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError(f"division by zero in {self.name}")
        if self._inv is not None:
            return self._inv[a]
        if self.m == 1:
            return pow(a, -1, self.p)
        return self._pow_raw(a, self.q - 2)

    def powc(self, a: int, e: int) -> int:
        if e < 0:
            return self._pow_raw(self.invc(a), -e)
        if a == 0:
            return 1 if e == 0 else 0
        if self._exp is not None and self._log is not None:
            return self._exp[self._log[a] * e % (self.q - 1)]
        return self._pow_raw(a, e)

    # -- element-level API ----------------------------------------------------

    def element(self, spec) -> "FieldElement":
        """Parse an element from an int, coordinate list, string, or element.

        Strings follow the external syntax: a decimal integer (prime-subfield
        value), the generator label, "label^k" or "label**k", or an ascending
        coordinate list "[c0, c1, ...]".
        """
        if isinstance(spec, FieldElement):
            if spec.field != self:
                raise TypeError(f"element of {spec.field.name} is not in {self.name}")
            return spec
        if isinstance(spec, bool):
            raise TypeError("booleans are not field elements")
        if isinstance(spec, int):
            if self.m == 1:
                return FieldElement(self, spec % self.p)
            if -self.p < spec < self.p:
                return FieldElement(self, spec % self.p)
            raise ValueError(
                f"bare integer {spec} is ambiguous in {self.name}; "
                f"use a coordinate list or a power of {self.gen_label}")
        if isinstance(spec, (list, tuple)):
            if len(spec) > self.m:
                raise ValueError(f"{len(spec)} coordinates exceed degree {self.m}")
            coords = [int(c) % self.p for c in spec]
            coords += [0] * (self.m - len(coords))
            return FieldElement(self, self._encode(coords))
        if isinstance(spec, str):
            return self._parse_str(spec.strip())
        raise TypeError(f"cannot interpret {spec!r} as an element of {self.name}")

    def _parse_str(self, s: str) -> "FieldElement":
        if not s:
            raise ValueError("empty element token")
        if s.startswith("[") and s.endswith("]"):
            inner = s[1:-1].strip()
            parts = [t.strip() for t in inner.split(",")] if inner else []
            try:
                coords = [int(t) for t in parts]
            except ValueError:
                raise ValueError(f"bad coordinate list {s!r}") from None
            return self.element(coords)
        try:
            return self.element(int(s))
        except ValueError:
            pass
        if self.m == 1:
            raise ValueError(f"bad element token {s!r} for {self.name}")
        label = self.gen_label
        if s == label:
            return FieldElement(self, self.p)
        for sep in ("**", "^"):
            if s.startswith(label + sep):
                try:
                    k = int(s[len(label) + len(sep):])
                except ValueError:
                    raise ValueError(f"bad exponent in {s!r}") from None
                return FieldElement(self, self.powc(self.p, k))
        raise ValueError(f"bad element token {s!r} for {self.name}")

    def format_code(self, code: int) -> str:
        if self.m == 1:
            return str(code)
        if code < self.p:
            return str(code)
        if self._gen_primitive:
            k = self.log_code(code)
            return self.gen_label if k == 1 else f"{self.gen_label}**{k}"
        return "[" + ", ".join(str(c) for c in self._digits(code)) + "]"

    def log_code(self, code: int) -> int:
        """Discrete log of a nonzero code relative to the exp-table base."""
        if code == 0:
            raise ZeroDivisionError(f"zero has no discrete log in {self.name}")
        self._ensure_power_tables()
        return self._log[code]

    def _ensure_power_tables(self):
        if self._log is None:
            exp, log, base = self._find_power_tables()
            self._exp, self._log = exp, log
            if self._gen_primitive is None:
                self._gen_primitive = (self.m > 1 and base == self.p)

    @property
    def gen(self) -> "FieldElement":
        if self.m == 1:
            raise ValueError(f"{self.name} is a prime field and has no generator")
        return FieldElement(self, self.p)

    @property
    def modulus(self) -> "Poly":
        if self.modulus_codes is None:
            raise ValueError(f"{self.name} has no modulus")
        prime = prime_field(self.p)
        return Poly(prime, self.modulus_codes)

    def elements(self) -> Iterator["FieldElement"]:
        """All elements in canonical order."""
        for c in range(self.q):
            yield FieldElement(self, c)

    def prime_subfield(self) -> "Field":
        return self if self.m == 1 else prime_field(self.p)

    def first_primitive(self) -> "FieldElement":
        """First primitive element in canonical enumeration order."""
        if self._first_primitive_code is None:
            n = self.q - 1
            primes = _prime_factors(n)
            for c in range(1, self.q):
                if all(self._pow_raw(c, n // f) != 1 for f in primes):
                    self._first_primitive_code = c
                    break
        return FieldElement(self, self._first_primitive_code)

    def poly(self, coeffs) -> "Poly":
        """Polynomial from an ascending coefficient list (ints/strings/elements)."""
        codes = tuple(self.element(c).code for c in coeffs)
        return Poly(self, codes)

    def vec(self, items) -> "Vec":
        from .linalg import Vec
        return Vec.of(self, items)

    def mat(self, rows) -> "Mat":
        from .linalg import Mat
        return Mat.of(self, rows)

    # -- dunder ---------------------------------------------------------------

    def __eq__(self, other):
        if self is other:
            return True
        if not isinstance(other, Field):
            return NotImplemented
        return self.p == other.p and self.modulus_codes == other.modulus_codes

    def __hash__(self):
        return hash((self.p, self.modulus_codes))

    def __repr__(self):
        return self.name

    def __len__(self):
        return self.q

    def __iter__(self):
        return self.elements()


class FieldElement:
    """An element of a Field, identified by its canonical integer code."""

    __slots__ = ("field", "code")

    def __init__(self, field: Field, code: int):
        self.field = field
        self.code = code

    @property
    def coords(self) -> tuple[int, ...]:
        """Coordinates over the prime subfield, constant coordinate first."""
        return tuple(self.field._digits(self.code))

    @property
    def is_zero(self) -> bool:
        return self.code == 0

    def _coerce(self, other):
        if isinstance(other, FieldElement):
            if other.field != self.field:
                raise TypeError(
                    f"mixed fields: {self.field.name} and {other.field.name}")
            return other.code
        if isinstance(other, int):
            return self.field.element(other).code
        return None

    def __add__(self, other):
        c = self._coerce(other)
        if c is None:
            return NotImplemented
        return FieldElement(self.field, self.field.addc(self.code, c))

    __radd__ = __add__

    def __sub__(self, other):
        c = self._coerce(other)
        if c is None:
            return NotImplemented
        return FieldElement(self.field, self.field.subc(self.code, c))

    def __rsub__(self, other):
        c = self._coerce(other)
        if c is None:
            return NotImplemented
        return FieldElement(self.field, self.field.subc(c, self.code))

    def __neg__(self):
        return FieldElement(self.field, self.field.negc(self.code))

    def __mul__(self, other):
        c = self._coerce(other)
        if c is None:
            return NotImplemented
        return FieldElement(self.field, self.field.mulc(self.code, c))

    __rmul__ = __mul__

    def __truediv__(self, other):
        c = self._coerce(other)
        if c is None:
            return NotImplemented
        return FieldElement(self.field, self.field.mulc(self.code, self.field.invc(c)))

    def __rtruediv__(self, other):
        c = self._coerce(other)
        if c is None:
            return NotImplemented
        return FieldElement(self.field, self.field.mulc(c, self.field.invc(self.code)))

    def __pow__(self, e: int):
        return FieldElement(self.field, self.field.powc(self.code, e))

    def inverse(self) -> "FieldElement":
        return FieldElement(self.field, self.field.invc(self.code))

    def __eq__(self, other):
        if isinstance(other, FieldElement):
            return self.field == other.field and self.code == other.code
        if isinstance(other, int):
            try:
                return self.code == self.field.element(other).code
            except ValueError:
                return False
        return NotImplemented

    def __hash__(self):
        return hash((self.field.p, self.field.modulus_codes, self.code))

    def __bool__(self):
        return self.code != 0

    def __str__(self):
        return self.field.format_code(self.code)

    def __repr__(self):
        return f"{self.field.name}({self.field.format_code(self.code)})"


# -- field constructors -------------------------------------------------------

def prime_field(p: int) -> Field:
    """The prime field Z_p.  p must be a prime with 2 <= p <= 2^16."""
    if not isinstance(p, int) or p < 2:
        raise ValueError(f"p={p!r} is not a prime (need an integer >= 2)")
    if p > _PRIME_CAP:
        raise ValueError(f"p={p} exceeds the characteristic cap {_PRIME_CAP}")
    f = _smallest_factor(p)
    if f != p:
        raise ValueError(f"p={p} is not prime ({f} divides {p})")
    key = (p, None, None)
    if key not in _FIELDS:
        _FIELDS[key] = Field(p)
    return _FIELDS[key]


def extension(K: Field, modulus, gen_label: str = "a",
              name: str | None = None) -> tuple[Field, FieldElement]:
    """Extension of a prime field by a monic irreducible modulus.

    modulus is a Poly over K or an ascending coefficient list.  Returns the
    new field together with its generator (the class of X).  Towers beyond a
    single extension are rejected.
    """
    if K.m != 1:
        raise ValueError(
            f"cannot extend {K.name}: only single extensions of prime fields are supported")
    f = modulus if isinstance(modulus, Poly) else K.poly(modulus)
    if f.field != K:
        raise TypeError(f"modulus is over {f.field.name}, not {K.name}")
    m = f.degree
    if not isinstance(m, int) or m < 2:
        raise ValueError(f"modulus must have degree >= 2, got {f}")
    if f.codes[-1] != 1:
        raise ValueError(f"modulus {f} is not monic")
    if K.p ** m > _ORDER_CAP:
        raise ValueError(
            f"field size {K.p}^{m} exceeds the cap 2^20")
    factor = _find_monic_factor(f)
    if factor is not None:
        raise ValueError(f"modulus {f} is reducible: divisible by {factor}")
    key = (K.p, f.codes, gen_label)
    if key not in _FIELDS:
        _FIELDS[key] = Field(K.p, f.codes, gen_label=gen_label, name=name)
    F = _FIELDS[key]
    return F, F.gen


def get_irreducible_polynomial(K: Field, m: int) -> "Poly":
    """First monic irreducible of degree m over the prime field K.

    Candidates are scanned in canonical order: the lower coefficient tuple
    (c_0, ..., c_{m-1}) read as a base-p integer, ascending.
    """
    if K.m != 1:
        raise ValueError(f"{K.name} is not a prime field")
    if m < 1:
        raise ValueError(f"degree must be >= 1, got {m}")
    if m == 1:
        return K.poly([0, 1])
    p = K.p
    for idx in range(p ** m):
        coeffs = []
        v = idx
        for _ in range(m):
            v, d = divmod(v, p)
            coeffs.append(d)
        f = Poly(K, tuple(coeffs) + (1,))
        if _find_monic_factor(f) is None:
            return f
    raise AssertionError(f"no irreducible of degree {m} over {K.name}")


def _find_monic_factor(f: "Poly"):
    """A monic factor of degree 1..deg(f)//2, or None if f is irreducible.

    Trial division; divisor candidates are scanned in canonical order.
    """
    K = f.field
    p = K.p
    deg = f.degree
    for d in range(1, deg // 2 + 1):
        for idx in range(p ** d):
            coeffs = []
            v = idx
            for _ in range(d):
                v, c = divmod(v, p)
                coeffs.append(c)
            g = Poly(K, tuple(coeffs) + (1,))
            if (f % g).is_zero:
                return g
    return None


def element_order(x: FieldElement) -> int:
    """Multiplicative order of a nonzero field element."""
    if x.code == 0:
        raise ZeroDivisionError("zero has no multiplicative order")
    F = x.field
    n = F.q - 1
    for f in _prime_factors(n):
        while n % f == 0 and F.powc(x.code, n // f) == 1:
            n //= f
    return n


def pull(x: FieldElement, K: Field) -> FieldElement | None:
    """x as an element of the prime subfield K, or None if it does not lie there.

    A None result is an ordinary value (decoders turn it into a decode
    failure), not an error.
    """
    F = x.field
    if F == K:
        return x
    if K.m != 1 or K.p != F.p:
        raise TypeError(f"{K.name} is not the prime subfield of {F.name}")
    if x.code < F.p:
        return FieldElement(K, x.code)
    return None


class Poly:
    """Dense univariate polynomial over a Field, ascending coefficients.

    Immutable; the zero polynomial has degree NEG_INF.  Construct via
    Field.poly([...]) or the arithmetic operators.
    """

    __slots__ = ("field", "codes")

    def __init__(self, field: Field, codes: Iterable[int]):
        codes = tuple(codes)
        while codes and codes[-1] == 0:
            codes = codes[:-1]
        self.field = field
        self.codes = codes

    @property
    def degree(self):
        return len(self.codes) - 1 if self.codes else NEG_INF

    @property
    def is_zero(self) -> bool:
        return not self.codes

    def coeff(self, i: int) -> FieldElement:
        code = self.codes[i] if 0 <= i < len(self.codes) else 0
        return FieldElement(self.field, code)

    def coefficients(self) -> tuple[FieldElement, ...]:
        return tuple(FieldElement(self.field, c) for c in self.codes)

    def _coerce(self, other):
        if isinstance(other, Poly):
            if other.field != self.field:
                raise TypeError(
                    f"mixed fields: {self.field.name} and {other.field.name}")
            return other
        if isinstance(other, (int, FieldElement)):
            return Poly(self.field, (self.field.element(other).code,))
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        F = self.field
        a, b = self.codes, o.codes
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = F.addc(out[i], c)
        return Poly(F, out)

    __radd__ = __add__

    def __neg__(self):
        F = self.field
        return Poly(F, (F.negc(c) for c in self.codes))

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        if isinstance(other, (int, FieldElement)):
            F = self.field
            s = F.element(other).code
            return Poly(F, (F.mulc(s, c) for c in self.codes))
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        F = self.field
        a, b = self.codes, o.codes
        if not a or not b:
            return Poly(F, ())
        out = [0] * (len(a) + len(b) - 1)
        mulc, addc = F.mulc, F.addc
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    if y:
                        out[i + j] = addc(out[i + j], mulc(x, y))
        return Poly(F, out)

    __rmul__ = __mul__

    def __pow__(self, e: int):
        if e < 0:
            raise ValueError("negative polynomial powers are not defined")
        r = Poly(self.field, (1,))
        b = self
        while e:
            if e & 1:
                r = r * b
            b = b * b
            e >>= 1
        return r

    def __divmod__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if o.is_zero:
            raise ZeroDivisionError("polynomial division by zero")
        F = self.field
        rem = list(self.codes)
        dq = len(rem) - len(o.codes)
        if dq < 0:
            return Poly(F, ()), self
        quo = [0] * (dq + 1)
        lead_inv = F.invc(o.codes[-1])
        mulc, subc = F.mulc, F.subc
        for k in range(dq, -1, -1):
            c = mulc(rem[k + len(o.codes) - 1], lead_inv)
            quo[k] = c
            if c:
                for i, oc in enumerate(o.codes):
                    rem[k + i] = subc(rem[k + i], mulc(c, oc))
        return Poly(F, quo), Poly(F, rem)

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def __call__(self, x) -> FieldElement:
        """Evaluate by Horner's rule."""
        F = self.field
        xc = F.element(x).code
        acc = 0
        mulc, addc = F.mulc, F.addc
        for c in reversed(self.codes):
            acc = addc(mulc(acc, xc), c)
        return FieldElement(F, acc)

    def derivative(self) -> "Poly":
        F = self.field
        out = []
        for i in range(1, len(self.codes)):
            scalar = i % F.p
            out.append(F.mulc(scalar, self.codes[i]) if scalar else 0)
        return Poly(F, out)

    def truncated(self, r: int) -> "Poly":
        """The polynomial modulo z^r (terms of degree >= r dropped)."""
        return Poly(self.field, self.codes[:r])

    def reciprocal(self) -> "Poly":
        """Coefficients reversed: z^deg * f(1/z)."""
        return Poly(self.field, tuple(reversed(self.codes)))

    def monic(self) -> "Poly":
        if self.is_zero:
            raise ZeroDivisionError("the zero polynomial cannot be made monic")
        F = self.field
        inv = F.invc(self.codes[-1])
        return Poly(F, (F.mulc(inv, c) for c in self.codes))

    def __eq__(self, other):
        if isinstance(other, Poly):
            return self.field == other.field and self.codes == other.codes
        return NotImplemented

    def __hash__(self):
        return hash((self.field.p, self.field.modulus_codes, self.codes))

    def __str__(self):
        return "[" + ", ".join(self.field.format_code(c) for c in self.codes) + "]"

    def __repr__(self):
        return f"Poly[{self.field.name}]{self}"

    def pretty(self, var: str = "z") -> str:
        """Human-oriented rendering like 'z^2 + 5z + 2'."""
        if self.is_zero:
            return "0"
        parts = []
        for i in range(len(self.codes) - 1, -1, -1):
            c = self.codes[i]
            if not c:
                continue
            cs = self.field.format_code(c)
            if i == 0:
                parts.append(cs)
            else:
                z = var if i == 1 else f"{var}^{i}"
                parts.append(z if cs == "1" else f"{cs}{z}" if len(cs) == 1 else f"({cs}){z}")
        return " + ".join(parts)


def poly_gcd(f: Poly, g: Poly) -> Poly:
    """Monic greatest common divisor."""
    if f.field != g.field:
        raise TypeError("gcd of polynomials over different fields")
    while not g.is_zero:
        f, g = g, f % g
    if f.is_zero:
        return f
    return f.monic()
