"""Exact tabulation of arithmetic functions and their Dirichlet algebra.

Every sequence is integer valued and tabulated on n = 1..n_max with
Python's arbitrary-precision integers, so identity checks compare exact
values and never round.  The recursive generators (``kappa``, ``K``) and
the divisor-sum generators (``sigma``, ``num_divisors``) are sieves over
multiples, O(N log N) additions in total; nothing factorizes per n.

Built-in generators, by identifier (see `gen_builtin`):

    epsilon       convolution identity: 1, 0, 0, ...
    mobius        Mobius function
    one           constant 1
    id            power function n^x              (needs x)
    phi           Euler totient
    jordan        Jordan totient J_x              (needs x)
    num_divisors  number of divisors
    sigma         sum of x-th powers of divisors  (needs x)
    kappa         recursive divisor sum:
                  kappa(n) = n^x + sum of kappa(d) over proper divisors d
                                                  (needs x)
    K             number of ordered factorizations into factors > 1:
                  K(n) = [n == 1] + sum of K(d) over proper divisors d

`ArithSeq` supports the convolution-ring operators directly: ``f * g`` is
the Dirichlet convolution, ``c * f`` scales by an integer c, and
``f + g`` / ``f - g`` combine elementwise.  Instances are immutable after
construction and safe to share across threads.
"""

from __future__ import annotations

from itertools import islice
from typing import Iterable, Iterator

__all__ = [
    "ArithSeq",
    "RatSeq",
    "DivisorTable",
    "NotAUnitError",
    "BUILTIN_NAMES",
    "PARAMETRIC_NAMES",
    "make_divisor_table",
    "gen_builtin",
    "dirichlet_convolve",
    "dirichlet_inverse",
    "series_partial",
]

BUILTIN_NAMES = (
    "epsilon",
    "mobius",
    "one",
    "id",
    "phi",
    "jordan",
    "num_divisors",
    "sigma",
    "kappa",
    "K",
)

# Generators that take the exponent x; for the rest x is ignored.
PARAMETRIC_NAMES = frozenset({"id", "jordan", "sigma", "kappa"})


class NotAUnitError(ValueError):
    """f(1) is outside {+1, -1}, so no integer Dirichlet inverse exists."""


class ArithSeq:
    """Integer-valued arithmetic function tabulated on n = 1..n_max.

    The backing array is padded so that position n holds f(n); the
    external contract is the 1-based sequence f(1)..f(n_max).  Equality
    compares n_max and values, never labels.
    """

    __slots__ = ("n_max", "label", "_vals")

    def __init__(self, terms: Iterable[int], label: str = "") -> None:
        terms = list(terms)
        if not terms:
            raise ValueError("an ArithSeq needs at least one term (n_max >= 1)")
        for t in terms:
            if not isinstance(t, int):
                raise ValueError(f"terms must be exact integers, got {t!r}")
        self.n_max = len(terms)
        self.label = label
        self._vals = [0] + terms

    @classmethod
    def _from_padded(cls, padded: list[int], label: str) -> ArithSeq:
        # Internal: takes ownership of a 0-padded array, skips validation.
        seq = cls.__new__(cls)
        seq.n_max = len(padded) - 1
        seq.label = label
        seq._vals = padded
        return seq

    def __len__(self) -> int:
        return self.n_max

    def __getitem__(self, n: int) -> int:
        if not 1 <= n <= self.n_max:
            raise IndexError(f"sequence is defined on 1..{self.n_max}, got n={n}")
        return self._vals[n]

    def __iter__(self) -> Iterator[int]:
        return islice(iter(self._vals), 1, None)

    def terms(self) -> list[int]:
        """The values f(1)..f(n_max) as a fresh list."""
        return self._vals[1:]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, ArithSeq):
            return NotImplemented
        # Both pads are 0, so the padded arrays compare directly.
        return self._vals == other._vals

    __hash__ = None  # type: ignore[assignment]

    def __repr__(self) -> str:
        head = ", ".join(str(v) for v in self._vals[1:9])
        tail = ", ..." if self.n_max > 8 else ""
        return f"ArithSeq({self.label!r}, n_max={self.n_max}, [{head}{tail}])"

    # Convolution-ring operators.  `*` follows the type of the operand:
    # sequence * sequence is Dirichlet convolution, int * sequence scales.

    def __mul__(self, other: ArithSeq | int) -> ArithSeq:
        if isinstance(other, ArithSeq):
            return dirichlet_convolve(self, other)
        if isinstance(other, int):
            return self._scaled(other)
        return NotImplemented

    def __rmul__(self, other: int) -> ArithSeq:
        if isinstance(other, int):
            return self._scaled(other)
        return NotImplemented

    def __add__(self, other: ArithSeq) -> ArithSeq:
        if not isinstance(other, ArithSeq):
            return NotImplemented
        self._require_same_range(other)
        padded = [a + b for a, b in zip(self._vals, other._vals)]
        return ArithSeq._from_padded(padded, f"{self.label}+{other.label}")

    def __sub__(self, other: ArithSeq) -> ArithSeq:
        if not isinstance(other, ArithSeq):
            return NotImplemented
        self._require_same_range(other)
        padded = [a - b for a, b in zip(self._vals, other._vals)]
        return ArithSeq._from_padded(padded, f"{self.label}-{other.label}")

    def _scaled(self, c: int) -> ArithSeq:
        return ArithSeq._from_padded([c * v for v in self._vals], f"{c}*{self.label}")

    def _require_same_range(self, other: ArithSeq) -> None:
        if self.n_max != other.n_max:
            raise ValueError(
                f"range mismatch: n_max {self.n_max} vs {other.n_max}"
            )


class RatSeq:
    """Dyadic-rational sequence on 1..n_max with one shared denominator 2^m.

    Every entry is numerator(n) / 2^denominator_exponent.  Numerators are
    stored unreduced; equality cross-multiplies, so two representations of
    the same values compare equal.
    """

    __slots__ = ("n_max", "denominator_exponent", "_nums")

    def __init__(self, numerators: Iterable[int], denominator_exponent: int) -> None:
        nums = list(numerators)
        if not nums:
            raise ValueError("a RatSeq needs at least one entry (n_max >= 1)")
        if denominator_exponent < 0:
            raise ValueError("denominator exponent must be nonnegative")
        self.n_max = len(nums)
        self.denominator_exponent = denominator_exponent
        self._nums = [0] + nums

    def numerator(self, n: int) -> int:
        if not 1 <= n <= self.n_max:
            raise IndexError(f"sequence is defined on 1..{self.n_max}, got n={n}")
        return self._nums[n]

    def numerators(self) -> list[int]:
        return self._nums[1:]

    def __len__(self) -> int:
        return self.n_max

    def __getitem__(self, n: int):
        from fractions import Fraction

        return Fraction(self.numerator(n), 1 << self.denominator_exponent)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, RatSeq):
            return NotImplemented
        if self.n_max != other.n_max:
            return False
        sm, om = self.denominator_exponent, other.denominator_exponent
        # a/2^sm == b/2^om  <=>  a * 2^om == b * 2^sm; shift the smaller side.
        if sm <= om:
            shift = om - sm
            return all(a << shift == b for a, b in zip(self._nums, other._nums))
        shift = sm - om
        return all(a == b << shift for a, b in zip(self._nums, other._nums))

    __hash__ = None  # type: ignore[assignment]

    def __repr__(self) -> str:
        head = ", ".join(str(v) for v in self._nums[1:7])
        tail = ", ..." if self.n_max > 6 else ""
        return (
            f"RatSeq(n_max={self.n_max}, 2^-{self.denominator_exponent} *"
            f" [{head}{tail}])"
        )


class DivisorTable:
    """Smallest-prime-factor table for divisor enumeration on 1..n_max."""

    __slots__ = ("n_max", "_spf")

    def __init__(self, n_max: int, _spf: list[int] | None = None) -> None:
        if n_max < 1:
            raise ValueError("n_max must be a positive integer")
        self.n_max = n_max
        self._spf = _spf if _spf is not None else _spf_array(n_max)

    def smallest_prime_factor(self, n: int) -> int:
        self._check_range(n)
        if n == 1:
            raise ValueError("1 has no prime factor")
        return self._spf[n]

    def is_prime(self, n: int) -> bool:
        self._check_range(n)
        return n >= 2 and self._spf[n] == n

    def factorize(self, n: int) -> list[tuple[int, int]]:
        """Prime factorization of n as (prime, exponent) pairs, ascending."""
        self._check_range(n)
        spf = self._spf
        out = []
        while n > 1:
            p = spf[n]
            e = 0
            while n % p == 0:
                n //= p
                e += 1
            out.append((p, e))
        return out

    def prime_factor_count(self, n: int) -> int:
        """Number of prime factors of n counted with multiplicity (big Omega)."""
        return sum(e for _, e in self.factorize(n))

    def divisors(self, n: int) -> list[int]:
        """All divisors of n, ascending."""
        divs = [1]
        for p, e in self.factorize(n):
            pk = 1
            powers = []
            for _ in range(e):
                pk *= p
                powers.append(pk)
            divs += [d * q for q in powers for d in divs]
        divs.sort()
        return divs

    def proper_divisors(self, n: int) -> list[int]:
        """Divisors d of n with d < n, ascending."""
        return self.divisors(n)[:-1]

    def _check_range(self, n: int) -> None:
        if not 1 <= n <= self.n_max:
            raise ValueError(f"table covers 1..{self.n_max}, got n={n}")


def make_divisor_table(n_max: int) -> DivisorTable:
    """Precompute the divisor structure for 1..n_max."""
    return DivisorTable(n_max)


def _spf_array(n_max: int) -> list[int]:
    spf = [0] * (n_max + 1)
    for i in range(2, n_max + 1):
        if spf[i] == 0:
            for j in range(i, n_max + 1, i):
                if spf[j] == 0:
                    spf[j] = i
    return spf


# ---------------------------------------------------------------------------
# Built-in generators


def gen_builtin(name: str, n_max: int, *, x: int | None = None) -> ArithSeq:
    """Tabulate a built-in arithmetic function on 1..n_max.

    ``x`` is the exponent for the parametric generators (id, jordan,
    sigma, kappa); passing it for any other identifier is an error, as
    is omitting it for a parametric one.  Unknown identifiers raise
    ValueError.
    """
    if n_max < 1:
        raise ValueError("n_max must be a positive integer")
    if name not in BUILTIN_NAMES:
        raise ValueError(
            f"unknown function identifier {name!r}; expected one of "
            + ", ".join(BUILTIN_NAMES)
        )
    if name in PARAMETRIC_NAMES:
        if x is None:
            raise ValueError(f"generator {name!r} requires the exponent x")
        if not isinstance(x, int) or x < 0:
            raise ValueError(f"exponent x must be a nonnegative integer, got {x!r}")
        label = f"{name}_{x}"
    else:
        if x is not None:
            raise ValueError(f"generator {name!r} takes no exponent")
        label = name

    if name == "epsilon":
        padded = [0] * (n_max + 1)
        padded[1] = 1
    elif name == "one":
        padded = [1] * (n_max + 1)
        padded[0] = 0
    elif name == "id":
        padded = [0] + [n**x for n in range(1, n_max + 1)]
    elif name == "mobius":
        padded = _mobius_padded(n_max)
    elif name == "phi":
        padded = _jordan_padded(n_max, 1)
    elif name == "jordan":
        padded = _jordan_padded(n_max, x)
    elif name == "num_divisors":
        padded = _sigma_padded(n_max, 0)
    elif name == "sigma":
        padded = _sigma_padded(n_max, x)
    elif name == "kappa":
        padded = [0] + [n**x for n in range(1, n_max + 1)]
        _accumulate_proper_divisor_sums(padded)
    else:  # K
        padded = [0] * (n_max + 1)
        padded[1] = 1
        _accumulate_proper_divisor_sums(padded)

    return ArithSeq._from_padded(padded, label)


def _mobius_padded(n_max: int) -> list[int]:
    spf = _spf_array(n_max)
    mu = [0] * (n_max + 1)
    if n_max >= 1:
        mu[1] = 1
    for n in range(2, n_max + 1):
        p = spf[n]
        m = n // p
        mu[n] = 0 if m % p == 0 else -mu[m]
    return mu


def _jordan_padded(n_max: int, x: int) -> list[int]:
    # Multiplicative fill over smallest prime factors; independent of the
    # mobius * id_x convolution it is tested against.
    spf = _spf_array(n_max)
    j = [0] * (n_max + 1)
    j[1] = 1
    for n in range(2, n_max + 1):
        p = spf[n]
        m = n // p
        px = p**x
        j[n] = j[m] * px if m % p == 0 else j[m] * (px - 1)
    return j


def _sigma_padded(n_max: int, x: int) -> list[int]:
    vals = [0] * (n_max + 1)
    for d in range(1, n_max + 1):
        dx = d**x
        for m in range(d, n_max + 1, d):
            vals[m] += dx
    return vals


def _accumulate_proper_divisor_sums(vals: list[int]) -> None:
    """In place: vals[n] += sum of vals[d] over proper divisors d of n.

    Ascending d keeps the recursion order explicit: when d is used as a
    source its own proper-divisor contributions (all from d' < d) have
    already landed, so vals[d] is final.
    """
    n_max = len(vals) - 1
    for d in range(1, n_max // 2 + 1):
        vd = vals[d]
        if vd:
            start = 2 * d
            vals[start::d] = [v + vd for v in vals[start::d]]


# ---------------------------------------------------------------------------
# Convolution algebra


def dirichlet_convolve(f: ArithSeq, g: ArithSeq, label: str | None = None) -> ArithSeq:
    """Dirichlet convolution: result(n) = sum over d|n of f(d) * g(n/d).

    Double loop over d and the multiples of d, O(N log N) multiplications.
    Exact, commutative, and associative.
    """
    f._require_same_range(g)
    n_max = f.n_max
    fv, gv = f._vals, g._vals
    out = [0] * (n_max + 1)
    for d in range(1, n_max + 1):
        fd = fv[d]
        if not fd:
            continue
        lim = n_max // d
        if fd == 1:
            out[d::d] = [o + gm for o, gm in zip(out[d::d], islice(gv, 1, lim + 1))]
        else:
            out[d::d] = [
                o + fd * gm for o, gm in zip(out[d::d], islice(gv, 1, lim + 1))
            ]
    if label is None:
        label = f"{f.label}*{g.label}"
    return ArithSeq._from_padded(out, label)


def dirichlet_inverse(f: ArithSeq, label: str | None = None) -> ArithSeq:
    """The g with f * g = epsilon, by ascending-n recursion.

    Requires f(1) in {+1, -1}; anything else raises NotAUnitError because
    the inverse would leave the integers.
    """
    u = f._vals[1]
    if u not in (1, -1):
        raise NotAUnitError(
            f"f(1) = {u} is not +1 or -1; the sequence has no integer inverse"
        )
    n_max = f.n_max
    fv = f._vals
    g = [0] * (n_max + 1)
    g[1] = u
    # acc[n] accumulates sum over proper divisors d of n of f(n/d) * g(d);
    # once every d < n has propagated, g(n) = -u * acc[n].
    acc = [0] * (n_max + 1)
    for d in range(1, n_max + 1):
        if d > 1:
            g[d] = -u * acc[d]
        gd = g[d]
        if gd:
            lim = n_max // d
            if lim >= 2:
                start = 2 * d
                acc[start::d] = [
                    a + gd * fm
                    for a, fm in zip(acc[start::d], islice(fv, 2, lim + 1))
                ]
    if label is None:
        label = f"{f.label}^-1" if f.label else "inverse"
    return ArithSeq._from_padded(g, label)


# ---------------------------------------------------------------------------
# Dyadic series partial sums


def series_partial(kind: str, m: int, n_max: int, *, x: int | None = None) -> RatSeq:
    """Exact partial sum of the halving series for kappa_x or K.

    The series puts term k over 2^k: for kind="kappa" the terms are id_x,
    one*id_x, one*one*id_x, ...; for kind="K" they are epsilon, one,
    one*one, ....  Each term reuses the previous one through a single
    convolution with the constant function, so m terms cost
    O(m * N log N).  The result carries the shared denominator 2^m.
    """
    if kind not in ("kappa", "K"):
        raise ValueError(f"kind must be 'kappa' or 'K', got {kind!r}")
    if m < 1:
        raise ValueError("term count m must be at least 1")
    if kind == "kappa":
        if x is None:
            raise ValueError("kind 'kappa' requires the exponent x")
        term = gen_builtin("id", n_max, x=x)
    else:
        if x is not None:
            raise ValueError("kind 'K' takes no exponent")
        term = gen_builtin("epsilon", n_max)
    one = gen_builtin("one", n_max)
    nums = [0] * (n_max + 1)
    for k in range(1, m + 1):
        if k > 1:
            term = dirichlet_convolve(one, term, label=f"term_{k}")
        tv = term._vals
        nums = [2 * a + t for a, t in zip(nums, tv)]
    return RatSeq(nums[1:], m)
