"""Integer partitions, the constrained families they are drawn from, and pairs.

A partition is stored as a non-increasing tuple of positive parts.  Families
are described by :class:`ConstraintSpec`; every family compiles to a set of
admissible part sizes, a per-size multiplicity cap (0/1 for "distinct"), and
optionally a parity condition on the number of parts in a marked class.  The
generator here walks partitions in multiplicity form, so parts outside the
family are never produced and no filtering pass is needed.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Iterable, Iterator, NamedTuple, Optional


class Partition(tuple):
    """A partition: non-increasing tuple of positive integers.

    ``Partition([1, 3, 2])`` sorts its input.  ``lam.part(k)`` follows the
    usual convention that parts beyond the last one are 0 (1-indexed).
    """

    __slots__ = ()

    def __new__(cls, parts: Iterable[int] = ()) -> "Partition":
        parts = sorted(parts, reverse=True)
        for p in parts:
            if not isinstance(p, int) or isinstance(p, bool):
                raise TypeError(f"parts must be integers, got {p!r}")
            if p < 1:
                raise ValueError(f"parts must be positive, got {p}")
        return tuple.__new__(cls, parts)

    @property
    def size(self) -> int:
        return sum(self)

    def part(self, k: int) -> int:
        return self[k - 1] if k <= len(self) else 0

    @property
    def gap(self) -> int:
        """lambda_1 - lambda_2, with missing parts read as 0."""
        return self.part(1) - self.part(2)

    def multiplicity(self, p: int) -> int:
        return self.count(p)

    def union(self, other: Iterable[int]) -> "Partition":
        return Partition(tuple(self) + tuple(other))

    def remove(self, *parts: int) -> "Partition":
        """Remove one copy of each given part; raise if one is missing."""
        rest = list(self)
        for p in parts:
            rest.remove(p)
        return _trusted(rest)

    def is_distinct(self) -> bool:
        return all(self[i] > self[i + 1] for i in range(len(self) - 1))

    def is_distinct_odd(self) -> bool:
        return all(p & 1 for p in self) and self.is_distinct()

    def __repr__(self) -> str:
        return f"Partition({', '.join(map(str, self))})"

    def __str__(self) -> str:
        return "[" + ",".join(map(str, self)) + "]"


EMPTY = tuple.__new__(Partition, ())


def _trusted(parts: Iterable[int]) -> Partition:
    # caller guarantees positive parts; only sorting is done
    return tuple.__new__(Partition, sorted(parts, reverse=True))


def make_partition(parts: Iterable[int]) -> Partition:
    return Partition(parts)


class PartitionPair(NamedTuple):
    """A pair (lambda, (a^b)): a partition plus a nonempty rectangle."""

    lam: Partition
    a: int
    b: int

    @property
    def size(self) -> int:
        return self.lam.size + self.a * self.b

    @property
    def rectangle(self) -> Partition:
        return tuple.__new__(Partition, (self.a,) * self.b)

    def __str__(self) -> str:
        return f"{self.lam} x ({self.a}^{self.b})"


def make_pair(lam: Iterable[int], a: int, b: int) -> PartitionPair:
    if a < 1 or b < 1:
        raise ValueError(f"rectangle ({a}^{b}) must be nonempty")
    if not isinstance(lam, Partition):
        lam = Partition(lam)
    return PartitionPair(lam, a, b)


@dataclass(frozen=True)
class ResidueSpec:
    """Residue-class configuration: modulus 2r, even classes L, odd classes O."""

    r: int = 1
    L: frozenset = field(default_factory=frozenset)
    O: frozenset = field(default_factory=frozenset)

    def __post_init__(self) -> None:
        if not isinstance(self.r, int) or self.r < 1:
            raise ValueError(f"r must be a positive integer, got {self.r!r}")
        object.__setattr__(self, "L", frozenset(self.L))
        object.__setattr__(self, "O", frozenset(self.O))
        for ell in self.L:
            if ell < 2 or ell > 2 * self.r or ell % 2:
                raise ValueError(f"L entries must be even in [2, {2 * self.r}], got {ell}")
        for ell in self.O:
            if ell < 1 or ell > 2 * self.r - 1 or ell % 2 == 0:
                raise ValueError(f"O entries must be odd in [1, {2 * self.r - 1}], got {ell}")

    @classmethod
    def from_residues(cls, r: int, ells: Iterable[int]) -> "ResidueSpec":
        """Split a residue set into its even (L) and odd (O) members."""
        ells = set(ells)
        return cls(r, frozenset(e for e in ells if e % 2 == 0), frozenset(e for e in ells if e % 2))

    @property
    def modulus(self) -> int:
        return 2 * self.r

    @property
    def residues(self) -> tuple[int, ...]:
        return tuple(sorted(self.L | self.O))

    @property
    def L_complement(self) -> frozenset:
        return frozenset(range(2, 2 * self.r + 1, 2)) - self.L

    @property
    def O_complement(self) -> frozenset:
        return frozenset(range(1, 2 * self.r, 2)) - self.O

    def require_L(self) -> None:
        if not self.L:
            raise ValueError("this context needs a nonempty set L")

    def require_residues(self) -> None:
        if not (self.L or self.O):
            raise ValueError("this context needs L or O nonempty")


# --- statistics -----------------------------------------------------------


@dataclass(frozen=True)
class NumParts:
    def count(self, lam: Iterable[int]) -> int:
        return len(tuple(lam))


@dataclass(frozen=True)
class NumEvenParts:
    def count(self, lam: Iterable[int]) -> int:
        return sum(1 for p in lam if p % 2 == 0)


@dataclass(frozen=True)
class NumOddParts:
    def count(self, lam: Iterable[int]) -> int:
        return sum(1 for p in lam if p % 2)


@dataclass(frozen=True)
class NumPartsDivisibleBy:
    m: int

    def __post_init__(self) -> None:
        if self.m < 1:
            raise ValueError("m must be >= 1")

    def count(self, lam: Iterable[int]) -> int:
        return sum(1 for p in lam if p % self.m == 0)


@dataclass(frozen=True)
class NumPartsInResidue:
    """Parts congruent to ``ell`` modulo ``modulus`` (1 <= ell <= modulus)."""

    ell: int
    modulus: int

    def __post_init__(self) -> None:
        if not 1 <= self.ell <= self.modulus:
            raise ValueError("need 1 <= ell <= modulus")

    def count(self, lam: Iterable[int]) -> int:
        target = self.ell % self.modulus
        return sum(1 for p in lam if p % self.modulus == target)


StatisticKind = NumParts | NumEvenParts | NumOddParts | NumPartsDivisibleBy | NumPartsInResidue


def statistic(lam: Iterable[int], kind: StatisticKind) -> int:
    return kind.count(lam)


# --- constructions ----------------------------------------------------------


def conjugate(lam: Iterable[int]) -> Partition:
    lam = tuple(lam)
    if not lam:
        return EMPTY
    return tuple.__new__(Partition, tuple(sum(1 for p in lam if p > j) for j in range(lam[0])))


def mu_partition(a: int) -> Partition:
    """The two-part distinct odd partition of an even a >= 4; empty for a = 0."""
    if a == 0:
        return EMPTY
    if a < 4 or a % 2:
        raise ValueError(f"mu(a) needs a = 0 or an even a >= 4, got {a}")
    h = a // 2
    if h % 2 == 0:
        return tuple.__new__(Partition, (h + 1, h - 1))
    return tuple.__new__(Partition, (h + 2, h - 2))


def mu_or_none(a: int) -> Optional[Partition]:
    """mu(a) where defined, else None (used where the exclusion is vacuous)."""
    if a == 0 or (a >= 4 and a % 2 == 0):
        return mu_partition(a)
    return None


def in_B(lam: Iterable[int], n: int, a: int, b: int, r: int = 1, *, amended: bool = False) -> bool:
    """Membership of ``lam`` in B_r(n, a, b).

    The set holds partitions of n - rab that differ from (ra, r(a-2)), have
    lambda_1 - lambda_2 <= 2r(a+b+1) and do not contain r(a+b+1).

    With ``amended=True`` the gap bound is relaxed to also admit partitions
    whose largest part is exactly 3r(a+b+1): those pairs are missed by the
    three-case injection of the restricted Beck-Lehmer identity (its second
    case can never produce that largest part), so the literal set undercounts
    the excess at n = 10, 11, 18, 19, ...
    """
    if a < 1 or b < 1 or a * b > n:
        raise ValueError(f"need 1 <= ab <= n, got a={a}, b={b}, n={n}")
    lam = lam if isinstance(lam, Partition) else Partition(lam)
    if lam.size != n - r * a * b:
        return False
    if tuple(lam) == (r * a, r * (a - 2)):
        return False
    pivot = r * (a + b + 1)
    if pivot in lam:
        return False
    if lam.gap <= 2 * pivot:
        return True
    return amended and lam.part(1) == 3 * pivot


def split_div(lam: Iterable[int], r: int) -> tuple[Partition, Partition]:
    """(parts not divisible by r, parts divisible by r)."""
    lam = tuple(lam)
    return (
        tuple.__new__(Partition, tuple(p for p in lam if p % r)),
        tuple.__new__(Partition, tuple(p for p in lam if p % r == 0)),
    )


# --- constrained families ---------------------------------------------------

FAMILY_TAGS = (
    "all",
    "odd",
    "distinct",
    "distinct_odd",
    "qo_r",
    "q_L",
    "p_L",
    "even_count_parity",
    "div2r_count_parity",
    "even_count_parity_L",
)


@dataclass(frozen=True)
class ConstraintSpec:
    """A family of partitions.

    Build with the classmethods; ``extra`` is an optional predicate hook that
    is applied on top of the family (generator path only).
    """

    tag: str
    r: int = 1
    L: frozenset = frozenset()
    parity: Optional[int] = None
    extra: Optional[Callable[[Partition], bool]] = field(default=None, compare=True)

    def __post_init__(self) -> None:
        if self.tag not in FAMILY_TAGS:
            raise ValueError(f"unknown family {self.tag!r}")
        if self.r < 1:
            raise ValueError("r must be >= 1")
        object.__setattr__(self, "L", frozenset(self.L))
        if self.tag in ("q_L", "p_L", "even_count_parity_L"):
            ResidueSpec(self.r, self.L).require_L()
        if self.tag.endswith("parity") or self.tag == "even_count_parity_L":
            if self.parity not in (0, 1):
                raise ValueError("parity must be 0 (even) or 1 (odd)")
        elif self.parity is not None:
            raise ValueError(f"family {self.tag!r} takes no parity")

    # constructors, one per family
    @classmethod
    def all(cls) -> "ConstraintSpec":
        return cls("all")

    @classmethod
    def odd_parts(cls) -> "ConstraintSpec":
        return cls("odd")

    @classmethod
    def distinct_parts(cls) -> "ConstraintSpec":
        return cls("distinct")

    @classmethod
    def distinct_odd(cls) -> "ConstraintSpec":
        return cls("distinct_odd")

    @classmethod
    def distinct_odd_multiples_of_r(cls, r: int) -> "ConstraintSpec":
        """Q_o(n, r): no part divisible by 2r, parts divisible by r distinct."""
        return cls("qo_r", r=r)

    @classmethod
    def q_L(cls, r: int, L: Iterable[int]) -> "ConstraintSpec":
        """Distinct parts, even parts avoid the classes in L mod 2r."""
        return cls("q_L", r=r, L=frozenset(L))

    @classmethod
    def p_L(cls, r: int, L: Iterable[int]) -> "ConstraintSpec":
        """Odd parts free, even parts restricted to the classes in L mod 2r."""
        return cls("p_L", r=r, L=frozenset(L))

    @classmethod
    def even_count_parity(cls, parity: int) -> "ConstraintSpec":
        return cls("even_count_parity", parity=parity)

    @classmethod
    def div2r_count_parity(cls, r: int, parity: int) -> "ConstraintSpec":
        return cls("div2r_count_parity", r=r, parity=parity)

    @classmethod
    def even_count_parity_L(cls, r: int, L: Iterable[int], parity: int) -> "ConstraintSpec":
        return cls("even_count_parity_L", r=r, L=frozenset(L), parity=parity)

    def with_extra(self, pred: Callable[[Partition], bool]) -> "ConstraintSpec":
        return ConstraintSpec(self.tag, self.r, self.L, self.parity, pred)

    # compiled form
    @property
    def mark_modulus(self) -> Optional[int]:
        """Parts divisible by this are the ones whose count carries the parity."""
        if self.tag in ("even_count_parity", "even_count_parity_L"):
            return 2
        if self.tag == "div2r_count_parity":
            return 2 * self.r
        return None

    def base(self) -> "ConstraintSpec":
        """The same family without parity condition or predicate hook."""
        if self.tag in ("even_count_parity", "div2r_count_parity"):
            return ConstraintSpec("all")
        if self.tag == "even_count_parity_L":
            return ConstraintSpec("p_L", r=self.r, L=self.L)
        return ConstraintSpec(self.tag, self.r, self.L)

    def allows(self, p: int) -> bool:
        t, m = self.tag, 2 * self.r
        if t in ("odd", "distinct_odd"):
            return p % 2 == 1
        if t == "qo_r":
            return p % m != 0
        if t == "q_L":
            return p % 2 == 1 or p % m not in {ell % m for ell in self.L}
        if t in ("p_L", "even_count_parity_L"):
            return p % 2 == 1 or p % m in {ell % m for ell in self.L}
        return True

    def capped(self, p: int) -> bool:
        t = self.tag
        if t in ("distinct", "distinct_odd", "q_L"):
            return True
        if t == "qo_r":
            return p % self.r == 0
        return False

    def contains(self, lam: Iterable[int]) -> bool:
        """Direct membership test, written from the definitions (no masks)."""
        lam = tuple(lam)
        t, r = self.tag, self.r
        m = 2 * r
        Lres = {ell % m for ell in self.L}
        distinct = len(set(lam)) == len(lam)
        if t == "all":
            ok = True
        elif t == "odd":
            ok = all(p % 2 for p in lam)
        elif t == "distinct":
            ok = distinct
        elif t == "distinct_odd":
            ok = distinct and all(p % 2 for p in lam)
        elif t == "qo_r":
            ok = in_qo_r(lam, r)
        elif t == "q_L":
            ok = distinct and all(p % 2 or p % m not in Lres for p in lam)
        elif t == "p_L":
            ok = all(p % 2 or p % m in Lres for p in lam)
        elif t == "even_count_parity":
            ok = sum(1 for p in lam if p % 2 == 0) % 2 == self.parity
        elif t == "div2r_count_parity":
            ok = sum(1 for p in lam if p % m == 0) % 2 == self.parity
        else:  # even_count_parity_L
            ok = all(p % 2 or p % m in Lres for p in lam) and (
                sum(1 for p in lam if p % 2 == 0) % 2 == self.parity
            )
        if ok and self.extra is not None:
            ok = bool(self.extra(tuple.__new__(Partition, lam)))
        return ok


def in_qo_r(lam: Iterable[int], r: int, phrasing: str = "both") -> bool:
    """Membership in Q_o(n, r) under either of its two equivalent phrasings.

    "avoid": no part divisible by 2r, and parts divisible by r are distinct.
    "odd_multiples": every part divisible by r is an odd multiple of r, and
    those parts are distinct.  "both" evaluates the two and insists they agree.
    """
    lam = tuple(lam)
    div = [p for p in lam if p % r == 0]
    avoid = all(p % (2 * r) for p in lam) and len(set(div)) == len(div)
    odd_mult = all((p // r) % 2 == 1 for p in div) and len(set(div)) == len(div)
    if phrasing == "avoid":
        return avoid
    if phrasing == "odd_multiples":
        return odd_mult
    if avoid != odd_mult:
        raise AssertionError(f"Q_o(n,{r}) phrasings disagree on {lam}")
    return avoid


def _walk(n: int, allowed_desc: list[int], capped: Callable[[int], bool]) -> Iterator[tuple]:
    """Part tuples of n in lexicographically descending order."""
    prefix: list[int] = []
    last = len(allowed_desc)

    def rec(rem: int, start: int) -> Iterator[tuple]:
        if rem == 0:
            yield tuple(prefix)
            return
        for i in range(start, last):
            p = allowed_desc[i]
            if p > rem:
                continue
            kmax = 1 if capped(p) else rem // p
            for k in range(kmax, 0, -1):
                prefix.extend((p,) * k)
                yield from rec(rem - k * p, i + 1)
                del prefix[-k:]

    return rec(n, 0)


def enumerate_partitions(n: int, c: Optional[ConstraintSpec] = None) -> Iterator[Partition]:
    """Yield each partition of n in family ``c`` once, lexicographically descending."""
    if n < 0:
        raise ValueError(f"n must be non-negative, got {n}")
    c = c or ConstraintSpec.all()
    allowed = [p for p in range(n, 0, -1) if c.allows(p)]
    mod = c.mark_modulus
    for parts in _walk(n, allowed, c.capped):
        if mod is not None and sum(1 for p in parts if p % mod == 0) % 2 != c.parity:
            continue
        lam = tuple.__new__(Partition, parts)
        if c.extra is not None and not c.extra(lam):
            continue
        yield lam


def count_partitions(n: int, c: Optional[ConstraintSpec] = None) -> int:
    return sum(1 for _ in enumerate_partitions(n, c))


# --- pairs ------------------------------------------------------------------

RectPredicate = Callable[[int, int], bool]
SidePredicate = Callable[[Partition, int, int, int], bool]


@dataclass(frozen=True)
class PairSpec:
    """A family of pairs (lambda, (a^b)).

    ``rect(a, b)`` constrains the rectangle, ``family`` the partition, and
    ``side(lam, a, b, n)`` any coupling between the two.
    """

    name: str
    rect: RectPredicate
    family: ConstraintSpec
    side: Optional[SidePredicate] = None

    def contains(self, pair: PartitionPair, n: Optional[int] = None) -> bool:
        lam, a, b = pair
        n = pair.size if n is None else n
        if pair.size != n or not self.rect(a, b) or not self.family.contains(lam):
            return False
        return self.side is None or bool(self.side(lam, a, b, n))


def enumerate_pairs(n: int, spec: PairSpec) -> Iterator[PartitionPair]:
    """Pairs of total size n in ``spec``; order: a, then b ascending, then lambda."""
    if n < 0:
        raise ValueError(f"n must be non-negative, got {n}")
    for a in range(1, n + 1):
        for b in range(1, n // a + 1):
            if not spec.rect(a, b):
                continue
            for lam in enumerate_partitions(n - a * b, spec.family):
                if spec.side is None or spec.side(lam, a, b, n):
                    yield PartitionPair(lam, a, b)


def count_pairs(n: int, spec: PairSpec) -> int:
    return sum(1 for _ in enumerate_pairs(n, spec))


def _odd(x: int) -> bool:
    return x % 2 == 1


def pairs_beck() -> PairSpec:
    """a even, lambda into odd parts."""
    return PairSpec("beck", lambda a, b: a % 2 == 0, ConstraintSpec.odd_parts())


def pairs_odd_rect_B(amended: bool = False) -> PairSpec:
    """a, b odd; lambda distinct odd and in B(n, a, b)."""
    return PairSpec(
        "odd_rect_B",
        lambda a, b: _odd(a) and _odd(b),
        ConstraintSpec.distinct_odd(),
        lambda lam, a, b, n: in_B(lam, n, a, b, amended=amended),
    )


def pairs_2r_divides_a(r: int) -> PairSpec:
    """2r | a, lambda in Q_o(n - ab, r)."""
    return PairSpec(
        f"2r|a(r={r})", lambda a, b: a % (2 * r) == 0, ConstraintSpec.distinct_odd_multiples_of_r(r)
    )


def pairs_odd_multiple_rect_Br(r: int, amended: bool = False) -> PairSpec:
    """Rectangle ((ar)^b) with a, b odd; lambda in Q_o(n - rab, r) with its
    r-divisible parts in B_r(n - |non-divisible parts|, a, b)."""

    def rect(part: int, b: int) -> bool:
        return part % r == 0 and _odd(part // r) and _odd(b)

    def side(lam: Partition, part: int, b: int, n: int) -> bool:
        ndiv, div = split_div(lam, r)
        return in_B(div, n - ndiv.size, part // r, b, r, amended=amended)

    return PairSpec(f"oddmult_Br(r={r})", rect, ConstraintSpec.distinct_odd_multiples_of_r(r), side)


def pairs_even_a_q_L(r: int, L: Iterable[int]) -> PairSpec:
    """a even, lambda in Q(n - ab, L, r)."""
    return PairSpec(f"even_a_qL(r={r})", lambda a, b: a % 2 == 0, ConstraintSpec.q_L(r, L))


def pairs_odd_rect_q_L_B(r: int, L: Iterable[int], amended: bool = False) -> PairSpec:
    """a, b odd; lambda in Q(n - ab, L, r) with its odd parts in B(n - |even parts|, a, b)."""

    def side(lam: Partition, a: int, b: int, n: int) -> bool:
        odd, even = split_div(lam, 2)
        return in_B(odd, n - even.size, a, b, amended=amended)

    return PairSpec(
        f"odd_rect_qL_B(r={r})", lambda a, b: _odd(a) and _odd(b), ConstraintSpec.q_L(r, L), side
    )


NINE_SEVEN_FIVE_ONE = tuple.__new__(Partition, (9, 7, 5, 1))


def pairs_residue(
    res: ResidueSpec, *, exclude_9751: bool = False, nonempty_on_4k_single: bool = False
) -> PairSpec:
    """Pairs with a in one of the residue classes L u O modulo 2r.

    b odd, and b = 1 when a is odd; lambda distinct odd; an odd a is not a
    part of lambda; for even a, lambda_1 - lambda_2 <= a and lambda is
    neither (a/2+1, a/2-1) nor (a/2+2, a/2-2).

    ``exclude_9751`` drops ((9,7,5,1), (2^b)).  ``nonempty_on_4k_single``
    drops (empty, (a^1)) for a = 0 mod 4.
    """
    res.require_residues()
    m = res.modulus
    classes = {ell % m for ell in res.residues}

    def rect(a: int, b: int) -> bool:
        if a % m not in classes or not _odd(b):
            return False
        return b == 1 if _odd(a) else True

    def side(lam: Partition, a: int, b: int, n: int) -> bool:
        if _odd(a):
            return a not in lam
        if lam.gap > a:
            return False
        h = a // 2
        if tuple(lam) in ((h + 1, h - 1), (h + 2, h - 2)):
            return False
        if exclude_9751 and a == 2 and lam == NINE_SEVEN_FIVE_ONE:
            return False
        if nonempty_on_4k_single and a % 4 == 0 and b == 1 and not lam:
            return False
        return True

    return PairSpec(f"residue({res.r},{sorted(classes)})", rect, ConstraintSpec.distinct_odd(), side)
