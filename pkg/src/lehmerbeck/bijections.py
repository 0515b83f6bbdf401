"""Executable injections between pair families, their inverses and images.

Four constructions live here, each as a forward map ``T``, an inverse ``L``
defined on the image, and image-set predicates written from the displayed
characterisations (not from ``T``), so that :func:`verify_map` compares two
independent descriptions of the same set.

* ``sec2``: pairs with a, b even into pairs with a, b odd (three cases
  around the pivot part a + b - 1).
* ``lr``: the residue-class injection T_{l,r}, b even into b odd with
  a = l (mod 2r).  ``lr_ex1`` is its all-residue variant that also maps
  (empty, (2^(n/2))) to (empty, (n)).
* ``thm62``: a = 0 (mod 2r), b odd into a = 1 (mod 2r), b even.
* ``thm63``: a = 0 (mod 2r), b even into a = 1 (mod 2r), b odd.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Optional

from .partitions import (
    EMPTY,
    NINE_SEVEN_FIVE_ONE,
    ConstraintSpec,
    Partition,
    PairSpec,
    PartitionPair,
    ResidueSpec,
    enumerate_pairs,
    in_B,
    mu_or_none,
    mu_partition,
    pairs_residue,
)

MAP_IDS = ("sec2", "lr", "lr_ex1", "thm62", "thm63")


class DomainError(ValueError):
    """The pair is outside the domain (or image) a map is defined on."""


def _pair(parts, a: int, b: int) -> PartitionPair:
    return PartitionPair(Partition(parts), a, b)


def _add_part(lam: Partition, p: int) -> Partition:
    return Partition(tuple(lam) + (p,))


# --- domains and codomains ----------------------------------------------------


def _family(name: str, rect: Callable[[int, int], bool]) -> PairSpec:
    return PairSpec(name, rect, ConstraintSpec.distinct_odd())


def sec2_domain() -> PairSpec:
    return _family("sec2.A", lambda a, b: a % 2 == 0 and b % 2 == 0)


def sec2_codomain() -> PairSpec:
    return _family("sec2.B", lambda a, b: a % 2 == 1 and b % 2 == 1)


def lr_domain(r: int, ell: int) -> PairSpec:
    _check_ell(r, ell)
    m = 2 * r
    return _family(f"lr.A({ell},{r})", lambda a, b: a % m == ell % m and b % 2 == 0)


def lr_codomain(r: int, ell: int) -> PairSpec:
    _check_ell(r, ell)
    m = 2 * r
    return _family(f"lr.B({ell},{r})", lambda a, b: a % m == ell % m and b % 2 == 1)


def ex1_domain() -> PairSpec:
    return _family("ex1.A", lambda a, b: b % 2 == 0)


def ex1_codomain() -> PairSpec:
    return _family("ex1.B", lambda a, b: b % 2 == 1)


def thm62_domain(r: int) -> PairSpec:
    return _family(f"thm62.A({r})", lambda a, b: a % (2 * r) == 0 and b % 2 == 1)


def thm62_codomain(r: int) -> PairSpec:
    return _family(f"thm62.B({r})", lambda a, b: a % (2 * r) == 1 % (2 * r) and b % 2 == 0)


def thm63_domain(r: int) -> PairSpec:
    return _family(f"thm63.A({r})", lambda a, b: a % (2 * r) == 0 and b % 2 == 0)


def thm63_codomain(r: int) -> PairSpec:
    return _family(f"thm63.B({r})", lambda a, b: a % (2 * r) == 1 % (2 * r) and b % 2 == 1)


def _check_ell(r: int, ell: int) -> None:
    if r < 1 or not 1 <= ell <= 2 * r:
        raise ValueError(f"need 1 <= ell <= 2r, got ell={ell}, r={r}")


def _require(spec: PairSpec, p: PartitionPair) -> None:
    if not spec.contains(p):
        raise DomainError(f"{p} is not in {spec.name}")


# --- the map on pairs with even rectangles ------------------------------------


def map_T_sec2(p: PartitionPair) -> PartitionPair:
    _require(sec2_domain(), p)
    lam, a, b = p
    pivot = a + b - 1
    if pivot not in lam:
        return PartitionPair(_add_part(lam, pivot), a - 1, b - 1)
    if len(lam) >= 2:
        m = next(x for x in lam if x != pivot)
        return PartitionPair(_add_part(lam.remove(m, pivot), 2 * a + 2 * b - 2 + m), a - 1, b - 1)
    return _pair((a + 1, a - 1), a + 1, b - 1)


def sec2_image_preds() -> tuple[Callable[[PartitionPair], bool], ...]:
    def one(y: PartitionPair) -> bool:
        return y.a + y.b + 1 in y.lam

    def two(y: PartitionPair) -> bool:
        s = y.a + y.b + 1
        mu = y.lam
        return s not in mu and mu.part(1) != 3 * s and mu.gap > 2 * s

    def three(y: PartitionPair) -> bool:
        return tuple(y.lam) == (y.a, y.a - 2)

    return one, two, three


def _branch(preds, y: PartitionPair) -> int:
    hits = [i for i, pr in enumerate(preds) if pr(y)]
    if len(hits) != 1:
        raise DomainError(f"{y} matches image sets {[i + 1 for i in hits]}, need exactly one")
    return hits[0]


def map_L_sec2(p: PartitionPair) -> PartitionPair:
    _require(sec2_codomain(), p)
    mu, c, d = p
    s = c + d + 1
    k = _branch(sec2_image_preds(), p)
    if k == 0:
        return PartitionPair(mu.remove(s), c + 1, d + 1)
    if k == 1:
        top = mu.part(1)
        return PartitionPair(Partition(tuple(mu.remove(top)) + (s, top - 2 * s)), c + 1, d + 1)
    return _pair((c + d - 1,), c - 1, d + 1)


# --- the residue-class injection -----------------------------------------------


def map_T_lr(p: PartitionPair, r: int, ell: int, n: Optional[int] = None) -> Optional[PartitionPair]:
    """T_{l,r}; None only for (empty, (2^(n/2))) with n in {4, 8, 12, 16, 20}."""
    _require(lr_domain(r, ell), p)
    if n is not None and p.size != n:
        raise DomainError(f"{p} has size {p.size}, not {n}")
    return _lr_forward(p, ex1=False)


def _lr_forward(p: PartitionPair, ex1: bool) -> Optional[PartitionPair]:
    lam, a, b = p
    if a % 2:
        if a not in lam:
            return PartitionPair(_add_part(lam, a), a, b - 1)
        return PartitionPair(lam.remove(a), a, b + 1)
    if lam:
        top = lam.part(1)
        return PartitionPair(_add_part(lam.remove(top), top + a), a, b - 1)
    if a != 2:
        return PartitionPair(mu_partition(a), a, b - 1)
    n = p.size
    if ex1:
        return PartitionPair(EMPTY, n, 1)
    if n >= 24:
        return PartitionPair(NINE_SEVEN_FIVE_ONE, 2, (n - 22) // 2)
    return None


def lr_image_preds(n: int, ex1: bool = False) -> tuple[Callable[[PartitionPair], bool], ...]:
    """Image pieces: odd a (two cases), even a from nonempty lambda, even a
    from empty lambda, and the special image of (empty, (2^(n/2)))."""

    def odd_in(y):
        return y.a % 2 == 1 and y.a in y.lam

    def odd_out(y):
        return y.a % 2 == 1 and y.a not in y.lam and y.b >= 3

    def even_gap(y):
        return y.a % 2 == 0 and y.lam.gap > y.a

    def even_mu(y):
        return y.a % 2 == 0 and y.a >= 4 and y.lam == mu_or_none(y.a)

    def special(y):
        if n % 4:
            return False
        if ex1:
            return not y.lam and y.a == n and y.b == 1
        return n >= 24 and y.a == 2 and y.lam == NINE_SEVEN_FIVE_ONE

    return odd_in, odd_out, even_gap, even_mu, special


def _lr_inverse(p: PartitionPair, n: int, ex1: bool) -> PartitionPair:
    mu, a, d = p
    k = _branch(lr_image_preds(n, ex1), p)
    if k == 0:
        return PartitionPair(mu.remove(a), a, d + 1)
    if k == 1:
        return PartitionPair(_add_part(mu, a), a, d - 1)
    if k == 2:
        top = mu.part(1)
        return PartitionPair(_add_part(mu.remove(top), top - a), a, d + 1)
    if k == 3:
        return PartitionPair(EMPTY, a, d + 1)
    return PartitionPair(EMPTY, 2, n // 2)


def map_L_lr(p: PartitionPair, r: int, ell: int, n: Optional[int] = None) -> PartitionPair:
    _require(lr_codomain(r, ell), p)
    return _lr_inverse(p, p.size if n is None else n, ex1=False)


def map_T_ex1(p: PartitionPair) -> PartitionPair:
    """All-residue variant: (empty, (2^(n/2))) goes to (empty, (n))."""
    _require(ex1_domain(), p)
    return _lr_forward(p, ex1=True)


def map_L_ex1(p: PartitionPair) -> PartitionPair:
    _require(ex1_codomain(), p)
    return _lr_inverse(p, p.size, ex1=True)


# --- a = 0 (mod 2r), b odd ------------------------------------------------------


def map_T_thm62(p: PartitionPair, r: int) -> PartitionPair:
    _require(thm62_domain(r), p)
    lam, a, b = p
    c = (b - 1) % (2 * r)
    inc = a * b - (a - c) * (b - c)
    if lam:
        top = lam.part(1)
        return PartitionPair(_add_part(lam.remove(top), top + inc), b - c, a - c)
    return PartitionPair(mu_partition(inc), b - c, a - c)


def _thm62_shift(y: PartitionPair, r: int) -> tuple[int, int]:
    z = (-y.b) % (2 * r)
    return z, (y.a + z) * (y.b + z) - y.a * y.b


def thm62_image_preds(r: int) -> tuple[Callable[[PartitionPair], bool], ...]:
    def one(y):
        _, D = _thm62_shift(y, r)
        return y.lam.gap > D

    def two(y):
        _, D = _thm62_shift(y, r)
        return y.lam == mu_or_none(D)

    return one, two


def map_L_thm62(p: PartitionPair, r: int) -> PartitionPair:
    _require(thm62_codomain(r), p)
    mu, x, y = p
    z, D = _thm62_shift(p, r)
    k = _branch(thm62_image_preds(r), p)
    if k == 0:
        top = mu.part(1)
        return PartitionPair(_add_part(mu.remove(top), top - D), y + z, x + z)
    return PartitionPair(EMPTY, y + z, x + z)


# --- a = 0 (mod 2r), b even -----------------------------------------------------


def map_T_thm63(p: PartitionPair, r: int) -> PartitionPair:
    """Three cases around the pivot a + (2r-1)(b-1).

    The third case is applied as stated even where its output repeats a part
    (r = 2, b = 2); :func:`verify_map` reports that as a codomain failure.
    """
    _require(thm63_domain(r), p)
    lam, a, b = p
    pivot = a + (2 * r - 1) * (b - 1)
    if pivot not in lam:
        return PartitionPair(_add_part(lam, pivot), a + 1 - 2 * r, b - 1)
    if len(lam) >= 2:
        m = next(x for x in lam if x != pivot)
        return PartitionPair(_add_part(lam.remove(m, pivot), 2 * pivot + m), a + 1 - 2 * r, b - 1)
    return _pair((a + 1, a + (2 * r - 2) * b - (2 * r - 1)), a + 1, b - 1)


def thm63_image_preds(r: int, amended: bool = False) -> tuple[Callable[[PartitionPair], bool], ...]:
    """Image sets as displayed.

    ``amended`` adds mu_1 != 3(c + (2r-1)(d+1)) to the second set (the
    analogue of the condition the pivot-(a+b-1) map carries) and c > 1 to
    the third, since c = a + 1 there and L would otherwise produce an empty
    rectangle.
    """

    def pivot(y):
        return y.a + (2 * r - 1) * (y.b + 1)

    def one(y):
        return pivot(y) in y.lam

    def two(y):
        s = pivot(y)
        ok = s not in y.lam and y.lam.gap > 2 * s
        return ok and (not amended or y.lam.part(1) != 3 * s)

    def three(y):
        second = y.a + (2 * r - 2) * y.b - 2
        if amended and y.a == 1:
            return False
        return second >= 1 and sorted(y.lam) == sorted((y.a, second))

    return one, two, three


def map_L_thm63(p: PartitionPair, r: int, amended: bool = False) -> PartitionPair:
    _require(thm63_codomain(r), p)
    mu, c, d = p
    s = c + (2 * r - 1) * (d + 1)
    k = _branch(thm63_image_preds(r, amended), p)
    if k == 0:
        return PartitionPair(mu.remove(s), c + 2 * r - 1, d + 1)
    if k == 1:
        top = mu.part(1)
        return PartitionPair(Partition(tuple(mu.remove(top)) + (s, top - 2 * s)), c + 2 * r - 1, d + 1)
    return _pair((c - 1 + (2 * r - 1) * d,), c - 1, d + 1)


# --- verification ----------------------------------------------------------------


@dataclass
class MapReport:
    """Outcome of running a map over its whole domain at one n."""

    map_id: str
    n: int
    params: dict
    domain_size: int
    codomain_size: int
    image_size: int
    complement: list
    unmapped: list
    size_ok: bool
    codomain_ok: bool
    injective: bool
    roundtrip_ok: bool
    image_char_ok: bool
    images_disjoint: bool
    complement_char_ok: Optional[bool]
    excess: int
    problems: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(
            (self.size_ok, self.codomain_ok, self.injective, self.roundtrip_ok,
             self.image_char_ok, self.images_disjoint)
        )


@dataclass(frozen=True)
class _MapSetup:
    domain: PairSpec
    codomain: PairSpec
    T: Callable[[PartitionPair], Optional[PartitionPair]]
    L: Callable[[PartitionPair], PartitionPair]
    preds: tuple
    complement_desc: Optional[Callable[[PartitionPair], bool]]


def _setup(map_id: str, n: int, r: int, ell: Optional[int], amended: bool) -> _MapSetup:
    if map_id == "sec2":
        def desc(y):
            return in_B(y.lam, n, y.a, y.b, amended=amended)

        return _MapSetup(sec2_domain(), sec2_codomain(), map_T_sec2, map_L_sec2, sec2_image_preds(), desc)
    if map_id == "lr":
        if ell is None:
            raise ValueError("map 'lr' needs ell")
        res = ResidueSpec.from_residues(r, [ell])
        exclude = ell == 2 and n >= 24
        desc_spec = pairs_residue(res, exclude_9751=exclude)
        return _MapSetup(
            lr_domain(r, ell), lr_codomain(r, ell),
            lambda p: map_T_lr(p, r, ell, n), lambda p: map_L_lr(p, r, ell, n),
            lr_image_preds(n), lambda y: desc_spec.contains(y, n),
        )
    if map_id == "lr_ex1":
        desc_spec = pairs_residue(
            ResidueSpec.from_residues(r, range(1, 2 * r + 1)), nonempty_on_4k_single=True
        )
        return _MapSetup(
            ex1_domain(), ex1_codomain(), map_T_ex1, map_L_ex1,
            lr_image_preds(n, ex1=True), lambda y: desc_spec.contains(y, n),
        )
    if map_id == "thm62":
        return _MapSetup(
            thm62_domain(r), thm62_codomain(r),
            lambda p: map_T_thm62(p, r), lambda p: map_L_thm62(p, r), thm62_image_preds(r), None,
        )
    if map_id == "thm63":
        return _MapSetup(
            thm63_domain(r), thm63_codomain(r),
            lambda p: map_T_thm63(p, r), lambda p: map_L_thm63(p, r, amended),
            thm63_image_preds(r, amended), None,
        )
    raise ValueError(f"unknown map {map_id!r}; choose from {', '.join(MAP_IDS)}")


def verify_map(
    map_id: str,
    n: int,
    params: Optional[ResidueSpec] = None,
    *,
    ell: Optional[int] = None,
    amended: bool = False,
) -> MapReport:
    """Run ``map_id`` over its domain at size n and check everything checkable.

    ``excess`` is |codomain| - |domain|; the complement has
    ``excess + len(unmapped)`` elements whenever the map is injective.
    """
    if n < 0:
        raise ValueError("n must be non-negative")
    r = params.r if params is not None else 1
    st = _setup(map_id, n, r, ell, amended)
    domain = list(enumerate_pairs(n, st.domain))
    codomain = list(enumerate_pairs(n, st.codomain))
    cod_set = set(codomain)
    problems: list[str] = []

    size_ok = codomain_ok = roundtrip_ok = True
    images: dict[PartitionPair, PartitionPair] = {}
    unmapped: list[PartitionPair] = []
    for x in domain:
        y = st.T(x)
        if y is None:
            unmapped.append(x)
            continue
        if y.size != n:
            size_ok = False
            problems.append(f"size: {x} -> {y}")
        if y not in cod_set:
            codomain_ok = False
            problems.append(f"codomain: {x} -> {y}")
        if y in images:
            problems.append(f"collision: {images[y]} and {x} -> {y}")
        images.setdefault(y, x)
        try:
            back = st.L(y)
        except DomainError as exc:
            back = None
            problems.append(f"inverse undefined: {x} -> {y} ({exc})")
        if back != x:
            roundtrip_ok = False
            if back is not None:
                problems.append(f"L(T(x)) != x: {x} -> {y} -> {back}")
    injective = len(images) == len(domain) - len(unmapped)
    for y in images:
        try:
            if st.T(st.L(y)) != y:
                roundtrip_ok = False
        except DomainError:
            roundtrip_ok = False

    predicted = {y for y in codomain if any(pr(y) for pr in st.preds)}
    image_set = set(images)
    image_char_ok = predicted == image_set
    for y in sorted(predicted - image_set, key=_key)[:5]:
        problems.append(f"predicted image but not hit: {y}")
    for y in sorted(image_set - predicted, key=_key)[:5]:
        problems.append(f"hit but not predicted: {y}")
    disjoint = all(sum(1 for pr in st.preds if pr(y)) <= 1 for y in codomain)

    complement = sorted((y for y in codomain if y not in image_set), key=_key)
    comp_ok = None
    if st.complement_desc is not None:
        described = {y for y in codomain if st.complement_desc(y)}
        comp_ok = described == set(complement)
        for y in sorted(set(complement) - described, key=_key)[:5]:
            problems.append(f"in complement, not described: {y}")
        for y in sorted(described - set(complement), key=_key)[:5]:
            problems.append(f"described, not in complement: {y}")

    return MapReport(
        map_id=map_id, n=n, params={"r": r, "ell": ell, "amended": amended},
        domain_size=len(domain), codomain_size=len(codomain), image_size=len(image_set),
        complement=complement, unmapped=unmapped, size_ok=size_ok, codomain_ok=codomain_ok,
        injective=injective, roundtrip_ok=roundtrip_ok, image_char_ok=image_char_ok,
        images_disjoint=disjoint, complement_char_ok=comp_ok,
        excess=len(codomain) - len(domain), problems=problems,
    )


def _key(y: PartitionPair):
    return (y.a, y.b, tuple(-p for p in y.lam))
