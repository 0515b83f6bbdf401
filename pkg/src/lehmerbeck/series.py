"""Exact truncated q-series with first-order z-jets at z = 1.

Every generating function here is a finite product of factors
(1 + s z^e q^m)^(+-1) with e in {0, 1}.  Only F(1; q) and dF/dz(1; q) are
ever needed, so a :class:`ZJet` carries exactly those two series and
multiplies by the product rule.  Factors with m > N are the identity modulo
q^(N+1) and are skipped.

Each derivative difference is produced twice, once by jet arithmetic and
once from the simplified closed form (q-Pochhammer products times
Lambert-type sums), and the two must agree coefficient for coefficient.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from typing import Iterable, Iterator, Optional, Union

from .ids import TheoremId
from .partitions import ResidueSpec

DEFAULT_ORDER = int(os.environ.get("LEHMERBECK_N", "200"))


class SeriesMismatch(AssertionError):
    """Two independent routes to the same series disagreed."""


class TruncatedSeries:
    """c_0 + c_1 q + ... + c_N q^N with exact integer coefficients."""

    __slots__ = ("_c",)

    def __init__(self, coeffs: Iterable[int], order: Optional[int] = None):
        c = [int(x) for x in coeffs]
        if order is not None:
            if order < 0:
                raise ValueError("order must be non-negative")
            c = c[: order + 1] + [0] * (order + 1 - len(c))
        if not c:
            raise ValueError("a series needs at least the constant coefficient")
        self._c = tuple(c)

    @classmethod
    def zero(cls, N: int) -> "TruncatedSeries":
        return cls((), N)

    @classmethod
    def one(cls, N: int) -> "TruncatedSeries":
        return cls((1,), N)

    @classmethod
    def monomial(cls, m: int, N: int, c: int = 1) -> "TruncatedSeries":
        out = [0] * (N + 1)
        if m <= N:
            out[m] = c
        return cls(out)

    @property
    def order(self) -> int:
        return len(self._c) - 1

    @property
    def coeffs(self) -> tuple[int, ...]:
        return self._c

    def coefficient(self, n: int) -> int:
        if n < 0 or n > self.order:
            raise ValueError(f"coefficient {n} outside 0..{self.order}")
        return self._c[n]

    def __getitem__(self, n: int) -> int:
        return self.coefficient(n)

    def __iter__(self) -> Iterator[int]:
        return iter(self._c)

    def __len__(self) -> int:
        return len(self._c)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, TruncatedSeries):
            return self._c == other._c
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self._c)

    def __repr__(self) -> str:
        terms = [f"{c}*q^{i}" for i, c in enumerate(self._c) if c]
        return f"TruncatedSeries({' + '.join(terms) or '0'}, N={self.order})"

    def truncate(self, N: int) -> "TruncatedSeries":
        return TruncatedSeries(self._c, N)

    def __add__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        N = min(self.order, other.order)
        return TruncatedSeries(x + y for x, y in zip(self._c[: N + 1], other._c[: N + 1]))

    def __neg__(self) -> "TruncatedSeries":
        return TruncatedSeries(-x for x in self._c)

    def __sub__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        return self + (-other)

    def __mul__(self, other: Union["TruncatedSeries", int]) -> "TruncatedSeries":
        if isinstance(other, int):
            return TruncatedSeries(other * x for x in self._c)
        N = min(self.order, other.order)
        a, b = self._c, other._c
        out = [0] * (N + 1)
        for i in range(N + 1):
            x = a[i]
            if x:
                for j in range(N + 1 - i):
                    y = b[j]
                    if y:
                        out[i + j] += x * y
        return TruncatedSeries(out)

    __rmul__ = __mul__

    def inverse(self) -> "TruncatedSeries":
        c0 = self._c[0]
        if c0 not in (1, -1):
            raise ValueError(f"constant term {c0} is not a unit")
        N = self.order
        a = self._c
        inv = [0] * (N + 1)
        inv[0] = c0
        for n in range(1, N + 1):
            s = 0
            for k in range(1, n + 1):
                if a[k]:
                    s += a[k] * inv[n - k]
            inv[n] = -s * c0
        return TruncatedSeries(inv)

    def shift(self, m: int) -> "TruncatedSeries":
        """Multiply by q^m (m >= 0), keeping the order."""
        return TruncatedSeries(((0,) * m + self._c)[: self.order + 1])

    def times_binomial(self, m: int, s: int) -> "TruncatedSeries":
        """Multiply by (1 + s q^m), m >= 1, in O(N)."""
        return TruncatedSeries(_times_binomial(list(self._c), m, s))

    def over_binomial(self, m: int, s: int) -> "TruncatedSeries":
        """Divide by (1 + s q^m), m >= 1, in O(N)."""
        return TruncatedSeries(_over_binomial(list(self._c), m, s))

    def is_nonnegative(self) -> bool:
        return all(x >= 0 for x in self._c)

    def negative_indices(self) -> list[int]:
        return [i for i, x in enumerate(self._c) if x < 0]


def _times_binomial(c: list[int], m: int, s: int) -> list[int]:
    out = c[:]
    for n in range(m, len(c)):
        out[n] += s * c[n - m]
    return out


def _over_binomial(c: list[int], m: int, s: int) -> list[int]:
    out = c[:]
    for n in range(m, len(c)):
        out[n] -= s * out[n - m]
    return out


def series_add(a: TruncatedSeries, b: TruncatedSeries) -> TruncatedSeries:
    return a + b


def series_mul(a: TruncatedSeries, b: TruncatedSeries) -> TruncatedSeries:
    return a * b


def series_neg(a: TruncatedSeries) -> TruncatedSeries:
    return -a


def series_inverse(a: TruncatedSeries) -> TruncatedSeries:
    return a.inverse()


def coefficient(s: TruncatedSeries, n: int) -> int:
    return s.coefficient(n)


def pochhammer_inf(sign: int, offset: int, step: int, N: int) -> TruncatedSeries:
    """prod_{k>=0} (1 - sign * q^(offset + k*step)) truncated at q^N."""
    if sign not in (1, -1):
        raise ValueError("sign must be +1 or -1")
    if offset < 1 or step < 1:
        raise ValueError("offset and step must be positive")
    c = [1] + [0] * N
    for m in range(offset, N + 1, step):
        c = _times_binomial(c, m, -sign)
    return TruncatedSeries(c)


def lambert_sum(offset: int, modulus: int, denom_sign: int, denom_scale: int, N: int) -> TruncatedSeries:
    """sum_{k>=0} q^(m_k) / (1 - denom_sign * q^(denom_scale * m_k)), m_k = offset + k*modulus."""
    if min(offset, modulus, denom_scale) < 1 or denom_sign not in (1, -1):
        raise ValueError("bad Lambert-sum parameters")
    c = [0] * (N + 1)
    for m in range(offset, N + 1, modulus):
        step = denom_scale * m
        w = 1
        for e in range(m, N + 1, step):
            c[e] += w
            w *= denom_sign
    return TruncatedSeries(c)


def rectangle_series(a_mod: int, a_res: int, b_parity: int, N: int) -> TruncatedSeries:
    """sum of q^(ab) over a = a_res (mod a_mod), a >= 1, and b >= 1 of the given parity."""
    c = [0] * (N + 1)
    for a in range(1, N + 1):
        if a % a_mod != a_res % a_mod:
            continue
        for b in range(1, N // a + 1):
            if b % 2 == b_parity:
                c[a * b] += 1
    return TruncatedSeries(c)


# --- jets -------------------------------------------------------------------


@dataclass(frozen=True)
class ZJet:
    """F(z; q) = value + (z - 1) * deriv + O((z - 1)^2)."""

    value: TruncatedSeries
    deriv: TruncatedSeries

    @classmethod
    def constant(cls, s: TruncatedSeries) -> "ZJet":
        return cls(s, TruncatedSeries.zero(s.order))

    @classmethod
    def one(cls, N: int) -> "ZJet":
        return cls.constant(TruncatedSeries.one(N))

    @property
    def order(self) -> int:
        return min(self.value.order, self.deriv.order)

    def __add__(self, other: "ZJet") -> "ZJet":
        return ZJet(self.value + other.value, self.deriv + other.deriv)

    def __neg__(self) -> "ZJet":
        return ZJet(-self.value, -self.deriv)

    def __sub__(self, other: "ZJet") -> "ZJet":
        return self + (-other)

    def __mul__(self, other: "ZJet") -> "ZJet":
        return ZJet(self.value * other.value, self.value * other.deriv + self.deriv * other.value)

    def inverse(self) -> "ZJet":
        inv = self.value.inverse()
        return ZJet(inv, -(self.deriv * inv * inv))

    def times_factor(self, m: int, s: int, marked: bool) -> "ZJet":
        """Multiply by (1 + s z q^m) if marked, else by (1 + s q^m)."""
        v, d = list(self.value.coeffs), list(self.deriv.coeffs)
        nv = _times_binomial(v, m, s)
        nd = _times_binomial(d, m, s)
        if marked:
            for n in range(m, len(nd)):
                nd[n] += s * v[n - m]
        return ZJet(TruncatedSeries(nv), TruncatedSeries(nd))

    def over_factor(self, m: int, s: int, marked: bool) -> "ZJet":
        """Divide by (1 + s z q^m) if marked, else by (1 + s q^m)."""
        v, d = list(self.value.coeffs), list(self.deriv.coeffs)
        nv = _over_binomial(v, m, s)
        if marked:
            for n in range(m, len(d)):
                d[n] -= s * nv[n - m]
        nd = _over_binomial(d, m, s)
        return ZJet(TruncatedSeries(nv), TruncatedSeries(nd))


@dataclass(frozen=True)
class JetFactor:
    """(1 + s [z] q^m) ** power."""

    m: int
    s: int
    marked: bool
    power: int


def _poch(c: int, marked: bool, offset: int, step: int, power: int, N: int) -> list[JetFactor]:
    # (c [z] q^offset; q^step)_inf ** power
    return [JetFactor(m, -c, marked, power) for m in range(offset, N + 1, step)]


GEN_NAMES = (
    "F", "E", "Qo", "Fr", "Rr", "Er", "Qr", "ErL", "FrL", "QrL", "EtildeRL", "QtildeRO",
    "Fodd", "Podd", "Pdist", "P", "PL",
)


@dataclass(frozen=True)
class GenSpec:
    """A named z-marked generating function plus its residue parameters."""

    name: str
    params: Optional[ResidueSpec] = None

    def __post_init__(self) -> None:
        if self.name not in GEN_NAMES:
            raise ValueError(f"unknown generating function {self.name!r}")
        needs = self.name in ("Fr", "Rr", "Er", "Qr", "ErL", "FrL", "QrL", "EtildeRL", "QtildeRO", "PL")
        if needs and self.params is None:
            raise ValueError(f"{self.name} needs residue parameters")
        if not needs and self.params is not None:
            raise ValueError(f"{self.name} takes no residue parameters")
        if self.name in ("ErL", "FrL", "QrL", "PL"):
            self.params.require_L()

    def factors(self, N: int) -> list[JetFactor]:
        name, p = self.name, self.params
        r = p.r if p else 1
        m = 2 * r
        out: list[JetFactor] = []
        if name == "F":
            out += _poch(1, True, 1, 2, -1, N) + _poch(-1, True, 2, 2, -1, N)
        elif name == "E":
            out += _poch(1, False, 1, 2, -1, N) + _poch(-1, True, 2, 2, -1, N)
        elif name == "Qo":
            out += _poch(-1, True, 1, 2, 1, N)
        elif name == "Fodd":
            out += _poch(1, True, 1, 2, -1, N) + _poch(-1, False, 2, 2, -1, N)
        elif name == "Podd":
            out += _poch(1, True, 1, 2, -1, N)
        elif name == "Pdist":
            out += _poch(-1, True, 1, 1, 1, N)
        elif name == "P":
            out += _poch(1, False, 1, 1, -1, N)
        elif name in ("Fr", "Er"):
            for j in range(1, m):
                out += _poch(1, name == "Fr", j, m, -1, N)
            out += _poch(-1, True, m, m, -1, N)
        elif name in ("Rr", "Qr"):
            out += _poch(-1, True, r, m, 1, N)
            for j in range(1, r):
                out += _poch(1, name == "Rr", j, r, -1, N)
        elif name in ("ErL", "FrL"):
            out += _poch(1, name == "FrL", 1, 2, -1, N)
            for ell in sorted(p.L):
                out += _poch(-1, True, ell, m, -1, N)
        elif name == "PL":
            out += _poch(1, False, 1, 2, -1, N)
            for ell in sorted(p.L):
                out += _poch(1, True, ell, m, -1, N)
        elif name == "QrL":
            for j in range(1, m + 1):
                if j not in p.L:
                    out += _poch(-1, True, j, m, 1, N)
        elif name == "EtildeRL":
            out += _poch(1, False, 1, 2, -1, N)
            for j in sorted(p.L_complement):
                out += _poch(-1, False, j, m, -1, N)
            for ell in sorted(p.L):
                out += _poch(-1, True, ell, m, -1, N)
        elif name == "QtildeRO":
            for j in sorted(p.O_complement):
                out += _poch(-1, False, j, m, 1, N)
            for ell in sorted(p.O):
                out += _poch(-1, True, ell, m, 1, N)
        return out


def build_generating_jet(spec: GenSpec, N: int = DEFAULT_ORDER) -> ZJet:
    """Jet (F(1;q), dF/dz(1;q)) of the named generating function, to order N."""
    jet = ZJet.one(N)
    for f in spec.factors(N):
        if f.power == 1:
            jet = jet.times_factor(f.m, f.s, f.marked)
        else:
            jet = jet.over_factor(f.m, f.s, f.marked)
    return jet


# --- closed forms -------------------------------------------------------------


def _odd_distinct(N: int) -> TruncatedSeries:
    return pochhammer_inf(-1, 1, 2, N)


def _R_at_one(r: int, N: int) -> TruncatedSeries:
    # (-q^r; q^2r) / prod_{j<r} (q^j; q^r)
    s = pochhammer_inf(-1, r, 2 * r, N)
    for j in range(1, r):
        s = s * pochhammer_inf(1, j, r, N).inverse()
    return s


def residue_term(ell: int, r: int, N: int) -> TruncatedSeries:
    """(-q;q^2)_inf * sum_k q^(2kr+ell) / (1 + q^(2kr+ell))."""
    return _odd_distinct(N) * lambert_sum(ell, 2 * r, -1, 1, N)


def residue_term_split(ell: int, r: int, N: int) -> TruncatedSeries:
    """The same series as the difference of a b-odd and a b-even rectangle sum."""
    qo = _odd_distinct(N)
    return qo * (lambert_sum(ell, 2 * r, 1, 2, N) - lambert_sum(2 * ell, 4 * r, 1, 1, N))


def residue_term_odd_product(ell: int, r: int, N: int) -> TruncatedSeries:
    """For odd ell: sum_k q^a prod over odd parts != a of (1 + q^part), a = 2kr + ell."""
    if ell % 2 == 0:
        raise ValueError("product form needs odd ell")
    total = TruncatedSeries.zero(N)
    for a in range(ell, N + 1, 2 * r):
        c = [0] * (N + 1)
        c[a] = 1
        for part in range(1, N + 1, 2):
            if part != a:
                c = _times_binomial(c, part, 1)
        total = total + TruncatedSeries(c)
    return total


def odd_distinct_sum_form(N: int) -> TruncatedSeries:
    """sum_{n>=0} q^(n^2) / (q^2; q^2)_n."""
    total = TruncatedSeries.zero(N)
    n = 0
    while n * n <= N:
        c = [0] * (N + 1)
        c[n * n] = 1
        for j in range(1, n + 1):
            c = _over_binomial(c, 2 * j, -1)
        total = total + TruncatedSeries(c)
        n += 1
    return total


def gap_two_series(N: int) -> TruncatedSeries:
    """sum_{n>=0} q^((n+1)^2) / (q^4; q^2)_n."""
    total = TruncatedSeries.zero(N)
    n = 0
    while (n + 1) ** 2 <= N:
        c = [0] * (N + 1)
        c[(n + 1) ** 2] = 1
        for j in range(2, n + 2):
            c = _over_binomial(c, 2 * j, -1)
        total = total + TruncatedSeries(c)
        n += 1
    return total


def j2exp(N: int) -> TruncatedSeries:
    """(-q; q^2)_inf (1 - q^2)."""
    return _odd_distinct(N).times_binomial(2, -1)


def j2exp2(N: int) -> TruncatedSeries:
    """q^2 / (1 - q^4)."""
    return TruncatedSeries.monomial(2, N).over_binomial(4, -1)


def j2exp3(N: int) -> TruncatedSeries:
    return j2exp(N) * j2exp2(N)


DERIVATIVE_THEOREMS = (
    TheoremId.T1_2, TheoremId.T1_4, TheoremId.T1_7, TheoremId.T1_8, TheoremId.T1_10,
    TheoremId.T1_11, TheoremId.T1_12, TheoremId.EX1, TheoremId.EX2, TheoremId.EX3,
    TheoremId.COR5_2, TheoremId.COR5_3, TheoremId.T6_2, TheoremId.T6_3, TheoremId.BECK_PAIRS,
)


def residues_for(thm: TheoremId, params: Optional[ResidueSpec]) -> ResidueSpec:
    """The residue configuration a residue-class statement actually uses."""
    r = params.r if params else 1
    if thm is TheoremId.EX1:
        return ResidueSpec.from_residues(r, range(1, 2 * r + 1))
    if thm is TheoremId.EX2:
        return ResidueSpec.from_residues(r, {r, 2 * r})
    if thm is TheoremId.EX3:
        return ResidueSpec.from_residues(r, {1, 2 * r})
    if thm is TheoremId.COR5_2:
        return ResidueSpec(1, {2})
    if params is None:
        raise ValueError(f"{thm} needs residue parameters")
    return params


def _jet_route(thm: TheoremId, p: Optional[ResidueSpec], N: int) -> Optional[TruncatedSeries]:
    def d(name: str, params: Optional[ResidueSpec] = None) -> TruncatedSeries:
        return build_generating_jet(GenSpec(name, params), N).deriv

    r1 = ResidueSpec(p.r) if p else None
    if thm is TheoremId.BECK_PAIRS:
        return d("Podd") - d("Pdist")
    if thm is TheoremId.T1_2:
        return d("F") - d("Qo")
    if thm is TheoremId.T1_4:
        return d("Qo") - d("E")
    if thm is TheoremId.T1_7:
        return d("Fr", r1) - d("Rr", r1)
    if thm is TheoremId.T1_8:
        return d("Qr", r1) - d("Er", r1)
    if thm is TheoremId.T1_10:
        return d("FrL", p) - d("QrL", p)
    if thm is TheoremId.T1_11:
        return d("QrL", p) - d("ErL", p)
    if thm in (TheoremId.T1_12, TheoremId.EX1, TheoremId.EX2, TheoremId.EX3, TheoremId.COR5_2):
        res = residues_for(thm, p)
        return d("QtildeRO", res) - d("EtildeRL", res)
    if thm is TheoremId.COR5_3:
        return d("Fodd") - d("Qo")
    return None


def _closed_route(thm: TheoremId, p: Optional[ResidueSpec], N: int) -> TruncatedSeries:
    qo = _odd_distinct(N)
    r = p.r if p else 1
    if thm is TheoremId.BECK_PAIRS:
        return pochhammer_inf(1, 1, 2, N).inverse() * lambert_sum(2, 2, 1, 1, N)
    if thm is TheoremId.T1_2:
        return qo * lambert_sum(2, 2, 1, 1, N)
    if thm is TheoremId.T1_4:
        return qo * lambert_sum(1, 1, -1, 1, N)
    if thm is TheoremId.T1_7:
        return _R_at_one(r, N) * lambert_sum(2 * r, 2 * r, 1, 1, N)
    if thm is TheoremId.T1_8:
        return _R_at_one(r, N) * lambert_sum(r, r, -1, 1, N)
    if thm is TheoremId.T1_10:
        qL = TruncatedSeries.one(N)
        for j in range(1, 2 * r + 1):
            if j not in p.L:
                qL = qL * pochhammer_inf(-1, j, 2 * r, N)
        return qL * lambert_sum(2, 2, 1, 1, N)
    if thm is TheoremId.T1_11:
        s = qo
        for j in range(2, 2 * r + 1, 2):
            if j not in p.L:
                s = s * pochhammer_inf(-1, j, 2 * r, N)
        return s * lambert_sum(1, 1, -1, 1, N)
    if thm is TheoremId.EX1:
        return qo * lambert_sum(1, 1, -1, 1, N)
    if thm is TheoremId.EX2:
        return qo * lambert_sum(r, r, -1, 1, N)
    if thm is TheoremId.EX3:
        return qo * (lambert_sum(1, 2 * r, -1, 1, N) + lambert_sum(2 * r, 2 * r, -1, 1, N))
    if thm in (TheoremId.T1_12, TheoremId.COR5_2):
        res = residues_for(thm, p)
        total = TruncatedSeries.zero(N)
        for ell in res.residues:
            total = total + lambert_sum(ell, 2 * res.r, -1, 1, N)
        return qo * total
    if thm is TheoremId.COR5_3:
        return _closed_route(TheoremId.T1_2, None, N) + _closed_route(TheoremId.COR5_2, None, N)
    if thm is TheoremId.T6_2:
        return qo * (lambert_sum(2, 4 * r, 1, 1, N) - lambert_sum(2 * r, 2 * r, 1, 2, N))
    if thm is TheoremId.T6_3:
        return qo * (lambert_sum(1, 2 * r, 1, 2, N) - lambert_sum(4 * r, 4 * r, 1, 1, N))
    raise ValueError(f"no derivative difference for {thm}")


def _rectangle_route(thm: TheoremId, r: int, N: int) -> TruncatedSeries:
    qo = _odd_distinct(N)
    m = 2 * r
    if thm is TheoremId.T6_2:
        return qo * (rectangle_series(m, 1, 0, N) - rectangle_series(m, 0, 1, N))
    return qo * (rectangle_series(m, 1, 1, N) - rectangle_series(m, 0, 0, N))


def derivative_difference(
    thm: Union[TheoremId, str], params: Optional[ResidueSpec] = None, N: int = DEFAULT_ORDER
) -> TruncatedSeries:
    """The generating series of the excess in ``thm``, checked two ways.

    For T6_2/T6_3 the second route counts the rectangle sets directly rather
    than differentiating a jet.  T6_2 is oriented so that its series is
    non-negative; with that sign, ex3 = t6_3 - t6_2.
    """
    thm = TheoremId.parse(thm) if isinstance(thm, str) else thm
    if thm not in DERIVATIVE_THEOREMS:
        raise ValueError(f"no derivative difference for {thm}")
    if thm in (TheoremId.T1_10, TheoremId.T1_11):
        if params is None:
            raise ValueError(f"{thm} needs r and L")
        params.require_L()
    if thm is TheoremId.T1_12:
        if params is None:
            raise ValueError("t1_12 needs r and a residue set")
        params.require_residues()
    if thm in (TheoremId.T1_7, TheoremId.T1_8, TheoremId.T6_2, TheoremId.T6_3) and params is None:
        params = ResidueSpec(1)
    closed = _closed_route(thm, params, N)
    if thm in (TheoremId.T6_2, TheoremId.T6_3):
        other = _rectangle_route(thm, params.r, N)
    else:
        other = _jet_route(thm, params, N)
    if other != closed:
        bad = next(i for i, (x, y) in enumerate(zip(other, closed)) if x != y)
        raise SeriesMismatch(f"{thm}: routes disagree first at q^{bad}: {other[bad]} vs {closed[bad]}")
    return closed


def lehmer_value_series(name: str, params: Optional[ResidueSpec], N: int) -> TruncatedSeries:
    """Generating series of the 'even' count p_e in the Lehmer-type identities:
    (all-family series + signed series) / 2."""
    if name == "lehmer":
        total = pochhammer_inf(1, 1, 1, N).inverse()
        signed = build_generating_jet(GenSpec("F"), N).value
    elif name == "t1_6":
        total = pochhammer_inf(1, 1, 1, N).inverse()
        signed = build_generating_jet(GenSpec("Fr", ResidueSpec(params.r)), N).value
    elif name == "t1_9":
        total = build_generating_jet(GenSpec("PL", params), N).value
        signed = build_generating_jet(GenSpec("ErL", params), N).value
    else:
        raise ValueError(name)
    both = total + signed
    if any(c % 2 for c in both):
        raise SeriesMismatch(f"{name}: p + (p_e - p_o) has an odd coefficient")
    return TruncatedSeries(c // 2 for c in both)


NAMED_SERIES = {
    "qo": _odd_distinct,
    "j2exp": j2exp,
    "j2exp2": j2exp2,
    "j2exp3": j2exp3,
    "partitions": lambda N: pochhammer_inf(1, 1, 1, N).inverse(),
    "gap2": gap_two_series,
}
