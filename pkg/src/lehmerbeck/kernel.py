"""Compiled enumeration kernel: part profiles of a partition family.

Every excess in this package is a linear function of one table: for each
part size p and each parity class c (parity of the number of "marked" parts),
the total multiplicity of p summed over the family's partitions of n in
class c.  The kernel visits every partition exactly once, in the same
multiplicity-form order as :func:`lehmerbeck.partitions.enumerate_partitions`,
and folds multiplicities into the table on the way back up the tree, so the
per-partition cost is O(1) amortised.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Callable, Optional

import numpy as np
from numba import njit

from .partitions import ConstraintSpec, enumerate_partitions


@njit(cache=True)
def _walk(rem, start, parts, first, capped, marked, par, prof):
    if rem == 0:
        if par == 0:
            return 1, 0
        return 0, 1
    c0 = 0
    c1 = 0
    i0 = first[rem]
    if i0 < start:
        i0 = start
    for i in range(i0, parts.shape[0]):
        p = parts[i]
        kmax = rem // p
        if capped[p] and kmax > 1:
            kmax = 1
        for k in range(kmax, 0, -1):
            npar = par ^ (k & 1) if marked[p] else par
            e, o = _walk(rem - k * p, i + 1, parts, first, capped, marked, npar, prof)
            prof[0, p] += k * e
            prof[1, p] += k * o
            c0 += e
            c1 += o
    return c0, c1


@dataclass(frozen=True)
class PartProfile:
    """Aggregated multiplicities over a family's partitions of n.

    Class 0 holds partitions with an even number of marked parts, class 1 an
    odd number; with no marking everything is in class 0.
    """

    n: int
    counts: tuple[int, int]
    mult: tuple[tuple[int, ...], tuple[int, ...]]

    def count(self, cls: Optional[int] = None) -> int:
        return sum(self.counts) if cls is None else self.counts[cls]

    def parts(self, cls: Optional[int] = None, where: Optional[Callable[[int], bool]] = None) -> int:
        """Total number of parts (optionally only sizes satisfying ``where``)."""
        rows = self.mult if cls is None else (self.mult[cls],)
        return sum(
            m for row in rows for p, m in enumerate(row) if m and (where is None or where(p))
        )


@lru_cache(maxsize=None)
def part_profile(n: int, family: ConstraintSpec, mark_modulus: Optional[int] = None) -> PartProfile:
    """Profile of ``family``'s partitions of n, split by the parity of the
    number of parts divisible by ``mark_modulus``.

    A family with a built-in parity condition contributes its base family and
    its own marking; pick the class with ``family.parity``.
    """
    if n < 0:
        raise ValueError("n must be non-negative")
    if family.extra is not None:
        raise ValueError("predicate hooks are not supported by the compiled kernel")
    if family.mark_modulus is not None:
        if mark_modulus not in (None, family.mark_modulus):
            raise ValueError("conflicting marking")
        mark_modulus = family.mark_modulus
        family = family.base()
    allowed = np.array([p for p in range(n, 0, -1) if family.allows(p)], dtype=np.int64)
    capped = np.array([p > 0 and family.capped(p) for p in range(n + 1)], dtype=np.bool_)
    if mark_modulus is None:
        marked = np.zeros(n + 1, dtype=np.bool_)
    else:
        marked = np.array([p > 0 and p % mark_modulus == 0 for p in range(n + 1)], dtype=np.bool_)
    # first[v]: index of the first allowed part <= v
    first = np.searchsorted(-allowed, -np.arange(n + 1), side="left").astype(np.int64)
    prof = np.zeros((2, n + 1), dtype=np.int64)
    c0, c1 = _walk(n, 0, allowed, first, capped, marked, 0, prof)
    return PartProfile(
        n, (int(c0), int(c1)), (tuple(int(x) for x in prof[0]), tuple(int(x) for x in prof[1]))
    )


def naive_profile(n: int, family: ConstraintSpec, mark_modulus: Optional[int] = None) -> PartProfile:
    """Same table built from the Python generator (reference for tests)."""
    if family.mark_modulus is not None:
        mark_modulus = family.mark_modulus
        family = family.base()
    counts = [0, 0]
    mult = [[0] * (n + 1), [0] * (n + 1)]
    for lam in enumerate_partitions(n, family):
        c = 0 if mark_modulus is None else sum(1 for p in lam if p % mark_modulus == 0) % 2
        counts[c] += 1
        for p in lam:
            mult[c][p] += 1
    return PartProfile(n, (counts[0], counts[1]), (tuple(mult[0]), tuple(mult[1])))
