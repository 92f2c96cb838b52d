"""Shared fixtures: grids of canonical links and hypothesis strategies
for raw (possibly non-canonical) parameter tuples."""

from __future__ import annotations

import math
from itertools import product

import pytest
from hypothesis import strategies as st

from seifertlinks import (
    HopfSum,
    OneCore,
    TwoCore,
    UnknotInput,
    ZeroCore,
    normalize,
)


def raw_core_links(max_pq: int, max_k: int):
    """Every valid raw core presentation with parameters in the box."""
    links = []
    for p, q in product(range(1, max_pq + 1), repeat=2):
        if math.gcd(p, q) != 1:
            continue
        for k in range(1, max_k + 1):
            for w in range(k % 2, k + 1, 2):
                for candidate in (
                    ZeroCore(p, q, k, w),
                    OneCore(p, q, k, w, 1),
                    OneCore(p, q, k, w, -1),
                    TwoCore(p, q, k, w, 1, 1),
                    TwoCore(p, q, k, w, 1, -1),
                    TwoCore(p, q, k, w, -1, 1),
                    TwoCore(p, q, k, w, -1, -1),
                ):
                    if isinstance(candidate, TwoCore) and min(p, q) < 2:
                        continue
                    if (
                        isinstance(candidate, ZeroCore)
                        and k == 1
                        and min(p, q) == 1
                    ):
                        continue
                    links.append(candidate)
    return links


def canonical_grid(max_pq: int = 7, max_k: int = 6):
    """Deduplicated canonical links from the raw grid, plus small Hopf
    sums."""
    seen = {}
    for raw in raw_core_links(max_pq, max_k):
        try:
            link = normalize(raw)
        except UnknotInput:
            continue
        seen[link] = True
    for plus in range(0, 4):
        for minus in range(0, 4):
            if plus + minus >= 1:
                seen[normalize(HopfSum(plus, minus))] = True
    return list(seen)


@pytest.fixture(scope="session")
def grid():
    return canonical_grid()


@pytest.fixture(scope="session")
def small_grid():
    return canonical_grid(max_pq=5, max_k=4)


def _coprime_pairs(limit: int) -> list[tuple[int, int]]:
    return [
        (p, q)
        for p in range(1, limit + 1)
        for q in range(1, limit + 1)
        if math.gcd(p, q) == 1
    ]


@st.composite
def raw_links(draw) -> object:
    """Valid raw links, including non-canonical presentations (negative
    w, swapped multiplicities, unit cores)."""
    shape = draw(st.sampled_from(["hopf", "zero", "one", "two"]))
    if shape == "hopf":
        plus = draw(st.integers(min_value=0, max_value=4))
        low = 1 if plus == 0 else 0
        minus = draw(st.integers(min_value=low, max_value=4))
        return HopfSum(plus, minus)
    p, q = draw(st.sampled_from(_coprime_pairs(9)))
    k = draw(st.integers(min_value=1, max_value=7))
    magnitude = draw(st.integers(min_value=0, max_value=k))
    w = draw(st.sampled_from([magnitude, -magnitude]))
    if (k - abs(w)) % 2 != 0:
        w = w - 1 if w > 0 else w + 1
    if shape == "zero":
        if k == 1 and min(p, q) == 1:
            k = 2
            w = draw(st.sampled_from([0, 2, -2]))
        return ZeroCore(p, q, k, w)
    sign = draw(st.sampled_from([1, -1]))
    if shape == "one":
        return OneCore(p, q, k, w, sign)
    if min(p, q) < 2:
        p, q = 2, 3
    sign2 = draw(st.sampled_from([1, -1]))
    return TwoCore(p, q, k, w, sign, sign2)
