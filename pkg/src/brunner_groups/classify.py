"""Isomorphism and mutual-epimorphism decisions for ``G(l, m; k)``.

:func:`classify_pair` answers for two presentations with ``|l| > m > 0``
and ``k > 0``.  Groups with different ``(l, m)`` are never images of each
other.  For a shared ``(l, m)`` the groups are isomorphic exactly when

* ``k1 == k2`` (condition ``C2_1``), or
* ``m > 1``, ``gcd(l, m)`` divides both k's and ``k1/k2 = ±(l/m)^p`` with
  ``p != 0`` (``C2_2``), or
* ``m == 1`` and ``k1/k2`` is an l-number (``C2_3``);

and they are images of each other without being isomorphic exactly when
``m > 1``, ``l = m s`` with ``gcd(m, s) = 1``, ``m`` divides both k's and
``k1/k2`` is an s-number that is no power of ``±s``.
"""

from __future__ import annotations

import csv
import enum
import io
import json
import math
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction

from .arith import is_n_number_ratio, is_prime, power_ratio_exponent
from .brunner import GPresentation
from .errors import DomainError

__all__ = [
    "Tag",
    "Condition",
    "Verdict",
    "classify_pair",
    "classify_advisory",
    "is_residually_finite",
    "is_non_hopfian",
    "is_residually_p",
    "CensusRow",
    "Census",
    "census",
]

WORKERS_ENV = "BRUNNER_WORKERS"


class Tag(str, enum.Enum):
    ISOMORPHIC = "Isomorphic"
    MUTUAL_EPI_NOT_ISO = "MutualEpiNotIso"
    DISTINCT = "Distinct"
    OPEN = "Open"


class Condition(str, enum.Enum):
    C2_1 = "C2_1"
    C2_2 = "C2_2"
    C2_3 = "C2_3"


@dataclass(frozen=True)
class Verdict:
    tag: Tag
    condition: Condition | None = None
    reason: str = ""

    def __post_init__(self):
        if (self.condition is not None) != (self.tag is Tag.ISOMORPHIC):
            raise ValueError("a condition is attached exactly to Isomorphic verdicts")

    def __str__(self):
        label = self.tag.value
        if self.condition is not None:
            label += f"({self.condition.value})"
        return f"{label}: {self.reason}" if self.reason else label

    def to_record(self) -> dict:
        return {
            "verdict": self.tag.value,
            "condition": self.condition.value if self.condition else None,
            "reason": self.reason,
        }


def _require_canonical(p: GPresentation):
    if not isinstance(p, GPresentation):
        raise DomainError(f"expected a GPresentation, got {p!r}")
    if p.k <= 0:
        raise DomainError(f"{p} has k <= 0; normalize the sign of k first")


def classify_pair(p1: GPresentation, p2: GPresentation) -> Verdict:
    _require_canonical(p1)
    _require_canonical(p2)
    if (p1.l, p1.m) != (p2.l, p2.m):
        return Verdict(
            Tag.DISTINCT,
            reason=f"(l,m) differ: ({p1.l},{p1.m}) vs ({p2.l},{p2.m}); mutual images share (l,m)",
        )
    l, m, k1, k2 = p1.l, p1.m, p1.k, p2.k
    if k1 == k2:
        return Verdict(Tag.ISOMORPHIC, Condition.C2_1, f"k1 = k2 = {k1}")

    ratio = Fraction(k1, k2)
    d = math.gcd(l, m)
    if m > 1:
        if k1 % d == 0 and k2 % d == 0:
            found = power_ratio_exponent(ratio, Fraction(l, m))
            if found is not None:
                eps, p = found
                sign = "+" if eps > 0 else "-"
                return Verdict(
                    Tag.ISOMORPHIC,
                    Condition.C2_2,
                    f"m={m} > 1, gcd(l,m)={d} divides k1 and k2, "
                    f"k1/k2 = {ratio} = {sign}({Fraction(l, m)})^{p}",
                )
            power_note = f"k1/k2 = {ratio} is no power of ±{Fraction(l, m)}"
        else:
            power_note = f"gcd(l,m)={d} does not divide both k1={k1} and k2={k2}"
    else:
        if is_n_number_ratio(ratio, l):
            return Verdict(
                Tag.ISOMORPHIC, Condition.C2_3, f"m = 1 and k1/k2 = {ratio} is an n-number for n={l}"
            )
        return Verdict(
            Tag.DISTINCT, reason=f"m = 1 and k1/k2 = {ratio} is not an n-number for n={l}"
        )

    # m > 1 and not isomorphic: test for mutual epimorphisms
    if l % m:
        return Verdict(Tag.DISTINCT, reason=f"{power_note}; m={m} does not divide l={l}")
    s = l // m
    if k1 % m or k2 % m:
        return Verdict(Tag.DISTINCT, reason=f"{power_note}; m={m} does not divide both k1 and k2")
    if math.gcd(s, m) != 1:
        return Verdict(Tag.DISTINCT, reason=f"{power_note}; s={s} and m={m} are not coprime")
    if not is_n_number_ratio(ratio, s):
        return Verdict(Tag.DISTINCT, reason=f"{power_note}; k1/k2 = {ratio} is not an n-number for n={s}")
    return Verdict(
        Tag.MUTUAL_EPI_NOT_ISO,
        reason=f"m={m} divides l, k1, k2; s={s} coprime to m; "
        f"k1/k2 = {ratio} is an n-number for n={s} but no power of ±{s}",
    )


def classify_advisory(t1: tuple[int, int, int], t2: tuple[int, int, int]) -> Verdict:
    """Like :func:`classify_pair` but also accepts ``|l| = m``.

    Where the boundary case is not settled the answer is ``Open``.
    """
    for l, m, k in (t1, t2):
        if not (abs(l) >= m > 0 and k > 0):
            raise DomainError(f"needs |l| >= m > 0 and k > 0, got ({l},{m},{k})")
    strict1, strict2 = abs(t1[0]) > t1[1], abs(t2[0]) > t2[1]
    if strict1 and strict2:
        return classify_pair(GPresentation(*t1), GPresentation(*t2))
    if strict1 or strict2:
        return Verdict(
            Tag.DISTINCT,
            reason="exactly one group has |l| = m; mutual images would need equal (l,m)",
        )
    if tuple(t1) == tuple(t2):
        return Verdict(Tag.ISOMORPHIC, Condition.C2_1, "identical parameters")
    tors1, tors2 = abs(t1[0] - t1[1]), abs(t2[0] - t2[1])
    if tors1 != tors2:
        return Verdict(Tag.DISTINCT, reason=f"abelianization torsion differs: {tors1} vs {tors2}")
    if (t1[0], t1[1]) != (t2[0], t2[1]) and (t1[0] == -t1[1] or t2[0] == -t2[1]):
        return Verdict(Tag.DISTINCT, reason="l = -m on one side forces equal (l,m)")
    return Verdict(Tag.OPEN, reason="isomorphism for |l| = m is not decided")


def is_residually_finite(l: int, m: int, k: int = 1) -> bool:
    if not (abs(l) >= m > 0 and k > 0):
        raise DomainError(f"needs |l| >= m > 0 and k > 0, got ({l},{m},{k})")
    return abs(l) == m


def is_non_hopfian(pres: GPresentation) -> bool:
    l, m, k = pres.l, pres.m, pres.k
    return abs(l) > m > 1 and l % m == 0 and k % m == 0 and math.gcd(m, l // m) == 1


def _prime_exponent(n: int, p: int) -> int | None:
    # r with n == p**r, else None
    if n < 1:
        return None
    r = 0
    while n % p == 0:
        n //= p
        r += 1
    return r if n == 1 else None


def is_residually_p(l: int, m: int, k: int, p: int) -> bool:
    if not is_prime(p):
        raise DomainError(f"p = {p} is not prime")
    if not (abs(l) >= m > 0 and k > 0):
        raise DomainError(f"needs |l| >= m > 0 and k > 0, got ({l},{m},{k})")
    if abs(l) != m:
        return False
    r, s = _prime_exponent(m, p), _prime_exponent(k, p)
    if r is None or s is None:
        return False
    if l == -m:
        return p == 2 and s <= r
    return True


# --- census -----------------------------------------------------------------


@dataclass(frozen=True)
class CensusRow:
    l: int
    m: int
    k1: int
    k2: int
    verdict: Verdict

    @property
    def s(self) -> Fraction:
        return Fraction(self.l, self.m)

    def to_record(self) -> dict:
        return {"l": self.l, "m": self.m, "k1": self.k1, "k2": self.k2, **self.verdict.to_record()}


CSV_COLUMNS = ["l", "m", "k1", "k2", "verdict", "condition", "reason"]

ORDERINGS = {
    "abs_l": lambda r: (abs(r.l), r.l, r.m, r.k1, r.k2),
    "m_then_abs_s": lambda r: (r.m, abs(r.s), r.l, r.k1, r.k2),
    "k_sum": lambda r: (r.k1 + r.k2, abs(r.l), r.l, r.m, r.k1),
}


@dataclass
class Census:
    l_max: int
    k_max: int
    rows: list[CensusRow] = field(default_factory=list)

    def mutual_epi_rows(self, ordering: str = "abs_l") -> list[CensusRow]:
        rows = [r for r in self.rows if r.verdict.tag is Tag.MUTUAL_EPI_NOT_ISO]
        return sorted(rows, key=ORDERINGS[ordering])

    def orderings(self) -> dict[str, list[CensusRow]]:
        return {name: self.mutual_epi_rows(name) for name in ORDERINGS}

    def find(self, l, m, k1, k2) -> CensusRow | None:
        for row in self.rows:
            if (row.l, row.m, row.k1, row.k2) == (l, m, k1, k2):
                return row
        return None

    def to_csv(self) -> str:
        buf = io.StringIO()
        writer = csv.DictWriter(buf, fieldnames=CSV_COLUMNS, lineterminator="\n")
        writer.writeheader()
        for row in self.rows:
            record = row.to_record()
            record["condition"] = record["condition"] or ""
            writer.writerow(record)
        return buf.getvalue()

    def to_jsonl(self) -> str:
        return "".join(json.dumps(row.to_record()) + "\n" for row in self.rows)


def _census_lm(args) -> list[CensusRow]:
    l, m, k_max = args
    rows = []
    for k1 in range(1, k_max + 1):
        for k2 in range(k1 + 1, k_max + 1):
            verdict = classify_pair(GPresentation(l, m, k1), GPresentation(l, m, k2))
            rows.append(CensusRow(l, m, k1, k2, verdict))
    return rows


def census(l_max: int, k_max: int, workers: int | None = None) -> Census:
    """Classify every unordered pair ``k1 < k2`` sharing ``(l, m)``.

    Presentations run over ``2 <= |l| <= l_max``, ``0 < m < |l|`` and
    ``1 <= k <= k_max``.  Pairs with different ``(l, m)`` are always
    ``Distinct`` and are not listed; neither are the ``k1 = k2`` diagonal
    pairs.  ``workers`` defaults to the ``BRUNNER_WORKERS`` environment
    variable, else 1.
    """
    if not (1 <= l_max <= 100 and 1 <= k_max <= 100):
        raise DomainError(f"census bounds must lie in 1..100, got l_max={l_max}, k_max={k_max}")
    if workers is None:
        workers = int(os.environ.get(WORKERS_ENV, "1"))
    jobs = [
        (l, m, k_max)
        for size in range(2, l_max + 1)
        for l in (size, -size)
        for m in range(1, size)
    ]
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            chunks = list(pool.map(_census_lm, jobs))
    else:
        chunks = [_census_lm(job) for job in jobs]
    rows = [row for chunk in chunks for row in chunk]
    rows.sort(key=lambda r: (abs(r.l), -r.l, r.m, r.k1, r.k2))
    return Census(l_max, k_max, rows)
