"""Test statistics summarizing a deviation vector, and rejection decisions."""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import TYPE_CHECKING, Sequence

from .errors import EmptyDeviationVector, SchemeMismatch
from .reliability import DeviationVector
from .schemes import CensoringScheme, scheme_id

if TYPE_CHECKING:
    from .montecarlo import CriticalValueTable

#: Canonical statistic order used everywhere (CSV columns, arrays, dicts).
STAT_NAMES = ("c_plus", "c_minus", "c", "k", "t1", "t2")

STATISTICS_CSV_HEADER = ",".join(STAT_NAMES)


@dataclass(frozen=True)
class StatisticSet:
    """The six goodness-of-fit statistics of one sample.

    ``c_plus``/``c_minus`` are the largest signed deviations up and down
    (either can be negative), ``c`` is their maximum, ``k`` their sum,
    ``t1`` the mean squared deviation and ``t2`` the mean absolute deviation.
    Large values speak against the hypothesized model.
    """

    c_plus: float
    c_minus: float
    c: float
    k: float
    t1: float
    t2: float

    def as_dict(self) -> dict[str, float]:
        return {name: getattr(self, name) for name in STAT_NAMES}

    def as_tuple(self) -> tuple[float, float, float, float, float, float]:
        return (self.c_plus, self.c_minus, self.c, self.k, self.t1, self.t2)

    def to_csv(self) -> str:
        row = ",".join(repr(v) for v in self.as_tuple())
        return f"{STATISTICS_CSV_HEADER}\n{row}\n"

    def to_json(self) -> str:
        return json.dumps(self.as_dict())

    @classmethod
    def from_dict(cls, values: dict) -> "StatisticSet":
        return cls(**{name: float(values[name]) for name in STAT_NAMES})


def fold_deviations(d: Sequence[float]) -> tuple[float, float, float, float, float, float]:
    """Raw statistic tuple (STAT_NAMES order) from a nonempty deviation sequence."""
    m = len(d)
    c_plus = max(d)
    c_minus = max(-x for x in d)
    s1 = 0.0
    s2 = 0.0
    for x in d:
        s1 += x * x
        s2 += abs(x)
    return c_plus, c_minus, max(c_plus, c_minus), c_plus + c_minus, s1 / m, s2 / m


def compute_statistics(d: DeviationVector | Sequence[float]) -> StatisticSet:
    """All six statistics of a deviation vector."""
    seq = d.d if isinstance(d, DeviationVector) else tuple(d)
    if len(seq) == 0:
        raise EmptyDeviationVector("cannot summarize an empty deviation vector")
    return StatisticSet(*fold_deviations(seq))


def reject(
    observed: StatisticSet,
    critical: "CriticalValueTable",
    *,
    scheme: CensoringScheme | None = None,
    n: int | None = None,
) -> dict[str, bool]:
    """Per-statistic upper-tail rejection decisions.

    Rejection requires strict exceedance: an observed value exactly equal to
    its critical value does not reject.  Pass ``scheme`` and/or ``n`` to have
    them checked against the table's provenance; a mismatch raises
    :class:`SchemeMismatch` instead of silently comparing across designs.
    """
    if n is not None and n != critical.n:
        raise SchemeMismatch(f"table was computed for n = {critical.n}, data has n = {n}")
    if scheme is not None and scheme_id(scheme) != critical.scheme_id:
        raise SchemeMismatch(
            f"table was computed for scheme {critical.scheme_id}, got {scheme_id(scheme)}"
        )
    obs = observed.as_dict()
    return {name: obs[name] > critical.values[name] for name in STAT_NAMES}
