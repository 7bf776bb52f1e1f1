"""Lifetime models: the uniform null, parametric alternatives on [0, 1],
tabulated CDFs, and re-timing a design through a hypothesized model.

Testing a sample against an arbitrary fully specified continuous CDF F0
reduces to the uniformity test: map every inspection time through F0 and test
the (unchanged) counts on the transformed design.
"""

from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path
from typing import Callable

import numpy as np

from .errors import (
    FlatCdfAcrossInspections,
    NonMonotoneCdf,
    ParameterOutOfDomain,
)
from .gof import StatisticSet, compute_statistics
from .reliability import deviations
from .schemes import CensoredSample, CensoringScheme

FAMILY_KINDS = ("uniform", "lehmann", "centered", "compressed", "custom")

#: Parameter grids used by the power-curve command when none is given.
DEFAULT_PARAMETER_GRIDS: dict[str, tuple[float, ...]] = {
    "lehmann": tuple(float(a) for a in np.linspace(0.25, 3.0, 21)),
    "centered": tuple(float(b) for b in np.linspace(0.25, 3.0, 21)),
    "compressed": tuple(float(g) for g in np.linspace(0.0, 0.4, 17)),
}


@dataclass(frozen=True)
class TabulatedCdf:
    """A CDF given on a finite grid, evaluated by monotone linear interpolation.

    Queries outside the grid clamp to the end values.
    """

    xs: tuple[float, ...]
    values: tuple[float, ...]

    def __post_init__(self) -> None:
        xs = tuple(float(x) for x in self.xs)
        values = tuple(float(v) for v in self.values)
        object.__setattr__(self, "xs", xs)
        object.__setattr__(self, "values", values)
        if len(xs) != len(values):
            raise ParameterOutOfDomain("x grid and cdf values differ in length")
        if len(xs) < 2:
            raise ParameterOutOfDomain("a tabulated cdf needs at least two points")
        if any(not b > a for a, b in zip(xs, xs[1:])):
            raise ParameterOutOfDomain("x grid must be strictly increasing")
        if any(b < a for a, b in zip(values, values[1:])):
            raise NonMonotoneCdf("tabulated cdf values must be nondecreasing")
        if values[0] < 0.0 or values[-1] > 1.0:
            raise ParameterOutOfDomain("tabulated cdf values must lie in [0, 1]")

    def __call__(self, x: float) -> float:
        return float(np.interp(x, self.xs, self.values))

    @classmethod
    def from_csv(cls, text: str) -> "TabulatedCdf":
        """Parse two-column CSV with header ``x,cdf``; ``#`` lines are skipped."""
        xs = []
        values = []
        lines = [
            ln for ln in text.splitlines() if ln.strip() and not ln.lstrip().startswith("#")
        ]
        if not lines or [c.strip() for c in lines[0].split(",")] != ["x", "cdf"]:
            raise ParameterOutOfDomain("expected header 'x,cdf'")
        for ln in lines[1:]:
            parts = ln.split(",")
            if len(parts) != 2:
                raise ParameterOutOfDomain(f"expected 2 columns, got {ln!r}")
            xs.append(float(parts[0]))
            values.append(float(parts[1]))
        return cls(tuple(xs), tuple(values))


@dataclass(frozen=True)
class AlternativeFamily:
    """A lifetime model usable as a simulation source or a hypothesized null.

    Kinds and their CDFs on [0, 1]:

    - ``uniform``: F(x) = x
    - ``lehmann``: F(x) = x ** a, a > 0 (a < 1 pushes mass early, a > 1 late)
    - ``centered``: F(x) = (2x)**b / 2 below 1/2, mirrored above; b > 0
      (b > 1 concentrates mass at the center, b < 1 at the edges)
    - ``compressed``: uniform on [g, 1 - g], 0 <= g < 1/2
    - ``custom``: a :class:`TabulatedCdf` (its own grid governs clamping)

    Families evaluate to 0 below their support and 1 above it; the three
    parametric families coincide with the uniform exactly at a = 1, b = 1,
    g = 0.
    """

    kind: str
    parameter: float | None = None
    table: TabulatedCdf | None = None

    def __post_init__(self) -> None:
        if self.kind not in FAMILY_KINDS:
            raise ParameterOutOfDomain(
                f"unknown family {self.kind!r}, expected one of {FAMILY_KINDS}"
            )
        if self.parameter is not None:
            object.__setattr__(self, "parameter", float(self.parameter))
        p = self.parameter
        if self.kind in ("uniform", "custom"):
            if p is not None:
                raise ParameterOutOfDomain(f"{self.kind} takes no parameter, got {p!r}")
            if self.kind == "custom" and self.table is None:
                raise ParameterOutOfDomain("custom family needs a table")
        elif self.kind in ("lehmann", "centered"):
            if p is None or not p > 0.0:
                raise ParameterOutOfDomain(f"{self.kind} parameter must be > 0, got {p!r}")
        else:  # compressed
            if p is None or not 0.0 <= p < 0.5:
                raise ParameterOutOfDomain(
                    f"compressed parameter must lie in [0, 0.5), got {p!r}"
                )
        if self.kind != "custom" and self.table is not None:
            raise ParameterOutOfDomain(f"{self.kind} does not take a table")

    def __call__(self, x: float) -> float:
        return cdf_eval(self, x)

    def spec(self) -> str:
        """The string form accepted by :func:`parse_family` (tables excepted)."""
        if self.kind == "custom":
            return "custom"
        if self.parameter is None:
            return self.kind
        return f"{self.kind}:{self.parameter!r}"


UNIFORM = AlternativeFamily("uniform")


def cdf_eval(family: AlternativeFamily, x: float) -> float:
    """Evaluate a family CDF at a point.

    For the parametric families any x outside [0, 1] clamps to the boundary
    value; a custom table clamps to its own grid instead.
    """
    if family.kind == "custom":
        return family.table(x)
    x = float(x)
    if x <= 0.0:
        return 0.0
    if x >= 1.0:
        return 1.0
    if family.kind == "uniform":
        return x
    p = family.parameter
    if family.kind == "lehmann":
        return x**p
    if family.kind == "centered":
        if x <= 0.5:
            return 0.5 * (2.0 * x) ** p
        return 1.0 - 0.5 * (2.0 * (1.0 - x)) ** p
    # compressed: uniform on [g, 1 - g]
    if x < p:
        return 0.0
    if x > 1.0 - p:
        return 1.0
    return (x - p) / (1.0 - 2.0 * p)


def parse_family(spec: str, *, read_table: bool = True) -> AlternativeFamily:
    """Parse a family spec string.

    Accepted forms: ``uniform``, ``lehmann:2.0``, ``centered:0.5``,
    ``compressed:0.25``, and ``table:<csv path>`` for a tabulated CDF.
    """
    kind, sep, arg = spec.partition(":")
    kind = kind.strip()
    if kind == "uniform":
        if sep:
            raise ParameterOutOfDomain(f"uniform takes no parameter, got {spec!r}")
        return UNIFORM
    if kind == "table":
        if not arg:
            raise ParameterOutOfDomain("table form is 'table:<csv path>'")
        if not read_table:
            raise ParameterOutOfDomain("table specs are not allowed here")
        return AlternativeFamily("custom", table=TabulatedCdf.from_csv(Path(arg).read_text("utf-8")))
    if kind in ("lehmann", "centered", "compressed"):
        try:
            value = float(arg)
        except ValueError:
            raise ParameterOutOfDomain(
                f"{kind} needs a numeric parameter, e.g. '{kind}:0.5', got {spec!r}"
            ) from None
        return AlternativeFamily(kind, parameter=value)
    raise ParameterOutOfDomain(f"unknown family {kind!r} in {spec!r}")


def transform_scheme(scheme: CensoringScheme, f0: Callable[[float], float]) -> CensoringScheme:
    """Map every inspection time of a design through a hypothesized CDF.

    The result lives on the probability scale and keeps the original
    withdrawal percentages.  F0 must be 0 at time 0 and strictly increasing
    across the inspection times; ties raise
    :class:`FlatCdfAcrossInspections` because a flat stretch makes two
    inspections indistinguishable under the model.
    """
    new_times = [float(f0(t)) for t in scheme.times]
    for i in range(1, len(new_times)):
        if new_times[i] == new_times[i - 1]:
            raise FlatCdfAcrossInspections(
                f"hypothesized cdf is flat between t = {scheme.times[i - 1]!r} "
                f"and t = {scheme.times[i]!r}"
            )
        if new_times[i] < new_times[i - 1]:
            raise NonMonotoneCdf("hypothesized cdf decreases between inspection times")
    return CensoringScheme(tuple(new_times), scheme.percentages)


def test_general(sample: CensoredSample, f0: Callable[[float], float]) -> StatisticSet:
    """Statistics for testing a sample against an arbitrary fully specified
    continuous model F0.

    Equivalent by construction to the uniformity test on the design re-timed
    through F0 with the same counts; calibrate critical values or p-values on
    that transformed design.
    """
    transformed = transform_scheme(sample.scheme, f0)
    re_timed = CensoredSample(transformed, sample.n, sample.failures, sample.removals)
    return compute_statistics(deviations(re_timed, UNIFORM))
