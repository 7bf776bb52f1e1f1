"""Censoring designs and observed samples for progressive Type-I interval life tests.

A life test puts ``n`` units on test at time 0 and inspects them at fixed
times t_1 < ... < t_m.  At inspection i the number of failures since the
previous inspection is recorded and a pre-specified fraction p_i of the
surviving units is withdrawn from the test; the final inspection withdraws
every remaining unit (p_m = 1), ending the experiment.
"""

from __future__ import annotations

import csv
import hashlib
import io
import json
from dataclasses import dataclass
from importlib import resources
from pathlib import Path

from .errors import (
    FirstTimeNotZero,
    InvalidSample,
    LastPercentageNotOne,
    LengthMismatch,
    NonIncreasingTimes,
    PercentageOutOfRange,
)

#: Names accepted by :func:`load_scheme` in addition to file paths.
BUNDLED_SCHEME_NAMES = ("t1p1", "t1p2", "t2p1", "t2p2")

SAMPLE_CSV_HEADER = "t_i,x_i,r_i"


@dataclass(frozen=True)
class CensoringScheme:
    """Inspection times (t_0 = 0, t_1, ..., t_m) and withdrawal percentages (p_1, ..., p_m).

    ``times`` carries the leading t_0 = 0 explicitly, so it has one more
    entry than ``percentages``.  Construction validates; invalid input
    raises rather than being repaired.
    """

    times: tuple[float, ...]
    percentages: tuple[float, ...]

    def __post_init__(self) -> None:
        times = tuple(float(t) for t in self.times)
        pct = tuple(float(p) for p in self.percentages)
        object.__setattr__(self, "times", times)
        object.__setattr__(self, "percentages", pct)
        if len(times) < 2:
            raise LengthMismatch("need at least one inspection time beyond t_0 = 0")
        if times[0] != 0.0:
            raise FirstTimeNotZero(f"times must start at 0, got {times[0]!r}")
        for a, b in zip(times, times[1:]):
            if not b > a:
                raise NonIncreasingTimes(
                    f"inspection times must be strictly increasing, got {a!r} followed by {b!r}"
                )
        if len(pct) != len(times) - 1:
            raise LengthMismatch(
                f"expected {len(times) - 1} withdrawal percentages, got {len(pct)}"
            )
        for p in pct:
            if not 0.0 <= p <= 1.0:
                raise PercentageOutOfRange(f"withdrawal percentage {p!r} outside [0, 1]")
        if pct[-1] != 1.0:
            raise LastPercentageNotOne(
                f"the final withdrawal percentage must be exactly 1, got {pct[-1]!r}"
            )

    @property
    def m(self) -> int:
        """Number of inspections."""
        return len(self.times) - 1

    @property
    def inspection_times(self) -> tuple[float, ...]:
        """Times t_1, ..., t_m (without the leading 0)."""
        return self.times[1:]


def validate_scheme(times, percentages) -> CensoringScheme:
    """Build a validated scheme from raw sequences.

    Idempotent: feeding a scheme's own fields back reproduces an equal scheme.
    """
    return CensoringScheme(tuple(times), tuple(percentages))


@dataclass(frozen=True)
class CensoredSample:
    """Observed counts from one progressively Type-I interval censored life test.

    ``failures[i]`` counts units failing in (t_i, t_{i+1}] and ``removals[i]``
    the survivors withdrawn at the inspection ending that interval.  Every
    unit must be accounted for: failures and removals sum to ``n``.
    """

    scheme: CensoringScheme
    n: int
    failures: tuple[int, ...]
    removals: tuple[int, ...]

    def __post_init__(self) -> None:
        failures = tuple(_as_count(x, "failure") for x in self.failures)
        removals = tuple(_as_count(r, "removal") for r in self.removals)
        object.__setattr__(self, "failures", failures)
        object.__setattr__(self, "removals", removals)
        m = self.scheme.m
        if len(failures) != m or len(removals) != m:
            raise LengthMismatch(
                f"scheme has {m} inspections but got {len(failures)} failure "
                f"and {len(removals)} removal counts"
            )
        try:
            valid_n = not isinstance(self.n, bool) and self.n == int(self.n) and self.n >= 1
        except (TypeError, ValueError, OverflowError):
            valid_n = False
        if not valid_n:
            raise InvalidSample(f"n must be a positive integer, got {self.n!r}")
        object.__setattr__(self, "n", int(self.n))
        at_risk = self.n
        for i, (x, r) in enumerate(zip(failures, removals), start=1):
            survivors = at_risk - x
            if survivors < 0:
                raise InvalidSample(f"more failures than units at risk at inspection {i}")
            if r > survivors:
                raise InvalidSample(f"more removals than survivors at inspection {i}")
            at_risk = survivors - r
        # at_risk >= 0 now; anything left over means units were never resolved,
        # so this also forces the final inspection to withdraw every survivor
        if at_risk != 0:
            raise InvalidSample(
                f"failures and removals must account for all {self.n} units, "
                f"{at_risk} left unresolved"
            )


def _as_count(value, what: str) -> int:
    try:
        ok = not isinstance(value, bool) and value == int(value) and value >= 0
    except (TypeError, ValueError, OverflowError):
        ok = False
    if not ok:
        raise InvalidSample(f"{what} counts must be nonnegative integers, got {value!r}")
    return int(value)


@dataclass(frozen=True)
class RiskSetTrace:
    """Running totals derived from a sample.

    ``alpha_plus[i]`` is the number of units still on test after inspection i
    (``alpha_plus[0] == n``); ``cum_failures`` / ``cum_removals`` are the
    matching cumulative counts, each of length m + 1 with a leading 0.
    """

    alpha_plus: tuple[int, ...]
    cum_failures: tuple[int, ...]
    cum_removals: tuple[int, ...]


def risk_trace(sample: CensoredSample) -> RiskSetTrace:
    """Cumulative failures/removals and after-inspection risk set sizes."""
    cum_x = [0]
    cum_r = [0]
    for x, r in zip(sample.failures, sample.removals):
        cum_x.append(cum_x[-1] + x)
        cum_r.append(cum_r[-1] + r)
    alpha = tuple(sample.n - cx - cr for cx, cr in zip(cum_x, cum_r))
    return RiskSetTrace(alpha, tuple(cum_x), tuple(cum_r))


def scheme_id(scheme: CensoringScheme) -> str:
    """Short content digest of a scheme, stable across runs and processes.

    Used to tie critical value tables to the design they were computed for.
    """
    payload = json.dumps(
        {"times": list(scheme.times), "percentages": list(scheme.percentages)},
        separators=(",", ":"),
    )
    return "s" + hashlib.sha256(payload.encode("utf-8")).hexdigest()[:10]


# ---------------------------------------------------------------------------
# serialization


def scheme_to_json(scheme: CensoringScheme) -> str:
    return json.dumps({"times": list(scheme.times), "percentages": list(scheme.percentages)})


def scheme_from_json(text: str) -> CensoringScheme:
    obj = json.loads(text)
    try:
        times = obj["times"]
        percentages = obj["percentages"]
    except (TypeError, KeyError) as exc:
        raise InvalidSample(f"scheme JSON needs 'times' and 'percentages': {exc}") from None
    return validate_scheme(times, percentages)


def load_scheme(spec: str) -> CensoringScheme:
    """Load a scheme by bundled name (see BUNDLED_SCHEME_NAMES) or JSON file path."""
    if spec in BUNDLED_SCHEME_NAMES:
        text = resources.files("picgof").joinpath(f"data/{spec}.json").read_text("utf-8")
    else:
        text = Path(spec).read_text("utf-8")
    return scheme_from_json(text)


def sample_to_json(sample: CensoredSample) -> str:
    return json.dumps(
        {
            "times": list(sample.scheme.times),
            "percentages": list(sample.scheme.percentages),
            "n": sample.n,
            "failures": list(sample.failures),
            "removals": list(sample.removals),
        }
    )


def sample_from_json(text: str) -> CensoredSample:
    obj = json.loads(text)
    try:
        scheme = validate_scheme(obj["times"], obj["percentages"])
        return CensoredSample(scheme, int(obj["n"]), tuple(obj["failures"]), tuple(obj["removals"]))
    except (TypeError, KeyError) as exc:
        raise InvalidSample(f"sample JSON is missing fields: {exc}") from None


def sample_to_csv(sample: CensoredSample) -> str:
    """Canonical CSV form: header ``t_i,x_i,r_i`` and one row per inspection.

    The output is byte-stable: re-serializing a parsed sample reproduces it
    exactly.
    """
    lines = [SAMPLE_CSV_HEADER]
    for t, x, r in zip(sample.scheme.inspection_times, sample.failures, sample.removals):
        lines.append(f"{t!r},{x},{r}")
    return "\n".join(lines) + "\n"


def sample_from_csv(text: str) -> CensoredSample:
    """Parse the CSV sample format.

    The total ``n`` is the sum of all counts.  Withdrawal percentages are not
    part of the format; they are inferred as r_i divided by the survivor
    count at inspection i (1 for the final inspection), which reproduces the
    observed removals exactly.  Lines starting with ``#`` are ignored.
    """
    rows = [
        row
        for row in csv.reader(io.StringIO(text))
        if row and not row[0].lstrip().startswith("#")
    ]
    if not rows or [c.strip() for c in rows[0]] != SAMPLE_CSV_HEADER.split(","):
        raise InvalidSample(f"expected header '{SAMPLE_CSV_HEADER}'")
    times = [0.0]
    failures: list[int] = []
    removals: list[int] = []
    for row in rows[1:]:
        if len(row) != 3:
            raise InvalidSample(f"expected 3 columns per row, got {row!r}")
        try:
            times.append(float(row[0]))
            failures.append(_as_count(float(row[1]), "failure"))
            removals.append(_as_count(float(row[2]), "removal"))
        except ValueError as exc:
            if isinstance(exc, InvalidSample):
                raise
            raise InvalidSample(f"non-numeric entry in row {row!r}") from None
    if not failures:
        raise InvalidSample("no data rows")
    n = sum(failures) + sum(removals)
    percentages = _infer_percentages(n, failures, removals)
    scheme = validate_scheme(times, percentages)
    return CensoredSample(scheme, n, tuple(failures), tuple(removals))


def _infer_percentages(n: int, failures: list[int], removals: list[int]) -> list[float]:
    pct = []
    at_risk = n
    last = len(failures) - 1
    for i, (x, r) in enumerate(zip(failures, removals)):
        survivors = at_risk - x
        if i == last:
            pct.append(1.0)
        elif survivors > 0:
            pct.append(r / survivors)
        else:
            pct.append(0.0)
        at_risk = survivors - r
    return pct
