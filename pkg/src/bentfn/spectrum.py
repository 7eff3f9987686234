"""Fast Walsh-Hadamard spectra, bent/near-bent classification, and dual extraction.

All arithmetic is integer exact.  The butterfly transform works over the
standard coordinate dot product; queries through the trace inner product go
through :meth:`bentfn.gf2m.FieldContext.dual_index`, which keeps all basis
dependence in one bijection.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

import numpy as np

from .boolfn import BooleanFunction
from .errors import DimensionMismatch, DimensionOutOfRange, NotBent, NotNearBent
from .gf2m import FieldContext

MAX_WALSH_DIMENSION = 24


class Classification(enum.Enum):
    BENT = "bent"
    NEAR_BENT = "near-bent"
    NEITHER = "neither"


def _fwht(values: np.ndarray) -> np.ndarray:
    # in-place butterfly; O(m 2^m) with |coefficients| <= 2^m, safe in int32
    size = values.size
    h = 1
    while h < size:
        view = values.reshape(-1, 2, h)
        top = view[:, 0, :] + view[:, 1, :]
        bottom = view[:, 0, :] - view[:, 1, :]
        view[:, 0, :] = top
        view[:, 1, :] = bottom
        h <<= 1
    return values


def _classify(coeffs: np.ndarray, m: int) -> tuple[Classification, dict[int, int]]:
    values, counts = np.unique(coeffs, return_counts=True)
    histogram = {int(v): int(c) for v, c in zip(values, counts)}
    present = set(histogram)
    if m % 2 == 0:
        flat = 1 << (m // 2)
        label = Classification.BENT if present <= {flat, -flat} else Classification.NEITHER
    else:
        peak = 1 << ((m + 1) // 2)
        allowed = {0, peak, -peak}
        label = Classification.NEAR_BENT if present <= allowed else Classification.NEITHER
    return label, histogram


@dataclass(eq=False)
class WalshSpectrum:
    """All 2^m Fourier coefficients of a function, indexed by the coordinate dual point."""

    m: int
    coeffs: np.ndarray
    classification: Classification
    histogram: dict[int, int]

    def at_field_point(self, ctx: FieldContext, a: int) -> int:
        """Coefficient at the field point a under the trace inner product."""
        if ctx.m != self.m:
            raise DimensionMismatch(
                f"field has dimension {ctx.m}, spectrum has dimension {self.m}"
            )
        return int(self.coeffs[ctx.dual_index(a)])

    def trace_indexed(self, ctx: FieldContext) -> np.ndarray:
        """Coefficients reindexed by field point: entry a is the coefficient at a."""
        if ctx.m != self.m:
            raise DimensionMismatch(
                f"field has dimension {ctx.m}, spectrum has dimension {self.m}"
            )
        return self.coeffs[ctx.dual_perm()]


def walsh(f: BooleanFunction) -> WalshSpectrum:
    """Fast Walsh-Hadamard transform of (-1)^F, with classification."""
    if f.m > MAX_WALSH_DIMENSION:
        raise DimensionOutOfRange(f"dimension {f.m} exceeds {MAX_WALSH_DIMENSION}")
    signs = 1 - 2 * f.table.astype(np.int32)
    coeffs = _fwht(signs)
    label, histogram = _classify(coeffs, f.m)
    coeffs.setflags(write=False)
    return WalshSpectrum(f.m, coeffs, label, histogram)


def classify(obj) -> Classification:
    """Classification of a function or an already computed spectrum."""
    if isinstance(obj, WalshSpectrum):
        return obj.classification
    return walsh(obj).classification


def walsh_at_field_point(f: BooleanFunction, ctx: FieldContext, a: int) -> int:
    return walsh(f).at_field_point(ctx, a)


def is_balanced(f: BooleanFunction) -> bool:
    return f.is_balanced()


def check_nearbent_distribution(spectrum: WalshSpectrum, value_at_zero: int) -> bool:
    """True iff the coefficient counts match the near-bent distribution.

    For m = 2t - 1 the counts are 2^(2t-3) + s*2^(t-2) at +2^t, 2^(2t-2) at 0
    and 2^(2t-3) - s*2^(t-2) at -2^t, where s is +1 if F(0) = 0 and -1 otherwise.
    """
    if spectrum.classification is not Classification.NEAR_BENT:
        raise NotNearBent("distribution check requires a near-bent spectrum", spectrum.histogram)
    t = (spectrum.m + 1) // 2
    sign = -1 if value_at_zero & 1 else 1
    peak = 1 << t
    expected = {
        peak: (1 << (2 * t - 3)) + sign * (1 << (t - 2)),
        0: 1 << (2 * t - 2),
        -peak: (1 << (2 * t - 3)) - sign * (1 << (t - 2)),
    }
    observed = {value: spectrum.histogram.get(value, 0) for value in expected}
    return observed == expected


def dual(F: BooleanFunction, ctx: FieldContext) -> BooleanFunction:
    """Dual of a bent function on GF(2^(m)) x GF(2), via the trace inner product.

    The dual takes value 1 exactly where the Fourier coefficient is -2^t.
    Raises NotBent otherwise; requires F.m = ctx.m + 1 with F.m even.
    """
    if F.m != ctx.m + 1 or F.m % 2:
        raise DimensionMismatch(
            f"dual needs an even-dimensional function over a field of dimension one less; "
            f"got F.m={F.m}, ctx.m={ctx.m}"
        )
    spectrum = walsh(F)
    if spectrum.classification is not Classification.BENT:
        raise NotBent(f"function is {spectrum.classification.value}, not bent")
    t = F.m // 2
    perm = ctx.dual_perm()
    full_perm = np.concatenate([perm, perm + ctx.order])
    table = (spectrum.coeffs[full_perm] == -(1 << t)).astype(np.uint8)
    return BooleanFunction(F.m, table)
