"""Constructions and checkers for bent functions built from near-bent components.

The central construction pairs a near-bent function f0 whose unit derivative
is constant with f1 = f0 + tr; the join is bent.  From a bent function meeting
the trace condition (component sum equal to tr, possibly plus 1) the dual's
components yield two further bent functions, the pseudo-duals, and their duals
close the family: six bent functions from one qualifying seed.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .boolfn import BooleanFunction, trace_function, trace_polynomial
from .errors import (
    BentVerificationFailed,
    ConditionTNotMet,
    ConditionViolation,
    DerivativeNotConstant,
    DimensionMismatch,
    InvalidExponentSet,
    NotBent,
    NotNearBent,
)
from .gf2m import FieldContext, coset_leader
from .spectrum import Classification, dual, walsh
from .tvr import join, linear_form, split


# ---------------------------------------------------------------------------
# reports


@dataclass(frozen=True)
class CheckItem:
    name: str
    passed: bool
    witness: int | None = None
    detail: str = ""

    def as_dict(self) -> dict:
        out = {"name": self.name, "passed": self.passed}
        if self.witness is not None:
            out["witness"] = self.witness
        if self.detail:
            out["detail"] = self.detail
        return out


@dataclass(eq=False)
class CheckReport:
    """Structured pass/fail record for one family of assertions."""

    name: str
    items: list[CheckItem]

    @property
    def passed(self) -> bool:
        return all(item.passed for item in self.items)

    def item(self, name: str) -> CheckItem:
        for entry in self.items:
            if entry.name == name:
                return entry
        raise KeyError(name)

    def as_dict(self) -> dict:
        return {
            "name": self.name,
            "passed": self.passed,
            "items": [item.as_dict() for item in self.items],
        }


@dataclass(frozen=True)
class ConditionFlags:
    """Detected structure of an even-dimensional function's components.

    ``xi`` is 0 or 1 when f0 + f1 equals tr or tr + 1 pointwise, else None.
    ``d1_f0`` is the constant value of the unit derivative of f0 when constant,
    else None; ``has_C`` records d1_f0 == 0.  The Hamming distances to the two
    trace candidates localize near misses.
    """

    xi: int | None
    has_C: bool
    d1_f0: int | None
    dist_to_tr: int
    dist_to_tr_plus_one: int

    @property
    def has_T(self) -> bool:
        return self.xi is not None

    def as_dict(self) -> dict:
        return {
            "has_T": self.has_T,
            "xi": self.xi,
            "has_C": self.has_C,
            "d1_f0": self.d1_f0,
            "dist_to_tr": self.dist_to_tr,
            "dist_to_tr_plus_one": self.dist_to_tr_plus_one,
        }


@dataclass(eq=False)
class DualSupportReport:
    """Support structure of the dual's components, predicted from one component spectrum.

    ``S`` collects the field points where the first component's coefficient is
    -2^t, ``S1`` is S translated by 1, and ``G_set`` the coefficient zero set;
    ``g`` is the characteristic function of G_set and ``s_indicator`` that of S.
    The first dual component must be supported exactly on S | S1 and the second
    must equal the first plus g.
    """

    S: frozenset[int]
    S1: frozenset[int]
    G_set: frozenset[int]
    g: BooleanFunction
    s_indicator: BooleanFunction
    predicted_support: frozenset[int]
    observed_support: frozenset[int]
    report: CheckReport

    @property
    def passed(self) -> bool:
        return self.report.passed


@dataclass(eq=False)
class SixPack:
    """The six bent functions grown from one qualifying near-bent seed."""

    base: BooleanFunction
    dual: BooleanFunction
    pseudo0: BooleanFunction
    pseudo1: BooleanFunction
    pseudo0_dual: BooleanFunction
    pseudo1_dual: BooleanFunction
    ctx: FieldContext

    LABELS = ("base", "dual", "pseudo0", "pseudo1", "pseudo0-dual", "pseudo1-dual")

    def functions(self) -> tuple[BooleanFunction, ...]:
        return (
            self.base,
            self.dual,
            self.pseudo0,
            self.pseudo1,
            self.pseudo0_dual,
            self.pseudo1_dual,
        )

    def labeled(self) -> dict[str, BooleanFunction]:
        return dict(zip(self.LABELS, self.functions()))

    def coincidence_classes(self, modulo_structural_forms: bool = False) -> list[list[str]]:
        """Group the six by equality; optionally modulo the two structural linear forms.

        The structural forms are (x, nu) -> nu and (x, nu) -> tr(x); adding
        either preserves bentness and the trace condition up to its constant.
        """
        if modulo_structural_forms:
            translates = _structural_translates(self.ctx)

            def key(fn: BooleanFunction) -> bytes:
                return min((fn.table ^ s).tobytes() for s in translates)

        else:

            def key(fn: BooleanFunction) -> bytes:
                return fn.table.tobytes()

        groups: dict[bytes, list[str]] = {}
        for label, fn in zip(self.LABELS, self.functions()):
            groups.setdefault(key(fn), []).append(label)
        return sorted(groups.values(), key=lambda labels: self.LABELS.index(labels[0]))


@dataclass(eq=False)
class CollisionReport:
    """Two bent functions with different duals but the same first pseudo-dual."""

    first: BooleanFunction
    second: BooleanFunction
    report: CheckReport

    @property
    def passed(self) -> bool:
        return self.report.passed


@dataclass(frozen=True)
class SkippedCheck:
    name: str
    reason: str


@dataclass(eq=False)
class VerificationSuite:
    """Every applicable checker's outcome for one function."""

    flags: ConditionFlags | None
    reports: list[CheckReport]
    skipped: list[SkippedCheck]

    @property
    def passed(self) -> bool:
        return all(report.passed for report in self.reports)

    def as_dict(self) -> dict:
        return {
            "passed": self.passed,
            "condition_flags": self.flags.as_dict() if self.flags else None,
            "checks": [report.as_dict() for report in self.reports],
            "skipped": [{"name": s.name, "reason": s.reason} for s in self.skipped],
        }


def _structural_translates(ctx: FieldContext) -> list[np.ndarray]:
    zero = np.zeros(2 * ctx.order, dtype=np.uint8)
    nu_form = linear_form(ctx, 0, 1).table
    tr_form = linear_form(ctx, 1, 0).table
    return [zero, nu_form, tr_form, nu_form ^ tr_form]


# ---------------------------------------------------------------------------
# constructions


def _require_near_bent(f0: BooleanFunction, what: str = "input"):
    spectrum = walsh(f0)
    if spectrum.classification is not Classification.NEAR_BENT:
        raise NotNearBent(
            f"{what} is {spectrum.classification.value}, not near-bent", spectrum.histogram
        )
    return spectrum


def bent_from_near_bent(f0: BooleanFunction, ctx: FieldContext) -> BooleanFunction:
    """Join a qualifying near-bent f0 with f0 + tr into a bent function.

    Requires f0 near-bent with a constant unit derivative; both are checked.
    """
    if f0.m != ctx.m:
        raise DimensionMismatch(f"f0.m={f0.m} does not match ctx.m={ctx.m}")
    _require_near_bent(f0, "f0")
    if f0.derivative(1).is_constant() is None:
        raise DerivativeNotConstant("the unit derivative of f0 is not constant")
    F = join(f0, f0 + trace_function(ctx))
    if walsh(F).classification is not Classification.BENT:
        raise BentVerificationFailed("joined function failed the bent check")
    return F


def normalize_near_bent(f: BooleanFunction, ctx: FieldContext, e: int = 1) -> BooleanFunction:
    """The unique h among {f, f+1, f+t_e, f+t_e+1} with D_e h = 0 and h(0) = 0.

    ``e`` defaults to 1; any direction with tr(e) = 1 works, since adding the
    linear form x -> tr(e*x) flips the constant derivative in that direction.
    """
    if f.m != ctx.m:
        raise DimensionMismatch(f"f.m={f.m} does not match ctx.m={ctx.m}")
    if ctx.trace(e) != 1:
        raise ConditionViolation(f"direction {e} has trace 0; normalization needs tr(e) = 1")
    _require_near_bent(f)
    omega = f.derivative(e).is_constant()
    if omega is None:
        raise DerivativeNotConstant(f"the derivative of f in direction {e} is not constant")
    h = f if omega == 0 else f.add_linear_form(ctx, e)
    if h[0]:
        h = h + 1
    return h


def pseudo_duals(
    F: BooleanFunction, ctx: FieldContext
) -> tuple[BooleanFunction, BooleanFunction]:
    """The two functions joining each dual component with itself plus tr."""
    dual_F = dual(F, ctx)
    return _pseudo_duals_of_dual(dual_F, ctx)


def _pseudo_duals_of_dual(dual_F: BooleanFunction, ctx: FieldContext):
    pair = split(dual_F, ctx)
    tr = trace_function(ctx)
    return join(pair.f0, pair.f0 + tr), join(pair.f1, pair.f1 + tr)


def condition_flags(F: BooleanFunction, ctx: FieldContext) -> ConditionFlags:
    """Detect the trace condition on the component sum and the unit-derivative constant."""
    pair = split(F, ctx)
    sum01 = pair.f0 + pair.f1
    tr = trace_function(ctx)
    dist0 = (sum01 + tr).weight()
    dist1 = (sum01 + tr + 1).weight()
    if dist0 == 0:
        xi = 0
    elif dist1 == 0:
        xi = 1
    else:
        xi = None
    omega = pair.f0.derivative(1).is_constant()
    return ConditionFlags(
        xi=xi,
        has_C=(omega == 0),
        d1_f0=omega,
        dist_to_tr=dist0,
        dist_to_tr_plus_one=dist1,
    )


def _require_xi_zero(F: BooleanFunction, ctx: FieldContext) -> ConditionFlags:
    flags = condition_flags(F, ctx)
    if flags.xi != 0:
        if flags.xi == 1:
            raise ConditionTNotMet("component sum is tr + 1, not tr")
        raise ConditionTNotMet(
            f"component sum is not the trace (distance {flags.dist_to_tr} from tr)"
        )
    return flags


def dual_support_analysis(F: BooleanFunction, ctx: FieldContext) -> DualSupportReport:
    """Predict the dual components' supports from the first component spectrum.

    Requires F bent with component sum exactly tr.
    """
    flags = _require_xi_zero(F, ctx)
    del flags
    pair = split(F, ctx)
    t = F.m // 2
    values = walsh(pair.f0).trace_indexed(ctx)

    s_table = (values == -(1 << t)).astype(np.uint8)
    g_table = (values == 0).astype(np.uint8)
    S = frozenset(int(v) for v in np.flatnonzero(s_table))
    S1 = frozenset(v ^ 1 for v in S)
    G_set = frozenset(int(v) for v in np.flatnonzero(g_table))
    g = BooleanFunction(ctx.m, g_table)
    s_indicator = BooleanFunction(ctx.m, s_table)

    dual_pair = split(dual(F, ctx), ctx)
    observed = frozenset(int(v) for v in dual_pair.f0.support())
    predicted = S | S1

    items = [
        CheckItem("first-dual-support-is-S-union-S1", observed == predicted),
        CheckItem("second-dual-equals-first-plus-zero-indicator", dual_pair.f1 == dual_pair.f0 + g),
        CheckItem("S-and-S1-disjoint", not (S & S1)),
        CheckItem("zero-set-size", len(G_set) == 1 << (ctx.m - 1)),
    ]
    return DualSupportReport(
        S=S,
        S1=S1,
        G_set=G_set,
        g=g,
        s_indicator=s_indicator,
        predicted_support=predicted,
        observed_support=observed,
        report=CheckReport("dual-support", items),
    )


def check_dual_unit_derivatives(F: BooleanFunction, ctx: FieldContext) -> CheckReport:
    """For bent F with component sum tr: the dual's first component has zero unit
    derivative and its second has constant unit derivative 1."""
    _require_xi_zero(F, ctx)
    dual_pair = split(dual(F, ctx), ctx)
    d0 = dual_pair.f0.derivative(1)
    d1 = dual_pair.f1.derivative(1)
    items = [
        CheckItem("dual-first-component-unit-derivative-zero", d0.is_constant() == 0,
                  witness=_first_nonzero(d0)),
        CheckItem("dual-second-component-unit-derivative-one", d1.is_constant() == 1,
                  witness=_first_zero(d1)),
    ]
    return CheckReport("dual-unit-derivatives", items)


def check_dual_component_sum(F: BooleanFunction, ctx: FieldContext) -> CheckReport:
    """For bent F with component sum tr and constant unit derivative of f0:
    the dual components sum to tr when that constant is 0, and to tr + 1 when it is 1."""
    _require_xi_zero(F, ctx)
    pair = split(F, ctx)
    omega = pair.f0.derivative(1).is_constant()
    if omega is None:
        raise DerivativeNotConstant("the unit derivative of f0 is not constant")
    dual_pair = split(dual(F, ctx), ctx)
    expected = trace_function(ctx) + omega
    observed = dual_pair.f0 + dual_pair.f1
    diff = observed + expected
    items = [
        CheckItem(
            f"dual-component-sum-is-tr-plus-{omega}",
            observed == expected,
            witness=_first_nonzero(diff),
        )
    ]
    return CheckReport("dual-component-sum", items)


def check_pseudo_dual_conditions(F: BooleanFunction, ctx: FieldContext) -> CheckReport:
    """Both pseudo-duals of a trace-condition bent function are bent, and their
    duals meet the zero-derivative condition with complementary trace constants.

    With component sum tr the dual of pseudo0 has constant 0 and that of
    pseudo1 constant 1.  A component sum of tr + 1 only adds the nu linear
    form, which swaps the dual's components, so the expected constants swap.
    """
    flags = condition_flags(F, ctx)
    if not flags.has_T:
        raise ConditionTNotMet(
            f"component sum is not tr or tr + 1 (distances {flags.dist_to_tr}, "
            f"{flags.dist_to_tr_plus_one})"
        )
    pd0, pd1 = pseudo_duals(F, ctx)
    items = []
    for i, pd in enumerate((pd0, pd1)):
        bent_ok = walsh(pd).classification is Classification.BENT
        items.append(CheckItem(f"pseudo{i}-bent", bent_ok))
        if not bent_ok:
            continue
        sub = condition_flags(dual(pd, ctx), ctx)
        expected_xi = i ^ flags.xi
        items.append(CheckItem(f"pseudo{i}-dual-meets-C", sub.has_C))
        items.append(
            CheckItem(
                f"pseudo{i}-dual-xi-{expected_xi}",
                sub.xi == expected_xi,
                detail=f"observed xi={sub.xi}",
            )
        )
    return CheckReport("pseudo-dual-conditions", items)


def check_spectrum_zero_set(f: BooleanFunction, ctx: FieldContext) -> CheckReport:
    """A near-bent function with constant unit derivative w has spectrum zeros
    exactly at the points u with tr(u) = 1 - w."""
    if f.m != ctx.m:
        raise DimensionMismatch(f"f.m={f.m} does not match ctx.m={ctx.m}")
    _require_near_bent(f)
    omega = f.derivative(1).is_constant()
    if omega is None:
        raise DerivativeNotConstant("the unit derivative is not constant")
    values = walsh(f).trace_indexed(ctx)
    zero_set = (values == 0)
    expected = (ctx.trace_table == (1 ^ omega))
    match = bool(np.array_equal(zero_set, expected))
    witness = None if match else int(np.nonzero(zero_set != expected)[0][0])
    items = [
        CheckItem(f"zero-set-is-trace-{1 ^ omega}-coset", match, witness=witness),
        CheckItem("zero-set-size", int(zero_set.sum()) == 1 << (ctx.m - 1)),
    ]
    return CheckReport("spectrum-zero-set", items)


def check_component_derivative_pairing(F: BooleanFunction, ctx: FieldContext) -> CheckReport:
    """For bent F: the component unit derivatives are constant together, with
    complementary values; the derivative in direction (0, 1) is balanced and
    equals the component sum on both halves."""
    spectrum = walsh(F)
    if spectrum.classification is not Classification.BENT:
        raise NotBent(f"function is {spectrum.classification.value}, not bent")
    pair = split(F, ctx)
    w0 = pair.f0.derivative(1).is_constant()
    w1 = pair.f1.derivative(1).is_constant()
    if w0 is None:
        paired = w1 is None
    else:
        paired = w1 == (w0 ^ 1)
    d_top = F.derivative(1 << ctx.m)
    sum01 = pair.f0 + pair.f1
    items = [
        CheckItem("unit-derivative-constants-paired", paired,
                  detail=f"d1_f0={w0}, d1_f1={w1}"),
        CheckItem("top-direction-derivative-balanced", d_top.weight() == 1 << ctx.m),
        CheckItem("top-direction-derivative-is-component-sum", d_top == join(sum01, sum01)),
    ]
    return CheckReport("component-derivative-pairing", items)


def _first_nonzero(f: BooleanFunction) -> int | None:
    support = f.support()
    return int(support[0]) if support.size else None


def _first_zero(f: BooleanFunction) -> int | None:
    zeros = np.flatnonzero(f.table == 0)
    return int(zeros[0]) if zeros.size else None


# ---------------------------------------------------------------------------
# families


def kasami_welch_exponent(t: int, s: int) -> tuple[int, str]:
    """The exponent 4^s - 2^s + 1 with its admissibility conditions checked.

    Returns the exponent and which congruence branch (3s = +1 or -1 mod 2t-1)
    was matched.  Raises ConditionViolation naming the failed condition.
    """
    if t < 2:
        raise ConditionViolation(f"t must be at least 2, got {t}")
    n = 2 * t - 1
    if n % 3 == 0:
        raise ConditionViolation(f"2t-1 = {n} is divisible by 3")
    if not 0 < s < t:
        raise ConditionViolation(f"s must satisfy 0 < s < t, got s={s}, t={t}")
    if (3 * s) % n == 1 % n:
        branch = "+1"
    elif (3 * s) % n == n - 1:
        branch = "-1"
    else:
        raise ConditionViolation(f"3s = {3 * s} is not congruent to +1 or -1 mod {n}")
    return (1 << (2 * s)) - (1 << s) + 1, branch


def kasami_welch(t: int, s: int, ctx: FieldContext | None = None) -> BooleanFunction:
    """Bent function joining tr(x^d), d = 4^s - 2^s + 1, with tr(x^d) + tr(x)."""
    d, _ = kasami_welch_exponent(t, s)
    if ctx is None:
        ctx = FieldContext(2 * t - 1)
    elif ctx.m != 2 * t - 1:
        raise DimensionMismatch(f"ctx.m={ctx.m} does not match 2t-1={2 * t - 1}")
    f0 = trace_polynomial(ctx, [d])
    F = join(f0, f0 + trace_function(ctx))
    if walsh(F).classification is not Classification.BENT:
        raise BentVerificationFailed(
            f"joined function for t={t}, s={s} failed the bent check"
        )
    return F


def quadratic_family(t: int, J, ctx: FieldContext | None = None) -> BooleanFunction:
    """Bent function from the quadratic seed sum of tr(x^(2^j + 1)) over j in J.

    The seed's unit derivative is the constant |J| mod 2, so the join with the
    seed plus tr is bent whenever the seed is near-bent; near-bentness is
    checked by spectrum since a deficient quadratic form breaks it.
    """
    if t < 2:
        raise ConditionViolation(f"t must be at least 2, got {t}")
    m = 2 * t - 1
    if ctx is None:
        ctx = FieldContext(m)
    elif ctx.m != m:
        raise DimensionMismatch(f"ctx.m={ctx.m} does not match 2t-1={m}")
    js = sorted(set(int(j) for j in J))
    if not js:
        raise InvalidExponentSet("J must be nonempty")
    if any(j < 0 for j in js):
        raise InvalidExponentSet("exponent indices must be nonnegative")
    if js == [0]:
        raise InvalidExponentSet("J = {0} gives the linear function tr(x)")
    reduced = sorted(set(j % m for j in js))
    if len(reduced) != len(js):
        raise InvalidExponentSet(f"indices {js} collide after reduction mod {m}")
    exponents = [(1 << j) + 1 for j in reduced]
    leaders = [coset_leader(m, e) for e in exponents]
    if len(set(leaders)) != len(leaders):
        raise InvalidExponentSet(
            f"exponents {exponents} are not coset-distinct mod 2^{m}-1 "
            f"(leaders {leaders}); conjugate terms cancel"
        )
    f0 = trace_polynomial(ctx, exponents)
    spectrum = walsh(f0)
    if spectrum.classification is not Classification.NEAR_BENT:
        raise NotNearBent(
            f"quadratic seed for J={js} is not near-bent", spectrum.histogram
        )
    F = join(f0, f0 + trace_function(ctx))
    if walsh(F).classification is not Classification.BENT:
        raise BentVerificationFailed(f"joined function for J={js} failed the bent check")
    return F


def quadratic_exponent_sets(t: int):
    """All coset-distinct nonempty J inside {1, ..., (m-1)/2} for m = 2t - 1.

    Deterministic ascending order; a search helper for sweeping the family.
    """
    m = 2 * t - 1
    half = (m - 1) // 2
    from itertools import combinations

    for size in range(1, half + 1):
        for combo in combinations(range(1, half + 1), size):
            yield combo


def six_pack(f0: BooleanFunction, ctx: FieldContext) -> SixPack:
    """Grow the six bent functions from one near-bent seed with constant unit derivative."""
    F = bent_from_near_bent(f0, ctx)
    dual_F = dual(F, ctx)
    pd0, pd1 = _pseudo_duals_of_dual(dual_F, ctx)
    pd0_dual = dual(pd0, ctx)
    pd1_dual = dual(pd1, ctx)
    for fn in (pd0_dual, pd1_dual):
        if walsh(fn).classification is not Classification.BENT:
            raise BentVerificationFailed("a derived function failed the bent check")
    return SixPack(F, dual_F, pd0, pd1, pd0_dual, pd1_dual, ctx)


_COLLISION_FIRST = (7, 13, 19, 21)
_COLLISION_SECOND = (3, 11)


def pseudo_dual_collision_demo(ctx: FieldContext | None = None) -> CollisionReport:
    """Two bent functions with different duals but identical first pseudo-duals.

    Fixed seeds over GF(2^7): tr(x^7 + x^13 + x^19 + x^21) and tr(x^3 + x^11),
    each joined with itself plus tr.
    """
    if ctx is None:
        ctx = FieldContext(7)
    elif ctx.m != 7:
        raise DimensionMismatch(f"the collision pair lives over GF(2^7), got m={ctx.m}")
    tr = trace_function(ctx)
    functions = []
    for exponents in (_COLLISION_FIRST, _COLLISION_SECOND):
        f0 = trace_polynomial(ctx, exponents)
        functions.append(join(f0, f0 + tr))
    first, second = functions
    items = [
        CheckItem("first-bent", walsh(first).classification is Classification.BENT),
        CheckItem("second-bent", walsh(second).classification is Classification.BENT),
    ]
    if items[0].passed and items[1].passed:
        duals = (dual(first, ctx), dual(second, ctx))
        pd_first = _pseudo_duals_of_dual(duals[0], ctx)[0]
        pd_second = _pseudo_duals_of_dual(duals[1], ctx)[0]
        items.append(CheckItem("duals-differ", duals[0] != duals[1]))
        items.append(CheckItem("first-pseudo-duals-identical", pd_first == pd_second))
    return CollisionReport(first, second, CheckReport("pseudo-dual-collision", items))


# ---------------------------------------------------------------------------
# orchestration


def verify_function(F: BooleanFunction, ctx: FieldContext) -> VerificationSuite:
    """Run every applicable checker on an even-dimensional function."""
    spectrum = walsh(F)
    bent_ok = spectrum.classification is Classification.BENT
    reports = [
        CheckReport(
            "bent-classification",
            [CheckItem("classifies-bent", bent_ok,
                       detail=f"classification={spectrum.classification.value}")],
        )
    ]
    if not bent_ok:
        return VerificationSuite(None, reports, [SkippedCheck("all", "input is not bent")])

    flags = condition_flags(F, ctx)
    skipped: list[SkippedCheck] = []
    reports.append(check_component_derivative_pairing(F, ctx))

    if flags.xi == 0:
        reports.append(check_dual_unit_derivatives(F, ctx))
        reports.append(dual_support_analysis(F, ctx).report)
        if flags.d1_f0 is not None:
            reports.append(check_dual_component_sum(F, ctx))
        else:
            skipped.append(SkippedCheck("dual-component-sum", "unit derivative of f0 not constant"))
    else:
        reason = "component sum is tr + 1" if flags.xi == 1 else "component sum is not the trace"
        skipped.append(SkippedCheck("dual-unit-derivatives", reason))
        skipped.append(SkippedCheck("dual-support", reason))
        skipped.append(SkippedCheck("dual-component-sum", reason))

    if flags.has_T:
        reports.append(check_pseudo_dual_conditions(F, ctx))
    else:
        skipped.append(SkippedCheck("pseudo-dual-conditions", "component sum is not tr or tr + 1"))

    pair = split(F, ctx)
    for label, component in (("f0", pair.f0), ("f1", pair.f1)):
        if component.derivative(1).is_constant() is not None:
            report = check_spectrum_zero_set(component, ctx)
            report.name = f"spectrum-zero-set-{label}"
            reports.append(report)
        else:
            skipped.append(
                SkippedCheck(f"spectrum-zero-set-{label}", "unit derivative not constant")
            )

    return VerificationSuite(flags, reports, skipped)
