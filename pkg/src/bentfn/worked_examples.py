"""Bundled worked examples with known duals, pseudo-duals, and trace forms.

Each entry seeds a bent function F = join(f0, f0 + tr) from a trace
expression and records everything that is known about it in closed form:
condition flags, the dual's components, the duals of both pseudo-duals, and
coincidence structure among the six derived functions.  The catalogue backs
the ``bentfn examples`` command and the acceptance suite; all expectations
are compared coset-wise as trace forms or as exact truth tables.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field

from .boolfn import BooleanFunction, trace_function
from .constructions import (
    check_dual_component_sum,
    check_dual_unit_derivatives,
    check_pseudo_dual_conditions,
    condition_flags,
    dual_support_analysis,
    pseudo_dual_collision_demo,
    six_pack,
)
from .gf2m import FieldContext
from .spectrum import Classification, dual, walsh
from .tracerep import TraceForm, parse, to_trace_form
from .tvr import join, linear_form, split


@dataclass(frozen=True)
class WorkedExample:
    """One catalogued seed and its expected derived objects (trace expressions)."""

    example_id: str
    description: str
    m: int
    f0: str
    xi: int = 0
    has_C: bool = False
    d1_constant: int | None = None
    dual0: str | None = None
    dual_offset: str | None = None
    pd0_dual0: str | None = None
    pd0_dual_offset: str | None = None
    pd1_dual0: str | None = None
    pd1_dual_offset: str | None = None
    zero_indicator: str | None = None
    self_dual: bool = False
    pd0_equals_dual: bool = False
    pd0_dual_equals_base: bool = False
    pd0_self_dual: bool = False
    pd1_is_dual_plus_trace_form: bool = False
    pd1_dual_is_base_plus_nu_form: bool = False
    exact_class_count: int | None = None
    reduced_class_count: int | None = None
    all_degrees: int | None = None


EXAMPLES: tuple[WorkedExample, ...] = (
    WorkedExample(
        example_id="kasami-welch-t4-s2",
        description="Kasami-Welch seed tr(x^13) over GF(2^7)",
        m=7,
        f0="tr(x^13)",
        xi=0,
        has_C=False,
        d1_constant=None,
        dual0="tr(x^7+x^11+x^19+x^21)",
        dual_offset="tr(x^5+1)",
        pd0_dual0="tr(x+x^3+x^7+x^11+x^19+x^21)",
        pd0_dual_offset="tr(x)",
        pd1_dual0="tr(1+x^5+x^7+x^9+x^11+x^19+x^21)",
        pd1_dual_offset="tr(x+1)",
        zero_indicator="1+tr(x^5)",
    ),
    WorkedExample(
        example_id="quadratic-x3-x9",
        description="quadratic seed tr(x^3+x^9) over GF(2^7)",
        m=7,
        f0="tr(x^3+x^9)",
        xi=0,
        has_C=True,
        d1_constant=0,
        dual0="tr(x^9+x)",
        dual_offset="tr(x)",
        pd1_dual0="tr(x^3+x^9)",
        pd1_dual_offset="tr(x+1)",
        pd0_equals_dual=True,
        pd0_dual_equals_base=True,
        pd1_is_dual_plus_trace_form=True,
        pd1_dual_is_base_plus_nu_form=True,
        exact_class_count=4,
        reduced_class_count=2,
        all_degrees=2,
    ),
    WorkedExample(
        example_id="x7-x13",
        description="seed tr(x^7+x^13) over GF(2^7): trace condition without constant derivative",
        m=7,
        f0="tr(x^7+x^13)",
        xi=0,
        has_C=False,
        d1_constant=None,
        dual0="tr(x^5+x^7+x^9+x^13+x^19+x^21)",
        dual_offset="tr(x+x^5+x^9)",
        pd0_dual0="tr(x+x^7+x^9+x^13+x^19+x^21)",
        pd0_dual_offset="tr(x)",
        pd1_dual0="tr(x+x^3+x^7+x^13+x^19+x^21)",
        pd1_dual_offset="tr(x+1)",
    ),
    WorkedExample(
        example_id="x15-x27-x29-x43",
        description="seed tr(x^15+x^27+x^29+x^43) over GF(2^7): self-dual first pseudo-dual",
        m=7,
        f0="tr(x^15+x^27+x^29+x^43)",
        xi=0,
        has_C=False,
        d1_constant=None,
        dual0="tr(x+x^3+x^5+x^9)",
        dual_offset="tr(x^5+x^7+x^11+x^19+x^21)",
        pd1_dual0="tr(x+x^3+x^5+x^7+x^9+x^11+x^19+x^21)",
        pd1_dual_offset="tr(x+1)",
        pd0_self_dual=True,
    ),
    WorkedExample(
        example_id="x1-x3-x7-x11-x19-x21",
        description="seed tr(x+x^3+x^7+x^11+x^19+x^21) over GF(2^7): two classes",
        m=7,
        f0="tr(x+x^3+x^7+x^11+x^19+x^21)",
        xi=0,
        has_C=True,
        d1_constant=0,
        dual0="tr(x^7+x^11+x^19+x^21)",
        dual_offset="tr(x)",
        pd0_equals_dual=True,
        pd0_dual_equals_base=True,
        pd1_is_dual_plus_trace_form=True,
        pd1_dual_is_base_plus_nu_form=True,
        exact_class_count=4,
        reduced_class_count=2,
    ),
    WorkedExample(
        example_id="x3-x5-x7-x11-x19-x21",
        description="seed tr(x^3+x^5+x^7+x^11+x^19+x^21) over GF(2^7): self-dual, one class",
        m=7,
        f0="tr(x^3+x^5+x^7+x^11+x^19+x^21)",
        xi=0,
        has_C=True,
        d1_constant=0,
        dual0="tr(x^3+x^5+x^7+x^11+x^19+x^21)",
        dual_offset="tr(x)",
        self_dual=True,
        pd0_equals_dual=True,
        pd0_dual_equals_base=True,
        pd1_is_dual_plus_trace_form=True,
        pd1_dual_is_base_plus_nu_form=True,
        exact_class_count=3,
        reduced_class_count=1,
    ),
    WorkedExample(
        example_id="kasami-welch-t6-s4-dim12",
        description="Kasami-Welch seed tr(x^241+x) over GF(2^11), dimension 12",
        m=11,
        f0="tr(x^241+x)",
        xi=0,
        has_C=False,
        d1_constant=None,
    ),
)


@dataclass(frozen=True)
class ExampleCheck:
    name: str
    passed: bool
    detail: str = ""


@dataclass(eq=False)
class ExampleResult:
    example_id: str
    checks: list[ExampleCheck] = field(default_factory=list)
    duration: float = 0.0

    @property
    def passed(self) -> bool:
        return all(check.passed for check in self.checks)

    def as_dict(self) -> dict:
        return {
            "example_id": self.example_id,
            "passed": self.passed,
            "duration_seconds": round(self.duration, 4),
            "checks": [
                {"name": c.name, "passed": c.passed, **({"detail": c.detail} if c.detail else {})}
                for c in self.checks
            ],
        }


def _form(fn: BooleanFunction, ctx: FieldContext) -> TraceForm:
    return to_trace_form(fn, ctx)


def run_example(ex: WorkedExample, ctx: FieldContext | None = None) -> ExampleResult:
    """Build the example's function and compare every recorded expectation."""
    start = time.perf_counter()
    if ctx is None:
        ctx = FieldContext(ex.m)
    checks: list[ExampleCheck] = []

    def check(name, passed, detail=""):
        checks.append(ExampleCheck(name, bool(passed), detail))

    tr = trace_function(ctx)
    f0 = parse(ex.f0, ctx)
    F = join(f0, f0 + tr)

    spectrum = walsh(F)
    check("bent", spectrum.classification is Classification.BENT,
          f"classification={spectrum.classification.value}")
    flags = condition_flags(F, ctx)
    check("trace-condition", flags.xi == ex.xi, f"xi={flags.xi}")
    check("zero-derivative-condition", flags.has_C == ex.has_C, f"has_C={flags.has_C}")
    check("derivative-constant", flags.d1_f0 == ex.d1_constant, f"d1_f0={flags.d1_f0}")

    dual_F = dual(F, ctx)
    dual_pair = split(dual_F, ctx)
    if ex.dual0 is not None:
        expected = _form(parse(ex.dual0, ctx), ctx)
        check("dual-first-form", _form(dual_pair.f0, ctx) == expected)
    if ex.dual_offset is not None:
        expected = _form(parse(ex.dual_offset, ctx), ctx)
        check("dual-offset-form", _form(dual_pair.f0 + dual_pair.f1, ctx) == expected)

    support = dual_support_analysis(F, ctx)
    check("dual-support", support.passed)
    if ex.zero_indicator is not None:
        expected = _form(parse(ex.zero_indicator, ctx), ctx)
        check("zero-indicator-form", _form(support.g, ctx) == expected)

    check("dual-unit-derivatives", check_dual_unit_derivatives(F, ctx).passed)
    if ex.d1_constant is not None:
        check("dual-component-sum", check_dual_component_sum(F, ctx).passed)
    check("pseudo-dual-conditions", check_pseudo_dual_conditions(F, ctx).passed)

    # the four derived functions
    pd0 = join(dual_pair.f0, dual_pair.f0 + tr)
    pd1 = join(dual_pair.f1, dual_pair.f1 + tr)
    pd0_dual = dual(pd0, ctx)
    pd1_dual = dual(pd1, ctx)
    for name, fn in (("pseudo0", pd0), ("pseudo1", pd1),
                     ("pseudo0-dual", pd0_dual), ("pseudo1-dual", pd1_dual)):
        check(f"{name}-bent", walsh(fn).classification is Classification.BENT)

    if ex.pd0_dual0 is not None:
        pair = split(pd0_dual, ctx)
        check("pseudo0-dual-first-form",
              _form(pair.f0, ctx) == _form(parse(ex.pd0_dual0, ctx), ctx))
        if ex.pd0_dual_offset is not None:
            check("pseudo0-dual-offset-form",
                  _form(pair.f0 + pair.f1, ctx) == _form(parse(ex.pd0_dual_offset, ctx), ctx))
    if ex.pd1_dual0 is not None:
        pair = split(pd1_dual, ctx)
        check("pseudo1-dual-first-form",
              _form(pair.f0, ctx) == _form(parse(ex.pd1_dual0, ctx), ctx))
        if ex.pd1_dual_offset is not None:
            check("pseudo1-dual-offset-form",
                  _form(pair.f0 + pair.f1, ctx) == _form(parse(ex.pd1_dual_offset, ctx), ctx))

    if ex.self_dual:
        check("self-dual", dual_F == F)
    if ex.pd0_equals_dual:
        check("pseudo0-equals-dual", pd0 == dual_F)
    if ex.pd0_dual_equals_base:
        check("pseudo0-dual-equals-base", pd0_dual == F)
    if ex.pd0_self_dual:
        check("pseudo0-self-dual", pd0_dual == pd0)
    if ex.pd1_is_dual_plus_trace_form:
        check("pseudo1-is-dual-plus-trace-form", pd1 == dual_F + linear_form(ctx, 1, 0))
    if ex.pd1_dual_is_base_plus_nu_form:
        check("pseudo1-dual-is-base-plus-nu-form", pd1_dual == F + linear_form(ctx, 0, 1))

    if ex.exact_class_count is not None or ex.reduced_class_count is not None:
        pack = six_pack(f0, ctx)
        if ex.exact_class_count is not None:
            classes = pack.coincidence_classes()
            check("exact-coincidence-classes", len(classes) == ex.exact_class_count,
                  f"{len(classes)} classes")
        if ex.reduced_class_count is not None:
            classes = pack.coincidence_classes(modulo_structural_forms=True)
            check("reduced-coincidence-classes", len(classes) == ex.reduced_class_count,
                  f"{len(classes)} classes")

    if ex.all_degrees is not None:
        degrees = {F.degree(), dual_F.degree(), pd0.degree(), pd1.degree(),
                   pd0_dual.degree(), pd1_dual.degree(),
                   dual_pair.f0.degree(), dual_pair.f1.degree()}
        check("degrees", degrees == {ex.all_degrees}, f"degrees={sorted(degrees)}")

    return ExampleResult(ex.example_id, checks, time.perf_counter() - start)


def run_collision_demo(ctx: FieldContext | None = None) -> ExampleResult:
    """The non-injectivity demonstration as a catalogue entry."""
    start = time.perf_counter()
    report = pseudo_dual_collision_demo(ctx)
    checks = [ExampleCheck(item.name, item.passed) for item in report.report.items]
    return ExampleResult("pseudo-dual-collision", checks, time.perf_counter() - start)


def run_all(contexts: dict[int, FieldContext] | None = None) -> list[ExampleResult]:
    """Run the whole catalogue plus the collision demonstration, in catalogue order."""
    contexts = contexts or {}
    results = [run_example(ex, contexts.get(ex.m)) for ex in EXAMPLES]
    results.append(run_collision_demo(contexts.get(7)))
    return results
