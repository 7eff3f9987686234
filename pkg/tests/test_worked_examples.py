import pytest

from bentfn.worked_examples import EXAMPLES, run_all, run_collision_demo, run_example


def test_catalogue_ids_unique():
    ids = [ex.example_id for ex in EXAMPLES]
    assert len(set(ids)) == len(ids)


@pytest.mark.parametrize("example", EXAMPLES, ids=lambda ex: ex.example_id)
def test_each_example_passes(example):
    result = run_example(example)
    failed = [c.name for c in result.checks if not c.passed]
    assert not failed, failed


def test_collision_demo_passes():
    assert run_collision_demo().passed


def test_run_all_covers_catalogue_plus_collision():
    results = run_all()
    assert len(results) == len(EXAMPLES) + 1
    assert all(result.passed for result in results)


def test_m7_examples_pass_under_alternative_polynomial(ctx7_alt):
    for example in EXAMPLES:
        if example.m != 7:
            continue
        result = run_example(example, ctx7_alt)
        failed = [c.name for c in result.checks if not c.passed]
        assert not failed, (example.example_id, failed)


def test_result_serialization():
    result = run_example(EXAMPLES[0])
    payload = result.as_dict()
    assert payload["example_id"] == EXAMPLES[0].example_id
    assert payload["passed"] is True
    assert len(payload["checks"]) == len(result.checks)
