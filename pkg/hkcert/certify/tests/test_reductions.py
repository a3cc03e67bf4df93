"""Test the reductions as lattice morphisms."""

# License: MIT

from dataclasses import replace

import pytest
from sklearn.utils import check_random_state

from hkcert.certify import (
    ReductionStep,
    divide_d_by_square,
    divide_n_by_square,
    four_power_strip,
    gamma2_to_n2,
    non_empty_components,
    strange_duality_step,
)
from hkcert.certify._reductions import rebuild_step
from hkcert.exceptions import DivisibilityViolation


@pytest.mark.parametrize(
    "step, target",
    [
        (divide_d_by_square(15, 12, 2), (15, 3, 1, 0)),
        (four_power_strip(15, 48, 2), (15, 3, 1, 0)),
        (divide_n_by_square(37, 5, 3), (5, 5, 1, 0)),
        (divide_n_by_square(10, 12, 3), (2, 12, 1, 0)),
        (gamma2_to_n2(10, 51), (2, 51, 2, 1)),
        (gamma2_to_n2(26, 11), (2, 11, 2, 1)),
        (strange_duality_step(10, 3, 1, 0), (4, 9, 1, 0)),
        (strange_duality_step(26, 150, 5, 2), (151, 25, 5, 2)),
    ],
)
def test_reduction_steps_preserve_gram(step, target):
    assert step.target == target
    assert step.check()
    assert step.image_gram() == step.source_gram().entries


def test_strange_duality_gamma1_swaps_basis():
    assert strange_duality_step(10, 3, 1, 0).morphism == ((0, 1), (1, 0))


def test_strange_duality_isometry_random():
    rng = check_random_state(0)
    n_checked = 0
    while n_checked < 300:
        gamma = int(rng.randint(1, 40))
        n = int(rng.randint(2, 300))
        d = int(rng.randint(1, 3000))
        components = non_empty_components("k3n", n, d, gamma)
        if components.is_empty:
            continue
        for a in components:
            assert strange_duality_step(n, d, gamma, a).check(), (n, d, gamma, a)
        n_checked += 1


@pytest.mark.parametrize(
    "builder, args",
    [
        (divide_d_by_square, (15, 12, 3)),
        (four_power_strip, (15, 8, 2)),
        (divide_n_by_square, (15, 5, 2)),
        (gamma2_to_n2, (5, 11)),
        (gamma2_to_n2, (4, 11)),
    ],
)
def test_reduction_steps_reject_bad_parameters(builder, args):
    with pytest.raises(DivisibilityViolation):
        builder(*args)


def test_gamma2_to_n2_requires_non_empty():
    assert not gamma2_to_n2(10, 12).check()


def test_tampered_morphism_is_invalid():
    step = divide_d_by_square(15, 12, 2)
    assert not replace(step, morphism=((1, 0), (0, 3))).check()
    assert not replace(step, name="strange_duality").check()


def test_unknown_step_name():
    with pytest.raises(ValueError, match="'name' must be one of"):
        ReductionStep("halve", 2, (15, 12, 1, 0), (15, 6, 1, 0), ((1, 0), (0, 1)))


def test_reduction_step_record():
    step = strange_duality_step(26, 150, 5, 2)
    record = step.to_dict()
    assert record["valid"] is True
    assert ReductionStep.from_dict(record) == step
    assert rebuild_step(step.name, step.source, step.param) == step
