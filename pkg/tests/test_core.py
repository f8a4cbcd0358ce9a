import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from hypothesis.extra.numpy import arrays

from accs.core import (
    Candidate,
    DimensionError,
    InvalidRangeError,
    RngStream,
    RunRecord,
    SearchSpace,
    clamp,
    int_inclusive,
    uniform,
)


def test_uniform_degenerate_interval():
    assert uniform(RngStream(3), 0.0, 0.0) == 0.0


def test_uniform_two_draws_distinct_and_in_range():
    rng = RngStream(42)
    a, b = uniform(rng, 0, 1), uniform(rng, 0, 1)
    assert a != b
    assert 0 <= a < 1 and 0 <= b < 1


def test_uniform_replay_identical():
    r1, r2 = RngStream(42), RngStream(42)
    seq1 = [uniform(r1, -3, 5) for _ in range(100)]
    seq2 = [uniform(r2, -3, 5) for _ in range(100)]
    assert seq1 == seq2


def test_uniform_rejects_inverted_range():
    with pytest.raises(InvalidRangeError):
        uniform(RngStream(0), 1.0, 0.0)


def test_int_inclusive_singleton():
    assert int_inclusive(RngStream(9), 3, 3) == 3


def test_int_inclusive_coverage():
    rng = RngStream(7)
    draws = [int_inclusive(rng, 1, 30) for _ in range(10_000)]
    assert min(draws) >= 1 and max(draws) <= 30
    assert set(draws) == set(range(1, 31))


def test_int_inclusive_replay():
    r1, r2 = RngStream(7), RngStream(7)
    assert [int_inclusive(r1, 1, 30) for _ in range(200)] == [int_inclusive(r2, 1, 30) for _ in range(200)]


def test_int_inclusive_rejects_inverted_range():
    with pytest.raises(InvalidRangeError):
        int_inclusive(RngStream(0), 5, 4)


def test_distinct_streams_differ():
    a = RngStream(1, 0).random(1000)
    b = RngStream(1, 1).random(1000)
    assert not np.array_equal(a, b)
    # crude independence check: correlation near zero
    assert abs(np.corrcoef(a, b)[0, 1]) < 0.1


def test_stream_is_bit_stable():
    # frozen from numpy's PCG64/SeedSequence; guards against accidental reseeding changes
    first = RngStream(42, 0).random(3)
    again = RngStream(42, 0).random(3)
    assert first.tobytes() == again.tobytes()
    assert RngStream(42, 0).spawn(5).random() == RngStream(42, 5).random()


def test_stream_rejects_negative_seed():
    with pytest.raises(InvalidRangeError):
        RngStream(-1)


@pytest.mark.parametrize(
    "x, expected",
    [((50, -50), (50, -50)), ((150, -150), (100, -100)), ((0, 101), (0, 100))],
)
def test_clamp_examples(x, expected):
    space = SearchSpace.uniform_box(-100, 100, 2)
    assert clamp(np.array(x, float), space).tolist() == list(expected)


def test_clamp_dimension_mismatch():
    with pytest.raises(DimensionError):
        clamp(np.zeros(3), SearchSpace.uniform_box(-1, 1, 2))


@settings(max_examples=200)
@given(arrays(np.float64, 4, elements=st.floats(-1e6, 1e6)))
def test_clamp_idempotent_and_fixes_inbounds(x):
    space = SearchSpace(np.array([-1.0, -10, 0, 5]), np.array([1.0, 10, 3, 6]))
    once = clamp(x, space)
    assert np.array_equal(clamp(once, space), once)
    assert space.contains(once)
    inside = (x >= space.lower) & (x <= space.upper)
    assert np.array_equal(once[inside], x[inside])


def test_search_space_validation():
    with pytest.raises(InvalidRangeError):
        SearchSpace(np.array([0.0, 1.0]), np.array([1.0, 1.0]))
    with pytest.raises(DimensionError):
        SearchSpace(np.array([0.0]), np.array([1.0, 2.0]))
    with pytest.raises(DimensionError):
        SearchSpace.uniform_box(0, 1, 0)
    s = SearchSpace.uniform_box(-5, 5, 3)
    assert s.dim == 3 and s.is_uniform
    assert s == SearchSpace.uniform_box(-5, 5, 3)


def test_candidate_immutable_position():
    c = Candidate(np.array([1.0, 2.0]), 3.0)
    with pytest.raises(ValueError):
        c.position[0] = 5.0
    assert c.evaluated
    assert not Candidate(np.zeros(2)).evaluated


def test_run_record_monotone_helper():
    rec = RunRecord("a", "F1", 0, [3.0, 2.0, 2.0, 1.0], np.zeros(2), 1.0, 10)
    assert rec.is_monotone() and rec.iterations == 4
    rec.best_per_iteration = np.array([1.0, 2.0])
    assert not rec.is_monotone()
