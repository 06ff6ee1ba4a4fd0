import threading

import pytest
from hypothesis import given, settings

from conftest import odd_partitions
from hallforge.bijection import (
    block_law_holds,
    feed,
    grow,
    inverse_table,
    new_state,
    odd_blocks,
    phi,
    phi_infinite,
    phi_inverse,
    reduce_lh,
    reduce_odd,
    restore_lh,
    restore_odd,
    step_identity_violations,
    trace,
)
from hallforge.errors import (
    EvenPart,
    NotLectureHall,
    NotOddParty,
    OrderViolation,
    OutOfRange,
    PartTooLarge,
)
from hallforge.families import (
    enumerate_lh_up_to,
    enumerate_op_up_to,
    enumerate_reduced_lh,
    enumerate_reduced_odd,
    is_lecture_hall,
    is_reduced_lh,
    is_reduced_odd,
)
from hallforge.partition import EMPTY, IncrementVector, Partition, parse_partition
from hallforge.trapezoid import trapezoid_partition
from hallforge.verifiers.structural import action_step_violations


def P(*parts):
    return Partition(parts)


WORKED_INPUT = parse_partition("1^4 3^2 7^3 9 11")
WORKED_IMAGE = P(20, 13, 9, 6, 2, 1)

# part, i, A, I after, mu after
WORKED_TRACE = [
    (11, 1, (6, 5), (1, 0, 0, 0, 0, 0, 0), (6, 5)),
    (9, 2, (1, 1, 4, 3), (0, 1, 0, 0, 0, 0, 0), (7, 6, 4, 3)),
    (7, 1, (4, 3), (3, 1, 0, 0, 0, 0, 0), (11, 9, 4, 3)),
    (7, 3, (1, 1, 1, 1, 2, 1), (2, 0, 1, 0, 0, 0, 0), (12, 10, 5, 4, 2, 1)),
    (7, 2, (1, 1, 3, 2), (1, 2, 1, 0, 0, 0, 0), (13, 11, 8, 6, 2, 1)),
    (3, 4, (1, 1, 1), (0, 1, 0, 2, 0, 0, 0), (14, 12, 9, 6, 2, 1)),
    (3, 1, (2, 1), (5, 1, 0, 2, 0, 0, 0), (16, 13, 9, 6, 2, 1)),
    (1, 3, (1,), (4, 0, 4, 2, 0, 0, 0), (17, 13, 9, 6, 2, 1)),
    (1, 2, (1,), (3, 5, 4, 2, 0, 0, 0), (18, 13, 9, 6, 2, 1)),
    (1, 5, (1,), (2, 4, 3, 1, 2, 0, 0), (19, 13, 9, 6, 2, 1)),
    (1, 6, (1,), (1, 3, 2, 0, 1, 1, 0), (20, 13, 9, 6, 2, 1)),
]


class TestWorkedExample:
    def test_image(self):
        assert phi(7, WORKED_INPUT, check=True) == WORKED_IMAGE

    def test_final_state(self):
        state = grow(7, WORKED_INPUT, check=True)
        assert state.counter == (1, 3, 2, 0, 1, 1, 0)
        assert state.actions == (3, 3, 2, 1, 1, 1, 0)
        assert state.last_part == 1

    def test_trace(self):
        steps = trace(7, WORKED_INPUT)
        assert len(steps) == len(WORKED_TRACE)
        for step, (part, row, increment, counter, mu) in zip(steps, WORKED_TRACE):
            assert step.part == part
            assert step.row == row
            assert step.increment.stripped() == increment
            assert step.counter == counter
            assert step.mu == Partition(mu)

    def test_trace_json(self):
        first = trace(7, WORKED_INPUT)[0].to_json()
        assert first == {
            "part": 11, "k": 6, "i": 1, "A": [6, 5],
            "I": [1, 0, 0, 0, 0, 0, 0], "d": [1, 0, 0, 0, 0, 0, 0], "mu": [6, 5],
        }

    def test_inverse(self):
        assert phi_inverse(7, WORKED_IMAGE) == WORKED_INPUT


class TestSmallValues:
    @pytest.mark.parametrize("N, lam, expected", [
        (7, P(11), P(6, 5)),
        (3, P(5, 5), P(6, 4)),
        (4, P(5, 5), P(4, 3, 2, 1)),
        (7, P(5, 5), P(4, 3, 2, 1)),
        (3, P(3, 1, 1), P(4, 1)),
        (3, P(1, 1), P(2)),
        (1, EMPTY, EMPTY),
    ])
    def test_phi(self, N, lam, expected):
        assert phi(N, lam, check=True) == expected

    def test_reduced_images_at_three(self):
        images = {phi(3, lam) for lam in enumerate_reduced_odd(3)}
        assert images == enumerate_reduced_lh(3)

    @pytest.mark.parametrize("k, m", [(1, 1), (2, 3), (3, 2), (6, 1), (4, 4)])
    def test_infinite_width(self, k, m):
        expected = phi_infinite(k, m)
        assert expected == trapezoid_partition(k + m - 1, k)
        block = Partition((2 * k - 1,) * m)
        for N in range(k + m - 1, k + m + 3):
            assert phi(N, block) == expected


class TestFeedErrors:
    def test_even_part(self):
        with pytest.raises(EvenPart):
            feed(new_state(3), 2)

    def test_part_too_large(self):
        with pytest.raises(PartTooLarge):
            feed(new_state(3), 7)

    def test_order(self):
        with pytest.raises(OrderViolation):
            feed(feed(new_state(3), 1), 3)

    def test_width(self):
        with pytest.raises(OutOfRange):
            new_state(0)

    def test_phi_needs_odd_party(self):
        with pytest.raises(NotOddParty):
            phi(3, P(7))

    def test_inverse_needs_lecture_hall(self):
        with pytest.raises(NotLectureHall):
            phi_inverse(2, P(1, 1))


class TestReductions:
    def test_reduce_odd(self):
        lam = P(5, 5, 3, 3, 1, 1, 1, 1)
        result = reduce_odd(3, lam)
        assert result.reduced == P(1)
        assert result.counts == (1, 1, 2)
        assert restore_odd(3, result) == lam
        assert odd_blocks(3, result.counts) == P(5, 5, 3, 3, 1, 1, 1)

    @pytest.mark.parametrize("mu, counts", [
        (P(3), (1, 0, 0)),
        (P(3, 2), (0, 0, 1)),
        (P(3, 2, 1), (0, 1, 0)),
    ])
    def test_reduce_trapezoids(self, mu, counts):
        result = reduce_lh(3, mu)
        assert result.reduced == EMPTY
        assert result.counts == counts

    def test_reduce_lh_needs_lecture_hall(self):
        with pytest.raises(NotLectureHall):
            reduce_lh(2, P(1, 1))

    @pytest.mark.parametrize("N", range(1, 6))
    def test_reduced_and_restored(self, N):
        for mu in enumerate_lh_up_to(N, 24):
            result = reduce_lh(N, mu)
            assert is_reduced_lh(result.reduced, N)
            assert restore_lh(N, result) == mu
            assert reduce_lh(N, mu, order="largest") == result

    @pytest.mark.parametrize("N", range(1, 6))
    def test_reductions_commute(self, N):
        for lam in enumerate_op_up_to(N, 24):
            odd = reduce_odd(N, lam)
            hall = reduce_lh(N, phi(N, lam))
            assert hall.counts == odd.counts
            assert hall.reduced == phi(N, odd.reduced)


class TestBijection:
    @pytest.mark.parametrize("N", range(1, 7))
    def test_reduced_bijection(self, N):
        reduced = enumerate_reduced_odd(N)
        images = {}
        for lam in reduced:
            mu = phi(N, lam)
            assert mu.size == lam.size
            assert mu.alt_size == lam.length
            images[mu] = lam
        assert len(images) == len(reduced)
        assert set(images) == enumerate_reduced_lh(N)

    @pytest.mark.slow
    def test_reduced_bijection_at_seven(self):
        images = {phi(7, lam) for lam in enumerate_reduced_odd(7)}
        assert images == enumerate_reduced_lh(7)

    @pytest.mark.parametrize("N", range(1, 5))
    def test_truncated_roundtrips(self, N):
        for lam in enumerate_op_up_to(N, 24):
            mu = phi(N, lam)
            assert is_lecture_hall(mu, N)
            assert is_reduced_odd(lam, N) == is_reduced_lh(mu, N)
            assert phi_inverse(N, mu) == lam
        for mu in enumerate_lh_up_to(N, 24):
            assert phi(N, phi_inverse(N, mu)) == mu

    @pytest.mark.slow
    def test_roundtrips_at_five(self):
        for lam in enumerate_op_up_to(5, 40):
            assert phi_inverse(5, phi(5, lam)) == lam
        for mu in enumerate_lh_up_to(5, 40):
            assert phi(5, phi_inverse(5, mu)) == mu

    @settings(max_examples=200, deadline=None)
    @given(odd_partitions(6, max_length=14))
    def test_random_roundtrip(self, lam):
        mu = phi(6, lam, check=True)
        assert mu.size == lam.size
        assert mu.alt_size == lam.length
        assert phi_inverse(6, mu) == lam


class TestStepIdentities:
    @pytest.mark.parametrize("mu, expected", [
        ((1,), ["mu_1 not congruent to -I mod 3", "mu_1=1 != 0"]),
        ((3,), ["mu_1=3 != 0"]),
        ((), []),
    ])
    def test_congruence_checked_on_its_own(self, mu, expected):
        zeros = (0, 0, 0)
        assert step_identity_violations(IncrementVector(mu), zeros, zeros, 3, 1) == expected

    @pytest.mark.parametrize("N", range(1, 6))
    def test_action_counts_step_by_at_most_one(self, N):
        for lam in enumerate_reduced_odd(N):
            assert action_step_violations(grow(N, lam, check=True).actions) == []

    @pytest.mark.parametrize("N", range(1, 5))
    def test_block_law_on_reduced(self, N):
        for k in range(1, N + 1):
            block = Partition((2 * k - 1,) * (N - k + 1))
            for lam in enumerate_reduced_odd(N):
                assert block_law_holds(N, lam, k)
                assert grow(N, lam | block).counter == grow(N, lam).counter

    @settings(max_examples=100, deadline=None)
    @given(odd_partitions(5))
    def test_block_law_random(self, lam):
        for k in range(1, 6):
            assert block_law_holds(5, lam, k)


def test_inverse_table_built_once_across_threads():
    tables = []

    def worker():
        tables.append(inverse_table(4))
        assert len(tables[-1]) == 24

    threads = [threading.Thread(target=worker) for _ in range(8)]
    for t in threads:
        t.start()
    for t in threads:
        t.join()
    assert all(t is tables[0] for t in tables)
