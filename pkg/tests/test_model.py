import math
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from makespan import (
    Instance,
    InvalidInstance,
    InvalidMachineIndex,
    InvalidSchedule,
    LengthMismatch,
    is_essential,
    job_sets,
    loads,
    make_instance,
    makespan,
    schedule_from_job_sets,
    theoretical_opt,
)


@st.composite
def instances(draw, max_machines=4, max_jobs=8, max_time=20):
    m = draw(st.integers(2, max_machines))
    times = draw(st.lists(st.integers(1, max_time), min_size=1, max_size=max_jobs))
    return make_instance(m, times)


@st.composite
def instances_with_schedule(draw):
    instance = draw(instances())
    schedule = tuple(
        draw(st.integers(1, instance.machine_count))
        for _ in range(instance.job_count)
    )
    return instance, schedule


class TestMakeInstance:
    def test_basic(self):
        inst = make_instance(2, [1, 1, 3])
        assert inst.machine_count == 2
        assert inst.processing_times == (1, 1, 3)
        assert inst.job_count == 3
        assert inst.total_work == 5

    def test_single_job(self):
        inst = make_instance(2, [5])
        assert inst.processing_times == (5,)

    def test_zero_time_rejected(self):
        with pytest.raises(InvalidInstance):
            make_instance(2, [1, 0, 3])

    def test_one_machine_rejected(self):
        with pytest.raises(InvalidInstance):
            make_instance(1, [1, 2])

    def test_empty_jobs_rejected(self):
        with pytest.raises(InvalidInstance):
            make_instance(2, [])

    def test_non_integer_rejected(self):
        with pytest.raises(InvalidInstance):
            make_instance(2, [1, 2.5])
        with pytest.raises(InvalidInstance):
            make_instance(2, [1, True])

    def test_direct_construction_validates_too(self):
        with pytest.raises(InvalidInstance):
            Instance(0, (1,))


class TestLoads:
    def test_split(self, demo_instance):
        assert loads(demo_instance, (1, 1, 2)) == [2, 3]

    def test_monochromatic(self, demo_instance):
        assert loads(demo_instance, (1, 1, 1)) == [5, 0]

    def test_symmetric(self):
        inst = make_instance(3, [4, 4, 4])
        assert loads(inst, (1, 2, 3)) == [4, 4, 4]

    def test_length_mismatch(self, demo_instance):
        with pytest.raises(LengthMismatch):
            loads(demo_instance, (1, 1))

    def test_bad_machine(self, demo_instance):
        with pytest.raises(InvalidMachineIndex):
            loads(demo_instance, (1, 3, 1))
        with pytest.raises(InvalidMachineIndex):
            loads(demo_instance, (1, 0, 1))


class TestMakespan:
    @pytest.mark.parametrize(
        "schedule,expected",
        [((1, 1, 2), 3), ((1, 2, 2), 4), ((2, 2, 2), 5)],
    )
    def test_values(self, demo_instance, schedule, expected):
        assert makespan(demo_instance, schedule) == expected


class TestIsEssential:
    def test_both_used(self, demo_instance):
        assert is_essential(demo_instance, (1, 1, 2)) is True

    def test_one_machine_idle(self, demo_instance):
        assert is_essential(demo_instance, (1, 1, 1)) is False

    def test_three_machines_one_idle(self):
        inst = make_instance(3, [1, 1, 1])
        assert is_essential(inst, (1, 2, 2)) is False


class TestTheoreticalOpt:
    def test_fractional(self, demo_instance):
        assert theoretical_opt(demo_instance) == Fraction(5, 2)

    def test_balanced(self):
        assert theoretical_opt(make_instance(2, [2, 2])) == 2

    def test_three_machines(self):
        assert theoretical_opt(make_instance(3, [1, 1, 1])) == 1


class TestJobSets:
    def test_round_trip(self, demo_instance):
        sets = job_sets(demo_instance, (1, 2, 1))
        assert sets == [{1, 3}, {2}]
        assert schedule_from_job_sets(sets) == (1, 2, 1)

    def test_overlap_rejected(self):
        with pytest.raises(InvalidSchedule):
            schedule_from_job_sets([{1, 2}, {2}])

    def test_gap_rejected(self):
        with pytest.raises(InvalidSchedule):
            schedule_from_job_sets([{1}, {3}])


class TestInvariants:
    @given(instances_with_schedule())
    @settings(max_examples=150, deadline=None)
    def test_load_conservation(self, case):
        instance, schedule = case
        assert sum(loads(instance, schedule)) == instance.total_work

    @given(instances_with_schedule())
    @settings(max_examples=150, deadline=None)
    def test_makespan_lower_bounds(self, case):
        instance, schedule = case
        value = makespan(instance, schedule)
        assert value >= math.ceil(instance.total_work / instance.machine_count)
        assert value >= max(instance.processing_times)

    @given(instances_with_schedule(), st.randoms(use_true_random=False))
    @settings(max_examples=150, deadline=None)
    def test_machine_relabeling_invariance(self, case, rng):
        instance, schedule = case
        relabel = list(range(1, instance.machine_count + 1))
        rng.shuffle(relabel)
        permuted = tuple(relabel[j - 1] for j in schedule)
        assert makespan(instance, permuted) == makespan(instance, schedule)

    @given(instances_with_schedule())
    @settings(max_examples=150, deadline=None)
    def test_essential_characterization(self, case):
        instance, schedule = case
        if instance.job_count < instance.machine_count:
            assert is_essential(instance, schedule) is False
        if instance.machine_count == 2:
            constant = len(set(schedule)) == 1
            assert is_essential(instance, schedule) == (not constant)
