"""Leave-account algebra: allocation, application, conservation, isolation."""
from __future__ import annotations

import dataclasses
from datetime import date, timedelta

import pytest
from hypothesis import given
from hypothesis import strategies as st

from hrms.domain import (
    LeaveType,
    apply_leave,
    days_taken,
    new_leave_account,
    remaining_leave,
)
from hrms.errors import (
    InsufficientBalance,
    InvalidLeaveDays,
    NegativeAllocation,
    UnknownLeaveType,
)

D = date(2024, 4, 1)


def fresh(vac=20, sick=10, hol=8):
    return new_leave_account("E000001", "Anita Rao", vac, sick, hol)


class TestNewAccount:
    def test_allocations_fill_balances(self):
        acct = fresh()
        assert acct.vacation_start == acct.vacation_balance == 20
        assert acct.sick_start == acct.sick_balance == 10
        assert acct.holiday_start == acct.holiday_balance == 8
        assert acct.vacation_last_taken is None
        assert acct.sick_last_taken is None
        assert acct.holiday_last_taken is None

    def test_zero_allocation_blocks_requests(self):
        acct = fresh(0, 0, 0)
        assert remaining_leave(acct, LeaveType.VACATION) == 0
        with pytest.raises(InsufficientBalance):
            apply_leave(acct, LeaveType.VACATION, 1, D)

    def test_negative_allocation_rejected(self):
        with pytest.raises(NegativeAllocation):
            fresh(vac=-1)


class TestApplyLeave:
    def test_subtracts_and_stamps_date(self):
        acct = apply_leave(fresh(), LeaveType.VACATION, 3, D)
        # subtraction oracle: 20 - 3 = 17
        assert acct.vacation_balance == 17
        assert acct.vacation_last_taken == D
        assert remaining_leave(acct, LeaveType.VACATION) == 17
        assert days_taken(acct, LeaveType.VACATION) == 3

    def test_other_types_untouched(self):
        before = fresh()
        after = apply_leave(before, LeaveType.VACATION, 3, D)
        for field in (
            "sick_start", "sick_balance", "sick_last_taken",
            "holiday_start", "holiday_balance", "holiday_last_taken",
        ):
            assert getattr(after, field) == getattr(before, field)

    def test_insufficient_balance_leaves_account_unchanged(self):
        acct = fresh(sick=1)
        snapshot = dataclasses.replace(acct)
        with pytest.raises(InsufficientBalance):
            apply_leave(acct, LeaveType.SICK, 2, D)
        assert acct == snapshot

    def test_exact_exhaustion(self):
        # subtraction oracle at the boundary: 8 - 8 = 0
        acct = apply_leave(fresh(), LeaveType.HOLIDAY, 8, D)
        assert acct.holiday_balance == 0

    def test_days_below_one_rejected(self):
        with pytest.raises(InvalidLeaveDays):
            apply_leave(fresh(), LeaveType.VACATION, 0, D)

    def test_unknown_type_rejected(self):
        with pytest.raises(UnknownLeaveType):
            apply_leave(fresh(), "Sabbatical", 1, D)
        with pytest.raises(UnknownLeaveType):
            remaining_leave(fresh(), "Sabbatical")

    def test_string_type_accepted(self):
        acct = apply_leave(fresh(), "vacation", 2, D)
        assert acct.vacation_balance == 18


requests = st.lists(
    st.tuples(st.sampled_from(list(LeaveType)), st.integers(min_value=1, max_value=6)),
    max_size=25,
)


@given(reqs=requests)
def test_conservation_over_any_request_sequence(reqs):
    """start - balance always equals the sum of successfully applied days,
    and a failed application changes nothing."""
    acct = fresh()
    applied = {kind: 0 for kind in LeaveType}
    day = date(2024, 1, 1)
    for kind, days in reqs:
        day += timedelta(days=1)
        before = acct
        try:
            acct = apply_leave(acct, kind, days, day)
            applied[kind] += days
        except InsufficientBalance:
            assert acct == before
    assert acct.vacation_start - acct.vacation_balance == applied[LeaveType.VACATION]
    assert acct.sick_start - acct.sick_balance == applied[LeaveType.SICK]
    assert acct.holiday_start - acct.holiday_balance == applied[LeaveType.HOLIDAY]
    for kind in LeaveType:
        assert days_taken(acct, kind) == applied[kind]
        assert remaining_leave(acct, kind) >= 0


def test_full_exhaustion_reaches_zero():
    acct = fresh()
    for _ in range(20):
        acct = apply_leave(acct, LeaveType.VACATION, 1, D)
    assert remaining_leave(acct, LeaveType.VACATION) == 0
    with pytest.raises(InsufficientBalance):
        apply_leave(acct, LeaveType.VACATION, 1, D)
