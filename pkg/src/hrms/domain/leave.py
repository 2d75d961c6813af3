"""Leave-balance algebra over :class:`LeaveAccount` values.

Accounts are immutable; a successful application returns a new account and
a failed one raises without producing a value, so the conservation
invariant (allocation - balance == days taken) holds for any sequence of
calls.
"""
from __future__ import annotations

from dataclasses import replace
from datetime import date

from hrms.domain.records import LeaveAccount, LeaveType
from hrms.errors import InsufficientBalance, InvalidLeaveDays, NegativeAllocation

# leave type -> (start field, balance field, last-taken field)
_FIELDS: dict[LeaveType, tuple[str, str, str]] = {
    LeaveType.VACATION: ("vacation_start", "vacation_balance", "vacation_last_taken"),
    LeaveType.SICK: ("sick_start", "sick_balance", "sick_last_taken"),
    LeaveType.HOLIDAY: ("holiday_start", "holiday_balance", "holiday_last_taken"),
}


def new_leave_account(
    emp_id: str, emp_name: str, vacation: int, sick: int, holiday: int
) -> LeaveAccount:
    """Open an account with the given allocations; balances start full."""
    for kind, days in (("vacation", vacation), ("sick", sick), ("holiday", holiday)):
        if days < 0:
            raise NegativeAllocation(f"{kind} allocation must be >= 0, got {days}")
    return LeaveAccount(
        emp_id=emp_id,
        emp_name=emp_name,
        vacation_start=vacation,
        vacation_balance=vacation,
        vacation_last_taken=None,
        sick_start=sick,
        sick_balance=sick,
        sick_last_taken=None,
        holiday_start=holiday,
        holiday_balance=holiday,
        holiday_last_taken=None,
    )


def apply_leave(
    account: LeaveAccount, leave_type: LeaveType | str, days: int, taken_on: date
) -> LeaveAccount:
    """Deduct ``days`` from one leave type and stamp its last-taken date.

    The other two leave types are untouched. Raises InsufficientBalance
    (leaving the input account unchanged) when the balance cannot cover
    the request.
    """
    kind = LeaveType.parse(leave_type)
    if days < 1:
        raise InvalidLeaveDays(f"leave days must be >= 1, got {days}")
    _, balance_field, taken_field = _FIELDS[kind]
    balance: int = getattr(account, balance_field)
    if days > balance:
        raise InsufficientBalance(
            f"{kind.value} balance is {balance} days, cannot take {days}"
        )
    return replace(account, **{balance_field: balance - days, taken_field: taken_on})


def remaining_leave(account: LeaveAccount, leave_type: LeaveType | str) -> int:
    """Days still available for one leave type."""
    kind = LeaveType.parse(leave_type)
    return getattr(account, _FIELDS[kind][1])


def days_taken(account: LeaveAccount, leave_type: LeaveType | str) -> int:
    """Days consumed so far for one leave type (allocation minus balance)."""
    kind = LeaveType.parse(leave_type)
    start_field, balance_field, _ = _FIELDS[kind]
    return getattr(account, start_field) - getattr(account, balance_field)
