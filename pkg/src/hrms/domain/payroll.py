"""Pay computation: gross/net arithmetic, payable units, statement assembly.

All amounts are integers in minor units and every computation is exact;
the only rounding anywhere is round-half-up when a training pay factor is
applied to basic pay.
"""
from __future__ import annotations

import math
from datetime import date
from fractions import Fraction
from typing import Iterable, Sequence

from hrms.domain.records import AttendanceEntry, PayrollInput, PayrollStatement
from hrms.errors import InvalidPeriod, NegativeAmount


def compute_gross_pay(basic_applied: int, allowances: Iterable[int]) -> int:
    """Gross pay = basic (after factor) plus the sum of allowances."""
    if basic_applied < 0:
        raise NegativeAmount("basic pay must be >= 0")
    total = basic_applied
    for amount in allowances:
        if amount < 0:
            raise NegativeAmount("allowances must be >= 0")
        total += amount
    return total


def compute_net_pay(gross: int, deductions: Iterable[int]) -> int:
    """Net pay = gross minus the sum of deductions; may go negative."""
    if gross < 0:
        raise NegativeAmount("gross pay must be >= 0")
    total = gross
    for amount in deductions:
        if amount < 0:
            raise NegativeAmount("deductions must be >= 0")
        total -= amount
    return total


def compute_payable_units(
    entries: Sequence[AttendanceEntry],
    period_start: date,
    period_end: date,
    full_day_hours: Fraction | int,
) -> tuple[int, Fraction]:
    """Credit attendance inside the period as (payable_days, payable_hours).

    Hours are summed exactly over entries dated within [period_start,
    period_end]; payable_days = floor(hours / full_day_hours). Entries
    outside the period are ignored.
    """
    if period_start > period_end:
        raise InvalidPeriod(f"period start {period_start} is after end {period_end}")
    full_day = Fraction(full_day_hours)
    if full_day <= 0:
        raise ValueError("full_day_hours must be > 0")
    if len({e.emp_id for e in entries}) > 1:
        raise ValueError("attendance entries span more than one employee")

    hours = Fraction(0)
    for entry in entries:
        if period_start <= entry.day <= period_end:
            hours += entry.hours
    return math.floor(hours / full_day), hours


def apply_pay_factor(basic_pay: int, factor: Fraction) -> int:
    """Scale basic pay by a rational factor, rounding half up to a minor unit."""
    if basic_pay < 0:
        raise NegativeAmount("basic pay must be >= 0")
    if not 0 < factor <= 1:
        raise ValueError(f"pay factor must be in (0, 1], got {factor}")
    return math.floor(basic_pay * factor + Fraction(1, 2))


def build_payroll_statement(
    pay_input: PayrollInput,
    attendance: Sequence[AttendanceEntry],
    full_day_hours: Fraction | int,
) -> PayrollStatement:
    """Assemble the full statement for one employee and one pay period."""
    if pay_input.period_start > pay_input.period_end:
        raise InvalidPeriod(
            f"period start {pay_input.period_start} is after end {pay_input.period_end}"
        )
    factor = Fraction(pay_input.training_pay_factor)
    if not pay_input.in_training and factor != 1:
        raise ValueError("pay factor must be 1 when the employee is not in training")

    basic_applied = apply_pay_factor(pay_input.basic_pay, factor)
    gross = compute_gross_pay(basic_applied, (line.amount for line in pay_input.allowances))
    net = compute_net_pay(gross, (line.amount for line in pay_input.deductions))
    own_entries = [e for e in attendance if e.emp_id == pay_input.emp_id]
    payable_days, payable_hours = compute_payable_units(
        own_entries, pay_input.period_start, pay_input.period_end, full_day_hours
    )
    return PayrollStatement(
        emp_id=pay_input.emp_id,
        period_start=pay_input.period_start,
        period_end=pay_input.period_end,
        basic_pay=pay_input.basic_pay,
        in_training=pay_input.in_training,
        training_pay_factor=factor,
        basic_applied=basic_applied,
        allowances=tuple(pay_input.allowances),
        deductions=tuple(pay_input.deductions),
        gross_pay=gross,
        net_pay=net,
        payable_days=payable_days,
        payable_hours=payable_hours,
    )
