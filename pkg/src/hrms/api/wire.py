"""JSON wire conversion for API requests and responses.

Employee bodies use the storage attribute names (``Empid``, ``Firname``,
``Pin``, ...) because that is the employee form vocabulary and what field
errors refer to; every other body uses the domain field names shown in
docs/API.md. Money is always an integer in minor units; dates are ISO
``YYYY-MM-DD`` strings.
"""
from __future__ import annotations

from datetime import date
from fractions import Fraction
from typing import Mapping

from hrms.domain import (
    ApplicantRecord,
    AttendanceEntry,
    EmployeeRecord,
    LeaveAccount,
    PayLine,
    PayrollStatement,
    PerformanceEvaluation,
    ResignationRecord,
    TrainingRecord,
    days_taken,
    employee_to_attrs,
)
from hrms.domain.validation import (
    MALFORMED_NUMBER,
    MISSING_REQUIRED_FIELD,
    check_date,
    check_digits,
    check_email,
    require_nonneg_int,
    require_text,
)
from hrms.errors import FieldError, ValidationFailed

OUT_OF_RANGE = "OutOfRange"
KEY_MISMATCH = "KeyMismatch"


def employee_wire(record: EmployeeRecord) -> dict:
    return dict(employee_to_attrs(record))


def leave_wire(account: LeaveAccount, frozen: bool) -> dict:
    def leave_kind(kind: str, start: int, balance: int, last: date | None) -> dict:
        return {
            "start": start,
            "taken": days_taken(account, kind),
            "remaining": balance,
            "last_taken": last.isoformat() if last else None,
        }

    return {
        "empid": account.emp_id,
        "emp_name": account.emp_name,
        "vacation": leave_kind(
            "Vacation", account.vacation_start, account.vacation_balance, account.vacation_last_taken
        ),
        "sick": leave_kind("Sick", account.sick_start, account.sick_balance, account.sick_last_taken),
        "holiday": leave_kind(
            "Holiday", account.holiday_start, account.holiday_balance, account.holiday_last_taken
        ),
        "frozen": frozen,
    }


def payline_wire(lines: tuple[PayLine, ...]) -> list[dict]:
    return [{"label": l.label, "amount": l.amount} for l in lines]


def statement_wire(stmt: PayrollStatement) -> dict:
    return {
        "empid": stmt.emp_id,
        "period_start": stmt.period_start.isoformat(),
        "period_end": stmt.period_end.isoformat(),
        "basic_pay": stmt.basic_pay,
        "in_training": stmt.in_training,
        "training_pay_factor": str(stmt.training_pay_factor),
        "basic_applied": stmt.basic_applied,
        "allowances": payline_wire(stmt.allowances),
        "deductions": payline_wire(stmt.deductions),
        "gross_pay": stmt.gross_pay,
        "net_pay": stmt.net_pay,
        "payable_days": stmt.payable_days,
        "payable_hours": float(stmt.payable_hours),
    }


def attendance_wire(entry: AttendanceEntry) -> dict:
    return {"empid": entry.emp_id, "date": entry.day.isoformat(), "hours": float(entry.hours)}


def training_wire(record: TrainingRecord) -> dict:
    return {
        "empid": record.emp_id,
        "course_name": record.course_name,
        "start_date": record.start_date.isoformat(),
        "end_date": record.end_date.isoformat() if record.end_date else None,
        "status": record.status.value,
    }


def evaluation_wire(ev: PerformanceEvaluation) -> dict:
    return {
        "empid": ev.emp_id,
        "emp_name": ev.emp_name,
        "department": ev.department,
        "workgroup": ev.workgroup,
        "division": ev.division,
        "position": ev.position,
        "evaluation_date": ev.evaluation_date.isoformat(),
        "evaluator": ev.evaluator,
        "review_from": ev.review_from.isoformat(),
        "review_to": ev.review_to.isoformat(),
        "responsibility": ev.responsibility,
    }


def resignation_wire(record: ResignationRecord) -> dict:
    return {
        "empid": record.emp_id,
        "title": record.title,
        "emp_name": record.emp_name,
        "position": record.position,
        "department": record.department,
        "supervisor": record.supervisor,
        "joining_date": record.joining_date.isoformat(),
        "resignation_date": record.resignation_date.isoformat(),
        "email": record.email,
        "gender": record.gender,
        "city": record.city,
        "home_phone": record.home_phone,
    }


def applicant_wire(a: ApplicantRecord) -> dict:
    return {
        "applicant_id": a.applicant_id,
        "name": a.name,
        "contact_email": a.contact_email,
        "contact_phone": a.contact_phone,
        "work_experience_years": a.work_experience_years,
        "specialization": a.specialization,
        "interest": a.interest,
        "resume_text": a.resume_text,
        "status": a.status.value,
    }


# --- request parsing -------------------------------------------------------


def fail_if(errors: list[FieldError]) -> None:
    if errors:
        raise ValidationFailed(errors)


def parse_date_field(payload: Mapping, key: str, errors: list[FieldError]) -> date | None:
    text = require_text(payload, key, errors)
    if text is None:
        return None
    return check_date(key, text, errors)


def parse_money(payload: Mapping, key: str, errors: list[FieldError]) -> int | None:
    """A required non-negative integer amount in minor units."""
    value = payload.get(key)
    if value is None:
        errors.append(FieldError(key, MISSING_REQUIRED_FIELD, f"{key} must be present"))
        return None
    if isinstance(value, bool) or not isinstance(value, int):
        errors.append(
            FieldError(key, MALFORMED_NUMBER, f"{key} must be an integer amount in minor units")
        )
        return None
    if value < 0:
        errors.append(FieldError(key, OUT_OF_RANGE, f"{key} must be >= 0"))
        return None
    return value


def parse_paylines(payload: Mapping, key: str, errors: list[FieldError]) -> tuple[PayLine, ...]:
    """Allowance/deduction lists: [{"label","amount"}, ...] or bare amounts."""
    raw = payload.get(key, [])
    if not isinstance(raw, list):
        errors.append(FieldError(key, MALFORMED_NUMBER, f"{key} must be a list"))
        return ()
    lines: list[PayLine] = []
    singular = key.rstrip("s")
    for index, item in enumerate(raw, start=1):
        if isinstance(item, dict):
            label = str(item.get("label") or f"{singular}{index}")
            amount = item.get("amount")
        else:
            label, amount = f"{singular}{index}", item
        if isinstance(amount, bool) or not isinstance(amount, int):
            errors.append(
                FieldError(f"{key}[{index}]", MALFORMED_NUMBER, "amount must be an integer")
            )
            continue
        if amount < 0:
            errors.append(FieldError(f"{key}[{index}]", OUT_OF_RANGE, "amount must be >= 0"))
            continue
        lines.append(PayLine(label, amount))
    return tuple(lines)


def parse_hours(payload: Mapping, key: str, errors: list[FieldError]) -> Fraction | None:
    """Attendance hours: a number (or numeric string) within [0, 24]."""
    value = payload.get(key)
    if value is None:
        errors.append(FieldError(key, MISSING_REQUIRED_FIELD, f"{key} must be present"))
        return None
    try:
        if isinstance(value, bool):
            raise ValueError("boolean is not a number")
        hours = Fraction(str(value))
    except (ValueError, ZeroDivisionError):
        errors.append(FieldError(key, MALFORMED_NUMBER, f"{key} must be a number"))
        return None
    if not 0 <= hours <= 24:
        errors.append(FieldError(key, OUT_OF_RANGE, f"{key} must be within [0, 24]"))
        return None
    return hours


__all__ = [
    "KEY_MISMATCH",
    "OUT_OF_RANGE",
    "applicant_wire",
    "attendance_wire",
    "check_date",
    "check_digits",
    "check_email",
    "employee_wire",
    "evaluation_wire",
    "fail_if",
    "leave_wire",
    "parse_date_field",
    "parse_hours",
    "parse_money",
    "parse_paylines",
    "payline_wire",
    "require_nonneg_int",
    "require_text",
    "resignation_wire",
    "statement_wire",
    "training_wire",
]
