"""Core record types for the HR domain.

All types are immutable values; operations elsewhere in :mod:`hrms.domain`
return new instances instead of mutating. Money is always an integer count
of minor units (e.g. cents), dates are :class:`datetime.date`, and exact
rationals (:class:`fractions.Fraction`) are used where fractional hours or
pay factors must not drift.
"""
from __future__ import annotations

from dataclasses import dataclass
from datetime import date
from enum import Enum
from fractions import Fraction

from hrms.errors import UnknownLeaveType

MAX_ID_LENGTH = 10


class EmployeeStatus(str, Enum):
    ACTIVE = "Active"
    IN_TRAINING = "InTraining"
    RESIGNED = "Resigned"


class LeaveType(str, Enum):
    VACATION = "Vacation"
    SICK = "Sick"
    HOLIDAY = "Holiday"

    @classmethod
    def parse(cls, value: object) -> "LeaveType":
        """Coerce user input to a leave type; raises UnknownLeaveType."""
        if isinstance(value, cls):
            return value
        if isinstance(value, str):
            for member in cls:
                if member.value.casefold() == value.strip().casefold():
                    return member
        raise UnknownLeaveType(f"unknown leave type: {value!r}")


class TrainingStatus(str, Enum):
    IN_TRAINING = "InTraining"
    COMPLETED = "Completed"


class ApplicantStatus(str, Enum):
    SUBMITTED = "Submitted"
    SHORTLISTED = "Shortlisted"
    HIRED = "Hired"
    REJECTED = "Rejected"


@dataclass(frozen=True)
class EmployeeRecord:
    """One employee row: identity, personal, contact and status fields."""

    title: str
    emp_id: str
    first_name: str
    middle_name: str | None
    last_name: str
    blood_group: str
    nationality: str
    address: str
    city: str
    state: str
    pin: str
    home_phone: str
    work_phone: str
    mobile: str | None
    email: str
    status: EmployeeStatus
    supervisor: str
    hire_date: date
    department: str
    birth_date: date
    gender: str
    marital: str


# Storage attribute name -> EmployeeRecord field, in schema column order.
# The storage layer and the employee wire format both use the attribute
# names on the left; everything else in the codebase uses the field names.
EMPLOYEE_ATTRIBUTES: dict[str, str] = {
    "Title": "title",
    "Empid": "emp_id",
    "Firname": "first_name",
    "Midname": "middle_name",
    "Lastname": "last_name",
    "Blood": "blood_group",
    "Nation": "nationality",
    "Address": "address",
    "City": "city",
    "State": "state",
    "Pin": "pin",
    "Home": "home_phone",
    "Workplace": "work_phone",
    "Mobile": "mobile",
    "Email": "email",
    "Status": "status",
    "Supervisor": "supervisor",
    "Hdate": "hire_date",
    "Dept": "department",
    "Bdate": "birth_date",
    "gender": "gender",
    "marital": "marital",
}

# Midname and Mobile are the only nullable employee attributes.
OPTIONAL_EMPLOYEE_ATTRIBUTES = frozenset({"Midname", "Mobile"})


def employee_to_attrs(record: EmployeeRecord) -> dict[str, str | None]:
    """Serialize an employee to its attribute-name map (dates as ISO text)."""
    out: dict[str, str | None] = {}
    for attr, field in EMPLOYEE_ATTRIBUTES.items():
        value = getattr(record, field)
        if isinstance(value, date):
            value = value.isoformat()
        elif isinstance(value, EmployeeStatus):
            value = value.value
        out[attr] = value
    return out


@dataclass(frozen=True)
class Credential:
    """A stored login: user id plus salted one-way password digest."""

    user_id: str
    password_digest: bytes
    salt: bytes


@dataclass(frozen=True)
class LeaveAccount:
    """Per-employee allocation, remaining balance and last-taken date for
    the three leave types (vacation, sick, holiday)."""

    emp_id: str
    emp_name: str
    vacation_start: int
    vacation_balance: int
    vacation_last_taken: date | None
    sick_start: int
    sick_balance: int
    sick_last_taken: date | None
    holiday_start: int
    holiday_balance: int
    holiday_last_taken: date | None


@dataclass(frozen=True)
class PayLine:
    """A labeled allowance or deduction amount (non-negative minor units)."""

    label: str
    amount: int


@dataclass(frozen=True)
class PayrollInput:
    emp_id: str
    period_start: date
    period_end: date
    basic_pay: int
    allowances: tuple[PayLine, ...]
    deductions: tuple[PayLine, ...]
    in_training: bool = False
    training_pay_factor: Fraction = Fraction(1)


@dataclass(frozen=True)
class PayrollStatement:
    """Computed pay for one employee and one period.

    ``net_pay`` may be negative when deductions exceed gross; over-deduction
    is reported, never clamped.
    """

    emp_id: str
    period_start: date
    period_end: date
    basic_pay: int
    in_training: bool
    training_pay_factor: Fraction
    basic_applied: int
    allowances: tuple[PayLine, ...]
    deductions: tuple[PayLine, ...]
    gross_pay: int
    net_pay: int
    payable_days: int
    payable_hours: Fraction


@dataclass(frozen=True)
class AttendanceEntry:
    """Hours worked by one employee on one date; at most one per day."""

    emp_id: str
    day: date
    hours: Fraction


@dataclass(frozen=True)
class TrainingRecord:
    emp_id: str
    course_name: str
    start_date: date
    end_date: date | None
    status: TrainingStatus


@dataclass(frozen=True)
class PerformanceEvaluation:
    emp_name: str
    emp_id: str
    department: str
    workgroup: str
    division: str
    position: str
    evaluation_date: date
    evaluator: str
    review_from: date
    review_to: date
    responsibility: str


@dataclass(frozen=True)
class ResignationRecord:
    """Archive row for an ex-employee, kept for emergency contact."""

    title: str
    emp_name: str
    emp_id: str
    position: str
    department: str
    supervisor: str
    joining_date: date
    resignation_date: date
    email: str
    gender: str
    city: str
    home_phone: str


@dataclass(frozen=True)
class ApplicantRecord:
    applicant_id: str
    name: str
    contact_email: str
    contact_phone: str
    work_experience_years: int
    specialization: str
    interest: str
    resume_text: str
    status: ApplicantStatus


@dataclass(frozen=True)
class JobRequirement:
    department: str
    required_specialization: str
    min_experience_years: int
