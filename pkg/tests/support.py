"""Shared fixtures for the test suite.

``CORRUPTION_CATALOG`` is the documented single-field corruption set used
by both the validation unit tests and the acceptance suite: each entry is
(attribute, corrupted value, expected rule) applied to ``VALID_EMPLOYEE``.
``populate_random_store`` fills a store with a reproducible random data set
spanning every record type, for dump/load round-trip checks.
"""
from __future__ import annotations

import random
from datetime import date, timedelta
from fractions import Fraction

from hrms.domain import (
    ApplicantRecord,
    ApplicantStatus,
    AttendanceEntry,
    EmployeeRecord,
    JobRequirement,
    PayLine,
    PayrollInput,
    PerformanceEvaluation,
    TrainingRecord,
    TrainingStatus,
    build_payroll_statement,
    new_leave_account,
    validate_employee,
)
from hrms.domain.validation import (
    BAD_ENUM_VALUE,
    DATE_ORDER_VIOLATION,
    MALFORMED_DATE,
    MALFORMED_EMAIL,
    MALFORMED_NUMBER,
    MISSING_REQUIRED_FIELD,
    VALUE_TOO_LONG,
)

VALID_EMPLOYEE: dict[str, str] = {
    "Title": "Ms",
    "Empid": "E000001",
    "Firname": "Anita",
    "Midname": "K",
    "Lastname": "Rao",
    "Blood": "O+",
    "Nation": "Indian",
    "Address": "12 Lake View Road",
    "City": "Salem",
    "State": "Tamil Nadu",
    "Pin": "636005",
    "Home": "0427223344",
    "Workplace": "0427556677",
    "Mobile": "9876543210",
    "Email": "anita.rao@example.com",
    "Status": "Active",
    "Supervisor": "R Kumar",
    "Hdate": "2015-06-01",
    "Dept": "CS",
    "Bdate": "1990-02-11",
    "gender": "F",
    "marital": "S",
}

_REQUIRED = [k for k in VALID_EMPLOYEE if k not in ("Midname", "Mobile")]

CORRUPTION_CATALOG: list[tuple[str, str, str]] = (
    # every required attribute, emptied
    [(attr, "", MISSING_REQUIRED_FIELD) for attr in _REQUIRED]
    + [(attr, "   ", MISSING_REQUIRED_FIELD) for attr in _REQUIRED]
    # number fields with non-digits
    + [
        ("Pin", "63A101", MALFORMED_NUMBER),
        ("Home", "0427-223344", MALFORMED_NUMBER),
        ("Workplace", "ext.42", MALFORMED_NUMBER),
        ("Mobile", "+919876543210", MALFORMED_NUMBER),
    ]
    # malformed email shapes
    + [
        ("Email", "anita.rao.example.com", MALFORMED_EMAIL),
        ("Email", "a@@b", MALFORMED_EMAIL),
        ("Email", "@example.com", MALFORMED_EMAIL),
        ("Email", "anita@", MALFORMED_EMAIL),
    ]
    # malformed dates
    + [
        ("Hdate", "2020-13-45", MALFORMED_DATE),
        ("Hdate", "01/06/2015", MALFORMED_DATE),
        ("Bdate", "notadate", MALFORMED_DATE),
        ("Bdate", "1990-2-31", MALFORMED_DATE),
    ]
    # birth date on or after hire date
    + [
        ("Bdate", "2016-01-01", DATE_ORDER_VIOLATION),
        ("Bdate", "2015-06-01", DATE_ORDER_VIOLATION),
    ]
    # enum fields outside their accepted sets
    + [
        ("Status", "Retired", BAD_ENUM_VALUE),
        ("Status", "active", BAD_ENUM_VALUE),
        ("gender", "X", BAD_ENUM_VALUE),
        ("gender", "MF", BAD_ENUM_VALUE),
        ("marital", "Q", BAD_ENUM_VALUE),
    ]
    # identifier over the 10-character column width
    + [("Empid", "E0000000001", VALUE_TOO_LONG)]
)


def make_employee(emp_id: str = "E000001", **overrides) -> EmployeeRecord:
    """A valid employee record with selected attributes overridden."""
    attrs = {**VALID_EMPLOYEE, "Empid": emp_id, **overrides}
    record = validate_employee(attrs)
    assert isinstance(record, EmployeeRecord), record
    return record


def populate_random_store(store, seed: int = 0, employees: int = 40) -> int:
    """Fill a store with a reproducible random data set across all record
    types; returns the number of rows written."""
    from hrms.store import repos

    rng = random.Random(seed)
    rows = 0

    def rand_date(year_lo=1995, year_hi=2020):
        return date(rng.randint(year_lo, year_hi), rng.randint(1, 12), rng.randint(1, 28))

    emp_ids = [f"E{n:06d}" for n in range(1, employees + 1)]
    for emp_id in emp_ids:
        birth = rand_date(1960, 1999)
        hire = birth + timedelta(days=rng.randint(18 * 365, 40 * 365))
        record = make_employee(
            emp_id,
            Firname=f"First{emp_id[-3:]}",
            Lastname=f"Last{rng.randint(1, 999)}",
            Midname=rng.choice(["", "K", "Lee"]),
            Mobile=rng.choice(["", str(rng.randint(10**9, 10**10 - 1))]),
            Dept=rng.choice(["CS", "HR", "Networks", "Finance"]),
            Status=rng.choice(["Active", "Active", "InTraining"]),
            Pin=str(rng.randint(100000, 999999)),
            Hdate=hire.isoformat(),
            Bdate=birth.isoformat(),
            Email=f"user{emp_id[-3:]}@example.com",
        )
        repos.put_employee(store, record)
        rows += 1
        account = new_leave_account(
            emp_id, f"{record.first_name} {record.last_name}",
            rng.randint(0, 25), rng.randint(0, 12), rng.randint(0, 10),
        )
        repos.put_leave_account(store, account)
        rows += 1
        seen_days: set[date] = set()
        for _ in range(rng.randint(0, 3)):
            day = rand_date(2023, 2024)
            while day in seen_days:
                day += timedelta(days=1)
            seen_days.add(day)
            repos.put_attendance(
                store, AttendanceEntry(emp_id, day, Fraction(rng.randint(1, 48), 2))
            )
            rows += 1
        if rng.random() < 0.4:
            start = rand_date(2022, 2023)
            done = rng.random() < 0.5
            repos.put_training(
                store,
                TrainingRecord(
                    emp_id,
                    rng.choice(["Onboarding", "Security", "Leadership"]),
                    start,
                    start + timedelta(days=rng.randint(5, 90)) if done else None,
                    TrainingStatus.COMPLETED if done else TrainingStatus.IN_TRAINING,
                ),
            )
            rows += 1
        if rng.random() < 0.5:
            period_start = date(2024, rng.randint(1, 12), 1)
            stmt = build_payroll_statement(
                PayrollInput(
                    emp_id=emp_id,
                    period_start=period_start,
                    period_end=period_start + timedelta(days=27),
                    basic_pay=rng.randint(0, 500000),
                    allowances=tuple(
                        PayLine(f"a{i}", rng.randint(0, 90000)) for i in range(rng.randint(0, 3))
                    ),
                    deductions=tuple(
                        PayLine(f"d{i}", rng.randint(0, 90000)) for i in range(rng.randint(0, 3))
                    ),
                ),
                [],
                8,
            )
            repos.put_statement(store, stmt)
            rows += 1
        if rng.random() < 0.4:
            evaluated = rand_date(2023, 2024)
            repos.put_evaluation(
                store,
                PerformanceEvaluation(
                    emp_name=f"{record.first_name} {record.last_name}",
                    emp_id=emp_id,
                    department=record.department,
                    workgroup=rng.choice(["Core", "Platform"]),
                    division=rng.choice(["South", "North"]),
                    position=rng.choice(["Engineer", "Analyst"]),
                    evaluation_date=evaluated,
                    evaluator="R Kumar",
                    review_from=evaluated - timedelta(days=180),
                    review_to=evaluated - timedelta(days=1),
                    responsibility="Quarterly delivery",
                ),
            )
            rows += 1

    # archive a slice of the population so RESIGNATION has rows
    for emp_id in rng.sample(emp_ids, employees // 5):
        employee = repos.get_employee(store, emp_id)
        repos.archive_resignation(
            store, emp_id, "Engineer", employee.hire_date + timedelta(days=rng.randint(30, 4000))
        )
        rows += 1

    for n in range(1, 16):
        repos.put_applicant(
            store,
            ApplicantRecord(
                applicant_id=f"A{n:06d}",
                name=f"Applicant {n}",
                contact_email=f"app{n}@example.com",
                contact_phone=str(rng.randint(10**9, 10**10 - 1)),
                work_experience_years=rng.randint(0, 15),
                specialization=rng.choice(["Networks", "Databases", "Security"]),
                interest=rng.choice(["Infrastructure", "Research"]),
                resume_text=f"resume body {n}",
                status=rng.choice(
                    [ApplicantStatus.SUBMITTED, ApplicantStatus.SHORTLISTED, ApplicantStatus.REJECTED]
                ),
            ),
        )
        rows += 1
    for dept, spec, years in (("CS", "Databases", 2), ("Networks", "Networks", 3)):
        repos.put_job_requirement(store, JobRequirement(dept, spec, years))
        rows += 1
    for user in ("admin", "audit"):
        repos.put_login(store, user, f"pbkdf2_sha256$10$00ff$digest-{user}")
        rows += 1
    repos.put_session(
        store, "tok-fixed-1", "admin", "2024-01-01T00:00:00+00:00", "2024-01-01T08:00:00+00:00"
    )
    rows += 1
    return rows
