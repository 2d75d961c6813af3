"""Demo fixture: a small, documented data set for trials and tests.

Contents (ids are stable):
    - six employees E000001..E000006 across CS / HR / Networks
    - E000002 has an open training course (status InTraining)
    - E000006 archived as resigned (so five appear on the active roster)
    - leave accounts for everyone at the configured allocations,
      plus one 2-day sick application for E000004
    - attendance for E000001: five 8-hour days 2024-03-04..2024-03-08
    - one payroll statement for E000001 over 2024-03 (basic 100000,
      allowances 20000+5000, deductions 15000 -> net 110000, 5 payable days)
    - one performance evaluation for E000003
    - two applicants: A000001 (Networks, Submitted), A000002 (Databases,
      Shortlisted); one job requirement (Networks, 2 years)
"""
from __future__ import annotations

from datetime import date

from hrms.config import HrmsConfig
from hrms.domain import (
    ApplicantRecord,
    ApplicantStatus,
    AttendanceEntry,
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
from hrms.store import Store, repos

SEED_EMPLOYEES = 6
SEED_ACTIVE_EMPLOYEES = 5  # one of the six is archived as resigned
SEED_APPLICANTS = 2
SEED_RESIGNATIONS = 1

_PEOPLE = [
    # empid, first, last, dept, gender, birth, hire
    ("E000001", "Anita", "Rao", "CS", "F", "1990-02-11", "2015-06-01"),
    ("E000002", "Brian", "Lee", "CS", "M", "1992-07-04", "2018-02-12"),
    ("E000003", "Carla", "Mendes", "HR", "F", "1988-11-23", "2012-09-03"),
    ("E000004", "Dev", "Patel", "Networks", "M", "1994-01-30", "2020-01-06"),
    ("E000005", "Elena", "Novak", "HR", "F", "1991-05-17", "2017-03-20"),
    ("E000006", "Farid", "Khan", "Networks", "M", "1986-09-09", "2010-01-04"),
]


def seed_demo(store: Store, config: HrmsConfig | None = None) -> None:
    """Insert the demo fixture; fails on collisions with existing ids."""
    cfg = config or HrmsConfig()

    for empid, first, last, dept, gender, birth, hire in _PEOPLE:
        record = validate_employee({
            "Title": "Ms" if gender == "F" else "Mr",
            "Empid": empid,
            "Firname": first,
            "Midname": "",
            "Lastname": last,
            "Blood": "O+",
            "Nation": "Indian",
            "Address": "12 Lake View Road",
            "City": "Salem",
            "State": "Tamil Nadu",
            "Pin": "636005",
            "Home": "0427223344",
            "Workplace": "0427556677",
            "Mobile": "9876543210",
            "Email": f"{first.lower()}.{last.lower()}@example.com",
            "Status": "Active",
            "Supervisor": "R Kumar",
            "Hdate": hire,
            "Dept": dept,
            "Bdate": birth,
            "gender": gender,
            "marital": "S",
        })
        assert not isinstance(record, list), record
        with store.transaction() as txn:
            repos.put_employee(store, record, txn=txn, strict_insert=True)
            repos.put_leave_account(
                store,
                new_leave_account(
                    empid, f"{first} {last}",
                    cfg.vacation_days, cfg.sick_days, cfg.holiday_days,
                ),
                txn=txn,
            )

    repos.start_training(
        store,
        TrainingRecord("E000002", "Onboarding", date(2024, 3, 1), None, TrainingStatus.IN_TRAINING),
    )

    for day in range(4, 9):
        repos.put_attendance(store, AttendanceEntry("E000001", date(2024, 3, day), 8))

    statement = build_payroll_statement(
        PayrollInput(
            emp_id="E000001",
            period_start=date(2024, 3, 1),
            period_end=date(2024, 3, 31),
            basic_pay=100000,
            allowances=(PayLine("housing", 20000), PayLine("transport", 5000)),
            deductions=(PayLine("tax", 15000),),
        ),
        repos.list_attendance(store, "E000001", from_date=date(2024, 3, 1), to_date=date(2024, 3, 31)),
        cfg.full_day_hours,
    )
    repos.put_statement(store, statement)

    repos.put_evaluation(
        store,
        PerformanceEvaluation(
            emp_name="Carla Mendes",
            emp_id="E000003",
            department="HR",
            workgroup="People",
            division="South",
            position="HR Generalist",
            evaluation_date=date(2024, 5, 15),
            evaluator="R Kumar",
            review_from=date(2023, 11, 1),
            review_to=date(2024, 4, 30),
            responsibility="Hiring pipeline and onboarding",
        ),
    )

    repos.update_leave_account(store, "E000004", "Sick", 2, date(2024, 4, 10))
    repos.archive_resignation(store, "E000006", "Network Engineer", date(2024, 2, 29))

    repos.put_applicant(
        store,
        ApplicantRecord(
            applicant_id=repos.next_applicant_id(store),
            name="Gita Sharma",
            contact_email="gita.sharma@example.com",
            contact_phone="9822222222",
            work_experience_years=3,
            specialization="Networks",
            interest="Infrastructure",
            resume_text="Network engineer; routing, switching, monitoring.",
            status=ApplicantStatus.SUBMITTED,
        ),
    )
    repos.put_applicant(
        store,
        ApplicantRecord(
            applicant_id=repos.next_applicant_id(store),
            name="Hari Iyer",
            contact_email="hari.iyer@example.com",
            contact_phone="9833333333",
            work_experience_years=5,
            specialization="Databases",
            interest="Data platforms",
            resume_text="Database administrator; replication and backups.",
            status=ApplicantStatus.SHORTLISTED,
        ),
    )
    repos.put_job_requirement(store, JobRequirement("Networks", "Networks", 2))
