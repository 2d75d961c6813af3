"""Store behavior: round-trips, transactions, referential and lifecycle rules."""
from __future__ import annotations

from datetime import date
from fractions import Fraction

import pytest

from hrms.domain import (
    ApplicantRecord,
    ApplicantStatus,
    AttendanceEntry,
    EmployeeStatus,
    JobRequirement,
    PayLine,
    PayrollInput,
    PerformanceEvaluation,
    TrainingRecord,
    TrainingStatus,
    build_payroll_statement,
    new_leave_account,
)
from hrms.errors import (
    DuplicateKey,
    EmployeeResigned,
    InjectedFailure,
    LifecycleViolation,
    NotFound,
    SchemaMismatch,
    StorageError,
    TransactionClosed,
)
from hrms.store import Store
from hrms.store import repos
from support import make_employee


class TestEmployeeCrud:
    def test_put_get_round_trip(self, store):
        record = make_employee("E000001")
        repos.put_employee(store, record)
        assert repos.get_employee(store, "E000001") == record

    def test_strict_insert_refuses_duplicate(self, store):
        repos.put_employee(store, make_employee("E000001"))
        with pytest.raises(DuplicateKey):
            repos.put_employee(store, make_employee("E000001"), strict_insert=True)

    def test_upsert_replaces(self, store):
        repos.put_employee(store, make_employee("E000001"))
        repos.put_employee(store, make_employee("E000001", City="Chennai"))
        assert repos.get_employee(store, "E000001").city == "Chennai"

    def test_get_missing_raises(self, store):
        with pytest.raises(NotFound):
            repos.get_employee(store, "E999999")

    def test_list_empty_store(self, store):
        assert repos.list_employees(store) == []

    def test_list_filters_and_order(self, store):
        repos.put_employee(store, make_employee("E000003", Dept="CS"))
        repos.put_employee(store, make_employee("E000001", Dept="CS"))
        repos.put_employee(store, make_employee("E000002", Dept="HR"))
        cs = repos.list_employees(store, department="CS")
        assert [e.emp_id for e in cs] == ["E000001", "E000003"]
        both = repos.list_employees(store, department="CS", status=EmployeeStatus.ACTIVE)
        assert [e.emp_id for e in both] == ["E000001", "E000003"]  # conjunctive
        assert repos.list_employees(store, department="CS", status=EmployeeStatus.RESIGNED) == []
        assert repos.list_employees(store, status=EmployeeStatus.RESIGNED) == []
        assert [e.emp_id for e in repos.list_employees(store)] == [
            "E000001", "E000002", "E000003",
        ]

    def test_list_pagination(self, store):
        for n in range(1, 6):
            repos.put_employee(store, make_employee(f"E00000{n}"))
        page = repos.list_employees(store, offset=1, limit=2)
        assert [e.emp_id for e in page] == ["E000002", "E000003"]

    def test_delete_removes_employee_and_leave(self, store):
        repos.put_employee(store, make_employee("E000001"))
        repos.put_leave_account(store, new_leave_account("E000001", "Anita Rao", 20, 10, 8))
        repos.put_attendance(store, AttendanceEntry("E000001", date(2024, 3, 4), Fraction(8)))
        before = len(repos.list_employees(store))
        repos.delete_employee(store, "E000001")
        assert len(repos.list_employees(store)) == before - 1
        with pytest.raises(NotFound):
            repos.get_employee(store, "E000001")
        with pytest.raises(NotFound):
            repos.get_leave_account(store, "E000001")
        # audit rows are retained
        assert len(repos.list_attendance(store, "E000001")) == 1
        with pytest.raises(NotFound):
            repos.delete_employee(store, "E000001")


class TestTransactions:
    def test_rolled_back_write_is_invisible(self, store):
        txn = store.begin()
        repos.put_employee(store, make_employee("E000001"), txn=txn)
        txn.rollback()
        with pytest.raises(NotFound):
            repos.get_employee(store, "E000001")

    def test_commit_then_reopen_sees_data(self, store, tmp_path):
        repos.put_employee(store, make_employee("E000001"))
        store.close()
        reopened = Store(tmp_path / "data")
        try:
            assert repos.get_employee(reopened, "E000001").emp_id == "E000001"
        finally:
            reopened.close()

    def test_terminated_transaction_rejects_writes(self, store):
        txn = store.begin()
        txn.commit()
        with pytest.raises(TransactionClosed):
            txn.execute("SELECT 1")
        with pytest.raises(TransactionClosed):
            txn.commit()
        with pytest.raises(TransactionClosed):
            txn.rollback()

    def test_nested_begin_rejected(self, store):
        with store.transaction():
            with pytest.raises(StorageError):
                store.begin()

    def test_opening_missing_store_fails(self, tmp_path):
        with pytest.raises(StorageError):
            Store(tmp_path / "nowhere")

    def test_schema_version_checked(self, store, tmp_path):
        with store.transaction() as txn:
            txn.execute("UPDATE META SET value = '99' WHERE key = 'schema_version'")
        store.close()
        with pytest.raises(SchemaMismatch):
            Store(tmp_path / "data")


class TestReferentialIntegrity:
    def test_leave_requires_employee(self, store):
        with pytest.raises(NotFound):
            repos.put_leave_account(store, new_leave_account("E404", "Ghost", 20, 10, 8))

    def test_attendance_requires_employee(self, store):
        with pytest.raises(NotFound):
            repos.put_attendance(store, AttendanceEntry("E404", date(2024, 3, 4), Fraction(8)))

    def test_evaluation_requires_employee(self, store):
        evaluation = PerformanceEvaluation(
            "Ghost", "E404", "CS", "Core", "South", "Engineer",
            date(2024, 6, 1), "R Kumar", date(2024, 1, 1), date(2024, 5, 31), "Delivery",
        )
        with pytest.raises(NotFound):
            repos.put_evaluation(store, evaluation)

    def test_training_requires_employee(self, store):
        record = TrainingRecord("E404", "Onboarding", date(2024, 1, 1), None, TrainingStatus.IN_TRAINING)
        with pytest.raises(NotFound):
            repos.put_training(store, record)


class TestArchiveResignation:
    def setup_employee(self, store, emp_id="E000001"):
        repos.put_employee(store, make_employee(emp_id, Hdate="2010-01-04", Bdate="1985-03-02"))
        repos.put_leave_account(store, new_leave_account(emp_id, "Anita Rao", 20, 10, 8))

    def test_atomic_pair_visible_together(self, store):
        self.setup_employee(store)
        record = repos.archive_resignation(store, "E000001", "Engineer", date(2012, 6, 1))
        assert record.joining_date == date(2010, 1, 4)
        assert repos.get_employee(store, "E000001").status is EmployeeStatus.RESIGNED
        assert repos.get_resignation(store, "E000001").resignation_date == date(2012, 6, 1)
        _, frozen = repos.get_leave_account(store, "E000001")
        assert frozen

    def test_archive_unknown_employee(self, store):
        with pytest.raises(NotFound):
            repos.archive_resignation(store, "E404", "Engineer", date(2024, 1, 1))

    def test_archive_twice_rejected(self, store):
        from hrms.errors import AlreadyResigned

        self.setup_employee(store)
        repos.archive_resignation(store, "E000001", "Engineer", date(2012, 6, 1))
        with pytest.raises(AlreadyResigned):
            repos.archive_resignation(store, "E000001", "Engineer", date(2013, 6, 1))

    def test_frozen_account_rejects_leave(self, store):
        self.setup_employee(store)
        repos.archive_resignation(store, "E000001", "Engineer", date(2012, 6, 1))
        with pytest.raises(EmployeeResigned):
            repos.update_leave_account(store, "E000001", "Vacation", 1, date(2024, 1, 2))

    def test_resigned_employee_cannot_be_deleted(self, store):
        self.setup_employee(store)
        repos.archive_resignation(store, "E000001", "Engineer", date(2012, 6, 1))
        with pytest.raises(EmployeeResigned):
            repos.delete_employee(store, "E000001")

    @pytest.mark.parametrize("point", repos.ARCHIVE_CHECKPOINTS)
    def test_injected_failure_is_atomic(self, store, tmp_path, point):
        """A failure at any checkpoint leaves both writes or neither."""
        self.setup_employee(store)
        store.fail_points.add(point)
        with pytest.raises(InjectedFailure):
            repos.archive_resignation(store, "E000001", "Engineer", date(2012, 6, 1))
        store.fail_points.clear()
        store.close()

        reopened = Store(tmp_path / "data")
        try:
            status = repos.get_employee(reopened, "E000001").status
            resigned = status is EmployeeStatus.RESIGNED
            try:
                repos.get_resignation(reopened, "E000001")
                archived = True
            except NotFound:
                archived = False
            assert resigned == archived, f"partial write at {point}"
        finally:
            reopened.close()

    @pytest.mark.parametrize("point", repos.ARCHIVE_CHECKPOINTS)
    def test_simulated_crash_is_atomic(self, store, tmp_path, point):
        """Abandoning the connection mid-transaction must never leave a
        partial pair after reopen."""
        self.setup_employee(store)
        store.crash_points.add(point)
        with pytest.raises(InjectedFailure):
            repos.archive_resignation(store, "E000001", "Engineer", date(2012, 6, 1))
        store.crash_points.clear()
        store.close()

        reopened = Store(tmp_path / "data")
        try:
            resigned = repos.get_employee(reopened, "E000001").status is EmployeeStatus.RESIGNED
            try:
                repos.get_resignation(reopened, "E000001")
                archived = True
            except NotFound:
                archived = False
            assert resigned == archived, f"partial write at crash {point}"
            assert not resigned, "nothing before commit should survive a crash"
        finally:
            reopened.close()

    def test_lifecycle_exclusivity_on_direct_insert(self, store):
        self.setup_employee(store)
        record = repos.get_employee(store, "E000001")
        from hrms.domain import resign_employee

        archive_row = resign_employee(record, "Engineer", date(2012, 6, 1))
        with pytest.raises(LifecycleViolation):
            repos.put_resignation(store, archive_row)

    def test_resurrecting_archived_employee_rejected(self, store):
        self.setup_employee(store)
        repos.archive_resignation(store, "E000001", "Engineer", date(2012, 6, 1))
        with pytest.raises(LifecycleViolation):
            repos.put_employee(store, make_employee("E000001", Status="Active"))


class TestOtherRecordRoundTrips:
    def test_attendance_upsert_by_day(self, store):
        repos.put_employee(store, make_employee("E000001"))
        repos.put_attendance(store, AttendanceEntry("E000001", date(2024, 3, 4), Fraction(8)))
        repos.put_attendance(store, AttendanceEntry("E000001", date(2024, 3, 4), Fraction(6)))
        entries = repos.list_attendance(store, "E000001")
        assert len(entries) == 1
        assert entries[0].hours == 6

    def test_attendance_range_query(self, store):
        repos.put_employee(store, make_employee("E000001"))
        for day in (date(2024, 3, 1), date(2024, 3, 15), date(2024, 4, 1)):
            repos.put_attendance(store, AttendanceEntry("E000001", day, Fraction(15, 2)))
        inside = repos.list_attendance(
            store, "E000001", from_date=date(2024, 3, 1), to_date=date(2024, 3, 31)
        )
        assert [e.day for e in inside] == [date(2024, 3, 1), date(2024, 3, 15)]
        assert inside[0].hours == Fraction(15, 2)

    def test_training_status_coupling(self, store):
        repos.put_employee(store, make_employee("E000001"))
        repos.start_training(
            store,
            TrainingRecord("E000001", "Onboarding", date(2024, 1, 8), None, TrainingStatus.IN_TRAINING),
        )
        assert repos.get_employee(store, "E000001").status is EmployeeStatus.IN_TRAINING
        in_training = repos.list_training(store, status=TrainingStatus.IN_TRAINING)
        assert [(r.emp_id, r.course_name) for r in in_training] == [("E000001", "Onboarding")]

        done = repos.complete_training(store, "E000001", "Onboarding", date(2024, 2, 2))
        assert done.status is TrainingStatus.COMPLETED
        assert done.end_date == date(2024, 2, 2)
        assert repos.get_employee(store, "E000001").status is EmployeeStatus.ACTIVE

    def test_completing_one_of_two_courses_keeps_in_training(self, store):
        repos.put_employee(store, make_employee("E000001"))
        for course in ("Onboarding", "Security"):
            repos.start_training(
                store,
                TrainingRecord("E000001", course, date(2024, 1, 8), None, TrainingStatus.IN_TRAINING),
            )
        repos.complete_training(store, "E000001", "Onboarding", date(2024, 2, 2))
        assert repos.get_employee(store, "E000001").status is EmployeeStatus.IN_TRAINING
        repos.complete_training(store, "E000001", "Security", date(2024, 2, 9))
        assert repos.get_employee(store, "E000001").status is EmployeeStatus.ACTIVE

    def test_payroll_statement_round_trip_and_rerun_guard(self, store):
        repos.put_employee(store, make_employee("E000001"))
        stmt = build_payroll_statement(
            PayrollInput(
                emp_id="E000001",
                period_start=date(2024, 3, 1),
                period_end=date(2024, 3, 31),
                basic_pay=100000,
                allowances=(PayLine("housing", 20000),),
                deductions=(PayLine("tax", 15000),),
            ),
            [],
            8,
        )
        repos.put_statement(store, stmt)
        assert repos.get_statement(store, "E000001", date(2024, 3, 1)) == stmt
        with pytest.raises(DuplicateKey):
            repos.put_statement(store, stmt)
        repos.put_statement(store, stmt, force=True)  # explicit re-run allowed

    def test_evaluations_round_trip_and_order(self, store):
        repos.put_employee(store, make_employee("E000001"))
        for month in (3, 1, 6):
            repos.put_evaluation(
                store,
                PerformanceEvaluation(
                    "Anita Rao", "E000001", "CS", "Core", "South", "Engineer",
                    date(2024, month, 1), "R Kumar",
                    date(2023, month, 1), date(2024, month - 1 or 1, 1), "Delivery",
                ),
            )
        newest = repos.list_evaluations(store, emp_id="E000001", newest_first=True)
        assert [e.evaluation_date.month for e in newest] == [6, 3, 1]

    def test_applicants_filtering(self, store):
        for n, status in enumerate(
            [ApplicantStatus.SUBMITTED, ApplicantStatus.SHORTLISTED,
             ApplicantStatus.SHORTLISTED, ApplicantStatus.REJECTED],
            start=1,
        ):
            repos.put_applicant(
                store,
                ApplicantRecord(
                    f"A00000{n}", f"App {n}", f"a{n}@example.com", "9800000000",
                    n, "Networks", "Infra", "resume", status,
                ),
            )
        shortlisted = repos.list_applicants(store, status=ApplicantStatus.SHORTLISTED)
        assert [a.applicant_id for a in shortlisted] == ["A000002", "A000003"]

    def test_job_requirements_round_trip(self, store):
        repos.put_job_requirement(store, JobRequirement("CS", "Networks", 2))
        assert repos.list_job_requirements(store) == [JobRequirement("CS", "Networks", 2)]

    def test_login_round_trip(self, store):
        repos.put_login(store, "admin", "pbkdf2_sha256$1$aa$bb")
        assert repos.get_login(store, "admin") == "pbkdf2_sha256$1$aa$bb"
        assert repos.get_login(store, "ghost") is None
        with pytest.raises(DuplicateKey):
            repos.put_login(store, "admin", "other")


class TestIdSequences:
    def test_employee_ids_skip_taken(self, store):
        repos.put_employee(store, make_employee("E000001"))
        assert repos.next_employee_id(store) == "E000002"
        assert repos.next_employee_id(store) == "E000003"

    def test_applicant_ids_increment(self, store):
        assert repos.next_applicant_id(store) == "A000001"
        assert repos.next_applicant_id(store) == "A000002"
