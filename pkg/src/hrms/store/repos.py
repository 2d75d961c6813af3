"""Typed record operations over the embedded store.

Each function takes the :class:`Store` plus an optional open
:class:`Transaction`; when none is given, writes open their own transaction
and reads run against committed state. Referential rules are enforced here
at write time: dependent rows (leave, attendance, training, evaluations)
require the employee to exist, and a resignation can never coexist with a
live employee record.
"""
from __future__ import annotations

import json
import sqlite3
from contextlib import contextmanager
from datetime import date
from fractions import Fraction
from typing import Iterator

from hrms.domain import (
    ApplicantRecord,
    ApplicantStatus,
    AttendanceEntry,
    EmployeeRecord,
    EmployeeStatus,
    JobRequirement,
    LeaveAccount,
    PayLine,
    PayrollStatement,
    PerformanceEvaluation,
    ResignationRecord,
    TrainingRecord,
    TrainingStatus,
    apply_leave,
    employee_to_attrs,
    resign_employee,
)
from hrms.domain.records import LeaveType
from hrms.errors import (
    DuplicateKey,
    EmployeeResigned,
    LifecycleViolation,
    NotFound,
)
from hrms.store.engine import Store, Transaction

EMPLOYEE_COLUMNS = (
    "Title", "Empid", "Firname", "Midname", "Lastname", "Blood", "Nation",
    "Address", "City", "State", "Pin", "Home", "Workplace", "Mobile",
    "Email", "Status", "Supervisor", "Hdate", "Dept", "Bdate", "gender", "marital",
)


@contextmanager
def txn_scope(store: Store, txn: Transaction | None) -> Iterator[Transaction]:
    """Reuse an open transaction or run the block in a fresh one."""
    if txn is not None:
        yield txn
    else:
        with store.transaction() as fresh:
            yield fresh


def _read(store: Store, txn: Transaction | None, sql: str, params: tuple = ()):
    return txn.execute(sql, params) if txn is not None else store.read(sql, params)


def _opt_date(value: str | None) -> date | None:
    return date.fromisoformat(value) if value else None


# --- employees --------------------------------------------------------------


def _employee_from_row(row: sqlite3.Row) -> EmployeeRecord:
    return EmployeeRecord(
        title=row["Title"],
        emp_id=row["Empid"],
        first_name=row["Firname"],
        middle_name=row["Midname"],
        last_name=row["Lastname"],
        blood_group=row["Blood"],
        nationality=row["Nation"],
        address=row["Address"],
        city=row["City"],
        state=row["State"],
        pin=row["Pin"],
        home_phone=row["Home"],
        work_phone=row["Workplace"],
        mobile=row["Mobile"],
        email=row["Email"],
        status=EmployeeStatus(row["Status"]),
        supervisor=row["Supervisor"],
        hire_date=date.fromisoformat(row["Hdate"]),
        department=row["Dept"],
        birth_date=date.fromisoformat(row["Bdate"]),
        gender=row["gender"],
        marital=row["marital"],
    )


def put_employee(
    store: Store,
    record: EmployeeRecord,
    *,
    txn: Transaction | None = None,
    strict_insert: bool = False,
) -> None:
    """Insert or fully replace an employee row (strict mode refuses replace)."""
    attrs = employee_to_attrs(record)
    values = tuple(attrs[c] for c in EMPLOYEE_COLUMNS)
    with txn_scope(store, txn) as t:
        archived = t.execute(
            "SELECT 1 FROM RESIGNATION WHERE Empid = ?", (record.emp_id,)
        ).fetchone()
        if archived and record.status != EmployeeStatus.RESIGNED:
            raise LifecycleViolation(
                f"{record.emp_id} is archived as resigned; status must stay Resigned"
            )
        placeholders = ", ".join("?" for _ in EMPLOYEE_COLUMNS)
        columns = ", ".join(EMPLOYEE_COLUMNS)
        verb = "INSERT" if strict_insert else "INSERT OR REPLACE"
        try:
            t.execute(f"{verb} INTO EMPLOYEE ({columns}) VALUES ({placeholders})", values)
        except sqlite3.IntegrityError as exc:
            raise DuplicateKey(f"employee {record.emp_id} already exists") from exc


def get_employee(store: Store, emp_id: str, *, txn: Transaction | None = None) -> EmployeeRecord:
    row = _read(store, txn, "SELECT * FROM EMPLOYEE WHERE Empid = ?", (emp_id,)).fetchone()
    if row is None:
        raise NotFound(f"no employee {emp_id}")
    return _employee_from_row(row)


def list_employees(
    store: Store,
    *,
    department: str | None = None,
    status: EmployeeStatus | None = None,
    offset: int = 0,
    limit: int | None = None,
    txn: Transaction | None = None,
) -> list[EmployeeRecord]:
    """Employees ordered by Empid; filters are conjunctive."""
    sql = "SELECT * FROM EMPLOYEE"
    clauses, params = [], []
    if department is not None:
        clauses.append("Dept = ?")
        params.append(department)
    if status is not None:
        clauses.append("Status = ?")
        params.append(status.value)
    if clauses:
        sql += " WHERE " + " AND ".join(clauses)
    sql += " ORDER BY Empid"
    if limit is not None:
        sql += " LIMIT ? OFFSET ?"
        params += [limit, offset]
    elif offset:
        sql += " LIMIT -1 OFFSET ?"
        params.append(offset)
    rows = _read(store, txn, sql, tuple(params)).fetchall()
    return [_employee_from_row(r) for r in rows]


def delete_employee(store: Store, emp_id: str, *, txn: Transaction | None = None) -> None:
    """Remove a live employee and their leave account.

    Attendance, training and performance rows are retained for audit.
    Archived (resigned) employees cannot be deleted.
    """
    with txn_scope(store, txn) as t:
        row = t.execute("SELECT Status FROM EMPLOYEE WHERE Empid = ?", (emp_id,)).fetchone()
        if row is None:
            raise NotFound(f"no employee {emp_id}")
        if row["Status"] == EmployeeStatus.RESIGNED.value:
            raise EmployeeResigned(f"{emp_id} is resigned; archive rows are retained")
        t.execute("DELETE FROM EMPLOYEE WHERE Empid = ?", (emp_id,))
        t.execute("DELETE FROM LEAVE WHERE Empid = ?", (emp_id,))


def _require_employee(t: Transaction, emp_id: str) -> sqlite3.Row:
    row = t.execute("SELECT * FROM EMPLOYEE WHERE Empid = ?", (emp_id,)).fetchone()
    if row is None:
        raise NotFound(f"no employee {emp_id}")
    return row


def set_employee_status(
    store: Store, emp_id: str, status: EmployeeStatus, *, txn: Transaction | None = None
) -> None:
    with txn_scope(store, txn) as t:
        _require_employee(t, emp_id)
        t.execute("UPDATE EMPLOYEE SET Status = ? WHERE Empid = ?", (status.value, emp_id))


# --- login / session ---------------------------------------------------------


def put_login(store: Store, user_id: str, packed_digest: str, *, txn: Transaction | None = None) -> None:
    with txn_scope(store, txn) as t:
        try:
            t.execute(
                "INSERT INTO LOGIN (Userid, password) VALUES (?, ?)",
                (user_id, packed_digest),
            )
        except sqlite3.IntegrityError as exc:
            raise DuplicateKey(f"user {user_id} already enrolled") from exc


def get_login(store: Store, user_id: str, *, txn: Transaction | None = None) -> str | None:
    row = _read(store, txn, "SELECT password FROM LOGIN WHERE Userid = ?", (user_id,)).fetchone()
    return row["password"] if row else None


def put_session(
    store: Store,
    token: str,
    user_id: str,
    issued_at: str,
    expires_at: str,
    *,
    txn: Transaction | None = None,
) -> None:
    with txn_scope(store, txn) as t:
        t.execute(
            "INSERT OR REPLACE INTO SESSION (token, Userid, issued_at, expires_at) VALUES (?, ?, ?, ?)",
            (token, user_id, issued_at, expires_at),
        )


def get_session(store: Store, token: str, *, txn: Transaction | None = None) -> sqlite3.Row | None:
    return _read(store, txn, "SELECT * FROM SESSION WHERE token = ?", (token,)).fetchone()


# --- leave accounts -----------------------------------------------------------


def _leave_from_row(row: sqlite3.Row) -> LeaveAccount:
    return LeaveAccount(
        emp_id=row["Empid"],
        emp_name=row["empname"],
        vacation_start=row["vacstart"],
        vacation_balance=row["vacbalance"],
        vacation_last_taken=_opt_date(row["Vldate"]),
        sick_start=row["sickstart"],
        sick_balance=row["sickbalance"],
        sick_last_taken=_opt_date(row["Sldate"]),
        holiday_start=row["holstart"],
        holiday_balance=row["Holbal"],
        holiday_last_taken=_opt_date(row["Hldate"]),
    )


def _leave_values(account: LeaveAccount) -> tuple:
    return (
        account.emp_name,
        account.emp_id,
        account.vacation_start,
        account.vacation_balance,
        account.vacation_last_taken.isoformat() if account.vacation_last_taken else None,
        account.sick_start,
        account.sick_balance,
        account.sick_last_taken.isoformat() if account.sick_last_taken else None,
        account.holiday_start,
        account.holiday_balance,
        account.holiday_last_taken.isoformat() if account.holiday_last_taken else None,
    )


_LEAVE_COLUMNS = (
    "empname, Empid, vacstart, vacbalance, Vldate, "
    "sickstart, sickbalance, Sldate, holstart, Holbal, Hldate"
)


def put_leave_account(
    store: Store,
    account: LeaveAccount,
    *,
    frozen: bool = False,
    txn: Transaction | None = None,
) -> None:
    with txn_scope(store, txn) as t:
        _require_employee(t, account.emp_id)
        t.execute(
            f"INSERT OR REPLACE INTO LEAVE ({_LEAVE_COLUMNS}, frozen) "
            "VALUES (?, ?, ?, ?, ?, ?, ?, ?, ?, ?, ?, ?)",
            _leave_values(account) + (1 if frozen else 0,),
        )


def get_leave_account(
    store: Store, emp_id: str, *, txn: Transaction | None = None
) -> tuple[LeaveAccount, bool]:
    """Returns (account, frozen)."""
    row = _read(store, txn, "SELECT * FROM LEAVE WHERE Empid = ?", (emp_id,)).fetchone()
    if row is None:
        raise NotFound(f"no leave account for {emp_id}")
    return _leave_from_row(row), bool(row["frozen"])


def list_leave_accounts(
    store: Store, *, txn: Transaction | None = None
) -> list[tuple[LeaveAccount, bool]]:
    rows = _read(store, txn, "SELECT * FROM LEAVE ORDER BY Empid").fetchall()
    return [(_leave_from_row(r), bool(r["frozen"])) for r in rows]


def update_leave_account(
    store: Store,
    emp_id: str,
    leave_type: LeaveType | str,
    days: int,
    taken_on: date,
) -> LeaveAccount:
    """Read-modify-write a leave application under one transaction.

    Two concurrent requests against the same account serialize, so the
    conservation invariant (start - balance == days approved) holds under
    concurrency. A failed application writes nothing.
    """
    with store.transaction() as t:
        emp_row = t.execute(
            "SELECT Status FROM EMPLOYEE WHERE Empid = ?", (emp_id,)
        ).fetchone()
        if emp_row is None:
            raise NotFound(f"no employee {emp_id}")
        row = t.execute("SELECT * FROM LEAVE WHERE Empid = ?", (emp_id,)).fetchone()
        if row is None:
            raise NotFound(f"no leave account for {emp_id}")
        if emp_row["Status"] == EmployeeStatus.RESIGNED.value or row["frozen"]:
            raise EmployeeResigned(f"{emp_id} is resigned; leave account is frozen")
        updated = apply_leave(_leave_from_row(row), leave_type, days, taken_on)
        t.execute(
            f"INSERT OR REPLACE INTO LEAVE ({_LEAVE_COLUMNS}, frozen) "
            "VALUES (?, ?, ?, ?, ?, ?, ?, ?, ?, ?, ?, 0)",
            _leave_values(updated),
        )
        return updated


# --- attendance ---------------------------------------------------------------


def put_attendance(store: Store, entry: AttendanceEntry, *, txn: Transaction | None = None) -> None:
    """Upsert by (employee, date); hours stored as exact rational text."""
    with txn_scope(store, txn) as t:
        _require_employee(t, entry.emp_id)
        t.execute(
            "INSERT OR REPLACE INTO ATTENDANCE (Empid, Adate, hours) VALUES (?, ?, ?)",
            (entry.emp_id, entry.day.isoformat(), str(entry.hours)),
        )


def list_attendance(
    store: Store,
    emp_id: str,
    *,
    from_date: date | None = None,
    to_date: date | None = None,
    txn: Transaction | None = None,
) -> list[AttendanceEntry]:
    sql = "SELECT * FROM ATTENDANCE WHERE Empid = ?"
    params: list = [emp_id]
    if from_date is not None:
        sql += " AND Adate >= ?"
        params.append(from_date.isoformat())
    if to_date is not None:
        sql += " AND Adate <= ?"
        params.append(to_date.isoformat())
    sql += " ORDER BY Adate"
    rows = _read(store, txn, sql, tuple(params)).fetchall()
    return [
        AttendanceEntry(r["Empid"], date.fromisoformat(r["Adate"]), Fraction(r["hours"]))
        for r in rows
    ]


# --- training -------------------------------------------------------------------


def _training_from_row(row: sqlite3.Row) -> TrainingRecord:
    return TrainingRecord(
        emp_id=row["Empid"],
        course_name=row["course"],
        start_date=date.fromisoformat(row["startdate"]),
        end_date=_opt_date(row["enddate"]),
        status=TrainingStatus(row["status"]),
    )


def put_training(store: Store, record: TrainingRecord, *, txn: Transaction | None = None) -> None:
    with txn_scope(store, txn) as t:
        _require_employee(t, record.emp_id)
        t.execute(
            "INSERT OR REPLACE INTO TRAINING (Empid, course, startdate, enddate, status) "
            "VALUES (?, ?, ?, ?, ?)",
            (
                record.emp_id,
                record.course_name,
                record.start_date.isoformat(),
                record.end_date.isoformat() if record.end_date else None,
                record.status.value,
            ),
        )


def get_training(
    store: Store, emp_id: str, course_name: str, *, txn: Transaction | None = None
) -> TrainingRecord:
    row = _read(
        store, txn, "SELECT * FROM TRAINING WHERE Empid = ? AND course = ?", (emp_id, course_name)
    ).fetchone()
    if row is None:
        raise NotFound(f"no training {course_name!r} for {emp_id}")
    return _training_from_row(row)


def list_training(
    store: Store,
    *,
    emp_id: str | None = None,
    status: TrainingStatus | None = None,
    txn: Transaction | None = None,
) -> list[TrainingRecord]:
    sql = "SELECT * FROM TRAINING"
    clauses, params = [], []
    if emp_id is not None:
        clauses.append("Empid = ?")
        params.append(emp_id)
    if status is not None:
        clauses.append("status = ?")
        params.append(status.value)
    if clauses:
        sql += " WHERE " + " AND ".join(clauses)
    sql += " ORDER BY Empid, course"
    return [_training_from_row(r) for r in _read(store, txn, sql, tuple(params)).fetchall()]


def start_training(store: Store, record: TrainingRecord) -> None:
    """Record a new training and flip the employee to InTraining, atomically."""
    with store.transaction() as t:
        emp = _require_employee(t, record.emp_id)
        if emp["Status"] == EmployeeStatus.RESIGNED.value:
            raise EmployeeResigned(f"{record.emp_id} is resigned")
        put_training(store, record, txn=t)
        t.execute(
            "UPDATE EMPLOYEE SET Status = ? WHERE Empid = ?",
            (EmployeeStatus.IN_TRAINING.value, record.emp_id),
        )


def complete_training(store: Store, emp_id: str, course_name: str, end_date: date) -> TrainingRecord:
    """Close a training; restores the employee to Active when it was their
    last open course."""
    from hrms.errors import DateOrderViolation

    with store.transaction() as t:
        record = get_training(store, emp_id, course_name, txn=t)
        if end_date < record.start_date:
            raise DateOrderViolation(
                f"end date {end_date} is before start date {record.start_date}"
            )
        done = TrainingRecord(emp_id, course_name, record.start_date, end_date, TrainingStatus.COMPLETED)
        put_training(store, done, txn=t)
        open_left = t.execute(
            "SELECT COUNT(*) AS n FROM TRAINING WHERE Empid = ? AND status = ?",
            (emp_id, TrainingStatus.IN_TRAINING.value),
        ).fetchone()["n"]
        emp = _require_employee(t, emp_id)
        if open_left == 0 and emp["Status"] == EmployeeStatus.IN_TRAINING.value:
            t.execute(
                "UPDATE EMPLOYEE SET Status = ? WHERE Empid = ?",
                (EmployeeStatus.ACTIVE.value, emp_id),
            )
        return done


# --- payroll statements -----------------------------------------------------------


def _paylines_to_json(lines: tuple[PayLine, ...]) -> str:
    return json.dumps([{"label": l.label, "amount": l.amount} for l in lines], separators=(",", ":"))


def _paylines_from_json(text: str) -> tuple[PayLine, ...]:
    return tuple(PayLine(d["label"], d["amount"]) for d in json.loads(text))


def put_statement(
    store: Store,
    stmt: PayrollStatement,
    *,
    force: bool = False,
    txn: Transaction | None = None,
) -> None:
    """Persist a statement keyed by (employee, period start); duplicate runs
    are refused unless forced."""
    with txn_scope(store, txn) as t:
        existing = t.execute(
            "SELECT 1 FROM PAYROLL WHERE Empid = ? AND pstart = ?",
            (stmt.emp_id, stmt.period_start.isoformat()),
        ).fetchone()
        if existing and not force:
            raise DuplicateKey(
                f"statement for {stmt.emp_id} period {stmt.period_start} already exists"
            )
        t.execute(
            "INSERT OR REPLACE INTO PAYROLL "
            "(Empid, pstart, pend, basic, intraining, factor, basicapplied, "
            " allowances, deductions, gross, net, paydays, payhours) "
            "VALUES (?, ?, ?, ?, ?, ?, ?, ?, ?, ?, ?, ?, ?)",
            (
                stmt.emp_id,
                stmt.period_start.isoformat(),
                stmt.period_end.isoformat(),
                stmt.basic_pay,
                1 if stmt.in_training else 0,
                str(stmt.training_pay_factor),
                stmt.basic_applied,
                _paylines_to_json(stmt.allowances),
                _paylines_to_json(stmt.deductions),
                stmt.gross_pay,
                stmt.net_pay,
                stmt.payable_days,
                str(stmt.payable_hours),
            ),
        )


def _statement_from_row(row: sqlite3.Row) -> PayrollStatement:
    return PayrollStatement(
        emp_id=row["Empid"],
        period_start=date.fromisoformat(row["pstart"]),
        period_end=date.fromisoformat(row["pend"]),
        basic_pay=row["basic"],
        in_training=bool(row["intraining"]),
        training_pay_factor=Fraction(row["factor"]),
        basic_applied=row["basicapplied"],
        allowances=_paylines_from_json(row["allowances"]),
        deductions=_paylines_from_json(row["deductions"]),
        gross_pay=row["gross"],
        net_pay=row["net"],
        payable_days=row["paydays"],
        payable_hours=Fraction(row["payhours"]),
    )


def get_statement(
    store: Store, emp_id: str, period_start: date, *, txn: Transaction | None = None
) -> PayrollStatement:
    row = _read(
        store,
        txn,
        "SELECT * FROM PAYROLL WHERE Empid = ? AND pstart = ?",
        (emp_id, period_start.isoformat()),
    ).fetchone()
    if row is None:
        raise NotFound(f"no statement for {emp_id} at {period_start}")
    return _statement_from_row(row)


def list_statements(
    store: Store,
    *,
    from_date: date | None = None,
    to_date: date | None = None,
    txn: Transaction | None = None,
) -> list[PayrollStatement]:
    sql = "SELECT * FROM PAYROLL"
    clauses, params = [], []
    if from_date is not None:
        clauses.append("pstart >= ?")
        params.append(from_date.isoformat())
    if to_date is not None:
        clauses.append("pstart <= ?")
        params.append(to_date.isoformat())
    if clauses:
        sql += " WHERE " + " AND ".join(clauses)
    sql += " ORDER BY Empid, pstart"
    return [_statement_from_row(r) for r in _read(store, txn, sql, tuple(params)).fetchall()]


# --- performance evaluations ---------------------------------------------------------


def _evaluation_from_row(row: sqlite3.Row) -> PerformanceEvaluation:
    return PerformanceEvaluation(
        emp_name=row["Empname"],
        emp_id=row["Empid"],
        department=row["Dept"],
        workgroup=row["Workgroup"],
        division=row["Division"],
        position=row["Position"],
        evaluation_date=date.fromisoformat(row["Evaluate"]),
        evaluator=row["Evaluator"],
        review_from=date.fromisoformat(row["Revfr"]),
        review_to=date.fromisoformat(row["Revto"]),
        responsibility=row["responsibility"],
    )


def put_evaluation(
    store: Store, evaluation: PerformanceEvaluation, *, txn: Transaction | None = None
) -> None:
    with txn_scope(store, txn) as t:
        _require_employee(t, evaluation.emp_id)
        t.execute(
            "INSERT OR REPLACE INTO PERFORMANCE "
            "(Empname, Empid, Dept, Workgroup, Division, Position, Evaluate, "
            " Evaluator, Revfr, Revto, responsibility) "
            "VALUES (?, ?, ?, ?, ?, ?, ?, ?, ?, ?, ?)",
            (
                evaluation.emp_name,
                evaluation.emp_id,
                evaluation.department,
                evaluation.workgroup,
                evaluation.division,
                evaluation.position,
                evaluation.evaluation_date.isoformat(),
                evaluation.evaluator,
                evaluation.review_from.isoformat(),
                evaluation.review_to.isoformat(),
                evaluation.responsibility,
            ),
        )


def list_evaluations(
    store: Store,
    *,
    emp_id: str | None = None,
    newest_first: bool = False,
    txn: Transaction | None = None,
) -> list[PerformanceEvaluation]:
    sql = "SELECT * FROM PERFORMANCE"
    params: tuple = ()
    if emp_id is not None:
        sql += " WHERE Empid = ?"
        params = (emp_id,)
    sql += " ORDER BY Empid, Evaluate DESC" if newest_first else " ORDER BY Empid, Evaluate"
    return [_evaluation_from_row(r) for r in _read(store, txn, sql, params).fetchall()]


# --- resignations -----------------------------------------------------------------


def _resignation_from_row(row: sqlite3.Row) -> ResignationRecord:
    return ResignationRecord(
        title=row["Title"],
        emp_name=row["Empname"],
        emp_id=row["Empid"],
        position=row["position"],
        department=row["Dept"],
        supervisor=row["Superv"],
        joining_date=date.fromisoformat(row["Jdate"]),
        resignation_date=date.fromisoformat(row["Rdate"]),
        email=row["Email"],
        gender=row["Gender"],
        city=row["City"],
        home_phone=row["Homephone"],
    )


def put_resignation(
    store: Store, record: ResignationRecord, *, txn: Transaction | None = None
) -> None:
    """Direct archive insert; refused while the employee is still live.

    Normal operation goes through :func:`archive_resignation`, which flips
    the employee first inside the same transaction.
    """
    with txn_scope(store, txn) as t:
        emp = t.execute(
            "SELECT Status FROM EMPLOYEE WHERE Empid = ?", (record.emp_id,)
        ).fetchone()
        if emp is not None and emp["Status"] != EmployeeStatus.RESIGNED.value:
            raise LifecycleViolation(
                f"{record.emp_id} is still {emp['Status']}; cannot insert resignation"
            )
        try:
            t.execute(
                "INSERT INTO RESIGNATION "
                "(Title, Empname, Empid, position, Dept, Superv, Jdate, Rdate, "
                " Email, Gender, City, Homephone) VALUES (?, ?, ?, ?, ?, ?, ?, ?, ?, ?, ?, ?)",
                (
                    record.title,
                    record.emp_name,
                    record.emp_id,
                    record.position,
                    record.department,
                    record.supervisor,
                    record.joining_date.isoformat(),
                    record.resignation_date.isoformat(),
                    record.email,
                    record.gender,
                    record.city,
                    record.home_phone,
                ),
            )
        except sqlite3.IntegrityError as exc:
            raise DuplicateKey(f"resignation for {record.emp_id} already archived") from exc


def get_resignation(store: Store, emp_id: str, *, txn: Transaction | None = None) -> ResignationRecord:
    row = _read(store, txn, "SELECT * FROM RESIGNATION WHERE Empid = ?", (emp_id,)).fetchone()
    if row is None:
        raise NotFound(f"no resignation for {emp_id}")
    return _resignation_from_row(row)


def list_resignations(
    store: Store, *, department: str | None = None, txn: Transaction | None = None
) -> list[ResignationRecord]:
    sql = "SELECT * FROM RESIGNATION"
    params: tuple = ()
    if department is not None:
        sql += " WHERE Dept = ?"
        params = (department,)
    sql += " ORDER BY Empid"
    return [_resignation_from_row(r) for r in _read(store, txn, sql, params).fetchall()]


def archive_resignation(
    store: Store, emp_id: str, position: str, resignation_date: date
) -> ResignationRecord:
    """Atomically resign an employee: status flip, archive insert, leave
    freeze — all visible together or not at all.

    The named checkpoints are fail-point hooks for crash/atomicity tests.
    """
    with store.transaction() as t:
        t.checkpoint("archive.begin")
        employee = get_employee(store, emp_id, txn=t)
        t.checkpoint("archive.after_read_employee")
        record = resign_employee(employee, position, resignation_date)  # AlreadyResigned / DateOrder
        t.checkpoint("archive.after_build_record")

        t.checkpoint("archive.before_status_update")
        t.execute(
            "UPDATE EMPLOYEE SET Status = ? WHERE Empid = ?",
            (EmployeeStatus.RESIGNED.value, emp_id),
        )
        t.checkpoint("archive.after_status_update")

        t.checkpoint("archive.before_resignation_insert")
        put_resignation(store, record, txn=t)
        t.checkpoint("archive.after_resignation_insert")

        t.checkpoint("archive.before_leave_freeze")
        t.execute("UPDATE LEAVE SET frozen = 1 WHERE Empid = ?", (emp_id,))
        t.checkpoint("archive.after_leave_freeze")

        t.checkpoint("archive.before_commit")
        t.commit()
    t.checkpoint("archive.after_commit")
    return record


ARCHIVE_CHECKPOINTS = (
    "archive.begin",
    "archive.after_read_employee",
    "archive.after_build_record",
    "archive.before_status_update",
    "archive.after_status_update",
    "archive.before_resignation_insert",
    "archive.after_resignation_insert",
    "archive.before_leave_freeze",
    "archive.after_leave_freeze",
    "archive.before_commit",
)


# --- applicants ----------------------------------------------------------------------


def _applicant_from_row(row: sqlite3.Row) -> ApplicantRecord:
    return ApplicantRecord(
        applicant_id=row["Appid"],
        name=row["name"],
        contact_email=row["email"],
        contact_phone=row["phone"],
        work_experience_years=row["expyears"],
        specialization=row["specialization"],
        interest=row["interest"],
        resume_text=row["resume"],
        status=ApplicantStatus(row["status"]),
    )


def put_applicant(store: Store, record: ApplicantRecord, *, txn: Transaction | None = None) -> None:
    with txn_scope(store, txn) as t:
        t.execute(
            "INSERT OR REPLACE INTO APPLICANT "
            "(Appid, name, email, phone, expyears, specialization, interest, resume, status) "
            "VALUES (?, ?, ?, ?, ?, ?, ?, ?, ?)",
            (
                record.applicant_id,
                record.name,
                record.contact_email,
                record.contact_phone,
                record.work_experience_years,
                record.specialization,
                record.interest,
                record.resume_text,
                record.status.value,
            ),
        )


def get_applicant(store: Store, applicant_id: str, *, txn: Transaction | None = None) -> ApplicantRecord:
    row = _read(store, txn, "SELECT * FROM APPLICANT WHERE Appid = ?", (applicant_id,)).fetchone()
    if row is None:
        raise NotFound(f"no applicant {applicant_id}")
    return _applicant_from_row(row)


def list_applicants(
    store: Store, *, status: ApplicantStatus | None = None, txn: Transaction | None = None
) -> list[ApplicantRecord]:
    sql = "SELECT * FROM APPLICANT"
    params: tuple = ()
    if status is not None:
        sql += " WHERE status = ?"
        params = (status.value,)
    sql += " ORDER BY Appid"
    return [_applicant_from_row(r) for r in _read(store, txn, sql, params).fetchall()]


# --- job requirements ------------------------------------------------------------------


def put_job_requirement(store: Store, req: JobRequirement, *, txn: Transaction | None = None) -> None:
    with txn_scope(store, txn) as t:
        t.execute(
            "INSERT OR REPLACE INTO JOBREQ (Dept, specialization, minyears) VALUES (?, ?, ?)",
            (req.department, req.required_specialization, req.min_experience_years),
        )


def list_job_requirements(store: Store, *, txn: Transaction | None = None) -> list[JobRequirement]:
    rows = _read(store, txn, "SELECT * FROM JOBREQ ORDER BY Dept, specialization").fetchall()
    return [JobRequirement(r["Dept"], r["specialization"], r["minyears"]) for r in rows]


# --- id sequences -------------------------------------------------------------------------


def _next_id(t: Transaction, seq_key: str, prefix: str, taken) -> str:
    row = t.execute("SELECT value FROM META WHERE key = ?", (seq_key,)).fetchone()
    seq = int(row["value"]) if row else 1
    while taken(t, candidate := f"{prefix}{seq:06d}"):
        seq += 1
    t.execute(
        "INSERT OR REPLACE INTO META (key, value) VALUES (?, ?)", (seq_key, str(seq + 1))
    )
    return candidate


def next_employee_id(store: Store, *, txn: Transaction | None = None) -> str:
    """Allocate the next free E-prefixed id, skipping any caller-supplied
    ids already present in either the live or archived tables."""
    def taken(t: Transaction, candidate: str) -> bool:
        live = t.execute("SELECT 1 FROM EMPLOYEE WHERE Empid = ?", (candidate,)).fetchone()
        gone = t.execute("SELECT 1 FROM RESIGNATION WHERE Empid = ?", (candidate,)).fetchone()
        return live is not None or gone is not None

    with txn_scope(store, txn) as t:
        return _next_id(t, "next_employee_seq", "E", taken)


def next_applicant_id(store: Store, *, txn: Transaction | None = None) -> str:
    def taken(t: Transaction, candidate: str) -> bool:
        return t.execute("SELECT 1 FROM APPLICANT WHERE Appid = ?", (candidate,)).fetchone() is not None

    with txn_scope(store, txn) as t:
        return _next_id(t, "next_applicant_seq", "A", taken)


# --- whole-store helpers --------------------------------------------------------------------


def is_empty(store: Store, *, txn: Transaction | None = None) -> bool:
    """True when no table except META holds any row."""
    from hrms.store.engine import TABLES

    for table in TABLES:
        if table == "META":
            continue
        row = _read(store, txn, f"SELECT 1 FROM {table} LIMIT 1").fetchone()
        if row is not None:
            return False
    return True


def record_counts(store: Store) -> dict[str, int]:
    from hrms.store.engine import TABLES

    counts = {}
    for table in TABLES:
        counts[table] = store.read(f"SELECT COUNT(*) AS n FROM {table}").fetchone()["n"]
    return counts
