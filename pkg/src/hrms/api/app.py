"""JSON-over-HTTP service exposing the six HR modules plus login.

Every route except ``POST /api/login`` and the public applicant
registration (``POST /api/applicants``) requires a bearer session token in
the ``Authorization`` header. Validation failures answer 422 and enumerate
every invalid field in one response; auth failures answer 401, missing
records 404, conflicts 409, malformed request bodies 400.
"""
from __future__ import annotations

import logging
from datetime import date, datetime
from pathlib import Path
from typing import Callable

from fastapi import Body, Depends, FastAPI, Header, Query, Request, Response
from fastapi.exceptions import RequestValidationError
from fastapi.responses import JSONResponse
from fastapi.staticfiles import StaticFiles

from hrms import auth
from hrms.config import HrmsConfig
from hrms.domain import (
    ApplicantRecord,
    ApplicantStatus,
    AttendanceEntry,
    EmployeeStatus,
    JobRequirement,
    PerformanceEvaluation,
    TrainingRecord,
    TrainingStatus,
    PayrollInput,
    build_payroll_statement,
    compute_payable_units,
    match_applicant,
    new_leave_account,
    promote_applicant,
    transition_applicant,
    validate_employee,
)
from hrms.domain.validation import BAD_ENUM_VALUE, require_nonneg_int, require_text
from hrms.errors import (
    AlreadyResigned,
    DateOrderViolation,
    DuplicateKey,
    DuplicateUser,
    EmployeeResigned,
    ExpiredSession,
    FieldError,
    HrmsError,
    IllegalTransition,
    InsufficientBalance,
    InvalidCredentials,
    InvalidLeaveDays,
    InvalidPeriod,
    LifecycleViolation,
    NegativeAllocation,
    NegativeAmount,
    NotFound,
    NotShortlisted,
    UnknownLeaveType,
    UnknownToken,
    ValidationFailed,
    WeakPassword,
)
from hrms.reporting import InvalidCriteria, generate_report, parse_criteria
from hrms.store import Store, repos
from hrms.api import wire

logger = logging.getLogger("hrms.api")

# The only unauthenticated endpoints.
PUBLIC_ROUTES = {("POST", "/api/login"), ("POST", "/api/applicants")}

_STATUS_MAP: list[tuple[tuple[type, ...], int]] = [
    ((InvalidCredentials, ExpiredSession, UnknownToken), 401),
    ((NotFound,), 404),
    (
        (
            DuplicateKey,
            DuplicateUser,
            AlreadyResigned,
            InsufficientBalance,
            IllegalTransition,
            NotShortlisted,
            EmployeeResigned,
            LifecycleViolation,
        ),
        409,
    ),
    (
        (
            ValidationFailed,
            NegativeAmount,
            InvalidPeriod,
            InvalidLeaveDays,
            UnknownLeaveType,
            DateOrderViolation,
            NegativeAllocation,
            WeakPassword,
            InvalidCriteria,
        ),
        422,
    ),
]


def _http_status(exc: HrmsError) -> int:
    for classes, status in _STATUS_MAP:
        if isinstance(exc, classes):
            return status
    return 500


def _error_body(status: int, exc: HrmsError) -> dict:
    body = {"http_status": status, "code": exc.code, "message": str(exc)}
    if isinstance(exc, ValidationFailed):
        body["field_errors"] = [
            {"field": e.field, "rule": e.rule, "message": e.message} for e in exc.errors
        ]
    return body


def create_app(
    store: Store,
    config: HrmsConfig | None = None,
    console_dir: str | Path | None = None,
    clock: Callable[[], datetime] | None = None,
) -> FastAPI:
    """Build the HTTP application over an open store.

    ``console_dir`` mounts a built web-console bundle under ``/console``;
    ``clock`` injects a time source for session checks (tests only).
    """
    cfg = config or HrmsConfig()
    app = FastAPI(title="hrms", version="0.1.0", openapi_url=None, docs_url=None, redoc_url=None)

    def now() -> datetime | None:
        return clock() if clock else None

    # --- error handling ---------------------------------------------------

    @app.exception_handler(HrmsError)
    async def hrms_error_handler(request: Request, exc: HrmsError):
        status = _http_status(exc)
        return JSONResponse(status_code=status, content=_error_body(status, exc))

    @app.exception_handler(RequestValidationError)
    async def malformed_body_handler(request: Request, exc: RequestValidationError):
        return JSONResponse(
            status_code=400,
            content={
                "http_status": 400,
                "code": "malformed_body",
                "message": "request body or parameters could not be parsed",
            },
        )

    @app.middleware("http")
    async def log_requests(request: Request, call_next):
        # bodies are never logged: they may carry credentials
        response = await call_next(request)
        logger.info("%s %s -> %s", request.method, request.url.path, response.status_code)
        return response

    # --- auth -------------------------------------------------------------

    def require_admin(authorization: str | None = Header(default=None)) -> str:
        if not authorization or not authorization.startswith("Bearer "):
            raise UnknownToken("missing bearer token")
        token = authorization[len("Bearer "):].strip()
        return auth.verify_session(store, token, now=now())

    admin = Depends(require_admin)

    # --- login --------------------------------------------------------------

    @app.post("/api/login")
    def login(payload: dict = Body(...)) -> JSONResponse:
        """Authenticate an administrator.

        Body: {"userid": str, "password": str}.
        Returns {"token": str, "expires_at": iso-datetime}; the token goes
        into "Authorization: Bearer <token>" on every other call.
        """
        userid = payload.get("userid")
        password = payload.get("password")
        if not isinstance(userid, str) or not isinstance(password, str):
            return JSONResponse(
                status_code=400,
                content={
                    "http_status": 400,
                    "code": "malformed_body",
                    "message": "body must carry string fields userid and password",
                },
            )
        session = auth.authenticate(
            store, userid, password, ttl_hours=cfg.session_ttl_hours, now=now()
        )
        return JSONResponse(
            {"token": session.token, "expires_at": session.expires_at.isoformat()}
        )

    # --- employees ---------------------------------------------------------

    def _validated_employee(payload: dict):
        result = validate_employee(payload)
        if isinstance(result, list):
            raise ValidationFailed(result)
        return result

    def _create_leave_account(txn, record) -> None:
        account = new_leave_account(
            record.emp_id,
            f"{record.first_name} {record.last_name}",
            cfg.vacation_days,
            cfg.sick_days,
            cfg.holiday_days,
        )
        repos.put_leave_account(
            store, account, frozen=record.status is EmployeeStatus.RESIGNED, txn=txn
        )

    @app.post("/api/employees", status_code=201, dependencies=[admin])
    def create_employee(payload: dict = Body(...)) -> dict:
        """Create an employee.

        Body: the employee attribute map (Title, Empid, Firname, Midname?,
        Lastname, Blood, Nation, Address, City, State, Pin, Home, Workplace,
        Mobile?, Email, Status, Supervisor, Hdate, Dept, Bdate, gender,
        marital). A leave account with the configured allocations is created
        with the employee. 422 lists every invalid field; 409 on duplicate
        Empid.
        """
        record = _validated_employee(payload)
        with store.transaction() as txn:
            repos.put_employee(store, record, txn=txn, strict_insert=True)
            _create_leave_account(txn, record)
        return wire.employee_wire(record)

    @app.get("/api/employees", dependencies=[admin])
    def list_employees(
        department: str | None = None,
        status: str | None = None,
        offset: int = Query(default=0, ge=0),
        limit: int = Query(default=100, ge=1),
    ) -> dict:
        """List employees ordered by Empid.

        Optional conjunctive filters ?department= and ?status=; pagination
        via ?offset= and ?limit= (default 100).
        """
        status_filter = None
        if status is not None:
            try:
                status_filter = EmployeeStatus(status)
            except ValueError:
                raise ValidationFailed(
                    [FieldError("status", BAD_ENUM_VALUE, "status must be Active, InTraining or Resigned")]
                )
        records = repos.list_employees(
            store, department=department, status=status_filter, offset=offset, limit=limit
        )
        return {
            "employees": [wire.employee_wire(r) for r in records],
            "offset": offset,
            "limit": limit,
        }

    @app.get("/api/employees/{empid}", dependencies=[admin])
    def get_employee(empid: str) -> dict:
        """Fetch one employee by id (404 when absent)."""
        return wire.employee_wire(repos.get_employee(store, empid))

    @app.put("/api/employees/{empid}", dependencies=[admin])
    def update_employee(empid: str, payload: dict = Body(...)) -> dict:
        """Replace an employee record (full update, same body as create).

        The Empid in the body, when present, must match the path. 404 when
        the employee does not exist.
        """
        body_id = payload.get("Empid")
        if body_id not in (None, "", empid):
            raise ValidationFailed(
                [FieldError("Empid", wire.KEY_MISMATCH, "Empid in body must match the path")]
            )
        record = _validated_employee({**payload, "Empid": empid})
        with store.transaction() as txn:
            repos.get_employee(store, empid, txn=txn)  # 404 before replacing
            repos.put_employee(store, record, txn=txn)
        return wire.employee_wire(record)

    @app.delete("/api/employees/{empid}", dependencies=[admin])
    def delete_employee(empid: str) -> dict:
        """Delete a live employee and their leave account.

        Attendance, training and evaluation rows are retained for audit;
        resigned employees are archived and cannot be deleted (409).
        """
        repos.delete_employee(store, empid)
        return {"deleted": empid}

    # --- payroll --------------------------------------------------------------

    @app.post("/api/payroll/run", status_code=201, dependencies=[admin])
    def run_payroll(payload: dict = Body(...), force: bool = False) -> dict:
        """Compute and persist one pay statement.

        Body: {"empid", "period_start", "period_end", "basic_pay",
        "allowances": [{"label","amount"}...], "deductions": [...]}.
        Amounts are integers in minor units. Training records overlapping
        the period switch basic pay to the configured training factor.
        Re-running an existing (empid, period_start) needs ?force=true.
        """
        errors: list[FieldError] = []
        empid = require_text(payload, "empid", errors)
        period_start = wire.parse_date_field(payload, "period_start", errors)
        period_end = wire.parse_date_field(payload, "period_end", errors)
        basic_pay = wire.parse_money(payload, "basic_pay", errors)
        allowances = wire.parse_paylines(payload, "allowances", errors)
        deductions = wire.parse_paylines(payload, "deductions", errors)
        wire.fail_if(errors)

        employee = repos.get_employee(store, empid)
        if employee.status is EmployeeStatus.RESIGNED:
            raise EmployeeResigned(f"{empid} is resigned")

        in_training = any(
            t.start_date <= period_end and (t.end_date is None or t.end_date >= period_start)
            for t in repos.list_training(store, emp_id=empid)
        )
        factor = cfg.training_pay_factor if in_training else 1
        statement = build_payroll_statement(
            PayrollInput(
                emp_id=empid,
                period_start=period_start,
                period_end=period_end,
                basic_pay=basic_pay,
                allowances=allowances,
                deductions=deductions,
                in_training=in_training,
                training_pay_factor=factor,
            ),
            repos.list_attendance(store, empid, from_date=period_start, to_date=period_end),
            cfg.full_day_hours,
        )
        repos.put_statement(store, statement, force=force)
        return wire.statement_wire(statement)

    # --- attendance --------------------------------------------------------------

    @app.post("/api/attendance", status_code=201, dependencies=[admin])
    def record_attendance(payload: dict = Body(...)) -> dict:
        """Record hours for one employee and one date (upsert by day).

        Body: {"empid", "date", "hours"} with hours in [0, 24].
        """
        errors: list[FieldError] = []
        empid = require_text(payload, "empid", errors)
        day = wire.parse_date_field(payload, "date", errors)
        hours = wire.parse_hours(payload, "hours", errors)
        wire.fail_if(errors)
        employee = repos.get_employee(store, empid)
        if employee.status is EmployeeStatus.RESIGNED:
            raise EmployeeResigned(f"{empid} is resigned")
        entry = AttendanceEntry(empid, day, hours)
        repos.put_attendance(store, entry)
        return wire.attendance_wire(entry)

    @app.get("/api/attendance/{empid}", dependencies=[admin])
    def get_attendance(
        empid: str,
        from_date: str | None = Query(default=None, alias="from"),
        to_date: str | None = Query(default=None, alias="to"),
    ) -> dict:
        """Entries for an employee in date order, plus payable units.

        Optional ?from= and ?to= bound the range; payable days use the
        configured full-day hours.
        """
        errors: list[FieldError] = []
        lo = wire.check_date("from", from_date, errors) if from_date else date.min
        hi = wire.check_date("to", to_date, errors) if to_date else date.max
        wire.fail_if(errors)
        repos.get_employee(store, empid)
        entries = repos.list_attendance(
            store,
            empid,
            from_date=None if lo == date.min else lo,
            to_date=None if hi == date.max else hi,
        )
        payable_days, payable_hours = compute_payable_units(entries, lo, hi, cfg.full_day_hours)
        return {
            "empid": empid,
            "entries": [
                {"date": e.day.isoformat(), "hours": float(e.hours)} for e in entries
            ],
            "payable_days": payable_days,
            "payable_hours": float(payable_hours),
        }

    # --- training ------------------------------------------------------------------

    @app.post("/api/training", status_code=201, dependencies=[admin])
    def create_training(payload: dict = Body(...)) -> dict:
        """Schedule a training course; the employee becomes InTraining.

        Body: {"empid", "course_name", "start_date"}.
        """
        errors: list[FieldError] = []
        empid = require_text(payload, "empid", errors)
        course = require_text(payload, "course_name", errors)
        start = wire.parse_date_field(payload, "start_date", errors)
        wire.fail_if(errors)
        record = TrainingRecord(empid, course, start, None, TrainingStatus.IN_TRAINING)
        repos.start_training(store, record)
        return wire.training_wire(record)

    @app.get("/api/training", dependencies=[admin])
    def list_training(status: str | None = None, empid: str | None = None) -> dict:
        """Training records, filterable by ?status= and ?empid=."""
        status_filter = None
        if status is not None:
            try:
                status_filter = TrainingStatus(status)
            except ValueError:
                raise ValidationFailed(
                    [FieldError("status", BAD_ENUM_VALUE, "status must be InTraining or Completed")]
                )
        records = repos.list_training(store, emp_id=empid, status=status_filter)
        return {"trainings": [wire.training_wire(r) for r in records]}

    @app.put("/api/training/{empid}/{course}", dependencies=[admin])
    def finish_training(empid: str, course: str, payload: dict = Body(...)) -> dict:
        """Complete a course: body {"end_date"}; the employee returns to
        Active once no open training remains."""
        errors: list[FieldError] = []
        end = wire.parse_date_field(payload, "end_date", errors)
        wire.fail_if(errors)
        record = repos.complete_training(store, empid, course, end)
        return wire.training_wire(record)

    # --- performance ------------------------------------------------------------------

    @app.post("/api/performance", status_code=201, dependencies=[admin])
    def create_evaluation(payload: dict = Body(...)) -> dict:
        """Store a performance evaluation.

        Body: {"empid", "emp_name", "department", "workgroup", "division",
        "position", "evaluation_date", "evaluator", "review_from",
        "review_to", "responsibility"} — all required, dates ISO, with
        review_from <= review_to <= evaluation_date.
        """
        errors: list[FieldError] = []
        fields = {}
        for key in ("empid", "emp_name", "department", "workgroup", "division",
                    "position", "evaluator", "responsibility"):
            fields[key] = require_text(payload, key, errors)
        evaluation_date = wire.parse_date_field(payload, "evaluation_date", errors)
        review_from = wire.parse_date_field(payload, "review_from", errors)
        review_to = wire.parse_date_field(payload, "review_to", errors)
        if review_from and review_to and review_from > review_to:
            errors.append(
                FieldError("review_to", "DateOrderViolation", "review_to must not precede review_from")
            )
        elif review_to and evaluation_date and review_to > evaluation_date:
            errors.append(
                FieldError(
                    "evaluation_date", "DateOrderViolation",
                    "evaluation_date must not precede review_to",
                )
            )
        wire.fail_if(errors)
        evaluation = PerformanceEvaluation(
            emp_name=fields["emp_name"],
            emp_id=fields["empid"],
            department=fields["department"],
            workgroup=fields["workgroup"],
            division=fields["division"],
            position=fields["position"],
            evaluation_date=evaluation_date,
            evaluator=fields["evaluator"],
            review_from=review_from,
            review_to=review_to,
            responsibility=fields["responsibility"],
        )
        repos.put_evaluation(store, evaluation)
        return wire.evaluation_wire(evaluation)

    @app.get("/api/performance/{empid}", dependencies=[admin])
    def list_evaluations(empid: str) -> dict:
        """Evaluations for one employee, newest first."""
        repos.get_employee(store, empid)
        records = repos.list_evaluations(store, emp_id=empid, newest_first=True)
        return {"evaluations": [wire.evaluation_wire(e) for e in records]}

    # --- leave ------------------------------------------------------------------------

    @app.get("/api/leave/{empid}", dependencies=[admin])
    def get_leave(empid: str) -> dict:
        """Balances, allocations, days taken and last-taken dates for the
        three leave types."""
        account, frozen = repos.get_leave_account(store, empid)
        return wire.leave_wire(account, frozen)

    @app.post("/api/leave/{empid}/apply", dependencies=[admin])
    def apply_leave(empid: str, payload: dict = Body(...)) -> dict:
        """Apply leave: body {"type": Vacation|Sick|Holiday, "days": int,
        "date": iso-date}. 409 when the balance is insufficient."""
        errors: list[FieldError] = []
        leave_type = require_text(payload, "type", errors)
        days = require_nonneg_int(payload, "days", errors)
        taken_on = wire.parse_date_field(payload, "date", errors)
        wire.fail_if(errors)
        account = repos.update_leave_account(store, empid, leave_type, days, taken_on)
        return wire.leave_wire(account, False)

    # --- resignations --------------------------------------------------------------------

    @app.post("/api/resignations/{empid}", status_code=201, dependencies=[admin])
    def resign(empid: str, payload: dict = Body(...)) -> dict:
        """Archive a resignation: body {"position", "resignation_date"}.

        Atomically sets the employee to Resigned, stores the archive row
        and freezes the leave account.
        """
        errors: list[FieldError] = []
        position = require_text(payload, "position", errors)
        when = wire.parse_date_field(payload, "resignation_date", errors)
        wire.fail_if(errors)
        record = repos.archive_resignation(store, empid, position, when)
        return wire.resignation_wire(record)

    @app.get("/api/resignations", dependencies=[admin])
    def list_resignations(department: str | None = None) -> dict:
        """Archived ex-employees, optionally filtered by ?department=."""
        records = repos.list_resignations(store, department=department)
        return {"resignations": [wire.resignation_wire(r) for r in records]}

    @app.get("/api/resignations/{empid}", dependencies=[admin])
    def get_resignation(empid: str) -> dict:
        """One archived resignation by employee id."""
        return wire.resignation_wire(repos.get_resignation(store, empid))

    # --- applicants -------------------------------------------------------------------------

    def _parse_applicant_fields(payload: dict) -> dict:
        errors: list[FieldError] = []
        fields = {}
        for key in ("name", "specialization", "interest", "resume_text"):
            fields[key] = require_text(payload, key, errors)
        email = require_text(payload, "contact_email", errors)
        if email is not None:
            wire.check_email("contact_email", email, errors)
        phone = require_text(payload, "contact_phone", errors)
        if phone is not None:
            wire.check_digits("contact_phone", phone, errors)
        years = require_nonneg_int(payload, "work_experience_years", errors)
        wire.fail_if(errors)
        return {**fields, "contact_email": email, "contact_phone": phone,
                "work_experience_years": years}

    @app.post("/api/applicants", status_code=201)
    def register_applicant(payload: dict = Body(...)) -> dict:
        """Public applicant self-registration (no login required).

        Body: {"name", "contact_email", "contact_phone",
        "work_experience_years", "specialization", "interest",
        "resume_text"}. Returns the stored applicant with its assigned id
        and status Submitted.
        """
        fields = _parse_applicant_fields(payload)
        with store.transaction() as txn:
            applicant = ApplicantRecord(
                applicant_id=repos.next_applicant_id(store, txn=txn),
                status=ApplicantStatus.SUBMITTED,
                **fields,
            )
            repos.put_applicant(store, applicant, txn=txn)
        return wire.applicant_wire(applicant)

    @app.get("/api/applicants", dependencies=[admin])
    def list_applicants(status: str | None = None) -> dict:
        """Applicants ordered by id, filterable by ?status=."""
        status_filter = None
        if status is not None:
            try:
                status_filter = ApplicantStatus(status)
            except ValueError:
                raise ValidationFailed(
                    [FieldError("status", BAD_ENUM_VALUE,
                                "status must be Submitted, Shortlisted, Hired or Rejected")]
                )
        records = repos.list_applicants(store, status=status_filter)
        return {"applicants": [wire.applicant_wire(a) for a in records]}

    def _transition(applicant_id: str, target: ApplicantStatus) -> dict:
        with store.transaction() as txn:
            applicant = repos.get_applicant(store, applicant_id, txn=txn)
            moved = transition_applicant(applicant, target)
            repos.put_applicant(store, moved, txn=txn)
        return wire.applicant_wire(moved)

    @app.post("/api/applicants/{applicant_id}/shortlist", dependencies=[admin])
    def shortlist_applicant(applicant_id: str) -> dict:
        """Move a Submitted applicant to Shortlisted."""
        return _transition(applicant_id, ApplicantStatus.SHORTLISTED)

    @app.post("/api/applicants/{applicant_id}/reject", dependencies=[admin])
    def reject_applicant(applicant_id: str) -> dict:
        """Reject a Submitted or Shortlisted applicant."""
        return _transition(applicant_id, ApplicantStatus.REJECTED)

    @app.post("/api/applicants/{applicant_id}/hire", status_code=201, dependencies=[admin])
    def hire_applicant(applicant_id: str, payload: dict = Body(...)) -> dict:
        """Hire a shortlisted applicant, creating the employee and their
        leave account atomically.

        Body: {"employee_fields": {...employee attribute map without
        Empid...}}. The employee id is system-assigned; Status defaults to
        Active.
        """
        employee_fields = payload.get("employee_fields")
        if not isinstance(employee_fields, dict):
            raise ValidationFailed(
                [FieldError("employee_fields", "MissingRequiredField",
                            "employee_fields must be an attribute map")]
            )
        with store.transaction() as txn:
            applicant = repos.get_applicant(store, applicant_id, txn=txn)
            emp_id = repos.next_employee_id(store, txn=txn)
            fields = dict(employee_fields)
            fields["Empid"] = emp_id
            fields.setdefault("Status", EmployeeStatus.ACTIVE.value)
            hired, employee = promote_applicant(applicant, fields)
            repos.put_applicant(store, hired, txn=txn)
            repos.put_employee(store, employee, txn=txn, strict_insert=True)
            _create_leave_account(txn, employee)
        return {"applicant": wire.applicant_wire(hired), "employee": wire.employee_wire(employee)}

    @app.post("/api/applicants/match", dependencies=[admin])
    def match_applicants(payload: dict = Body(...)) -> dict:
        """Ids of applicants whose specialization and experience satisfy a
        requirement.

        Body: {"required_specialization", "min_experience_years",
        "department"?}.
        """
        errors: list[FieldError] = []
        spec = require_text(payload, "required_specialization", errors)
        years = require_nonneg_int(payload, "min_experience_years", errors)
        wire.fail_if(errors)
        requirement = JobRequirement(
            department=str(payload.get("department") or ""),
            required_specialization=spec,
            min_experience_years=years,
        )
        matches = [
            a.applicant_id
            for a in repos.list_applicants(store)
            if match_applicant(a, requirement)
        ]
        return {"matches": matches}

    # --- reports ---------------------------------------------------------------------------

    @app.get("/api/reports", dependencies=[admin])
    def get_report(
        kind: str | None = None,
        from_date: str | None = Query(default=None, alias="from"),
        to_date: str | None = Query(default=None, alias="to"),
        department: str | None = None,
        format: str | None = None,
    ) -> Response:
        """Generate a report document.

        Query: ?kind= (EmployeeRoster, PayrollRegister, LeaveSummary,
        TrainingStatus, PerformanceLog, ResignationLog, ApplicantFunnel),
        optional ?from=/?to= period (required for PayrollRegister),
        ?department=, ?format= (CSV default, or PlainText).
        """
        if kind is None:
            raise InvalidCriteria("kind query parameter is required")
        criteria = parse_criteria(kind, from_date, to_date, department, format)
        document = generate_report(store, criteria)
        return Response(
            content=document.content,
            media_type=document.content_type,
            headers={"Content-Disposition": f'attachment; filename="{document.filename}"'},
        )

    # --- static console ----------------------------------------------------------------------

    if console_dir is not None and Path(console_dir).is_dir():
        app.mount("/console", StaticFiles(directory=str(console_dir), html=True), name="console")

    return app
