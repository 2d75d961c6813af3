"""Criteria-driven report generation over the store.

Reports are deterministic documents: for a fixed store state the same
criteria always produce the same bytes. Rows are ordered by primary key,
CSV output always carries a header row (using the storage attribute names
where the table defines them), and anomalous rows — negative net pay,
exhausted leave balances — carry a flag so the reports double as a basic
control check.

Period semantics per kind: PayrollRegister filters on period start (the
period is mandatory there), TrainingStatus on course start date,
PerformanceLog on evaluation date, ResignationLog on resignation date;
EmployeeRoster, LeaveSummary and ApplicantFunnel ignore the period.
"""
from __future__ import annotations

import csv
import io
from dataclasses import dataclass
from datetime import date
from enum import Enum

from hrms.errors import HrmsError
from hrms.store import Store
from hrms.store import repos
from hrms.store.repos import EMPLOYEE_COLUMNS
from hrms.domain import EmployeeStatus, days_taken, employee_to_attrs


class InvalidCriteria(HrmsError):
    code = "invalid_criteria"


class ReportKind(str, Enum):
    EMPLOYEE_ROSTER = "EmployeeRoster"
    PAYROLL_REGISTER = "PayrollRegister"
    LEAVE_SUMMARY = "LeaveSummary"
    TRAINING_STATUS = "TrainingStatus"
    PERFORMANCE_LOG = "PerformanceLog"
    RESIGNATION_LOG = "ResignationLog"
    APPLICANT_FUNNEL = "ApplicantFunnel"


class ReportFormat(str, Enum):
    CSV = "CSV"
    PLAIN_TEXT = "PlainText"


@dataclass(frozen=True)
class ReportCriteria:
    kind: ReportKind
    period: tuple[date, date] | None = None
    department: str | None = None
    format: ReportFormat = ReportFormat.CSV


@dataclass(frozen=True)
class ReportDocument:
    content: bytes
    content_type: str
    filename: str


def parse_criteria(
    kind: str,
    from_date: str | None = None,
    to_date: str | None = None,
    department: str | None = None,
    format: str | None = None,
) -> ReportCriteria:
    """Build criteria from raw query/CLI strings, rejecting bad ones."""
    try:
        report_kind = ReportKind(kind)
    except ValueError:
        choices = ", ".join(k.value for k in ReportKind)
        raise InvalidCriteria(f"unknown report kind {kind!r} (one of: {choices})")
    fmt = ReportFormat.CSV
    if format:
        try:
            fmt = ReportFormat(format)
        except ValueError:
            raise InvalidCriteria(f"unknown format {format!r} (CSV or PlainText)")
    period = None
    if from_date or to_date:
        if not (from_date and to_date):
            raise InvalidCriteria("period needs both from and to dates")
        try:
            period = (date.fromisoformat(from_date), date.fromisoformat(to_date))
        except ValueError as exc:
            raise InvalidCriteria(f"bad period date: {exc}")
        if period[0] > period[1]:
            raise InvalidCriteria("period from-date is after to-date")
    if report_kind is ReportKind.PAYROLL_REGISTER and period is None:
        raise InvalidCriteria("PayrollRegister requires a period (from and to)")
    return ReportCriteria(report_kind, period, department or None, fmt)


def _iso(day: date | None) -> str:
    return day.isoformat() if day else ""


def _employee_departments(store: Store, txn) -> dict[str, str]:
    rows = txn.execute("SELECT Empid, Dept FROM EMPLOYEE").fetchall()
    return {r["Empid"]: r["Dept"] for r in rows}


def _rows_employee_roster(store, txn, criteria):
    header = list(EMPLOYEE_COLUMNS)
    rows = []
    for record in repos.list_employees(store, department=criteria.department, txn=txn):
        if record.status is EmployeeStatus.RESIGNED:
            continue
        attrs = employee_to_attrs(record)
        rows.append([attrs[c] or "" for c in EMPLOYEE_COLUMNS])
    return header, rows, []


def _rows_payroll_register(store, txn, criteria):
    header = [
        "Empid", "Pstart", "Pend", "Basic", "Intraining", "Factor", "Basicapplied",
        "Allowances", "Deductions", "Gross", "Net", "Paydays", "Payhours", "Flag",
    ]
    depts = _employee_departments(store, txn)
    start, end = criteria.period
    rows = []
    total_gross = total_net = 0
    for stmt in repos.list_statements(store, from_date=start, to_date=end, txn=txn):
        if criteria.department is not None and depts.get(stmt.emp_id) != criteria.department:
            continue
        flag = "negative_net" if stmt.net_pay < 0 else ""
        rows.append([
            stmt.emp_id,
            _iso(stmt.period_start),
            _iso(stmt.period_end),
            str(stmt.basic_pay),
            "1" if stmt.in_training else "0",
            str(stmt.training_pay_factor),
            str(stmt.basic_applied),
            str(sum(l.amount for l in stmt.allowances)),
            str(sum(l.amount for l in stmt.deductions)),
            str(stmt.gross_pay),
            str(stmt.net_pay),
            str(stmt.payable_days),
            str(stmt.payable_hours),
            flag,
        ])
        total_gross += stmt.gross_pay
        total_net += stmt.net_pay
    footer = [["TOTALS", "", "", "", "", "", "", "", "", str(total_gross), str(total_net), "", "", ""]]
    return header, rows, footer


def _rows_leave_summary(store, txn, criteria):
    header = [
        "Empid", "empname",
        "vacstart", "vactaken", "vacbalance", "Vldate",
        "sickstart", "sicktaken", "sickbalance", "Sldate",
        "holstart", "holtaken", "Holbal", "Hldate",
        "Frozen", "Flag",
    ]
    depts = _employee_departments(store, txn)
    rows = []
    for account, frozen in repos.list_leave_accounts(store, txn=txn):
        if criteria.department is not None and depts.get(account.emp_id) != criteria.department:
            continue
        flags = [
            f"{kind}_exhausted"
            for kind, balance in (
                ("vacation", account.vacation_balance),
                ("sick", account.sick_balance),
                ("holiday", account.holiday_balance),
            )
            if balance == 0
        ]
        rows.append([
            account.emp_id,
            account.emp_name,
            str(account.vacation_start),
            str(days_taken(account, "Vacation")),
            str(account.vacation_balance),
            _iso(account.vacation_last_taken),
            str(account.sick_start),
            str(days_taken(account, "Sick")),
            str(account.sick_balance),
            _iso(account.sick_last_taken),
            str(account.holiday_start),
            str(days_taken(account, "Holiday")),
            str(account.holiday_balance),
            _iso(account.holiday_last_taken),
            "1" if frozen else "0",
            ";".join(flags),
        ])
    return header, rows, []


def _rows_training_status(store, txn, criteria):
    header = ["Empid", "course", "startdate", "enddate", "status"]
    depts = _employee_departments(store, txn)
    rows = []
    for record in repos.list_training(store, txn=txn):
        if criteria.department is not None and depts.get(record.emp_id) != criteria.department:
            continue
        if criteria.period and not (criteria.period[0] <= record.start_date <= criteria.period[1]):
            continue
        rows.append([
            record.emp_id,
            record.course_name,
            _iso(record.start_date),
            _iso(record.end_date),
            record.status.value,
        ])
    return header, rows, []


def _rows_performance_log(store, txn, criteria):
    header = [
        "Empname", "Empid", "Dept", "Workgroup", "Division", "Position",
        "Evaluate", "Evaluator", "Revfr", "Revto", "responsibility",
    ]
    rows = []
    for ev in repos.list_evaluations(store, txn=txn):
        if criteria.department is not None and ev.department != criteria.department:
            continue
        if criteria.period and not (criteria.period[0] <= ev.evaluation_date <= criteria.period[1]):
            continue
        rows.append([
            ev.emp_name, ev.emp_id, ev.department, ev.workgroup, ev.division,
            ev.position, _iso(ev.evaluation_date), ev.evaluator,
            _iso(ev.review_from), _iso(ev.review_to), ev.responsibility,
        ])
    return header, rows, []


def _rows_resignation_log(store, txn, criteria):
    header = [
        "Title", "Empname", "Empid", "position", "Dept", "Superv",
        "Jdate", "Rdate", "Email", "Gender", "City", "Homephone",
    ]
    rows = []
    for record in repos.list_resignations(store, department=criteria.department, txn=txn):
        if criteria.period and not (
            criteria.period[0] <= record.resignation_date <= criteria.period[1]
        ):
            continue
        rows.append([
            record.title, record.emp_name, record.emp_id, record.position,
            record.department, record.supervisor, _iso(record.joining_date),
            _iso(record.resignation_date), record.email, record.gender,
            record.city, record.home_phone,
        ])
    return header, rows, []


def _rows_applicant_funnel(store, txn, criteria):
    header = [
        "Appid", "name", "email", "phone", "expyears",
        "specialization", "interest", "status",
    ]
    rows = []
    counts: dict[str, int] = {}
    for a in repos.list_applicants(store, txn=txn):
        rows.append([
            a.applicant_id, a.name, a.contact_email, a.contact_phone,
            str(a.work_experience_years), a.specialization, a.interest, a.status.value,
        ])
        counts[a.status.value] = counts.get(a.status.value, 0) + 1
    footer = [
        ["STATUS_TOTAL", status, str(counts.get(status, 0))] + [""] * (len(header) - 3)
        for status in ("Submitted", "Shortlisted", "Hired", "Rejected")
    ]
    return header, rows, footer


_BUILDERS = {
    ReportKind.EMPLOYEE_ROSTER: _rows_employee_roster,
    ReportKind.PAYROLL_REGISTER: _rows_payroll_register,
    ReportKind.LEAVE_SUMMARY: _rows_leave_summary,
    ReportKind.TRAINING_STATUS: _rows_training_status,
    ReportKind.PERFORMANCE_LOG: _rows_performance_log,
    ReportKind.RESIGNATION_LOG: _rows_resignation_log,
    ReportKind.APPLICANT_FUNNEL: _rows_applicant_funnel,
}


def _render_csv(header: list[str], rows: list[list[str]], footer: list[list[str]]) -> bytes:
    out = io.StringIO()
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    writer.writerows(footer)
    return out.getvalue().encode("utf-8")


def _render_plain(header: list[str], rows: list[list[str]], footer: list[list[str]]) -> bytes:
    all_rows = [header] + rows + footer
    widths = [max(len(str(r[i])) for r in all_rows) for i in range(len(header))]
    lines = []

    def fmt(cells):
        return "  ".join(str(c).ljust(w) for c, w in zip(cells, widths)).rstrip()

    lines.append(fmt(header))
    lines.append("  ".join("-" * w for w in widths))
    lines.extend(fmt(r) for r in rows)
    if footer:
        lines.append("  ".join("-" * w for w in widths))
        lines.extend(fmt(r) for r in footer)
    return ("\n".join(lines) + "\n").encode("utf-8")


def report_filename(criteria: ReportCriteria) -> str:
    lo = criteria.period[0].isoformat() if criteria.period else "all"
    hi = criteria.period[1].isoformat() if criteria.period else "all"
    ext = "csv" if criteria.format is ReportFormat.CSV else "txt"
    return f"{criteria.kind.value}_{lo}_{hi}.{ext}"


def generate_report(store: Store, criteria: ReportCriteria) -> ReportDocument:
    """Produce the report document for the criteria over committed state.

    An empty result is not an error: the document still carries its header.
    """
    if criteria.period and criteria.period[0] > criteria.period[1]:
        raise InvalidCriteria("period from-date is after to-date")
    if criteria.kind is ReportKind.PAYROLL_REGISTER and criteria.period is None:
        raise InvalidCriteria("PayrollRegister requires a period")
    with store.snapshot() as txn:
        header, rows, footer = _BUILDERS[criteria.kind](store, txn, criteria)
    if criteria.format is ReportFormat.CSV:
        content = _render_csv(header, rows, footer)
        content_type = "text/csv; charset=utf-8"
    else:
        content = _render_plain(header, rows, footer)
        content_type = "text/plain; charset=utf-8"
    return ReportDocument(content, content_type, report_filename(criteria))
