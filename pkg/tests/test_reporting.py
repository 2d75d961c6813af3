"""Report generation: determinism, CSV discipline, totals, flags."""
from __future__ import annotations

import csv
import io
from datetime import date

import pytest

from hrms.domain import (
    EmployeeStatus,
    PayLine,
    PayrollInput,
    build_payroll_statement,
    new_leave_account,
)
from hrms.reporting import (
    InvalidCriteria,
    ReportCriteria,
    ReportFormat,
    ReportKind,
    generate_report,
    parse_criteria,
)
from hrms.store import repos
from support import make_employee, populate_random_store

MARCH = (date(2024, 3, 1), date(2024, 3, 31))


def rows_of(document) -> list[list[str]]:
    return list(csv.reader(io.StringIO(document.content.decode("utf-8"))))


def seed_statement(store, empid="E000001", basic=100000, allowances=(20000, 5000), deductions=(15000,)):
    repos.put_employee(store, make_employee(empid))
    stmt = build_payroll_statement(
        PayrollInput(
            emp_id=empid,
            period_start=MARCH[0],
            period_end=MARCH[1],
            basic_pay=basic,
            allowances=tuple(PayLine(f"a{i}", v) for i, v in enumerate(allowances)),
            deductions=tuple(PayLine(f"d{i}", v) for i, v in enumerate(deductions)),
        ),
        [],
        8,
    )
    repos.put_statement(store, stmt)
    return stmt


class TestCriteria:
    def test_parse_happy_path(self):
        criteria = parse_criteria("EmployeeRoster", None, None, None, None)
        assert criteria.kind is ReportKind.EMPLOYEE_ROSTER
        assert criteria.format is ReportFormat.CSV

    def test_unknown_kind(self):
        with pytest.raises(InvalidCriteria):
            parse_criteria("Nope")

    def test_payroll_register_needs_period(self):
        with pytest.raises(InvalidCriteria):
            parse_criteria("PayrollRegister")

    def test_inverted_period(self):
        with pytest.raises(InvalidCriteria):
            parse_criteria("PayrollRegister", "2024-03-31", "2024-03-01")

    def test_half_period(self):
        with pytest.raises(InvalidCriteria):
            parse_criteria("EmployeeRoster", "2024-03-01", None)


class TestEmployeeRoster:
    def test_empty_store_header_only(self, store):
        document = generate_report(store, ReportCriteria(ReportKind.EMPLOYEE_ROSTER))
        rows = rows_of(document)
        assert len(rows) == 1
        assert rows[0][:2] == ["Title", "Empid"]

    def test_resigned_employees_excluded(self, store):
        repos.put_employee(store, make_employee("E000001"))
        repos.put_employee(store, make_employee("E000002"))
        repos.archive_resignation(store, "E000002", "Engineer", date(2024, 6, 1))
        document = generate_report(store, ReportCriteria(ReportKind.EMPLOYEE_ROSTER))
        rows = rows_of(document)
        assert [r[1] for r in rows[1:]] == ["E000001"]

    def test_department_filter_matches_list_counts(self, store):
        populate_random_store(store, seed=11, employees=20)
        document = generate_report(
            store, ReportCriteria(ReportKind.EMPLOYEE_ROSTER, department="CS")
        )
        expected = [
            e for e in repos.list_employees(store, department="CS")
            if e.status is not EmployeeStatus.RESIGNED
        ]
        assert len(rows_of(document)) - 1 == len(expected)


class TestPayrollRegister:
    def test_single_statement_row_and_totals(self, store):
        seed_statement(store)
        document = generate_report(
            store, ReportCriteria(ReportKind.PAYROLL_REGISTER, period=MARCH)
        )
        rows = rows_of(document)
        header, data, footer = rows[0], rows[1:-1], rows[-1]
        assert len(data) == 1
        row = dict(zip(header, data[0]))
        assert row["Gross"] == "125000"
        assert row["Net"] == "110000"
        assert row["Flag"] == ""
        assert footer[0] == "TOTALS"
        assert footer[header.index("Gross")] == "125000"
        assert footer[header.index("Net")] == "110000"

    def test_negative_net_flagged(self, store):
        seed_statement(store, basic=10000, allowances=(), deductions=(15000,))
        document = generate_report(
            store, ReportCriteria(ReportKind.PAYROLL_REGISTER, period=MARCH)
        )
        rows = rows_of(document)
        header = rows[0]
        assert rows[1][header.index("Net")] == "-5000"
        assert rows[1][header.index("Flag")] == "negative_net"

    def test_totals_equal_independent_sum(self, store):
        populate_random_store(store, seed=5, employees=30)
        period = (date(2024, 1, 1), date(2024, 12, 31))
        document = generate_report(
            store, ReportCriteria(ReportKind.PAYROLL_REGISTER, period=period)
        )
        rows = rows_of(document)
        header, data, footer = rows[0], rows[1:-1], rows[-1]
        gross_index, net_index = header.index("Gross"), header.index("Net")
        assert footer[gross_index] == str(sum(int(r[gross_index]) for r in data))
        assert footer[net_index] == str(sum(int(r[net_index]) for r in data))
        assert len(data) == len(repos.list_statements(store, from_date=period[0], to_date=period[1]))

    def test_period_filter(self, store):
        seed_statement(store)
        document = generate_report(
            store,
            ReportCriteria(ReportKind.PAYROLL_REGISTER, period=(date(2025, 1, 1), date(2025, 1, 31))),
        )
        assert len(rows_of(document)) == 2  # header + TOTALS only


class TestLeaveSummary:
    def test_taken_and_remaining(self, store):
        repos.put_employee(store, make_employee("E000001"))
        repos.put_leave_account(store, new_leave_account("E000001", "Anita Rao", 20, 10, 8))
        repos.update_leave_account(store, "E000001", "Vacation", 3, date(2024, 4, 1))
        document = generate_report(store, ReportCriteria(ReportKind.LEAVE_SUMMARY))
        rows = rows_of(document)
        row = dict(zip(rows[0], rows[1]))
        assert row["vactaken"] == "3"
        assert row["vacbalance"] == "17"
        assert row["Vldate"] == "2024-04-01"
        assert row["Flag"] == ""

    def test_exhausted_balance_flagged(self, store):
        repos.put_employee(store, make_employee("E000001"))
        repos.put_leave_account(store, new_leave_account("E000001", "Anita Rao", 2, 10, 8))
        repos.update_leave_account(store, "E000001", "Vacation", 2, date(2024, 4, 1))
        document = generate_report(store, ReportCriteria(ReportKind.LEAVE_SUMMARY))
        rows = rows_of(document)
        row = dict(zip(rows[0], rows[1]))
        assert row["Flag"] == "vacation_exhausted"


class TestApplicantFunnel:
    def test_status_totals_footer(self, store):
        populate_random_store(store, seed=2, employees=5)
        document = generate_report(store, ReportCriteria(ReportKind.APPLICANT_FUNNEL))
        rows = rows_of(document)
        footers = [r for r in rows if r[0] == "STATUS_TOTAL"]
        assert len(footers) == 4
        counted = {r[1]: int(r[2]) for r in footers}
        applicants = repos.list_applicants(store)
        for status in ("Submitted", "Shortlisted", "Hired", "Rejected"):
            assert counted[status] == sum(1 for a in applicants if a.status.value == status)


class TestCsvDiscipline:
    def test_round_trips_with_awkward_characters(self, store):
        repos.put_employee(
            store,
            make_employee(
                "E000001",
                Address='12, "The Lake", View\nRoad',
                Supervisor="R, Kumar",
            ),
        )
        document = generate_report(store, ReportCriteria(ReportKind.EMPLOYEE_ROSTER))
        rows = rows_of(document)
        assert len({len(r) for r in rows}) == 1  # constant cell count
        row = dict(zip(rows[0], rows[1]))
        assert row["Address"] == '12, "The Lake", View\nRoad'
        assert row["Supervisor"] == "R, Kumar"

    @pytest.mark.parametrize("kind", list(ReportKind))
    def test_every_kind_parses_with_constant_width(self, store, kind):
        populate_random_store(store, seed=9, employees=15)
        period = (date(2020, 1, 1), date(2030, 1, 1))
        criteria = ReportCriteria(kind, period=period if kind is ReportKind.PAYROLL_REGISTER else None)
        rows = rows_of(generate_report(store, criteria))
        assert rows, "header must always be present"
        assert len({len(r) for r in rows}) == 1

    @pytest.mark.parametrize("kind", list(ReportKind))
    def test_deterministic_output(self, store, kind):
        populate_random_store(store, seed=10, employees=10)
        period = (date(2020, 1, 1), date(2030, 1, 1))
        criteria = ReportCriteria(kind, period=period if kind is ReportKind.PAYROLL_REGISTER else None)
        assert generate_report(store, criteria).content == generate_report(store, criteria).content


class TestPlainText:
    def test_renders_header_rule_and_rows(self, store):
        repos.put_employee(store, make_employee("E000001"))
        document = generate_report(
            store, ReportCriteria(ReportKind.EMPLOYEE_ROSTER, format=ReportFormat.PLAIN_TEXT)
        )
        assert document.content_type.startswith("text/plain")
        lines = document.content.decode("utf-8").splitlines()
        assert lines[0].startswith("Title")
        assert set(lines[1]) <= {"-", " "}
        assert "E000001" in lines[2]

    def test_filename_pattern(self, store):
        document = generate_report(
            store,
            ReportCriteria(ReportKind.PAYROLL_REGISTER, period=MARCH),
        )
        assert document.filename == "PayrollRegister_2024-03-01_2024-03-31.csv"
