"""Pure HR domain model: record types, payroll arithmetic, leave algebra,
lifecycle transitions, applicant pipeline and input validation.

Everything here is a total function over immutable values — no storage, no
network — and is safe to call from any number of threads.
"""
from hrms.domain.applicants import (
    ALLOWED_TRANSITIONS,
    match_applicant,
    promote_applicant,
    transition_applicant,
)
from hrms.domain.leave import apply_leave, days_taken, new_leave_account, remaining_leave
from hrms.domain.lifecycle import resign_employee
from hrms.domain.payroll import (
    apply_pay_factor,
    build_payroll_statement,
    compute_gross_pay,
    compute_net_pay,
    compute_payable_units,
)
from hrms.domain.records import (
    EMPLOYEE_ATTRIBUTES,
    MAX_ID_LENGTH,
    OPTIONAL_EMPLOYEE_ATTRIBUTES,
    ApplicantRecord,
    ApplicantStatus,
    AttendanceEntry,
    Credential,
    EmployeeRecord,
    EmployeeStatus,
    JobRequirement,
    LeaveAccount,
    LeaveType,
    PayLine,
    PayrollInput,
    PayrollStatement,
    PerformanceEvaluation,
    ResignationRecord,
    TrainingRecord,
    TrainingStatus,
    employee_to_attrs,
)
from hrms.domain.validation import validate_employee

__all__ = [
    "ALLOWED_TRANSITIONS",
    "EMPLOYEE_ATTRIBUTES",
    "MAX_ID_LENGTH",
    "OPTIONAL_EMPLOYEE_ATTRIBUTES",
    "ApplicantRecord",
    "ApplicantStatus",
    "AttendanceEntry",
    "Credential",
    "EmployeeRecord",
    "EmployeeStatus",
    "JobRequirement",
    "LeaveAccount",
    "LeaveType",
    "PayLine",
    "PayrollInput",
    "PayrollStatement",
    "PerformanceEvaluation",
    "ResignationRecord",
    "TrainingRecord",
    "TrainingStatus",
    "apply_leave",
    "apply_pay_factor",
    "build_payroll_statement",
    "compute_gross_pay",
    "compute_net_pay",
    "compute_payable_units",
    "days_taken",
    "employee_to_attrs",
    "match_applicant",
    "new_leave_account",
    "promote_applicant",
    "remaining_leave",
    "resign_employee",
    "transition_applicant",
    "validate_employee",
]
