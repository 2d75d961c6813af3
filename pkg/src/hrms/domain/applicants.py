"""Applicant pipeline: matching, state transitions and promotion to employee."""
from __future__ import annotations

from dataclasses import replace
from typing import Mapping

from hrms.domain.records import (
    ApplicantRecord,
    ApplicantStatus,
    EmployeeRecord,
    JobRequirement,
)
from hrms.domain.validation import validate_employee
from hrms.errors import IllegalTransition, NotShortlisted, ValidationFailed

# The only legal status moves in the pipeline.
ALLOWED_TRANSITIONS: dict[ApplicantStatus, frozenset[ApplicantStatus]] = {
    ApplicantStatus.SUBMITTED: frozenset({ApplicantStatus.SHORTLISTED, ApplicantStatus.REJECTED}),
    ApplicantStatus.SHORTLISTED: frozenset({ApplicantStatus.HIRED, ApplicantStatus.REJECTED}),
    ApplicantStatus.HIRED: frozenset(),
    ApplicantStatus.REJECTED: frozenset(),
}


def match_applicant(applicant: ApplicantRecord, requirement: JobRequirement) -> bool:
    """True when specialization matches (case-insensitive, trimmed) and the
    applicant meets the experience threshold."""
    wanted = requirement.required_specialization.strip().casefold()
    offered = applicant.specialization.strip().casefold()
    return offered == wanted and applicant.work_experience_years >= requirement.min_experience_years


def transition_applicant(applicant: ApplicantRecord, new_status: ApplicantStatus) -> ApplicantRecord:
    """Move an applicant to a new pipeline status, enforcing the legal moves."""
    if new_status not in ALLOWED_TRANSITIONS[applicant.status]:
        raise IllegalTransition(
            f"applicant {applicant.applicant_id}: cannot move {applicant.status.value} -> {new_status.value}"
        )
    return replace(applicant, status=new_status)


def promote_applicant(
    applicant: ApplicantRecord, employee_fields: Mapping[str, object]
) -> tuple[ApplicantRecord, EmployeeRecord]:
    """Turn a shortlisted applicant into a hired applicant plus an employee.

    ``employee_fields`` must be a complete, valid employee attribute map
    (including the assigned Empid); validation failures are raised as
    :class:`ValidationFailed` carrying every field error.
    """
    if applicant.status != ApplicantStatus.SHORTLISTED:
        raise NotShortlisted(
            f"applicant {applicant.applicant_id} is {applicant.status.value}, not Shortlisted"
        )
    result = validate_employee(employee_fields)
    if isinstance(result, list):
        raise ValidationFailed(result)
    return replace(applicant, status=ApplicantStatus.HIRED), result
