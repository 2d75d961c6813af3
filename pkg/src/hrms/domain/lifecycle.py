"""Employee lifecycle transitions."""
from __future__ import annotations

from datetime import date

from hrms.domain.records import EmployeeRecord, EmployeeStatus, ResignationRecord
from hrms.errors import AlreadyResigned, DateOrderViolation


def resign_employee(
    employee: EmployeeRecord, position: str, resignation_date: date
) -> ResignationRecord:
    """Build the archive record for a departing employee.

    The resignation date must fall strictly after the hire date; resigning
    an already-resigned employee is rejected.
    """
    if employee.status == EmployeeStatus.RESIGNED:
        raise AlreadyResigned(f"employee {employee.emp_id} is already resigned")
    if resignation_date <= employee.hire_date:
        raise DateOrderViolation(
            f"resignation date {resignation_date} must be after hire date {employee.hire_date}"
        )
    return ResignationRecord(
        title=employee.title,
        emp_name=f"{employee.first_name} {employee.last_name}",
        emp_id=employee.emp_id,
        position=position,
        department=employee.department,
        supervisor=employee.supervisor,
        joining_date=employee.hire_date,
        resignation_date=resignation_date,
        email=employee.email,
        gender=employee.gender,
        city=employee.city,
        home_phone=employee.home_phone,
    )
