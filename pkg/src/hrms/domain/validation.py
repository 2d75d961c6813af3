"""Strict input validation for records built from raw user field maps.

The entry point is :func:`validate_employee`; the lower-level helpers are
shared by other ingress points (performance evaluations, applicant
registration) so field errors look the same everywhere.

Validation is total: these functions never raise on bad input, they collect
:class:`hrms.errors.FieldError` entries — one per offending field — so a
form can show every problem at once.
"""
from __future__ import annotations

from datetime import date
from typing import Mapping

from hrms.domain.records import (
    EMPLOYEE_ATTRIBUTES,
    MAX_ID_LENGTH,
    OPTIONAL_EMPLOYEE_ATTRIBUTES,
    EmployeeRecord,
    EmployeeStatus,
)
from hrms.errors import FieldError

# Rule names used in FieldError.rule (and echoed in API field_errors).
MISSING_REQUIRED_FIELD = "MissingRequiredField"
MALFORMED_NUMBER = "MalformedNumber"
MALFORMED_EMAIL = "MalformedEmail"
MALFORMED_DATE = "MalformedDate"
DATE_ORDER_VIOLATION = "DateOrderViolation"
BAD_ENUM_VALUE = "BadEnumValue"
VALUE_TOO_LONG = "ValueTooLong"

_DIGIT_ATTRIBUTES = ("Pin", "Home", "Workplace", "Mobile")
_DATE_ATTRIBUTES = ("Hdate", "Bdate")
_ENUM_ATTRIBUTES = {
    "Status": tuple(s.value for s in EmployeeStatus),
    "gender": ("M", "F"),
    "marital": ("S", "M"),
}


def clean_text(raw: Mapping[str, object], key: str) -> str | None:
    """Fetch a value as stripped text; missing/blank values become None."""
    value = raw.get(key)
    if value is None:
        return None
    text = str(value).strip()
    return text or None


def require_text(raw: Mapping[str, object], key: str, errors: list[FieldError]) -> str | None:
    value = clean_text(raw, key)
    if value is None:
        errors.append(FieldError(key, MISSING_REQUIRED_FIELD, f"{key} must be present and non-empty"))
    return value


def check_digits(key: str, value: str, errors: list[FieldError]) -> str | None:
    if not value.isdigit():
        errors.append(FieldError(key, MALFORMED_NUMBER, f"{key} must contain only digits"))
        return None
    return value


def check_email(key: str, value: str, errors: list[FieldError]) -> str | None:
    local, sep, domain = value.partition("@")
    if not sep or not local or not domain or "@" in domain:
        errors.append(FieldError(key, MALFORMED_EMAIL, f"{key} must contain exactly one '@' with non-empty parts"))
        return None
    return value


def check_date(key: str, value: str, errors: list[FieldError]) -> date | None:
    try:
        return date.fromisoformat(value)
    except ValueError:
        errors.append(FieldError(key, MALFORMED_DATE, f"{key} must be an ISO date (YYYY-MM-DD)"))
        return None


def check_enum(key: str, value: str, allowed: tuple[str, ...], errors: list[FieldError]) -> str | None:
    if value not in allowed:
        errors.append(FieldError(key, BAD_ENUM_VALUE, f"{key} must be one of {', '.join(allowed)}"))
        return None
    return value


def require_nonneg_int(raw: Mapping[str, object], key: str, errors: list[FieldError]) -> int | None:
    """A required integer >= 0; accepts int or digit text, rejects the rest."""
    value = raw.get(key)
    if isinstance(value, bool):
        value = None
    if isinstance(value, str) and value.strip().isdigit():
        value = int(value.strip())
    if value is None or (isinstance(value, str) and not value.strip()):
        errors.append(FieldError(key, MISSING_REQUIRED_FIELD, f"{key} must be present"))
        return None
    if not isinstance(value, int) or value < 0:
        errors.append(FieldError(key, MALFORMED_NUMBER, f"{key} must be a non-negative integer"))
        return None
    return value


def validate_employee(candidate: Mapping[str, object]) -> EmployeeRecord | list[FieldError]:
    """Validate a raw attribute map into an :class:`EmployeeRecord`.

    ``candidate`` is keyed by the storage attribute names (``Empid``,
    ``Firname``, ``Pin``, ...). Returns the record when every rule holds,
    otherwise the list of field errors — never a partial record, and never
    an exception. Unknown keys are ignored.
    """
    errors: list[FieldError] = []
    values: dict[str, object] = {}

    for attr, field in EMPLOYEE_ATTRIBUTES.items():
        text = clean_text(candidate, attr)
        if text is None:
            if attr in OPTIONAL_EMPLOYEE_ATTRIBUTES:
                values[field] = None
            else:
                errors.append(
                    FieldError(attr, MISSING_REQUIRED_FIELD, f"{attr} must be present and non-empty")
                )
            continue
        values[field] = text

    def have(attr: str) -> str | None:
        value = values.get(EMPLOYEE_ATTRIBUTES[attr])
        return value if isinstance(value, str) else None

    empid = have("Empid")
    if empid is not None and len(empid) > MAX_ID_LENGTH:
        errors.append(
            FieldError("Empid", VALUE_TOO_LONG, f"Empid must be at most {MAX_ID_LENGTH} characters")
        )

    for attr in _DIGIT_ATTRIBUTES:
        text = have(attr)
        if text is not None and check_digits(attr, text, errors) is None:
            values.pop(EMPLOYEE_ATTRIBUTES[attr], None)

    email = have("Email")
    if email is not None and check_email("Email", email, errors) is None:
        values.pop("email", None)

    for attr in _DATE_ATTRIBUTES:
        text = have(attr)
        if text is not None:
            parsed = check_date(attr, text, errors)
            if parsed is None:
                values.pop(EMPLOYEE_ATTRIBUTES[attr], None)
            else:
                values[EMPLOYEE_ATTRIBUTES[attr]] = parsed

    for attr, allowed in _ENUM_ATTRIBUTES.items():
        text = have(attr)
        if text is not None and check_enum(attr, text, allowed, errors) is None:
            values.pop(EMPLOYEE_ATTRIBUTES[attr], None)

    hire = values.get("hire_date")
    birth = values.get("birth_date")
    if isinstance(hire, date) and isinstance(birth, date) and not birth < hire:
        errors.append(
            FieldError("Bdate", DATE_ORDER_VIOLATION, "Bdate must be strictly before Hdate")
        )

    if errors:
        return errors

    values["status"] = EmployeeStatus(values["status"])
    return EmployeeRecord(**values)  # type: ignore[arg-type]
