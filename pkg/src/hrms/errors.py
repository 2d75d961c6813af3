"""Exception hierarchy and field-level validation errors.

Every error carries a stable machine-readable ``code`` so the API layer can
map exceptions to HTTP responses without string matching.
"""
from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class FieldError:
    """One rejected input field: which field, which rule, and a message."""

    field: str
    rule: str
    message: str


class HrmsError(Exception):
    """Base class for all errors raised by this package."""

    code = "error"

    def __init__(self, message: str = ""):
        super().__init__(message or self.__class__.__name__)
        self.message = message or self.__class__.__name__


# --- domain errors -------------------------------------------------------

class DomainError(HrmsError):
    code = "domain_error"


class ValidationFailed(DomainError):
    """A record-level validation produced one or more field errors."""

    code = "validation_failed"

    def __init__(self, errors: list[FieldError], message: str = "validation failed"):
        super().__init__(message)
        self.errors = list(errors)


class NegativeAmount(DomainError):
    code = "negative_amount"


class InvalidPeriod(DomainError):
    code = "invalid_period"


class NegativeAllocation(DomainError):
    code = "negative_allocation"


class InsufficientBalance(DomainError):
    code = "insufficient_balance"


class UnknownLeaveType(DomainError):
    code = "unknown_leave_type"


class InvalidLeaveDays(DomainError):
    code = "invalid_leave_days"


class AlreadyResigned(DomainError):
    code = "already_resigned"


class DateOrderViolation(DomainError):
    code = "date_order_violation"


class NotShortlisted(DomainError):
    code = "not_shortlisted"


class IllegalTransition(DomainError):
    code = "illegal_transition"


# --- storage errors ------------------------------------------------------

class StorageError(HrmsError):
    code = "storage_error"


class NotFound(StorageError):
    code = "not_found"


class DuplicateKey(StorageError):
    code = "duplicate"


class EmployeeResigned(StorageError):
    code = "employee_resigned"


class LifecycleViolation(StorageError):
    """An employee id would be live and archived at the same time."""

    code = "lifecycle_violation"


class TransactionClosed(StorageError):
    code = "transaction_closed"


class StoreLocked(StorageError):
    code = "store_locked"


class SchemaMismatch(StorageError):
    code = "schema_mismatch"


class InjectedFailure(StorageError):
    """Raised by the fail-point test hook; never in normal operation."""

    code = "injected_failure"


# --- auth errors ---------------------------------------------------------

class AuthError(HrmsError):
    code = "auth_error"


class DuplicateUser(AuthError):
    code = "duplicate_user"


class WeakPassword(AuthError):
    code = "weak_password"


class InvalidCredentials(AuthError):
    code = "invalid_credentials"


class ExpiredSession(AuthError):
    code = "expired_session"


class UnknownToken(AuthError):
    code = "unknown_token"
