"""Credential enrollment, login verification and bearer sessions.

Passwords are stored only as salted PBKDF2 digests; the raw password never
reaches the store or the logs. Login failure is a single indistinguishable
error whether the user is unknown or the password is wrong, and digest
comparison is constant-time.
"""
from __future__ import annotations

import hashlib
import hmac
import secrets
from dataclasses import dataclass
from datetime import datetime, timedelta, timezone

from hrms.errors import (
    DuplicateUser,
    ExpiredSession,
    FieldError,
    InvalidCredentials,
    UnknownToken,
    ValidationFailed,
    WeakPassword,
)
from hrms.store import Store
from hrms.store import repos

DIGEST_SCHEME = "pbkdf2_sha256"
PBKDF2_ITERATIONS = 60_000
SALT_BYTES = 16
TOKEN_BYTES = 16  # 128 bits of entropy
MIN_PASSWORD_LENGTH = 8
MAX_USER_ID_LENGTH = 10
DEFAULT_TTL_HOURS = 8


@dataclass(frozen=True)
class Session:
    token: str
    user_id: str
    issued_at: datetime
    expires_at: datetime


def _utcnow() -> datetime:
    return datetime.now(timezone.utc)


def hash_password(password: str, salt: bytes | None = None, iterations: int = PBKDF2_ITERATIONS) -> str:
    """Pack scheme, iteration count, salt and digest into one stored string."""
    salt = secrets.token_bytes(SALT_BYTES) if salt is None else salt
    digest = hashlib.pbkdf2_hmac("sha256", password.encode("utf-8"), salt, iterations)
    return f"{DIGEST_SCHEME}${iterations}${salt.hex()}${digest.hex()}"


def verify_password(packed: str, password: str) -> bool:
    """Constant-time check of a password against a packed digest."""
    try:
        scheme, iterations, salt_hex, digest_hex = packed.split("$")
        if scheme != DIGEST_SCHEME:
            return False
        expected = bytes.fromhex(digest_hex)
        computed = hashlib.pbkdf2_hmac(
            "sha256", password.encode("utf-8"), bytes.fromhex(salt_hex), int(iterations)
        )
    except (ValueError, TypeError):
        return False
    return hmac.compare_digest(computed, expected)


# Burned when the user id is unknown, so that path costs the same as a
# wrong password and cannot be used to enumerate user ids.
_DECOY_DIGEST = hash_password("decoy-password-never-matches")


def generate_token() -> str:
    return secrets.token_urlsafe(TOKEN_BYTES)


def enroll(store: Store, user_id: str, password: str) -> None:
    """Store a new administrator credential."""
    if not user_id or len(user_id) > MAX_USER_ID_LENGTH:
        raise ValidationFailed(
            [FieldError("Userid", "ValueTooLong",
                        f"Userid must be 1..{MAX_USER_ID_LENGTH} characters")]
        )
    if len(password) < MIN_PASSWORD_LENGTH:
        raise WeakPassword(f"password must be at least {MIN_PASSWORD_LENGTH} characters")
    try:
        repos.put_login(store, user_id, hash_password(password))
    except Exception as exc:
        from hrms.errors import DuplicateKey

        if isinstance(exc, DuplicateKey):
            raise DuplicateUser(f"user {user_id} already enrolled") from exc
        raise


def authenticate(
    store: Store,
    user_id: str,
    password: str,
    *,
    ttl_hours: float = DEFAULT_TTL_HOURS,
    now: datetime | None = None,
) -> Session:
    """Verify a login and issue a fresh bearer session."""
    packed = repos.get_login(store, user_id)
    if packed is None:
        verify_password(_DECOY_DIGEST, password)
        raise InvalidCredentials("invalid user id or password")
    if not verify_password(packed, password):
        raise InvalidCredentials("invalid user id or password")

    issued_at = now or _utcnow()
    expires_at = issued_at + timedelta(hours=ttl_hours)
    session = Session(generate_token(), user_id, issued_at, expires_at)
    repos.put_session(
        store, session.token, user_id, issued_at.isoformat(), expires_at.isoformat()
    )
    return session


def verify_session(store: Store, token: str, *, now: datetime | None = None) -> str:
    """Resolve a bearer token to its user id, or raise."""
    row = repos.get_session(store, token)
    if row is None:
        raise UnknownToken("unknown session token")
    moment = now or _utcnow()
    if moment >= datetime.fromisoformat(row["expires_at"]):
        raise ExpiredSession("session has expired")
    return row["Userid"]
