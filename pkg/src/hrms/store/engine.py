"""Embedded transactional store.

A single-directory, file-backed store (SQLite underneath) holding every
record type. The stored schema uses the classic attribute names for each
table (``Empid``, ``vacbalance``, ``Jdate``, ...); docs/STORAGE.md maps
them to the domain field names.

Concurrency contract: a :class:`Store` handle is shareable across threads
(each thread gets its own connection); all mutations run inside
transactions that serialize writers, and readers only ever observe
committed state.

Test hooks: ``fail_points`` raises at a named checkpoint inside a
transaction (the transaction rolls back), ``crash_points`` abandons the
connection outright to simulate a crash before commit. Both are empty in
normal operation.
"""
from __future__ import annotations

import sqlite3
import threading
from contextlib import contextmanager
from pathlib import Path
from typing import Iterator

from hrms.errors import InjectedFailure, SchemaMismatch, StorageError, TransactionClosed

SCHEMA_VERSION = "1"
DB_FILENAME = "hrms.db"
CONFIG_FILENAME = "hrms.conf"
LOCK_FILENAME = ".lock"

# DDL per table, in dump order. Column names follow the storage schema.
TABLES: dict[str, str] = {
    "META": """
        CREATE TABLE IF NOT EXISTS META (
            key   TEXT PRIMARY KEY,
            value TEXT NOT NULL
        )""",
    "LOGIN": """
        CREATE TABLE IF NOT EXISTS LOGIN (
            Userid   TEXT PRIMARY KEY,
            password TEXT NOT NULL
        )""",
    "SESSION": """
        CREATE TABLE IF NOT EXISTS SESSION (
            token      TEXT PRIMARY KEY,
            Userid     TEXT NOT NULL,
            issued_at  TEXT NOT NULL,
            expires_at TEXT NOT NULL
        )""",
    "EMPLOYEE": """
        CREATE TABLE IF NOT EXISTS EMPLOYEE (
            Title      TEXT NOT NULL,
            Empid      TEXT PRIMARY KEY,
            Firname    TEXT NOT NULL,
            Midname    TEXT,
            Lastname   TEXT NOT NULL,
            Blood      TEXT NOT NULL,
            Nation     TEXT NOT NULL,
            Address    TEXT NOT NULL,
            City       TEXT NOT NULL,
            State      TEXT NOT NULL,
            Pin        TEXT NOT NULL,
            Home       TEXT NOT NULL,
            Workplace  TEXT NOT NULL,
            Mobile     TEXT,
            Email      TEXT NOT NULL,
            Status     TEXT NOT NULL,
            Supervisor TEXT NOT NULL,
            Hdate      TEXT NOT NULL,
            Dept       TEXT NOT NULL,
            Bdate      TEXT NOT NULL,
            gender     TEXT NOT NULL,
            marital    TEXT NOT NULL
        )""",
    "LEAVE": """
        CREATE TABLE IF NOT EXISTS LEAVE (
            empname     TEXT NOT NULL,
            Empid       TEXT PRIMARY KEY,
            vacstart    INTEGER NOT NULL,
            vacbalance  INTEGER NOT NULL,
            Vldate      TEXT,
            sickstart   INTEGER NOT NULL,
            sickbalance INTEGER NOT NULL,
            Sldate      TEXT,
            holstart    INTEGER NOT NULL,
            Holbal      INTEGER NOT NULL,
            Hldate      TEXT,
            frozen      INTEGER NOT NULL DEFAULT 0
        )""",
    "ATTENDANCE": """
        CREATE TABLE IF NOT EXISTS ATTENDANCE (
            Empid TEXT NOT NULL,
            Adate TEXT NOT NULL,
            hours TEXT NOT NULL,
            PRIMARY KEY (Empid, Adate)
        )""",
    "TRAINING": """
        CREATE TABLE IF NOT EXISTS TRAINING (
            Empid     TEXT NOT NULL,
            course    TEXT NOT NULL,
            startdate TEXT NOT NULL,
            enddate   TEXT,
            status    TEXT NOT NULL,
            PRIMARY KEY (Empid, course)
        )""",
    "PAYROLL": """
        CREATE TABLE IF NOT EXISTS PAYROLL (
            Empid        TEXT NOT NULL,
            pstart       TEXT NOT NULL,
            pend         TEXT NOT NULL,
            basic        INTEGER NOT NULL,
            intraining   INTEGER NOT NULL,
            factor       TEXT NOT NULL,
            basicapplied INTEGER NOT NULL,
            allowances   TEXT NOT NULL,
            deductions   TEXT NOT NULL,
            gross        INTEGER NOT NULL,
            net          INTEGER NOT NULL,
            paydays      INTEGER NOT NULL,
            payhours     TEXT NOT NULL,
            PRIMARY KEY (Empid, pstart)
        )""",
    "PERFORMANCE": """
        CREATE TABLE IF NOT EXISTS PERFORMANCE (
            Empname        TEXT NOT NULL,
            Empid          TEXT NOT NULL,
            Dept           TEXT NOT NULL,
            Workgroup      TEXT NOT NULL,
            Division       TEXT NOT NULL,
            Position       TEXT NOT NULL,
            Evaluate       TEXT NOT NULL,
            Evaluator      TEXT NOT NULL,
            Revfr          TEXT NOT NULL,
            Revto          TEXT NOT NULL,
            responsibility TEXT NOT NULL,
            PRIMARY KEY (Empid, Evaluate)
        )""",
    "RESIGNATION": """
        CREATE TABLE IF NOT EXISTS RESIGNATION (
            Title     TEXT NOT NULL,
            Empname   TEXT NOT NULL,
            Empid     TEXT PRIMARY KEY,
            position  TEXT NOT NULL,
            Dept      TEXT NOT NULL,
            Superv    TEXT NOT NULL,
            Jdate     TEXT NOT NULL,
            Rdate     TEXT NOT NULL,
            Email     TEXT NOT NULL,
            Gender    TEXT NOT NULL,
            City      TEXT NOT NULL,
            Homephone TEXT NOT NULL
        )""",
    "APPLICANT": """
        CREATE TABLE IF NOT EXISTS APPLICANT (
            Appid          TEXT PRIMARY KEY,
            name           TEXT NOT NULL,
            email          TEXT NOT NULL,
            phone          TEXT NOT NULL,
            expyears       INTEGER NOT NULL,
            specialization TEXT NOT NULL,
            interest       TEXT NOT NULL,
            resume         TEXT NOT NULL,
            status         TEXT NOT NULL
        )""",
    "JOBREQ": """
        CREATE TABLE IF NOT EXISTS JOBREQ (
            Dept           TEXT NOT NULL,
            specialization TEXT NOT NULL,
            minyears       INTEGER NOT NULL,
            PRIMARY KEY (Dept, specialization)
        )""",
}

# Primary-key columns per table; fixes row ordering for dumps and lists.
TABLE_KEYS: dict[str, tuple[str, ...]] = {
    "META": ("key",),
    "LOGIN": ("Userid",),
    "SESSION": ("token",),
    "EMPLOYEE": ("Empid",),
    "LEAVE": ("Empid",),
    "ATTENDANCE": ("Empid", "Adate"),
    "TRAINING": ("Empid", "course"),
    "PAYROLL": ("Empid", "pstart"),
    "PERFORMANCE": ("Empid", "Evaluate"),
    "RESIGNATION": ("Empid",),
    "APPLICANT": ("Appid",),
    "JOBREQ": ("Dept", "specialization"),
}

_BUSY_TIMEOUT_MS = 30_000


class Transaction:
    """A group of writes that commits or rolls back as one unit.

    Exactly one of :meth:`commit` / :meth:`rollback` terminates it; any
    use after termination raises :class:`TransactionClosed`.
    """

    def __init__(self, store: "Store", conn: sqlite3.Connection):
        self._store = store
        self._conn = conn
        self._closed = False

    def execute(self, sql: str, params: tuple = ()) -> sqlite3.Cursor:
        if self._closed:
            raise TransactionClosed("transaction already terminated")
        return self._conn.execute(sql, params)

    def checkpoint(self, name: str) -> None:
        """Named fail-point hook; a no-op unless a test armed it."""
        self._store._hit_checkpoint(name, self)

    def commit(self) -> None:
        if self._closed:
            raise TransactionClosed("transaction already terminated")
        self._conn.execute("COMMIT")
        self._closed = True

    def rollback(self) -> None:
        if self._closed:
            raise TransactionClosed("transaction already terminated")
        self._conn.execute("ROLLBACK")
        self._closed = True

    @property
    def closed(self) -> bool:
        return self._closed


class Store:
    """Handle to an open store directory. Thread-safe; see module docs."""

    def __init__(self, root: str | Path, create: bool = False):
        self.root = Path(root)
        self.db_path = self.root / DB_FILENAME
        self._local = threading.local()
        self._conns_lock = threading.Lock()
        self._conns: list[sqlite3.Connection] = []
        self._closed = False
        self.fail_points: set[str] = set()
        self.crash_points: set[str] = set()

        if create:
            self.root.mkdir(parents=True, exist_ok=True)
            self._init_schema()
        elif not self.db_path.exists():
            raise StorageError(f"no store at {self.root} (run init first)")
        self._check_schema_version()

    # -- connection management -------------------------------------------

    def _connect(self) -> sqlite3.Connection:
        conn = sqlite3.connect(
            self.db_path, isolation_level=None, check_same_thread=False
        )
        conn.row_factory = sqlite3.Row
        conn.execute("PRAGMA journal_mode=WAL")
        conn.execute("PRAGMA synchronous=NORMAL")
        conn.execute(f"PRAGMA busy_timeout={_BUSY_TIMEOUT_MS}")
        with self._conns_lock:
            self._conns.append(conn)
        return conn

    def _conn(self) -> sqlite3.Connection:
        if self._closed:
            raise StorageError("store is closed")
        conn = getattr(self._local, "conn", None)
        if conn is None:
            conn = self._connect()
            self._local.conn = conn
        return conn

    def close(self) -> None:
        """Close every connection; uncommitted work is discarded."""
        self._closed = True
        with self._conns_lock:
            for conn in self._conns:
                try:
                    conn.close()
                except sqlite3.Error:
                    pass
            self._conns.clear()
        self._local = threading.local()

    def __enter__(self) -> "Store":
        return self

    def __exit__(self, *exc) -> None:
        self.close()

    # -- schema ------------------------------------------------------------

    def _init_schema(self) -> None:
        conn = self._conn()
        conn.execute("BEGIN IMMEDIATE")
        try:
            for ddl in TABLES.values():
                conn.execute(ddl)
            conn.execute(
                "INSERT OR IGNORE INTO META (key, value) VALUES (?, ?)",
                ("schema_version", SCHEMA_VERSION),
            )
            for seq in ("next_employee_seq", "next_applicant_seq"):
                conn.execute(
                    "INSERT OR IGNORE INTO META (key, value) VALUES (?, ?)", (seq, "1")
                )
            conn.execute("COMMIT")
        except BaseException:
            conn.execute("ROLLBACK")
            raise

    def _check_schema_version(self) -> None:
        row = self._conn().execute(
            "SELECT value FROM META WHERE key = 'schema_version'"
        ).fetchone()
        if row is None or row["value"] != SCHEMA_VERSION:
            found = None if row is None else row["value"]
            raise SchemaMismatch(
                f"store schema version {found!r}, this build requires {SCHEMA_VERSION!r}"
            )

    # -- reads and transactions --------------------------------------------

    def read(self, sql: str, params: tuple = ()) -> sqlite3.Cursor:
        """Run a single read statement outside any explicit transaction."""
        return self._conn().execute(sql, params)

    def begin(self, immediate: bool = True) -> Transaction:
        conn = self._conn()
        if conn.in_transaction:
            # a nested begin on the same thread is always a caller bug:
            # pass the open Transaction down instead
            raise StorageError("transaction already open on this thread")
        conn.execute("BEGIN IMMEDIATE" if immediate else "BEGIN")
        return Transaction(self, conn)

    @contextmanager
    def transaction(self) -> Iterator[Transaction]:
        """Write transaction: commits on success, rolls back on any error."""
        txn = self.begin(immediate=True)
        try:
            yield txn
        except BaseException:
            if not txn.closed:
                txn.rollback()
            raise
        else:
            if not txn.closed:
                txn.commit()

    @contextmanager
    def snapshot(self) -> Iterator[Transaction]:
        """Read-only transaction: every query sees one committed snapshot."""
        txn = self.begin(immediate=False)
        try:
            yield txn
        finally:
            if not txn.closed:
                txn.rollback()

    # -- fail-point hooks ----------------------------------------------------

    def _hit_checkpoint(self, name: str, txn: Transaction) -> None:
        if name in self.crash_points:
            # Abandon the connection with the transaction open: nothing
            # reaches disk, exactly as if the process had died here.
            txn._closed = True
            conn = txn._conn
            with self._conns_lock:
                if conn in self._conns:
                    self._conns.remove(conn)
            conn.close()
            self._local.conn = None
            raise InjectedFailure(f"simulated crash at {name}")
        if name in self.fail_points:
            raise InjectedFailure(f"injected failure at {name}")
