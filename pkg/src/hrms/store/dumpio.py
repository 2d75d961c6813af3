"""Line-delimited store export and import.

Format: a header line, then one record per line — the table name, a space,
and the row as canonical JSON (sorted keys, no extra whitespace). Tables
appear in a fixed order, rows within a table in primary-key order, so
dumping the same store state always produces the identical byte sequence.
"""
from __future__ import annotations

import json
from typing import Iterable

from hrms.errors import SchemaMismatch, StorageError
from hrms.store.engine import SCHEMA_VERSION, TABLE_KEYS, TABLES, Store
from hrms.store import repos

DUMP_HEADER = "#hrms-dump v1"


def dump_store(store: Store) -> str:
    """Serialize every committed row to the line format."""
    lines = [DUMP_HEADER]
    with store.snapshot() as txn:
        for table in TABLES:
            order = ", ".join(TABLE_KEYS[table])
            rows = txn.execute(f"SELECT * FROM {table} ORDER BY {order}").fetchall()
            for row in rows:
                payload = json.dumps(
                    dict(row), sort_keys=True, ensure_ascii=True, separators=(",", ":")
                )
                lines.append(f"{table} {payload}")
    return "\n".join(lines) + "\n"


def _parse(text: str) -> Iterable[tuple[str, dict]]:
    lines = text.splitlines()
    if not lines or lines[0].strip() != DUMP_HEADER:
        raise StorageError(f"not a dump file (expected header {DUMP_HEADER!r})")
    for lineno, line in enumerate(lines[1:], start=2):
        if not line.strip():
            continue
        table, sep, payload = line.partition(" ")
        if not sep or table not in TABLES:
            raise StorageError(f"line {lineno}: unknown table {table!r}")
        try:
            row = json.loads(payload)
        except json.JSONDecodeError as exc:
            raise StorageError(f"line {lineno}: bad record payload ({exc})") from exc
        if not isinstance(row, dict):
            raise StorageError(f"line {lineno}: record payload must be an object")
        yield table, row


def wipe_store(store: Store) -> None:
    """Delete every row from every table and restore the META defaults."""
    with store.transaction() as txn:
        for table in TABLES:
            txn.execute(f"DELETE FROM {table}")
        txn.execute(
            "INSERT INTO META (key, value) VALUES (?, ?)", ("schema_version", SCHEMA_VERSION)
        )
        for seq in ("next_employee_seq", "next_applicant_seq"):
            txn.execute("INSERT INTO META (key, value) VALUES (?, ?)", (seq, "1"))


def load_store(store: Store, text: str, *, force: bool = False) -> int:
    """Ingest a dump into the store; returns the number of records loaded.

    A store that already holds records is refused unless ``force`` wipes it
    first. The whole load is one transaction.
    """
    records = list(_parse(text))
    for table, row in records:
        if table == "META" and row.get("key") == "schema_version":
            if row.get("value") != SCHEMA_VERSION:
                raise SchemaMismatch(
                    f"dump has schema version {row.get('value')!r}, need {SCHEMA_VERSION!r}"
                )
    if not repos.is_empty(store):
        if not force:
            raise StorageError("store is not empty; pass force to replace its contents")
    with store.transaction() as txn:
        known = {
            table: {r["name"] for r in txn.execute(f"PRAGMA table_info({table})")}
            for table in TABLES
        }
        for table in TABLES:
            txn.execute(f"DELETE FROM {table}")
        loaded = 0
        for table, row in records:
            bad = set(row) - known[table]
            if bad:
                raise StorageError(f"unknown columns for {table}: {sorted(bad)}")
            columns = ", ".join(row.keys())
            placeholders = ", ".join("?" for _ in row)
            txn.execute(
                f"INSERT INTO {table} ({columns}) VALUES ({placeholders})",
                tuple(row.values()),
            )
            loaded += 1
    return loaded
