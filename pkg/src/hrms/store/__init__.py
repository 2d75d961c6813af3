"""Durable, transactional persistence for every record type."""
from hrms.store.engine import (
    CONFIG_FILENAME,
    DB_FILENAME,
    LOCK_FILENAME,
    SCHEMA_VERSION,
    Store,
    Transaction,
)
from hrms.store.dumpio import DUMP_HEADER, dump_store, load_store, wipe_store

__all__ = [
    "CONFIG_FILENAME",
    "DB_FILENAME",
    "DUMP_HEADER",
    "LOCK_FILENAME",
    "SCHEMA_VERSION",
    "Store",
    "Transaction",
    "dump_store",
    "load_store",
    "wipe_store",
]
