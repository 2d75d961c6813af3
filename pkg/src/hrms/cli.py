"""Administrative command line.

Subcommands: init, admin enroll, serve, report, dump, load, seed.

Exit codes: 0 success, 1 usage error, 2 validation error, 3 storage or
environment error. Diagnostics go to stderr; data goes to stdout or the
--out file only. Passwords are read from an interactive no-echo prompt or
the HRMS_ADMIN_PASSWORD environment variable, never from argv.
"""
from __future__ import annotations

import argparse
import fcntl
import getpass
import os
import sys
from contextlib import contextmanager
from pathlib import Path

from hrms import auth, seed
from hrms.config import ConfigError, HrmsConfig, load_config, write_config
from hrms.errors import (
    AuthError,
    DomainError,
    HrmsError,
    StorageError,
    StoreLocked,
    ValidationFailed,
)
from hrms.reporting import InvalidCriteria, generate_report, parse_criteria
from hrms.store import LOCK_FILENAME, Store, dump_store, load_store

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_VALIDATION = 2
EXIT_STORAGE = 3

PASSWORD_ENV = "HRMS_ADMIN_PASSWORD"
DATA_DIR_ENV = "HRMS_DATA_DIR"


class _UsageExit(Exception):
    def __init__(self, message: str):
        super().__init__(message)


class Parser(argparse.ArgumentParser):
    """argparse that reports usage problems as exit code 1, not 2."""

    def error(self, message: str):
        raise _UsageExit(message)


@contextmanager
def store_lock(data_dir: Path):
    """Exclusive advisory lock on the store; a running server holds it."""
    fd = os.open(data_dir / LOCK_FILENAME, os.O_RDWR | os.O_CREAT, 0o644)
    try:
        fcntl.flock(fd, fcntl.LOCK_EX | fcntl.LOCK_NB)
    except OSError:
        os.close(fd)
        raise StoreLocked(f"store at {data_dir} is locked (is a server running?)")
    try:
        yield
    finally:
        fcntl.flock(fd, fcntl.LOCK_UN)
        os.close(fd)


def _data_dir(args) -> Path:
    raw = args.data_dir or os.environ.get(DATA_DIR_ENV)
    if not raw:
        raise _UsageExit("--data-dir is required (or set HRMS_DATA_DIR)")
    return Path(raw)


def build_parser() -> Parser:
    parser = Parser(prog="hrms", description="HR management service administration")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name: str, help_text: str) -> argparse.ArgumentParser:
        p = sub.add_parser(name, help=help_text)
        p.add_argument("--data-dir", help=f"store directory (or ${DATA_DIR_ENV})")
        return p

    add("init", "create a new store directory with the default config")

    admin = sub.add_parser("admin", help="administrator accounts")
    admin_sub = admin.add_subparsers(dest="admin_command", required=True)
    enroll = admin_sub.add_parser("enroll", help="enroll an administrator")
    enroll.add_argument("--data-dir", help=f"store directory (or ${DATA_DIR_ENV})")
    enroll.add_argument("--user", required=True, help="administrator user id")

    serve = add("serve", "run the HTTP service until interrupted")
    serve.add_argument("--listen", help="host:port (overrides env and config file)")
    serve.add_argument("--console", help="directory with the built web console bundle")

    report = add("report", "generate a report document")
    report.add_argument("--kind", required=True)
    report.add_argument("--from", dest="from_date")
    report.add_argument("--to", dest="to_date")
    report.add_argument("--department")
    report.add_argument("--format", choices=["CSV", "PlainText"])
    report.add_argument("--out", required=True, help="output file ('-' for stdout)")

    dump = add("dump", "export every record as line-delimited text")
    dump.add_argument("--out", required=True, help="output file ('-' for stdout)")

    load = add("load", "import a dump file into the store")
    load.add_argument("--in", dest="infile", required=True)
    load.add_argument("--force", action="store_true",
                      help="replace the contents of a non-empty store")

    seed_cmd = add("seed", "insert fixture data")
    seed_cmd.add_argument("--demo", action="store_true", required=True,
                          help="the documented demo fixture")
    return parser


def _write_out(out: str, content: bytes) -> None:
    if out == "-":
        sys.stdout.buffer.write(content)
        sys.stdout.buffer.flush()
    else:
        Path(out).write_bytes(content)


def cmd_init(args) -> int:
    data_dir = _data_dir(args)
    if data_dir.exists() and any(data_dir.iterdir()):
        raise StorageError(f"{data_dir} already exists and is not empty")
    store = Store(data_dir, create=True)
    store.close()
    write_config(data_dir)
    print(f"initialized store at {data_dir}", file=sys.stderr)
    return EXIT_OK


def _read_password() -> str:
    from_env = os.environ.get(PASSWORD_ENV)
    if from_env is not None:
        return from_env
    password = getpass.getpass("Password: ")
    confirm = getpass.getpass("Repeat password: ")
    if password != confirm:
        raise ValidationFailed([], "passwords do not match")
    return password


def cmd_enroll(args) -> int:
    data_dir = _data_dir(args)
    with store_lock(data_dir), Store(data_dir) as store:
        auth.enroll(store, args.user, _read_password())
    print(f"enrolled administrator {args.user}", file=sys.stderr)
    return EXIT_OK


def cmd_serve(args) -> int:
    import uvicorn

    from hrms.api import create_app

    data_dir = _data_dir(args)
    config = load_config(data_dir)
    if args.listen:
        config.listen = args.listen
    with store_lock(data_dir), Store(data_dir) as store:
        app = create_app(store, config, console_dir=args.console)
        print(f"serving on http://{config.listen}/", file=sys.stderr)
        uvicorn.run(app, host=config.listen_host, port=config.listen_port, log_level="warning")
    return EXIT_OK


def cmd_report(args) -> int:
    data_dir = _data_dir(args)
    criteria = parse_criteria(
        args.kind, args.from_date, args.to_date, args.department, args.format
    )
    with store_lock(data_dir), Store(data_dir) as store:
        document = generate_report(store, criteria)
    _write_out(args.out, document.content)
    if args.out != "-":
        print(f"wrote {document.filename} content to {args.out}", file=sys.stderr)
    return EXIT_OK


def cmd_dump(args) -> int:
    data_dir = _data_dir(args)
    with store_lock(data_dir), Store(data_dir) as store:
        text = dump_store(store)
    _write_out(args.out, text.encode("utf-8"))
    return EXIT_OK


def cmd_load(args) -> int:
    data_dir = _data_dir(args)
    text = Path(args.infile).read_text(encoding="utf-8")
    with store_lock(data_dir), Store(data_dir) as store:
        loaded = load_store(store, text, force=args.force)
    print(f"loaded {loaded} records", file=sys.stderr)
    return EXIT_OK


def cmd_seed(args) -> int:
    data_dir = _data_dir(args)
    config = load_config(data_dir)
    with store_lock(data_dir), Store(data_dir) as store:
        seed.seed_demo(store, config)
    print("seeded demo fixture", file=sys.stderr)
    return EXIT_OK


_COMMANDS = {
    "init": cmd_init,
    "serve": cmd_serve,
    "report": cmd_report,
    "dump": cmd_dump,
    "load": cmd_load,
    "seed": cmd_seed,
}


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        if args.command == "admin":
            return cmd_enroll(args)
        return _COMMANDS[args.command](args)
    except _UsageExit as exc:
        print(f"hrms: usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (ValidationFailed, DomainError, AuthError, InvalidCriteria, ConfigError) as exc:
        for error in getattr(exc, "errors", []):
            print(f"hrms: {error.field}: {error.rule}: {error.message}", file=sys.stderr)
        print(f"hrms: error: {exc}", file=sys.stderr)
        return EXIT_VALIDATION
    except (StorageError, OSError) as exc:
        print(f"hrms: error: {exc}", file=sys.stderr)
        return EXIT_STORAGE
    except HrmsError as exc:
        print(f"hrms: error: {exc}", file=sys.stderr)
        return EXIT_STORAGE
    except KeyboardInterrupt:
        return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
