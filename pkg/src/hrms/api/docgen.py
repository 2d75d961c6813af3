"""Generate the endpoint reference into docs/.

Writes three files from the live route table so the documentation cannot
drift from the application:

    docs/API.md         -- human-readable endpoint reference
    docs/endpoints.json -- machine-readable [{method, path, public}] list
    docs/openapi.json   -- OpenAPI schema

Usage: python -m hrms.api.docgen [output-dir]
"""
from __future__ import annotations

import json
import sys
import tempfile
from pathlib import Path

from hrms.api.app import PUBLIC_ROUTES, create_app
from hrms.config import HrmsConfig
from hrms.store import Store

PREAMBLE = """\
# HTTP API reference

All endpoints speak JSON over HTTP/1.1 (UTF-8). Every route below except
the ones marked **public** requires a bearer session token from
`POST /api/login`:

    Authorization: Bearer <token>

Conventions:

- Money amounts are integers in minor units (e.g. cents); they are never
  floats.
- Dates are ISO `YYYY-MM-DD` strings; timestamps are ISO 8601 with offset.
- Employee bodies use the storage attribute names (`Empid`, `Firname`,
  `Pin`, ...); see docs/STORAGE.md for the full attribute map. Other
  bodies use the field names shown per endpoint.
- Errors share one shape:

      {"http_status": 422, "code": "validation_failed", "message": "...",
       "field_errors": [{"field": "Pin", "rule": "MalformedNumber",
                         "message": "..."}]}

  `field_errors` appears on validation failures and always lists every
  invalid field at once. Status codes: 400 malformed body, 401 auth,
  404 missing record, 409 conflict, 422 validation.
- List endpoints are ordered by primary key and support `?offset=` and
  `?limit=` (default 100) where noted.

This file is generated by `python -m hrms.api.docgen`; edit the endpoint
docstrings, not this file.
"""


def collect_routes() -> list[dict]:
    with tempfile.TemporaryDirectory() as tmp:
        store = Store(Path(tmp) / "docgen", create=True)
        try:
            app = create_app(store, HrmsConfig())
            routes = []
            for route in app.routes:
                methods = getattr(route, "methods", None)
                if not methods or not route.path.startswith("/api"):
                    continue
                for method in sorted(methods - {"HEAD", "OPTIONS"}):
                    routes.append({
                        "method": method,
                        "path": route.path,
                        "public": (method, route.path) in PUBLIC_ROUTES,
                        "doc": (route.endpoint.__doc__ or "").strip(),
                    })
            routes.sort(key=lambda r: (r["path"], r["method"]))
            schema = app.openapi()
        finally:
            store.close()
    return routes, schema


def render_markdown(routes: list[dict]) -> str:
    lines = [PREAMBLE]
    for route in routes:
        public = " (public)" if route["public"] else ""
        lines.append(f"## {route['method']} {route['path']}{public}\n")
        if route["doc"]:
            doc = "\n".join(line.strip() for line in route["doc"].splitlines())
            lines.append(doc + "\n")
    return "\n".join(lines)


def main(argv: list[str] | None = None) -> int:
    argv = sys.argv[1:] if argv is None else argv
    out_dir = Path(argv[0]) if argv else Path("docs")
    out_dir.mkdir(parents=True, exist_ok=True)
    routes, schema = collect_routes()
    (out_dir / "API.md").write_text(render_markdown(routes), encoding="utf-8")
    (out_dir / "endpoints.json").write_text(
        json.dumps(
            [{k: r[k] for k in ("method", "path", "public")} for r in routes],
            indent=2,
        )
        + "\n",
        encoding="utf-8",
    )
    (out_dir / "openapi.json").write_text(json.dumps(schema, indent=2) + "\n", encoding="utf-8")
    print(f"wrote {out_dir}/API.md, endpoints.json, openapi.json ({len(routes)} routes)")
    return 0


if __name__ == "__main__":
    sys.exit(main())
