"""HTTP API layer."""
from hrms.api.app import PUBLIC_ROUTES, create_app

__all__ = ["PUBLIC_ROUTES", "create_app"]
