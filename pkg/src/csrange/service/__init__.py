"""HTTP service facade; see app.py for the FastAPI application."""

from .app import app

__all__ = ["app"]
