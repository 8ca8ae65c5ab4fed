"""HTTP layer: FastAPI app plus its request/response models."""

from .app import app, serve

__all__ = ["app", "serve"]
