"""`python -m app` 진입점."""

from app.cli import app

app(prog_name="lens-dinv")
