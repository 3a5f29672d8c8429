"""Module entry so `python -m euler_forge` behaves like the installed script."""

from __future__ import annotations

from .cli import entrypoint

if __name__ == "__main__":
    entrypoint()
