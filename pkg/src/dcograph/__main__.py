"""Module entry point mirroring the dcograph console script."""

from __future__ import annotations

from dcograph.cli import main

if __name__ == "__main__":
    raise SystemExit(main())
