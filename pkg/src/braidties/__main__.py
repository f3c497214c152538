"""Module entry point so that ``python3 -m braidties`` runs the CLI."""

from .cli import main

if __name__ == "__main__":
    raise SystemExit(main())
