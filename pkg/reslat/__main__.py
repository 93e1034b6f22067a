"""Entry point for running reslat as a module.

Usage:
    python -m reslat <command> [options]
"""

from reslat.cli import main

if __name__ == "__main__":
    raise SystemExit(main())
