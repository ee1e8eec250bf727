"""Module entry point so `python -m motivic_pairs` matches the installed script."""

from .cli import main

if __name__ == "__main__":
    raise SystemExit(main())
