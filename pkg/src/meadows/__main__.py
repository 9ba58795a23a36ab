"""Allow ``python -m meadows`` as an alias for the ``meadow`` command."""
from meadows.cli import main

if __name__ == "__main__":
    raise SystemExit(main())
