"""Runtime settings, loaded from environment variables or a .env file."""
import os
import sys
from dotenv import load_dotenv

# Load environment variables from .env file
load_dotenv()

OUTPUT_FORMATS = ("text", "json")


def _flag(value):
    return str(value).strip().lower() in ("1", "true", "yes", "on")


def _workers(value):
    """Positive thread count; anything else falls back to 1 with a warning."""
    try:
        workers = int(str(value).strip())
    except ValueError:
        workers = 0
    if workers < 1:
        print(f"warning: ignoring HUNTER_WORKERS={value!r}, expected a positive integer", file=sys.stderr)
        return 1
    return workers


def _output_format(value):
    fmt = str(value).strip().lower()
    if fmt not in OUTPUT_FORMATS:
        print(f"warning: ignoring HUNTER_FORMAT={value!r}, expected one of {', '.join(OUTPUT_FORMATS)}",
              file=sys.stderr)
        return "text"
    return fmt


def load_runtime(environ=os.environ):
    """Read the HUNTER_* variables into a settings dict; CLI flags override these."""
    return {
        "workers": _workers(environ.get("HUNTER_WORKERS", "1")),
        "verbose": _flag(environ.get("HUNTER_VERBOSE", "false")),
        "format": _output_format(environ.get("HUNTER_FORMAT", "text")),
    }


# Runtime switches
RUNTIME = load_runtime()
