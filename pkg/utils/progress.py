"""Timestamped progress messages."""
import sys
import time

from config.settings import RUNTIME


def set_verbose(enabled):
    """Switch progress output on or off for the rest of the process."""
    RUNTIME["verbose"] = bool(enabled)


def display_progress(message):
    """Display progress message with timestamp on stderr, when verbose."""
    if not RUNTIME["verbose"]:
        return
    timestamp = time.strftime("%H:%M:%S")
    print(f"[{timestamp}] {message}", file=sys.stderr)
