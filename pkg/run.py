#!/usr/bin/env python3
"""
Simple script to run RainbowHunter directly
"""
import os
import sys

# Add the project directory to the Python path
# This ensures imports in the project work correctly
script_dir = os.path.dirname(os.path.abspath(__file__))
sys.path.insert(0, script_dir)

import traceback

# Distribution name -> import name
REQUIRED_PACKAGES = {
    "numpy": "numpy",
    "pandas": "pandas",
    "python-dotenv": "dotenv",
    "networkx": "networkx",
}


def check_environment():
    """Check if the required packages are installed."""
    missing_packages = []
    for package, module in REQUIRED_PACKAGES.items():
        try:
            __import__(module)
        except ImportError:
            missing_packages.append(package)

    if missing_packages:
        print(f"Missing required packages: {', '.join(missing_packages)}", file=sys.stderr)
        print("Run: pip install -r requirements.txt", file=sys.stderr)
        return False

    return True


def run_rainbow_hunter(argv=None):
    """Run RainbowHunter with the given arguments."""
    if not check_environment():
        sys.exit(1)

    try:
        # Import main here so a missing package is reported by check_environment
        import main
        sys.exit(main.main(argv))
    except KeyboardInterrupt:
        print("\nRainbowHunter interrupted by user", file=sys.stderr)
        sys.exit(130)
    except Exception as e:
        print(f"Unexpected error running RainbowHunter: {e}", file=sys.stderr)
        traceback.print_exc()
        sys.exit(1)


if __name__ == "__main__":
    run_rainbow_hunter()
