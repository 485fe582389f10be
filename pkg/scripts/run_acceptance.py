#!/usr/bin/env python3
"""Run the acceptance suite with the per-criterion PASS/FAIL lines visible."""

import subprocess
import sys


def main() -> int:
    return subprocess.call(
        [sys.executable, "-m", "pytest", "tests/test_acceptance.py", "-s", "-v"]
        + sys.argv[1:]
    )


if __name__ == "__main__":
    raise SystemExit(main())
