"""ctest wrapper for the python smoke tests.

Usage: run_smoke.py <stage-dir> <test-dir>. Exits 77 (ctest skip) when the
staged module or pytest is unavailable.
"""

import sys

STAGE, TESTS = sys.argv[1], sys.argv[2]
sys.path.insert(0, STAGE)

try:
    import proxkit  # noqa: F401
except ImportError as exc:
    print(f"skipping python smoke tests: {exc}")
    sys.exit(77)

try:
    import pytest
except ImportError:
    print("skipping python smoke tests: pytest not installed")
    sys.exit(77)

sys.exit(pytest.main(["-q", TESTS]))
