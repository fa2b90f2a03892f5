"""Regenerate every golden file under tests/goldens.

Usage: python scripts/make_goldens.py [out_dir]
"""
import sys
from pathlib import Path

from finitegauss.cli import main

if __name__ == "__main__":
    out_dir = sys.argv[1] if len(sys.argv) > 1 else str(Path(__file__).parent.parent / "tests" / "goldens")
    raise SystemExit(main(["make-goldens", "--out-dir", out_dir]))
