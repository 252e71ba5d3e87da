#!/usr/bin/env python3
"""Run every exact-identity suite and exit nonzero if anything fails.

Usage:
    python scripts/verify_all.py [--seed S] [--random-trees N] [--json]
"""

import sys

from coxkit.cli import main

if __name__ == "__main__":
    sys.exit(main(["verify", "all"] + sys.argv[1:]))
