#!/usr/bin/env python3
"""
Main runnable file for the codebase

Examples:
- python3 run.py run instance.json
- python3 run.py verify all --format table
- python3 run.py simulate instance.json --trials 100000 --workers 4
- python3 run.py exact-dist instance.json
"""

import sys

from cli.main import main

if __name__ == "__main__":
    sys.exit(main())
