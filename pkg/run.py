#!/usr/bin/env python3
"""
Entry Point for the logkernel verification tool

Forwards to the command-line front end in verification.cli.

Usage:
    python run.py verify --ids main-01..main-19
    python run.py hunt --convention both --format json --out hunt.json
    python run.py eval --fn digamma --x 1

Environment Variables (diagnostics only):
    - LOGKERNEL_LOG_LEVEL: Logging level (default: WARNING)
    - LOGKERNEL_LOG_FORMAT: json or text (default: text)
    - LOGKERNEL_MAX_WORKERS: Suite thread pool size (default: 4)
"""

import sys
from pathlib import Path

# Add project root to path
project_root = Path(__file__).parent
sys.path.insert(0, str(project_root))


def main() -> int:
    from verification.cli import main as cli_main

    return cli_main(sys.argv[1:])


if __name__ == "__main__":
    sys.exit(main())
