"""
Verification tool for the identity catalog.

Modules:
    - config: VerifyConfig run settings
    - harness: verify_identity, run_suite
    - hunt: table 129 adjudication and the log-ratio remark fit
    - report_generator: table / JSON / CSV rendering
    - cli: command-line entry point

Usage:
    python -m verification.cli verify --ids main-13
"""
