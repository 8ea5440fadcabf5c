"""
Checking printed formulas
=========================

The verification suites compare exact results with printed reference data.
Known inconsistencies come back as WARN rows with stable identifiers.
"""

from qwzeta.suites import overall_status, run_suite

for suite in ("factorizations", "expansions", "zetas"):
    checks = run_suite(suite)
    print(f"-- {suite}: {overall_status(checks)}")
    for c in checks:
        if c.status != "PASS":
            print(f"   {c.status} [{c.id}] {c.name}: {c.message}")

# the same runs are available from the shell:
#   qwzeta verify --suite all
#   qwzeta verify --suite zetas --format json
