"""The verification suite, and proof that it bites.

run_verify recomputes every family along every route and compares
bit-exactly; 23 named checks, deterministic output.  Injecting a fault
into one recurrence seed simulates a corrupted build -- the suite must
then fail, and fail at the very first index the corruption can reach.
"""

from gmlucas import run_verify

report = run_verify(max_n=50, max_poly_n=12)
print(f"clean run: {len(report.checks)} checks, overall "
      f"{'pass' if report.overall else 'FAIL'}")
for check in report.checks:
    print(f"  [{'pass' if check.passed else 'FAIL'}] {check.name} ({check.range})")
assert report.overall

print()
for fault in ("m1", "gm0", "gm1"):
    report = run_verify(max_n=12, max_poly_n=6, inject_fault=fault)
    failed = [c for c in report.checks if not c.passed]
    print(f"fault '{fault}': overall "
          f"{'pass' if report.overall else 'FAIL'} -> {failed[0].detail}")
    assert not report.overall

print()
print("The same suite is scriptable as `gmlucas verify` (exit code 0/1).")
