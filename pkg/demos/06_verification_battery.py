"""The identity battery as a library: every printed matrix and identity
is a named check returning an exact pass/fail verdict.

The same registry backs `riordan verify`; here it is driven in-process.
Identical seeds give identical reports.
"""

import time

from riordan import run_suite, CHECK_NAMES

print("registered checks:")
print("   " + ", ".join(CHECK_NAMES))

for name in ("fixtures", "thm2.1", "thm6.3", "ex4.1", "eq2", "col-sums"):
    start = time.time()
    report = run_suite(name, max_n=6)
    result = report.results[0]
    print("%-8s %-10s %.2fs %s" % ("PASS" if result.passed else "FAIL",
                                   result.name, time.time() - start,
                                   result.detail))

# a failing check carries its counterexample payload; shrink the beta set
# to something that cannot fail to show the report shape instead
report = run_suite("thm6.1", max_n=3, betas=(1, 2), seed=123)
print("suite=%s ok=%s (%d/%d)" % (report.suite, report.ok,
                                  report.n_passed, len(report.results)))
