# Run the identity checks and look at the reports.
import collections
import time

from degenbell import SuiteConfig, run_suite
from degenbell.identities import check_ogf

rep = check_ogf("thm10", p=3, r=2, m=2, order=12)
print(rep.id, rep.params, "pass" if rep.passed else rep.first_mismatch)

start = time.perf_counter()
reports = run_suite(SuiteConfig(order=12, p_max=4, r_max=2, n_max=6, m_max=2))
elapsed = time.perf_counter() - start

by_id = collections.Counter(r.id for r in reports if r.passed)
for check_id, count in by_id.items():
    print(f"{check_id:16s} {count:4d} passed")
print(f"{sum(by_id.values())}/{len(reports)} in {elapsed:.1f}s")

# reports are plain data and serialize to JSON
print(reports[0].to_json())
