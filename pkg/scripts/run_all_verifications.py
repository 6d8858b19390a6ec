#!/usr/bin/env python3
"""Run every mechanical verification in one go and print a summary line each.

Covers: contracted sets for the replacement polarization L' and the
low-degree divisor D' over several t, the t = 4 and t = 2 special sweeps,
the span-of-{L, A1} decomposition scan, the degree-one check for the
15-nodal quartic model, and even-beta propagation.

Exit status 0 iff everything passes.
"""

import sys
import time

sys.path.insert(0, "src")

from nikulin.lattice import GramForm  # noqa: E402
from nikulin.verifiers import (  # noqa: E402
    expected_dprime_zero_set,
    expected_lprime_zero_set,
    verify_contracted_set,
    verify_even_propagation,
    verify_lemma_treize,
    verify_quartic_degree_one,
    verify_t2_f1_nef,
    verify_t4_nefness,
)


def main() -> int:
    jobs = []
    for t in (1, 3, 5, 9, 11):
        jobs.append((f"contracted-set L' t={t}",
                     lambda t=t: verify_contracted_set(
                         expected_lprime_zero_set(t)[1],
                         expected_lprime_zero_set(t)[0], GramForm(t))))
        jobs.append((f"contracted-set D' t={t}",
                     lambda t=t: verify_contracted_set(
                         expected_dprime_zero_set(t)[1],
                         expected_dprime_zero_set(t)[0], GramForm(t))))
    jobs.append(("t4-nefness", verify_t4_nefness))
    jobs.append(("t2-f1-nef", verify_t2_f1_nef))
    for t in (3, 5):
        jobs.append((f"lemma-treize t={t}", lambda t=t: verify_lemma_treize(t, 10)))
    for t in (3, 9, 11, 19, 27):
        jobs.append((f"quartic-degree-one t={t}",
                     lambda t=t: verify_quartic_degree_one(t)))
    for t in (1, 3, 5):
        jobs.append((f"even-propagation t={t}",
                     lambda t=t: verify_even_propagation(t, 20)))

    failures = 0
    for name, job in jobs:
        t0 = time.perf_counter()
        verdict = job()
        status = "PASS" if verdict.passed else "FAIL"
        if not verdict.passed:
            failures += 1
        print(f"{status} {name:<28} zero-set {len(verdict.zero_set):>2}  "
              f"nodes {verdict.nodes_visited:>7}  {time.perf_counter() - t0:6.2f}s")
    return 1 if failures else 0


if __name__ == "__main__":
    raise SystemExit(main())
