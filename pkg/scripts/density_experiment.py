#!/usr/bin/env python3
"""Empirical density experiment.

For t up to a bound, report the observed fractions of
  * beta0 even,
  * negative equation unsolvable,
  * both at once (the range giving two distinct Kummer structures),
next to the asymptotic lower bounds 3/4, 5/6 and 7/12.  The bounds are
asymptotic statements; nothing here asserts them, the script just shows how
the finite counts sit against them.

Usage: density_experiment.py [t_max] [step]
"""

import sys

sys.path.insert(0, "src")

from nikulin.pell import scan_parity_lemmas  # noqa: E402


def main() -> None:
    t_max = int(sys.argv[1]) if len(sys.argv) > 1 else 2000
    step = int(sys.argv[2]) if len(sys.argv) > 2 else max(t_max // 8, 1)
    print(f"{'t_max':>8} {'beta0 even':>12} {'neg unsolv':>12} {'both':>12}")
    for bound in range(step, t_max + 1, step):
        rep = scan_parity_lemmas(bound)
        print(
            f"{bound:>8} {rep.beta0_even_fraction:>12.4f} "
            f"{rep.neg_pell_unsolvable_fraction:>12.4f} {rep.both_fraction:>12.4f}"
        )
        if rep.mod4_violations or rep.mod12_violations:
            raise SystemExit(f"parity violation found: {rep}")
    print("reference lower bounds:  3/4 = 0.7500   5/6 = 0.8333   7/12 = 0.5833")


if __name__ == "__main__":
    main()
