"""Compare the fast delta computation against the brute-force curve-ring
solver over a grid of (d, p, q) and print a table of mismatches and timings."""

import argparse
import time
from dataclasses import dataclass

from syzfermat.fermat import delta_fermat, delta_fermat_oracle
from syzfermat.ffield import FieldCtx


@dataclass
class GridConfig:
    degrees: tuple[int, ...] = (3, 5, 7)
    primes: tuple[int, ...] = (2, 3, 5, 7, 11, 13)
    max_power: int = 28  # largest 2q


def run(cfg: GridConfig) -> list[tuple]:
    rows = []
    for d in cfg.degrees:
        for p in cfg.primes:
            if d % p == 0:
                continue
            ctx = FieldCtx(p)
            for a in range(2, cfg.max_power + 1, 2):
                t0 = time.perf_counter()
                fast = delta_fermat(a, a, a, d, ctx).degree
                t1 = time.perf_counter()
                slow = delta_fermat_oracle(a, a, a, d, ctx, fast).degree
                t2 = time.perf_counter()
                rows.append((d, p, a, fast, slow, t1 - t0, t2 - t1))
    return rows


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-power", type=int, default=GridConfig.max_power)
    args = ap.parse_args()
    rows = run(GridConfig(max_power=args.max_power))
    bad = [r for r in rows if r[3] != r[4]]
    print(f"{'d':>3} {'p':>3} {'2q':>4} {'fast':>5} {'oracle':>6} {'t_fast':>8} {'t_oracle':>9}")
    for d, p, a, fast, slow, tf, ts in rows:
        print(f"{d:>3} {p:>3} {a:>4} {fast:>5} {slow:>6} {tf:8.4f} {ts:9.4f}")
    print(f"{len(rows)} cells, {len(bad)} mismatches")


if __name__ == "__main__":
    main()
