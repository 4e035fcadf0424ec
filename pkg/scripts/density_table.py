"""Covered-residue counts and density bounds for a range of degrees, with the
empirical share of primes in covered classes alongside."""

import argparse
from dataclasses import dataclass

from syzfermat.density import covered_count_via_subgroups, covered_remainders, prime_class_report


@dataclass
class DensityConfig:
    d_min: int = 5
    d_max: int = 60
    p_limit: int = 10**6


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--d-min", type=int, default=DensityConfig.d_min)
    ap.add_argument("--d-max", type=int, default=DensityConfig.d_max)
    ap.add_argument("--p-limit", type=int, default=DensityConfig.p_limit)
    args = ap.parse_args()
    cfg = DensityConfig(args.d_min, args.d_max, args.p_limit)
    print(f"{'d':>4} {'phi':>4} {'cov':>4} {'bound':>8} {'empirical':>9}  agree")
    for d in range(cfg.d_min, cfg.d_max + 1):
        rep = covered_remainders(d)
        emp = prime_class_report(d, cfg.p_limit).empirical_fraction
        agree = rep.covered_count == covered_count_via_subgroups(d)
        print(f"{d:>4} {rep.phi_d:>4} {rep.covered_count:>4} {float(rep.density_lower_bound):8.4f} {emp:9.4f}  {agree}")


if __name__ == "__main__":
    main()
