"""Determinants of the remainder-one matrices for p = 1 mod d.

A zero determinant at level ell means X^2q, Y^2q, Z^2q (q = d*ell + 1) has
a syzygy in the negative twist. Prints one row per (d, p, ell).
"""

import argparse
from dataclasses import dataclass

from syzfermat.fermat import delta_fermat, remainder_one_matrix, twist_degree
from syzfermat.ffield import FieldCtx, is_prime


@dataclass
class DetConfig:
    degrees: tuple[int, ...] = (5, 7)
    p_max: int = 120
    max_ell: int = 40
    confirm: bool = True  # cross-check zero determinants with delta_fermat


def run(cfg: DetConfig):
    for d in cfg.degrees:
        for p in range(2, cfg.p_max + 1):
            if not is_prime(p) or p % d != 1:
                continue
            ctx = FieldCtx(p)
            ell = (p - 1) // d
            if ell > cfg.max_ell:
                continue
            m = remainder_one_matrix(d, ell, ctx)
            note = ""
            if cfg.confirm:
                a = 2 * p
                delta = delta_fermat(a, a, a, d, ctx).degree
                note = f" delta={delta} twist={twist_degree(delta, a, a, a, d)}"
            yield d, p, ell, m.det, note


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--p-max", type=int, default=DetConfig.p_max)
    ap.add_argument("--no-confirm", action="store_true")
    args = ap.parse_args()
    for d, p, ell, det, note in run(DetConfig(p_max=args.p_max, confirm=not args.no_confirm)):
        print(f"d={d} p={p} ell={ell} det={det}{note}")


if __name__ == "__main__":
    main()
