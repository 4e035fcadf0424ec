"""Search for degrees d whose window M contains no unit mod d."""

import argparse
import time
from dataclasses import dataclass

from syzfermat.density import exceptional_degrees


@dataclass
class ScanConfig:
    limit: int = 10_000


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--limit", type=int, default=ScanConfig.limit)
    cfg = ScanConfig(ap.parse_args().limit)
    t0 = time.perf_counter()
    found = exceptional_degrees(cfg.limit)
    print(f"exceptional degrees up to {cfg.limit}: {found} ({time.perf_counter() - t0:.2f} s)")


if __name__ == "__main__":
    main()
