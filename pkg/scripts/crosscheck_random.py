"""Compare the profile-based vanishing test for e_n with the exact pushforward
on random descriptors and report disagreements and timing."""

import argparse
import random
import time
from dataclasses import dataclass

from z2bordism.bordism import profile
from z2bordism.obstruction import en_pushforward, en_vanishes
from z2bordism.sampling import SamplerConfig, random_descriptor


@dataclass
class RunConfig:
    seed: int = 0
    count: int = 500
    sampler: SamplerConfig = SamplerConfig(max_dim=10)


def run(cfg: RunConfig) -> dict:
    rng = random.Random(cfg.seed)
    checked = disagreements = nonzero = 0
    start = time.perf_counter()
    for _ in range(cfg.count):
        d = random_descriptor(rng, cfg.sampler)
        p = profile(d)
        for n in range(1, d.m + 1):
            a = en_vanishes(p, n).vanishes
            b = en_pushforward(d, n).is_zero()
            checked += 1
            nonzero += not a
            disagreements += a != b
    return {
        "descriptors": cfg.count,
        "pairs": checked,
        "nonvanishing": nonzero,
        "disagreements": disagreements,
        "seconds": round(time.perf_counter() - start, 2),
    }


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--count", type=int, default=500)
    ap.add_argument("--max-dim", type=int, default=10)
    args = ap.parse_args()
    cfg = RunConfig(args.seed, args.count, SamplerConfig(max_dim=args.max_dim))
    for key, value in run(cfg).items():
        print(f"{key}: {value}")


if __name__ == "__main__":
    main()
