"""Characteristic numbers of RP(1) x RP(k) with the twist on either factor.

With the twist on RP(k) the class is zero for every k.  With the twist on
the circle the class is [RP^k] p_1, which is nonzero for even k: the
orbit space of A x 1 on S^1 x S^(k) is RP^1 x S^k, not RP^1 x RP^k.
"""

import argparse
from dataclasses import dataclass

from z2bordism.bordism import profile
from z2bordism.classify import classify
from z2bordism.expr import parse_expr


@dataclass
class Config:
    k_min: int = 1
    k_max: int = 9


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--k-max", type=int, default=Config.k_max)
    cfg = Config(k_max=ap.parse_args().k_max)

    print(f"{'expr':<16} {'m':>2} {'nonzero N_J':<24} classes n=1..m")
    for k in range(cfg.k_min, cfg.k_max + 1):
        for expr in (f"RP(1)*RP({k})^H", f"RP(1)^H*RP({k})"):
            d = parse_expr(expr)
            nonzero = [list(J) for J, b in profile(d).items() if b]
            cases = " ".join(classify(d, n).case.value for n in range(1, d.m + 1))
            print(f"{expr:<16} {d.m:>2} {str(nonzero):<24} {cases}")


if __name__ == "__main__":
    main()
