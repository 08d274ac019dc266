#!/usr/bin/env python3
# Tour of the exact floor-power arithmetic: values, witnesses, and the
# main-term + sawtooth-correction decomposition of weighted counts.

import numpy as np

from pslab import (
    ExponentC,
    count_decomposition,
    floor_pow,
    integer_root,
    is_ps_value,
    ps_values_in,
)


def main() -> None:
    c = ExponentC.parse("3/2")
    print(f"== the sequence floor(n^{c}) ==")
    row = [(n, floor_pow(n, c)) for n in range(1, 16)]
    print("  n      :", " ".join(f"{n:4d}" for n, _ in row))
    print("  value  :", " ".join(f"{k:4d}" for _, k in row))

    print("\nmembership is decided by the exact bracket k^q <= n^p < (k+1)^q:")
    for k in (5, 6, 7, 8, 2048, 2049):
        w = is_ps_value(k, c)
        verdict = f"= floor({w.preimage}^{c})" if w.is_member else "not a value"
        print(f"  k={k:5d}: {verdict}")

    print("\nvalues in [100, 140] with their preimages:")
    for w in ps_values_in(100, 140, c):
        print(f"  {w.value:4d} <- n={w.preimage}")

    # even at 128-bit scale the arithmetic stays exact
    n = 10**20 + 7
    k = floor_pow(n, c)
    assert k**2 <= n**3 < (k + 1) ** 2
    print(f"\nfloor(({n})^(3/2)) = {k}  (exact at 128-bit scale)")
    print(f"integer_root(7^300, 100) = {integer_root(7**300, 100)} (= 7^3)")

    print("\n== decomposition of the value count ==")
    print("count of values k <= K splits into gamma*sum k^(gamma-1) plus a")
    print("sawtooth correction, with an O(1) residual:")
    for K in (10**3, 10**4, 10**5):
        main_term, corr, exact = count_decomposition(K, c, np.ones_like)
        print(
            f"  K={K:>7}: exact={exact:9.0f} main={main_term:12.3f} "
            f"corr={corr:+8.3f} residual={exact - main_term - corr:+.3f}"
        )

    print("\nweighted variant (z_k = 1/sqrt(k)):")
    main_term, corr, exact = count_decomposition(10**4, c, lambda k: 1.0 / np.sqrt(k))
    print(
        f"  K=10^4 : exact={exact:11.3f} main={main_term:12.3f} "
        f"corr={corr:+8.3f} residual={exact - main_term - corr:+.3f}"
    )


if __name__ == "__main__":
    main()
