#!/usr/bin/env python3
# Re-derivation of every headline rational constant in exact arithmetic:
# the B(A^4(...)) exponent-pair chain, the admissible-c thresholds, and the
# piecewise-linear largest-prime-factor exponent table.

from fractions import Fraction as Fr

from pslab import (
    ExpPair,
    a_process,
    apply_chain,
    b_process,
    carmichael_threshold,
    format_pair,
    format_rational,
    lpf_exponent,
    lpf_exponent_high,
    lpf_exponent_mid,
    smooth_values_c_threshold,
    square_divisibility_threshold,
)
from pslab.exppairs import LPF_EXPONENT_PIECES


def main() -> None:
    print("== exponent-pair chain ==")
    p = ExpPair(Fr(32, 205), Fr(1, 2) + Fr(32, 205))
    print(f"start      : {format_pair(p)}")
    for i in range(4):
        p = a_process(p)
        print(f"after A^{i+1}  : {format_pair(p)}")
    p = b_process(p)
    print(f"after B    : {format_pair(p)}")
    assert p == apply_chain("BAAAA", ExpPair(Fr(32, 205), Fr(269, 410)))

    print("\n== admissible-c thresholds (exact rationals) ==")
    print(f"smooth-values threshold from the chain pair : "
          f"{format_rational(smooth_values_c_threshold(p))}")
    print(f"square-divisibility threshold               : "
          f"{format_rational(square_divisibility_threshold())}")
    thr = carmichael_threshold(Fr(7039, 10000))
    print(f"Carmichael threshold at E=0.7039            : {format_rational(thr)}")
    print(f"  exceeds 147/145?                            {thr > Fr(147, 145)}")
    print(f"Carmichael threshold at E=1 (ceiling)       : "
          f"{format_rational(carmichael_threshold(Fr(1)))}")

    print("\n== largest-prime-factor exponent table ==")
    for left, right, (a, b, den) in LPF_EXPONENT_PIECES:
        print(f"  [{str(left):>13}, {str(right):<13})  ({a:+d} {b:+d} c)/{den}")
    print("\ncontinuity at the shared endpoints, jump at the first boundary:")
    cusp = Fr(24979, 20803)
    print(f"  left limit at {cusp}: {2 - cusp}   value: {lpf_exponent(cusp)}")
    for c in (Fr(112, 87), Fr(160, 117), Fr(128, 85), Fr(31, 20), Fr(5, 3)):
        print(f"  c = {str(c):>8}: exponent = {lpf_exponent(c)}")

    print("\ncase minima reproduce the table on their intervals:")
    for c in (Fr(13, 10), Fr(27, 20)):
        print(f"  mid  at c={c}: min-of-9 = {lpf_exponent_mid(c)} table = {lpf_exponent(c)}")
    for c in (Fr(7, 5), Fr(8, 5)):
        print(f"  high at c={c}: min-of-8 = {lpf_exponent_high(c)} table = {lpf_exponent(c)}")


if __name__ == "__main__":
    main()
