#!/usr/bin/env python3
# Sequence primes in arithmetic progressions: counts, the smoothed main term
# evaluated along two algebraically equal routes, and the empirical constant
# of the progression upper bound.

import math

from pslab import ApQuery, ExponentC, ap_main_term, brun_titchmarsh_report, pi_ap, pi_c_ap, ps_primes_up_to


def main() -> None:
    c = ExponentC.parse("21/20")
    x = 10**6
    print(f"== primes of the form floor(n^{c}) up to {x} ==")
    ps = ps_primes_up_to(x, c)
    print(f"  {ps.size} of {pi_ap(x, 1, 0)} primes are sequence values "
          f"(gamma = {c.gamma:.4f}, x^gamma = {x**c.gamma:.0f})")
    print(f"  first few: {[int(p) for p in ps[:12]]}")

    print("\n== distribution over residue classes mod 5 ==")
    for a in (1, 2, 3, 4):
        q = ApQuery(x, 5, a, c)
        cnt = pi_c_ap(q)
        main_term = ap_main_term(q)
        print(f"  a={a}: pi_c={cnt:>6} main-term={main_term:10.1f} "
              f"count/main={cnt / main_term:.4f}")

    print("\nthe main term is computed two ways (step-function integration with")
    print("exact per-prime antiderivatives vs the closed form); both must agree")
    print("to 1e-9 relative or the call raises RouteDisagreementError.")

    print("\n== empirical progression-bound constant ==")
    print("pi_c(x;d,a) * phi(d) * log x / x^gamma over d in {3,4,5,7}:")
    for d in (3, 4, 5, 7):
        ratios = [
            brun_titchmarsh_report(ApQuery(x, d, a, c))
            for a in range(d)
            if math.gcd(a, d) == 1
        ]
        print(f"  d={d}: min={min(ratios):.4f} max={max(ratios):.4f}")

    print("\nsmall exact example at c = 3/2, x = 50:")
    c32 = ExponentC.parse("3/2")
    print(f"  sequence primes: {[int(p) for p in ps_primes_up_to(50, c32)]}")
    print(f"  pi_c(50; 4, 1) = {pi_c_ap(ApQuery(50, 4, 1, c32))} (namely 5 and 41)")


if __name__ == "__main__":
    main()
