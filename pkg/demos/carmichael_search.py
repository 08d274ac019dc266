#!/usr/bin/env python3
# Carmichael numbers whose prime factors are all sequence values: Korselt
# checks, the exact search, and the behaviour of the filter as c drops to 1.

from pslab import (
    ExponentC,
    carmichael_numbers_up_to,
    fermat_holds,
    is_ps_carmichael,
    korselt,
    search_ps_carmichael,
)


def main() -> None:
    print("== Korselt criterion ==")
    for N in (561, 562, 1105, 1729, 2465, 6601):
        print(f"  {N:>5}: korselt={korselt(N)}")

    print("\n== classical Carmichael numbers below 10^5 ==")
    classics = carmichael_numbers_up_to(10**5)
    print(f"  {len(classics)} numbers: {classics}")
    assert all(fermat_holds(N) for N in classics)
    print("  (a^N = a mod N verified for a in {2,3,5,7} on every one)")

    print("\n== filtering by sequence membership of every factor ==")
    for text in ("1001/1000", "101/100", "11/10", "3/2"):
        c = ExponentC.parse(text)
        hits = search_ps_carmichael(10**5, c)
        shown = ", ".join(str(r.N) for r in hits[:8]) + (" ..." if len(hits) > 8 else "")
        print(f"  c={text:>9}: {len(hits):>2} of {len(classics)} survive  [{shown}]")

    print("\nper-factor witness detail for 561 at c = 1001/1000:")
    rec = is_ps_carmichael(561, ExponentC.parse("1001/1000"))
    for (p, _), ok in zip(rec.factors.entries, rec.ps_status):
        print(f"  factor {p:>2}: sequence member = {ok}")
    print(f"  JSON line: {rec.to_json_line(ExponentC.parse('1001/1000'))}")

    print("\nat c = 3/2 the factor 3 is not a value, so 561 is rejected:")
    print(f"  is_ps_carmichael(561, 3/2) -> {is_ps_carmichael(561, ExponentC.parse('3/2'))}")


if __name__ == "__main__":
    main()
