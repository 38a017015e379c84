"""Independent high-precision reference values for the test suite.

Uses only mpmath and direct digit sums / polynomial roots, never the C++
library. Run it to regenerate frozen_values.hpp:

    python3 tests/oracles/derive_values.py > tests/oracles/frozen_values.hpp
"""

from mpmath import mp, mpf, sqrt, findroot, polyroots

mp.dps = 50


def pi_ep(pre, per, m, q):
    """sum c_i q^-i for pre per per ..., digits given as numbers."""
    total = mpf(0)
    for i, c in enumerate(pre, start=1):
        total += mpf(c) / q**i
    n = len(pre)
    block = sum(mpf(c) / q ** (j + 1) for j, c in enumerate(per))
    return total + block / q**n / (1 - q ** (-len(per)))


def digits(text, m):
    return [m if ch == "m" else int(ch) for ch in text]


def P(m):
    return 1 + sqrt(m / (m - 1))


def R(m):
    return 1 + m / (m - 1)


def bisect(f, lo, hi):
    flo = f(lo)
    for _ in range(200):
        mid = (lo + hi) / 2
        fm = f(mid)
        if (fm > 0) == (flo > 0):
            lo, flo = mid, fm
        else:
            hi = mid
    return (lo + hi) / 2


def real_root_above(coeffs, bound):
    roots = [r.real for r in polyroots(coeffs, maxsteps=200, extraprec=200) if abs(r.imag) < mpf(10) ** -30]
    return min(r for r in roots if r > bound)


values = {}

alpha = real_root_above([1, 0, -1, -1], 1)
values["kAlpha"] = alpha
values["kPhi"] = (1 + sqrt(5)) / 2

# m_d from P^3 - 2P^2 - P + 1 = 0 (root in (2, 3)), m = P-1 squared relation
Pd = real_root_above([1, -2, -1, 1], 2)
values["kMd"] = (Pd - 1) ** 2 / ((Pd - 1) ** 2 - 1)
# M_d from -P^4 + 2P^3 + P^2 - 2P + 1 = 0, root in (2, 2.3)
PD = real_root_above([-1, 2, 1, -2, 1], 2)
values["kBigMd"] = (PD - 1) ** 2 / ((PD - 1) ** 2 - 1)
values["kPAtBigMd"] = PD

q1 = findroot(lambda q: q**2 * (q - 1) * (q**2 - q - 3) - 1, 2.34)
values["kQ1"] = q1
values["kM1"] = 1 + q1 - 1 / q1
values["kM4"] = (3 + sqrt(13)) / 2
values["kQ4"] = (1 + sqrt(13)) / 2


def r_mid(m):
    f = lambda q: pi_ep(digits("mm1", m), digits("m11m", m), m, q) - (m - 1)
    return bisect(f, mpf(2), R(m))


def one_mm_one(m):
    f = lambda q: m / (q - 1) - pi_ep([], digits("1mm1", m), m, q) - 1
    return bisect(f, mpf(2), R(m))


values["kM3"] = bisect(lambda m: r_mid(m) - one_mm_one(m), mpf(3), mpf("3.2"))

# critical bases
values["kR2"] = (3 + sqrt(5)) / 2
values["kRComp10LeftAt2_85"] = (mpf("1.85") + sqrt(mpf("1.85") ** 2 + 4)) / 2
values["kRComp10LeftAt2_9"] = (mpf("1.9") + sqrt(mpf("1.9") ** 2 + 4)) / 2
# (m-1)(q^6-2q^5+q^4-q^3-q^2+2q-1) = q^5+q^3 at m=3
values["kRMidAt3"] = findroot(
    lambda q: 2 * (q**6 - 2 * q**5 + q**4 - q**3 - q**2 + 2 * q - 1) - q**5 - q**3, 2.37
)
values["kRMidAt3ViaSum"] = r_mid(mpf(3))
# 3q^3 - 4q^2 - 7q + 3 = 0
values["kRRightAt4"] = findroot(lambda q: 3 * q**3 - 4 * q**2 - 7 * q + 3, 2.19)
values["kP3"] = (3 + sqrt(33)) / 4

# pi values
# digitwise truncated sum of (m - c_i) q^-i, 400 terms, for (1m)^inf at m=3
values["kPiOneMAt3_2_5"] = 3 / mpf("1.5") - sum(
    (3 - (1 if i % 2 == 1 else 3)) / mpf("2.5") ** i for i in range(1, 401)
)
values["kPiM1OnesAtR2"] = pi_ep([2], [1], 2, values["kR2"])

# growth rate of the seven-word automaton: largest root of x^6 = x^2 + 1
values["kSevenWordGrowth"] = real_root_above([1, 0, 0, 0, -1, 0, -1], 1)

print("#pragma once")
print()
print("// Generated by derive_values.py (mpmath, 50 digits). Do not edit.")
print()
print("namespace oracle {")
print()
for name, v in values.items():
    print(f"inline constexpr double {name} = {mp.nstr(v, 25)};")
print()
print("}  // namespace oracle")
