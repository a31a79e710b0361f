"""Complete symmetric functions over difference alphabets.

S_n(lambda - mu) is the n-th coefficient of prod(1 - mu z) / prod(1 - lam z).
Two facts make this machinery useful here: a two-letter alphabet {a, b}
collapses to the kernel (a + b, -ab), and the number family's letters are
simply {2, 1}.
"""

from gmlucas import (
    Dyadic,
    GaussianDyadic,
    Poly,
    SymKernel,
    kernel_term,
    s_diff_convolution,
    s_diff_series,
    s_neg_alphabet,
    sym_decompose_gml,
    two_letter_sn,
)

print("Letters {2, 1}: S_n = 2^(n+1) - 1")
series = s_diff_series((2, 1), (), 7)
print(f"  series route:      {series}")
print(f"  power sum route:   {[str(two_letter_sn(2, 1, n)) for n in range(8)]}")
for n in range(8):
    assert two_letter_sn(2, 1, n) == series[n]
    assert kernel_term(SymKernel(3, -2), n) == series[n]

print()
print("A difference alphabet: lambda = {2}, mu = {1}")
diff = s_diff_series((2,), (1,), 6)
print(f"  (1 - z)/(1 - 2z) = {diff}")
print("  same coefficients by convolution over S(-mu) and S(lambda):")
for n in range(7):
    conv = s_diff_convolution((2,), (1,), n)
    print(f"    S_{n} = {conv}")
    assert conv == diff[n]

print()
print("S_n(-mu) is just the alphabet product, e.g. mu = {1, 2}:")
print(f"  (1 - z)(1 - 2z) -> {s_neg_alphabet((1, 2), 4)}")

print()
print("Letters can be dyadic, Gaussian, or polynomial:")
half = Dyadic(1, 1)
print(f"  {{1/2, 3}}:      {s_diff_series((half, 3), (), 4)}")
i_letter = GaussianDyadic(0, 1)
print(f"  {{i, 1}}:        {s_diff_series((i_letter, 1), (), 4)}")
print(f"  {{x, 2}}:        {[str(two_letter_sn(Poly.X, 2, n)) for n in range(4)]}")

print()
print("The Gaussian family decomposes over the kernel (3, -2):")
print("  Gm_n = (2 + 3i/2) S_n - (3 + 5i/2) S_(n-1)")
for n in range(6):
    print(f"    n={n}: {sym_decompose_gml(n)}")
