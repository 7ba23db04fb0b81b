"""Build q-expansions over F_ell and play with the theta operator.

Everything is exact arithmetic mod ell: the Eisenstein series E4 and E6 are
assembled from divisor sums, the weight-k cusp forms are monomials in E4, E6
and the discriminant form, and theta is q d/dq acting on coefficients.
"""

from thetatwist import delta_k, eisenstein, hasse, sturm_bound, theta, equal_upto, theta_power

ELL = 13

e4 = eisenstein(4, ELL, 10)
e6 = eisenstein(6, ELL, 10)
print(f"E4  mod {ELL}:", e4.coeffs)
print(f"E6  mod {ELL}:", e6.coeffs)

f = delta_k(12, ELL, 10)
print(f"\ndelta_12 mod {ELL} (the tau values reduced):", f.coeffs)
print("tagged as type (N, k, eps) =", f.form_type)

tf = theta(f)
print(f"\ntheta delta_12: a_n = n * a_n, weight jumps by ell + 1 = {ELL + 1}")
print("coefficients:", tf.coeffs)
print("note a_13 of any theta image vanishes:", theta(delta_k(12, ELL, 14)).coeff(13))

a = hasse(ELL, 10)
print(f"\nthe weight {ELL - 1} form with q-expansion 1 leaves series alone:")
print("hasse * delta_12 == delta_12:", (a * f).coeffs == f.coeffs)

# two forms of congruent weights agreeing far enough must be equal:
# delta_16 = theta^2 delta_12 mod 13, checkable up to the bound
g = delta_k(16, ELL, 10)
t2f = theta_power(f, 2)
m = sturm_bound(1, max(16, 12 + 2 * (ELL + 1)))
print(f"\nSturm-type bound for the comparison: m = {m}")
print(f"delta_16 == theta^2 delta_12 up to m: {equal_upto(g, t2f, m)}")
print("first coefficients:", g.coeffs[:6], "vs", t2f.coeffs[:6])
