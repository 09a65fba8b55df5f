# %% [markdown]
# # Laurent polynomials and Groebner bases
#
# Shift operators on the lattice Z^n act as the variables s1..sn of the
# Laurent ring Q[s, 1/s].  Polynomials are exact, immutable and canonical.

# %%
from ndautonomy import GREVLEX, buchberger, count_monomials, normalize, parse_poly
from ndautonomy.groebner import dimension, eliminate, normal_form, saturate

p = parse_poly("s1 - s1^-1", 1)
print("p^2 =", p * p)
print("degree of s1^2*s2^-1:", parse_poly("s1^2*s2^-1", 2).degree)

# %% [markdown]
# Units are the single terms.  Normalizing divides one out and leaves an
# ordinary polynomial that touches every coordinate hyperplane.

# %%
q = parse_poly("s1^-1*s2 - 1", 2)
pn = normalize(q)
print(f"{q} = s^{pn.shift} * ({pn.poly_part})")
print("Laurent monomials of degree <= 2 in 3 variables:", count_monomials(3, 2))

# %% [markdown]
# The Groebner engine works on polynomials (no negative exponents).

# %%
I = buchberger([parse_poly(t, 2) for t in ("s1^2 - s2", "s1*s2 - 1")], GREVLEX)
print("basis:", I)
print("dimension of Q[s]/I:", dimension(I))
print("normal form of s1^5:", normal_form(parse_poly("s1^5", 2), I))
print("eliminating s1:", eliminate(I, [0]))

# %% [markdown]
# Saturating by s1*s2 removes everything living on the coordinate
# hyperplanes, which is how ideals of the Laurent ring are represented.

# %%
J = buchberger([parse_poly("s1*s2 - s1", 2)], GREVLEX)
print(J, "->", saturate(J, parse_poly("s1*s2", 2)))
