# %% [markdown]
# # Degree of autonomy
#
# A system matrix R presents the behavior {w : R(s, 1/s) w = 0}.  Its degree
# of autonomy is the codimension of the characteristic variety, cut out by
# the maximal minors of R inside the torus.

# %%
from ndautonomy import SystemMatrix, analyze, degree_by_restriction_oracle, parse_system, restrict
from ndautonomy.control import SublatticeEmbedding

point = parse_system("""
# a trajectory is fixed by its value at the origin
2 1 2
s1 - 1
s2 - 1
""")
line = parse_system("2 1 1\ns1 - 1\n")

for name, M in (("two laws", point), ("one law", line)):
    r = analyze(M)
    print(f"{name}: degree {r.degree}, strongly autonomous {r.strongly_autonomous}")

# %% [markdown]
# The same number comes out of the sublattice definition: restrict to every
# coordinate sublattice and find the largest one where the system is free.

# %%
print("oracle:", degree_by_restriction_oracle(line), degree_by_restriction_oracle(point))
print("restriction of the one-law system to the s2 axis:", restrict(line, SublatticeEmbedding(2, (1,))).l, "laws")
print("restriction of the two-law system to the s2 axis:", restrict(point, SublatticeEmbedding(2, (1,))).rows)

# %% [markdown]
# Edge cases: fewer laws than variables is never autonomous, and an
# invertible matrix leaves only the zero trajectory.

# %%
print(analyze(parse_system("2 2 1\ns1 - 1; s2 + 1\n")).degree)
print(analyze(SystemMatrix.identity(2, 2)).degree)
