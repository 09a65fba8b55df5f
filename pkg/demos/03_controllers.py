# %% [markdown]
# # Controllers and strength
#
# Attaching a controller stacks its laws under the plant's.  The strength is
# how much the degree of autonomy goes up.

# %%
from ndautonomy import SampleSpec, generic_strength, parse_system, sample_matrix, strength
from ndautonomy.genericity import trial_rng

plant = parse_system("2 1 1\ns1 - 1\n")
controller = parse_system("2 1 1\ns2 - 1\n")
r = strength(plant, controller)
print(f"strength {r.strength} (plant {r.delta_plant} -> controlled {r.delta_controlled}),",
      f"generic bound {r.generic_bound}, maximally efficient: {r.max_efficient}")

# %% [markdown]
# A controller that repeats the plant adds nothing.

# %%
print(strength(plant, plant).strength)

# %% [markdown]
# Random 2x2 controllers on a non-autonomous 1x2 plant reach l + l' - k + 1.

# %%
spec_p = SampleSpec(n=2, k=2, rows=1, degree=1, seed=7)
spec_c = SampleSpec(n=2, k=2, rows=2, degree=1, seed=7)
print("bound:", generic_strength(2, 2, 1, 2))
for i in range(5):
    P = sample_matrix(spec_p, trial_rng(7, i, 0))
    C = sample_matrix(spec_c, trial_rng(7, i, 1))
    print(i, strength(P, C).strength)
