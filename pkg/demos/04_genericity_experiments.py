# %% [markdown]
# # Generic behavior by random sampling
#
# Every trial draws from its own seeded generator, so results are
# reproducible and independent of how trials are scheduled.

# %%
from ndautonomy import SampleSpec, expt_generic_degree, expt_regular_sequences, expt_unit_ideal, write_report

for rows in (1, 2, 3):
    stats = expt_generic_degree(SampleSpec(n=2, rows=rows, degree=2, seed=42), 20)
    print(f"l={rows}: predicted {stats.predicted}, histogram {stats.histogram}, "
          f"fraction {float(stats.fraction_generic):.2f}, {stats.wall_time:.1f}s")

# %% [markdown]
# Two random polynomials in two variables almost always form a regular
# sequence; three almost always generate the whole ring.

# %%
print(expt_regular_sequences(SampleSpec(n=2, rows=2, degree=2, seed=1), 10).histogram)
print(expt_unit_ideal(SampleSpec(n=2, rows=3, degree=2, seed=1), 10).histogram)

# %% [markdown]
# Parallel workers give the same histogram as a sequential run.

# %%
spec = SampleSpec(n=2, rows=2, degree=1, coeff_low=-1, coeff_high=1, seed=3)
a = expt_generic_degree(spec, 12)
b = expt_generic_degree(spec, 12, workers=2)
print(a.histogram == b.histogram)
print(write_report(a).decode())
