# %% [markdown]
# # Depolarizing noise
#
# Every qubit independently suffers X, Y or Z with probability p/3 each.
# Trials with at most one hit always succeed for the five-qubit code, so its
# success rate approaches the probability of that event.

# %%
from qvenn import five_qubit_code, rep3_code, shor9_code
from qvenn.simulate import simulate, single_error_success_probability

for p in (0.01, 0.05, 0.1, 0.2):
    s = simulate(five_qubit_code(), p, 2000, seed=1)
    print(f"p={p:<5} simulated {s.success_rate:.4f}  "
          f"at most one error {single_error_success_probability(five_qubit_code(), p):.4f}  "
          f"conditional {s.conditional_success_rate}")

# %% [markdown]
# At equal noise the repetition code trails: it cannot see phase flips.
# Shor's code fixes every single error too but has nine qubits to lose.

# %%
for factory in (rep3_code, five_qubit_code, shor9_code):
    s = simulate(factory(), 0.1, 1000, seed=2)
    print(f"{s.code:<6} {s.success_rate:.3f}")
