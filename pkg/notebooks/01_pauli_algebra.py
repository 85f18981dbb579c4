# %% [markdown]
# # Pauli strings in symplectic form
#
# A Pauli string on n qubits is stored as two bit vectors (x, z) plus a
# power of i.  Commutation and multiplication never touch a matrix.

# %%
from qvenn.pauli import commutes, in_group, multiply, parse_pauli, weight

h1 = parse_pauli("XZZXI", 5)
h2 = parse_pauli("IXZZX", 5)
print(h1.x, h1.z, weight(h1))
print("H1 and H2 commute:", commutes(h1, h2))

# %% [markdown]
# Both dense ("XZZXI") and indexed ("Z1Z2") spellings parse to the same
# object.  Y carries the bits (1, 1), and X times Z gives -iY.

# %%
print(parse_pauli("Z1Z2", 3) == parse_pauli("ZZI", 3))
xz = multiply(parse_pauli("X", 1), parse_pauli("Z", 1))
print(xz.format(), xz.phase_value)

# %% [markdown]
# Membership in a stabilizer group is a linear-algebra question over GF(2).

# %%
gens = [parse_pauli(s, 3) for s in ("Z1Z2", "Z2Z3")]
for candidate in ("Z1Z3", "Z1", "X1X2X3"):
    print(candidate, in_group(parse_pauli(candidate, 3), gens))
