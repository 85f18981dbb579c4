# %% [markdown]
# # Degenerate correction in Shor's nine-qubit code
#
# Z1, Z2 and Z3 share a syndrome.  Applying Z2 fixes all three because
# Z2*Z1 and Z2*Z3 are themselves stabilizers.

# %%
from qvenn import build_table, encode, shor9_code
from qvenn.decoder import correct
from qvenn.pauli import multiply, parse_pauli
from qvenn.statevec import apply_pauli, fidelity

code = shor9_code()
table = build_table(code)
print(len(table), "classes")
cls = table.class_of(parse_pauli("Z1", 9))
print([m.label() for m in cls.members], "->", cls.representative.label())

# %%
z2 = parse_pauli("Z2", 9)
print(multiply(z2, parse_pauli("Z1", 9)).label(), "=", code.stabilizers[0].label())
print(multiply(z2, parse_pauli("Z3", 9)).label(), "=", code.stabilizers[1].label())

# %%
psi = encode(code, 0.6, 0.8)
for name in ("Z1", "Z2", "Z3", "Y7"):
    corrected, applied = correct(code, apply_pauli(psi, parse_pauli(name, 9)))
    print(name, "->", applied.label(), "fidelity", round(fidelity(corrected, psi), 12))

# %% [markdown]
# The three-qubit repetition code has no such luck: a phase flip gives the
# trivial syndrome and passes straight through as a logical error.

# %%
from qvenn import decode, rep3_code

rep3 = rep3_code()
s = 2 ** -0.5
a0, a1, applied = decode(rep3, apply_pauli(encode(rep3, s, s), parse_pauli("Z1", 3)))
print("applied", applied.label(), "recovered", round(a0.real, 9), round(a1.real, 9))
