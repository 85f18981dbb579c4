# %% [markdown]
# # Syndromes as Venn diagrams
#
# One set per stabilizer; an error sits in set i exactly when it
# anticommutes with stabilizer i.

# %%
from pathlib import Path

from qvenn import build_table, five_qubit_code, rep3_code
from qvenn.venn import layout, render_ascii, render_svg

rep3 = rep3_code()
print(render_ascii(layout(rep3, build_table(rep3))))

# %% [markdown]
# Four sets need ellipses rather than circles to produce all 16 regions.
# The terminal view falls back to a listing.

# %%
five = five_qubit_code()
lay = layout(five, build_table(five))
print(render_ascii(lay))

# %%
out = Path("five_qubit_venn.svg")
out.write_text(render_svg(lay, highlight=(1, -1, -1, 1)), encoding="utf-8")
print("wrote", out.resolve())
