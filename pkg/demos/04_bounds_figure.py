"""Compare the non-defectivity bounds for ternary quintic powers."""
from pathlib import Path

from secpowers.bounds import comparison_table, crossover, growth_ratios, to_csv, to_svg


rows = comparison_table(2, 5, range(2, 15))
print(to_csv(rows))
print("first d from which the identifiability bound stays ahead:", crossover(rows))

# main bound / d^2 settles towards 1/4
print([round(float(q), 4) for q in growth_ratios(2, 5, range(6, 15))])

Path("bounds_n2_k5.svg").write_text(to_svg(rows))
