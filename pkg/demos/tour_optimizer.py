"""Walk through the optimizer for small n.

For each n the script prints where the lex-earliest optimum stops being a
lex-style downset, the shadow graph of that optimum, and how it compares to
the best lex-style downset with the same space.
"""
from hyperind.optimizer import pareto

for n in (7, 8, 9, 10):
    print(f"n = {n}")
    for rec in pareto(n).entries:
        if rec.classification.startswith("lex-style"):
            continue
        best_lex = min(c for c in (rec.lex_full_cost, rec.lex_missing_cost) if c is not None)
        print(f"  e={rec.e:3d} heights={rec.witness.heights} cost={rec.min_cost}"
              f" (best lex-style {best_lex}) {rec.classification}: {rec.shadow_description}")
