"""Show each family of local moves on a downset where it applies."""
from hyperind.downset import Downset, corners
from hyperind.moves import all_applicable_moves, witness_holds

EXAMPLES = [
    Downset(12, (9, 9, 6, 6, 6)),      # corners far apart
    Downset(12, (8, 7, 6, 5)),         # three short stairs
    Downset(12, (9, 6, 5)),            # a big drop before a stair
    Downset(13, (11, 11, 9, 8, 7)),    # ends in stairs
    Downset(14, (12,) * 9),            # one tall column block
    Downset(22, (18,) * 16),           # wide and short
    Downset(14, (9, 9)),               # narrow
    Downset(20, (10,) * 6),            # four empty rows on top
]

for D in EXAMPLES:
    print(f"{D}  corners {corners(D)}")
    for mv in all_applicable_moves(D):
        w = mv.witness(D)
        print(f"  {mv.lemma_id:28s} cost {w['cost'][0]} -> {w['cost'][1]}, "
              f"space {w['space'][0]} -> {w['space'][1]}, holds={witness_holds(D, mv)}")
