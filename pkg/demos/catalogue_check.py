"""Compare the exact exception shadows for 7 <= n <= 31 with the reference
catalogue and print where they disagree."""
from hyperind.optimizer import reproduce_table

for row in reproduce_table(7, 31):
    if not (row.found or row.expected):
        continue
    status = "ok" if row.match else f"differs: missing {row.missing}, found instead {row.extra}"
    print(f"n={row.n:2d}  {sorted(row.found)}  {status}")
    for name, hits in row.found.items():
        es = [e for e, _ in hits]
        print(f"        {name} attained at e = {es[0]}..{es[-1]} ({len(es)} value{'s' if len(es) > 1 else ''})")
