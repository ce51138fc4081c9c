"""Dimension bookkeeping on the two components of the degenerate fiber."""
from secpowers.ledger import admissible_grid, ledger, ledger_bruteforce, to_csv


entries = [ledger(*g) for g in admissible_grid(2, 3, 4, 6)]
print(to_csv(entries[:12]))
print(sum(e.consistent for e in entries), "of", len(entries), "consistent")

# d = 1 makes V the whole space; the count on the exceptional side then runs below -1
print(ledger(1, 1, 4, 1))

for args in [(1, 2, 4, 1), (2, 2, 4, 1), (1, 2, 5, 2)]:
    entry, reports = ledger_bruteforce(*args)
    print(args, entry.constituents, "verified:", entry.verified)
