"""
Looking for tuples that are not good
====================================

Random quadratic and biquadratic betas with random offsets.  For each hit the
predicted obstruction cell is compared with the brute-force game.
"""

from beatty_games.game import verify_invariance
from beatty_games.search import find_not_good

for seed in range(5):
    hit = find_not_good(seed=seed, budget=200)
    if hit is None:
        print(seed, "nothing found")
        continue
    cell = hit.verdict.obstruction
    rep = verify_invariance(hit.tuple, max(120, sum(cell) + 10), max_list=10_000)
    print(seed, f"beta={hit.beta_expr} delta={hit.delta_expr} tries={hit.tried}",
          hit.verdict.certificate["prefix"], cell, cell in rep.obstructions)
