"""
Good tuples and invariant games
===============================

decide_good inspects a few short prefixes of the product word.  The answer
is checked against a brute-force solve of the game whose moves are all
vectors that are not differences of two P-positions.
"""

import json

from beatty_games.beatty import derive_tuple
from beatty_games.game import build_moveset, build_pset, solve_pgrid, verify_invariance
from beatty_games.goodness import decide_good

cases = {
    "good, gamma < 0": derive_tuple("1.99+sqrt(5)/2", gamma="-0.2"),
    "good, gamma > 0": derive_tuple("8+(1+sqrt(5))/2", delta="-5*sqrt(7)/2"),
    "not good, gamma < 0": derive_tuple("3.99+sqrt(5)/2", gamma="-0.2"),
    "not good, gamma > 0": derive_tuple("4.99+sqrt(5)/2", delta="-1-sqrt(2)"),
}

for name, t in cases.items():
    v = decide_good(t)
    rep = verify_invariance(t, 200)
    print(f"{name:22s} {v.verdict:9s} {rep.status:9s} predicted {v.obstruction} first mismatch {rep.first_mismatch}")

# the certificate of a failing tuple
print(json.dumps(decide_good(cases["not good, gamma > 0"]).certificate["record"], indent=2))

# the solved grid as a bitmap
t = cases["good, gamma < 0"]
grid = solve_pgrid(build_moveset(build_pset(t, 60)))
with open("pgrid.pbm", "w") as fh:
    fh.write(grid.to_pbm())
print("P cells on the first rows:", grid.cells()[:8])
