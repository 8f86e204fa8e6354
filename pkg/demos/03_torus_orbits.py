"""
Orbits on the torus: line or dense
==================================

When alpha, beta, 1 are rationally dependent the orbit of the rotation stays
on a closed line, otherwise it fills the torus.  Rectangle queries are
answered exactly and the least visiting index is found by scanning.
"""

import sys
from fractions import Fraction

from beatty_games.beatty import derive_tuple
from beatty_games.sturmian import CircleInterval, TorusPoint, region_coding
from beatty_games.torus import Rectangle, line_closure, orbit_hits, torus_svg

line_t = derive_tuple("(3+sqrt(17))/2", gamma="-1/10")
dense_t = derive_tuple("sqrt(2)+sqrt(3)", gamma="-1/10")

line = line_closure(line_t)
print("relation p*alpha + q*beta = r:", (line.p, line.q, line.r), "direction", line.direction)
print("dense tuple dependence:", dense_t.dependence)

box = Rectangle(CircleInterval(Fraction(1, 10), Fraction(2, 10)), CircleInterval(Fraction(6, 10), Fraction(7, 10)))
for name, t in (("line", line_t), ("dense", dense_t)):
    print(name, orbit_hits(t, box).as_dict())

t = derive_tuple("3.99+sqrt(5)/2", gamma="-0.2")
print("regions visited:", region_coding(t.alpha, t.beta, TorusPoint(t.gamma, t.delta), 10))

out = sys.argv[1] if len(sys.argv) > 1 else "torus.svg"
with open(out, "w") as fh:
    fh.write(torus_svg(line_t, 40, rect=box))
print("wrote", out)
