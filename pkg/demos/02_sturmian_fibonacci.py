"""
Mechanical words and heavy factors
==================================

The Fibonacci word is the mechanical word of slope and intercept 1/tau.
Every length has exactly one more factor than its length, and among the
factors of a given length the heavy ones carry one extra letter 1.
"""

from beatty_games.exactreal import parse_real
from beatty_games.sturmian import (
    factor_interval,
    heavy_count,
    is_heavy,
    mechanical_word,
    parse_word,
    word_to_str,
)

tau_inv = parse_real("(sqrt(5)-1)/2")
w = mechanical_word(tau_inv, tau_inv, 1000)
print(word_to_str(w[:21]))

for n in range(1, 8):
    fs = sorted({word_to_str(w[i:i + n]) for i in range(len(w) - n + 1)})
    heavy = [f for f in fs if is_heavy(tau_inv, parse_word(f))]
    print(n, len(fs), "heavy:", heavy, "sum", heavy_count(tau_inv, n))

# where on the circle each length-5 factor starts
for f in sorted({word_to_str(w[i:i + 5]) for i in range(len(w) - 4)}):
    print(f, factor_interval(parse_word(f), tau_inv).float_pieces())
