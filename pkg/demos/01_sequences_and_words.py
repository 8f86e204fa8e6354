"""
Complementary Beatty pairs and their product word
=================================================

Complete a tuple from beta and one offset, print the sequence table, and
read the consecutive differences as a word over {a, b, c, d, e}.
"""

from beatty_games.beatty import check_partition, derive_tuple, sequence_table_tsv, tuple_record
from beatty_games.productword import build_word, word_table_tsv

# gamma > 0 branch: beta = 8 + golden ratio, delta a multiple of sqrt(7)
t = derive_tuple("8+(1+sqrt(5))/2", delta="-5*sqrt(7)/2")
print(tuple_record(t))
print(sequence_table_tsv(t, 15))

# A and B split the positive integers
print("partition up to 10^4:", check_partition(t, 10_000).ok)

# the word starts with e because B_1 < floor(beta)
w = build_word(t, 15)
print(word_table_tsv(w, 15))

# gamma < 0 branch: no letter e, and d shows up late
t2 = derive_tuple("3.99+sqrt(5)/2", gamma="-0.2")
w2 = build_word(t2, 200)
print("w- =", w2.prefix(19))
print("first d at index", w2.prefix(200).index("d"))
