"""
Hamming graphs from orthogonal Latin squares
============================================

"""

from orthocolour.graphs import hamming
from orthocolour.products import h42_colouring, hamming_4d_2_colouring, hamming_even_colouring, latin_pair

# a pair of orthogonal Latin squares of order 4 over GF(4)
l1, l2 = latin_pair(4)
for r1, r2 in zip(l1.cells, l2.cells):
    print(r1, r2)

# H(6,3) has 729 vertices and needs only 27 colours in each coordinate
c1, c2 = hamming_even_colouring(6, 3)
print(hamming(6, 3).vertex_count, c1.colour_count)

# binary Hamming graphs start from a stored H(4,2) pair
print(list(zip(*h42_colouring())))
print(hamming_4d_2_colouring(3)[0].colour_count)
