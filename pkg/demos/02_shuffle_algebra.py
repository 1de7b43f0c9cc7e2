"""
Words and the shuffle product
=============================

Indices are encoded as words in x and y, with z_k = y x^(k-1).
Coefficients are exact Python integers.
"""

from fmzv import LinComb, shuffle, shuffle_lincomb, z_word

a = z_word((2,))
print(a)

prod = shuffle(a, a)
print(prod)
print(prod.pretty_z())

# shuffling the empty word is the identity
print(shuffle("", z_word((3, 1))))

# products of combinations are bilinear
A = LinComb({z_word((1,)): 2, z_word((2,)): -1})
B = LinComb.word(z_word((1,)))
print(shuffle_lincomb(A, B).pretty_z())

# coefficients grow quickly but stay exact
w = z_word((1,) * 10)
print(shuffle(w, w)["y" * 20])
