"""
Shuffle relation and Bernoulli numbers
======================================

Shuffling two z-words and evaluating gives a signed single value with the
second index reversed.  Depth-two values of shape (k-1, 1) match Bernoulli
numbers modulo p.
"""

from fmzv import bernoulli_mod_p, eval_fmzv_mod_p, verify_shuffle_relation

print(verify_shuffle_relation((1,), (2,), (7, 11)).to_json())
print(verify_shuffle_relation((2, 1), (1, 1), (7, 11, 13)).passed)

for p in (7, 11, 13):
    row = []
    for k in (3, 4, 5, 6):
        row.append((-eval_fmzv_mod_p((k - 1, 1), p) % p, bernoulli_mod_p(p - k, p)))
    print(p, row)

# the depth-two sum vanishes for all but finitely many p; p = 7, k = 6 is an exception
for p in (7, 11, 13):
    print(p, [sum(eval_fmzv_mod_p((a, k - a), p) for a in range(1, k)) % p for k in range(3, 9)])
