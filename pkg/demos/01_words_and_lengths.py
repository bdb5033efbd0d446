"""Words over a signed alphabet and the tower of lengths.

A word is a sequence of generator letters and inverses (tokens a1, A1, ...).
The same string has a length as a raw letter sequence, a shorter one after
free cancellation, and possibly shorter ones again in each quotient group.
"""

from dehnlab import (
    Word,
    ball_size,
    builtin_presentation,
    cyclic,
    enumerate_words,
    free_reduce,
    lazy_count,
    length_A,
    sphere_size,
)

w = Word.from_tokens("a1 a1 A1 a1 a1 a1")
print("word          :", w.tokens())
print("letters |w|_A :", length_A(w))
print("reduced |w|_F :", length_A(free_reduce(w)), "->", free_reduce(w).tokens())

z10 = builtin_presentation("z10")  # <a | a^10>
z5 = cyclic(5)
g10 = z10.canonical_of_word(w)
g5 = z5.canonical_of_word(w)
print("in Z/10  |w|  :", z10.group_length(g10, length_A(w)))
print("in Z/5   |w|  :", z5.group_length(g5, length_A(w)))

print()
print("counting words over r = 2 generators")
for n in range(0, 6):
    print(
        f"  n={n}:  sphere {sphere_size(2, n):>5}   ball {ball_size(2, n):>5}"
        f"   lazy {lazy_count(2, n):>5}"
    )

print()
print("all four one-letter words:", [x.tokens() for x in enumerate_words(2, 1)])
