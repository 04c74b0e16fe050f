#!/usr/bin/env python3
# Reduced words in a free group: arithmetic, and how fast balls grow.

from markedgroups import ball_size, conjugate, enumerate_ball, make_word, word_to_str

names = ("x", "y")
u = make_word(2, (1, 2))          # x y
v = make_word(2, (-2, 1, 1))      # y^-1 x^2

print("u        =", word_to_str(u, names))
print("v        =", word_to_str(v, names))
print("u v      =", word_to_str(u * v, names))
print("u^-1     =", word_to_str(u.inverse(), names))
print("u v u^-1 =", word_to_str(conjugate(u, v), names))
print()

print("ball sizes over two generators, radius 0..8:")
print([ball_size(2, r) for r in range(9)])
print()

print("the 17 reduced words of length <= 2, in length-lex order:")
print(", ".join(word_to_str(w, names) for w in enumerate_ball(2, 2)))
