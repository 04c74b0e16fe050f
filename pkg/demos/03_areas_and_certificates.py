#!/usr/bin/env python3
# Word areas with verifiable certificates.
#
# The area of a trivial word is the least number of conjugated relators
# whose product equals it in the free group.  The search returns that
# product explicitly; verification is plain word arithmetic.

import json

from markedgroups import (
    area_exact_small,
    area_search,
    parse_presentation,
    parse_word,
    verify_certificate,
)

z2 = parse_presentation("gens: x y\nrels: [x,y]")
w = parse_word("x y^2 x^-1 y^-2", z2.gen_names)

result = area_search(z2, w, length_cap=12, node_cap=10**6)
print("word:", z2.word_str(w))
print("area:", result.value, "(exact within the length cap)")
print("certificate:")
print(json.dumps(result.certificate.to_json(z2), indent=2))
print("verifies:", verify_certificate(z2, w, result.certificate))
print()

# an independent check: enumerate all short products of conjugates
print("brute-force product enumeration agrees:",
      area_exact_small(z2, w, k_max=4, conj_cap=4) == result.value)
print()

# areas grow with the word: stacked commutators in Z^2
for k in (1, 2, 3):
    wk = parse_word(f"x y^{k} x^-1 y^-{k}", z2.gen_names)
    print(f"area(x y^{k} x^-1 y^-{k}) =", area_search(z2, wk, 16, 10**6).value)
