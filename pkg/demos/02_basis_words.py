"""The word basis: pattern, irreducible words and head/block census.

Run:  python3 demos/02_basis_words.py
"""
from lie2pbw import gsb_relations_g0, is_basis_word
from lie2pbw.basis import enumerate_irreducible, enumerate_pattern, tensor_decomposition_census
from lie2pbw.free_algebra import Alphabet

A = Alphabet(2)
words = enumerate_pattern(2, 3)
print(f"d = 2, length 3: {len(words)} words")
print("  " + ", ".join(A.format_word(w, aliases=True, sep="") for w in words))

# why a few words are missing
for text in ("g f", "G f", "F g F", "F G"):
    check = is_basis_word(A.word(text), A)
    print(f"  {text:6} basis: {check.ok!s:5} {'; '.join(check.violations)}")

# the two descriptions agree
for d in (1, 2, 3):
    S = gsb_relations_g0(d).relation_set()
    same = all(enumerate_pattern(d, n) == enumerate_irreducible(S, n) for n in range(7))
    print(f"d = {d}: pattern == irreducible for n <= 6: {same}")

# a basis word is a commutative head followed by blocks F_i w; count by shape
census = tensor_decomposition_census(2, 5)
print("d = 2, n = 5 by (|w_0|, block sizes):")
for key in sorted(census):
    print(f"  {key}: {census[key]}")
print("  total", sum(census.values()))
