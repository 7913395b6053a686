"""Does a nonzero pair of brackets keep the word counts of the abelian one?

Builds the presentation on x_i, x'_i, substitutes F_i = f_i - f'_i,
completes to degree 5 and counts irreducible words per length.

Only equal brackets keep the counts 1, 4, 10, 24, ...; the pair with
[e1,e2]_1 = e1 and [e1,e2]_2 = e2 collapses to a finite dimensional algebra.

Run:  python3 demos/04_deformation.py
"""
from lie2pbw import LiePair, build_presentation_original, complete, transform_to_fF, validate_lie_pair
from lie2pbw.rewriting import RelationSet, interreduce, irreducible_words

pairs = {
    "abelian": LiePair.abelian(2),
    "[e1,e2]_1 = e1 = [e1,e2]_2": LiePair.from_entries(2, [(1, 2, 1, 1)], [(1, 2, 1, 1)]),
    "[e1,e2]_1 = e1 only": LiePair.from_entries(2, [(1, 2, 1, 1)], []),
    "[e1,e2]_1 = e1, [e1,e2]_2 = e2": LiePair.from_entries(2, [(1, 2, 1, 1)], [(1, 2, 2, 1)]),
}

for name, g in pairs.items():
    assert validate_lie_pair(g)
    p = transform_to_fF(build_presentation_original(g))
    S = RelationSet(p.alphabet, interreduce(p.alphabet, p.relations))
    G, saturated = complete(S, 5)
    counts = [len(irreducible_words(G, n)) for n in range(6)]
    print(f"{name:32} {counts}  ({len(G)} relations, saturated = {saturated})")
    if counts[2] < 10:
        two = [w for w in G.leading_words if len(w) == 2]
        print(f"   {len(two)} of the 16 words of length 2 are leading words")
