"""Rewriting with the five relation families for the abelian pair.

Run:  python3 demos/01_relations_and_compositions.py
"""
from lie2pbw import gsb_relations_g0, verify_gsb
from lie2pbw.rewriting import RelationSet, complete, reduce

d = 3
pres = gsb_relations_g0(d)
S = pres.relation_set()
A = S.alphabet
print(f"d = {d}: {len(S)} relations")
for r, lab in zip(pres.relations, pres.labels):
    if lab in ("(1)", "(3)", "(4)"):
        print(f"  {lab:4} {r}")

# a word with two inversions, reduced one rewrite at a time
nf, trail = reduce(A.poly("F3 f2 f1"), S)
for step in trail:
    print(f"  rewrite {A.format_word(step.word)} at position {step.position} by {pres.labels[step.relation]}")
print("F3 f2 f1 ->", nf)

# every composition is trivial
report = verify_gsb(S)
print(f"{len(report.checks)} compositions, all trivial: {report.all_trivial}")

# drop (4) and (5): the overlaps of F F with the mixed commutator now survive
keep = [r for r, lab in zip(pres.relations, pres.labels) if lab in ("(1)", "(2)", "(3)")]
short = RelationSet(A, keep)
bad = verify_gsb(short).failures
print(f"without (4),(5): {len(bad)} non-trivial compositions, e.g. {bad[0].normal_form.make_monic()}")

# completion puts them back
G, saturated = complete(short, 4)
print(f"completion to degree 4: {len(G)} relations, saturated = {saturated}")
print("same leading words as (1)-(5):", set(G.leading_words) == set(S.leading_words))
