"""
The lambda calculus as an infinite rewriting system
===================================================

Terms use de Bruijn indices, so alpha-equivalent terms are equal.  Beta
reduction enumerates one reduct per redex, which is all the rewriting
machinery needs.
"""

from arskit.lambda_calculus import App, I, K, OMEGA, as_enumerable_ars, beta_step_enum
from arskit.lambda_calculus import normalize, parse_term, pretty
from arskit.relations import bounded_join

term = App(App(K, I), OMEGA)
print(pretty(term))
for reduct in beta_step_enum(term):
    print("  ->", pretty(reduct))

#%%
# Leftmost-outermost reduction discards the looping argument.
result = normalize(term, "lo", fuel=50)
print(" -> ".join(pretty(t) for t in result.path))

# Omega only reduces to itself, so any fuel runs out.
print(normalize(OMEGA, "lo", fuel=100))

#%%
# Peaks in the term graph can be joined by bounded search.
t = parse_term(r"(\x. x x)((\y. y)(\y. y))")
left, right = beta_step_enum(t)
target, lpath, rpath = bounded_join(as_enumerable_ars(), left, right, 4)
print("join at", pretty(target), "after", len(lpath) - 1, "and", len(rpath) - 1, "steps")
