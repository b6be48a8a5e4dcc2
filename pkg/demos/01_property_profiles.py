"""
Property profiles of small rewriting systems
============================================

Every element of a finite system gets a profile of sixteen properties.
Here we look at the system where reduction can always reach a normal form
and never gets lost in a non-minimal loop, yet still fails to terminate.
"""

from arskit import build_ars, element_profile, global_profile
from arskit.catalog import fixture

# a -> b, a -> e, b -> e, b -> c, and the loop c <-> d
ce4 = fixture("CE-4").system
a = element_profile(ce4, ce4.index("a"))
print("SM", a.sm, "WN", a.wn, "SN", a.sn)

# the normal-form witness is a concrete reduction
print("reaches normal form via", a.wn_witness.render(ce4))

# local confluence holds at a, full confluence does not:
# e and c are both reducts of b but share nothing
print("WCR", a.wcr, "CR", a.cr)

#%%
# Global properties quantify over every element.  The two-element loop is
# confluent and every element is a minimal form, but nothing terminates.
loop = build_ars("ab", [("a", "b"), ("b", "a")])
g = global_profile(loop)
print({k: g[k] for k in ("CR", "MF", "SM", "WN", "SN", "RP", "BP")})

#%%
# An increasing numbering exists exactly for acyclic systems.
line = build_ars("abc", [("a", "b"), ("b", "c")])
print("Inc witness", global_profile(line, witnesses=True).inc_witness)
