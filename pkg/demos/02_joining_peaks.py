"""
Joining peaks constructively
============================

A peak is two reductions leaving the same element.  Each classical
confluence theorem turns its hypotheses into a procedure that closes the
peak, and each procedure refuses to run when its hypotheses fail.
"""

from arskit import build_ars, cr_to_cofinality, cofinality_join, make_peak
from arskit import generalized_newman_join, newman_join, wn_un_join
from arskit.catalog import fixture
from arskit.errors import PreconditionFailed

diamond = build_ars("abcd", [("a", "b"), ("a", "c"), ("b", "d"), ("c", "d")])
peak = make_peak(diamond, 0, 1, 2)
join = newman_join(diamond, peak, fuel=10)
print("Newman:", join.from_left.render(diamond), "|", join.from_right.render(diamond))

#%%
# The two-element loop is not terminating, so Newman's procedure refuses,
# while the minimal-form version joins the peak at the apex's loop.
loop = fixture("CE-8").system
p = make_peak(loop, 0, 1, 0)
try:
    newman_join(loop, p, fuel=10)
except PreconditionFailed as exc:
    print("refused:", exc)
print("generalized:", loop.names[generalized_newman_join(loop, p, fuel=10).target])

#%%
# Weak normalization plus unique normal forms also suffices: reduce both
# sides to their normal form.
ce11 = fixture("CE-11").system
j = wn_un_join(ce11, make_peak(ce11, 0, 2, 1))
print("via normal forms:", j.from_right.render(ce11))

#%%
# A confluent element has a cofinal reduction sequence, and any peak at it
# can be closed by walking that sequence.
w = cr_to_cofinality(diamond, 0)
print("cofinal sequence stem", [diamond.names[i] for i in w.sequence.stem])
print("join at", diamond.names[cofinality_join(diamond, w, peak).target])
