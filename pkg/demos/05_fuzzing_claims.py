"""
Fuzzing the implication tables
==============================

Each claimed implication is evaluated on thousands of random systems, and
each claimed non-implication is checked against its counterexample.  A
deliberately false claim shows what a violation report looks like.
"""

from arskit.cli import dump_document
from arskit.testkit.claims import Claim, Kind, Scope, claim_set
from arskit.testkit.fuzz import GenConfig, confirm_non_implications, fuzz_implications

report = fuzz_implications(GenConfig(seed=2654435769, count=1000, max_size=7))
print(report.instances, "instances,", sum(report.violations.values()), "violations")

confirmed = confirm_non_implications()
print(sum(confirmed.values()), "of", len(confirmed), "non-implications witnessed")

#%%
wrong = Claim("WN => SN", Kind.IMPLICATION, ("WN",), ("SN",), Scope.POINTWISE)
report = fuzz_implications(GenConfig(seed=1, count=200, max_size=7), [wrong])
print(wrong.label, "fails", report.violations[wrong.label], "times")
print("shrunk:", dump_document(report.counterexamples[wrong.label]))
print(len(claim_set()), "claims in total")
