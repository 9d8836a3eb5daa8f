"""
Deciding metrizability exactly
==============================

A set of triples is metrizable when some metric induces exactly it.  The
check is a rational linear program that maximizes a common slack; a positive
optimum yields a witness metric.  A brute-force search over small integer
metrics gives an independent answer on four points.
"""

from betweenness.core import betweenness_of_metric
from betweenness.metrizability import brute_force_metrizable, is_metrizable, validate_candidate

cyclic = validate_candidate([(0, 1, 2), (1, 2, 3), (2, 3, 0), (3, 0, 1)], 4)
witness = is_metrizable(cyclic)
print("cyclic relation witness:", [[str(v) for v in row] for row in witness.d])
print("re-induces:", betweenness_of_metric(witness) == cyclic)

# (0 1 2) and (0 2 3) force (0 1 3), but the relation puts 3 between 0 and 1
broken = validate_candidate([(0, 1, 2), (0, 2, 3), (0, 3, 1)], 4)
print("broken relation:", is_metrizable(broken), brute_force_metrizable(broken))
