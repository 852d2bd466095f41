"""q-rooted primes and the three equivalent ways to detect them.

A prime p is q-rooted when q generates the full multiplicative group mod p.
That single number-theoretic fact is equivalent to a zeta-function statement
(pole order d+1) and a unit-count statement (a closed product formula) about
the join ring built from blocks Z/p_i over F_q.  The report below computes
all three independently.
"""

from joinrings import is_prime, rooted_equivalence_report

q = 2
print(f"primes p < 40, base q = {q}:")
print(f"{'p':>4} {'rooted':>7} {'pole':>5} {'units':>8} {'formula':>8}")
for p in range(3, 40):
    if not is_prime(p):
        continue
    rep = rooted_equivalence_report([p], q)
    print(f"{p:>4} {str(rep.agree):>7} {rep.pole_order:>5} "
          f"{rep.unit_count:>8} {rep.formula_value:>8}")

print("\nmulti-block reports:")
for primes in ([3, 5], [3, 7], [3, 5, 11]):
    rep = rooted_equivalence_report(primes, 2)
    print(f"  primes {primes}: all rooted = {rep.agree}, "
          f"pole order {rep.pole_order} (d+1 = {len(primes) + 1}), "
          f"units {rep.unit_count} vs formula {rep.formula_value}")
