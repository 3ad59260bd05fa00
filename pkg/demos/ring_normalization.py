#!/usr/bin/env python3
"""Normalising ring and rig expressions with composite monads.

Every theory below is one monad assembled from smaller ones; evaluating
an expression embeds each operator application into the doubled monad
and lets the composite multiplication rewrite it.  The distributive
laws do all the actual algebra: expansion, unit deletion, zero
absorption, cancellation.
"""

from distlaw import Carrier, abelianize, format_normal, normalize_expr, parse_expr

X = Carrier(("a", "b", "c", "d"))


def show(theory, source):
    normal = normalize_expr(theory, parse_expr(source, X))
    print(f"  {theory:7s} {source:24s} ->  {format_normal(theory, normal)}")


print("Words keep their order; multisets forget it:")
show("monoid", "a*b*1*c")
show("cmonoid", "c*a*b")

print("\nThe classic binomial expansion, commutative and not:")
show("ring2", "(a+b)*(c+d)")
show("ring3", "(a+b)*(c+d)")
show("ring3", "(a+b)*(a-b)")   # a*b and b*a do not cancel
show("ring2", "(a+b)*(a-b)")   # but their commutative images do

print("\nAdditive inverses cancel to the empty combination:")
show("ring3", "a - a")
show("ring3", "2*(a+b) - a - b - b")

print("\nRigs have no negatives, so zero must be absorbed structurally:")
show("rig", "a*0 + b")
show("rig", "(a+b)*(a+b)")
show("rig", "0*0 + 0")

print("\nInteger literals are repeated sums of the empty word:")
show("ring3", "3*a - a")
show("ring3", "-3")

# The word normal form refines the commutative one: sorting each word
# into a multiset recovers exactly the commutative normal form.
expr = parse_expr("(a+b)*(c+d) - c*a + 2*d*d", X)
assert abelianize(normalize_expr("ring3", expr)) == normalize_expr("ring2", expr)
print("\nAbelianising the word normal form recovers the commutative one.")
