"""Tour of mixed-radix domains and the functions that live on them.

A domain is a product of digit blocks, e.g. Z_2^3 x Z_3^2: 72 points, each
identified with an integer 0..71 (block 1 varies fastest, least significant
digit first).  Functions into Z_6 are held as value tables; a sparse monomial
combination gives them algebraic structure.
"""

import ccckit as ck
from ccckit import example72

d = ck.DomainSpec(((2, 3), (3, 2)))
print(f"domain Z_2^3 x Z_3^2: q={d.q}, L={d.L}, m={d.m}, strides={d.deltas}")

print("\nsome index <-> digit-vector pairs:")
for x in (0, 7, 11, 70):
    v = ck.int_to_vec(x, d)
    print(f"  x={x:3d}  ->  {v}  ->  {ck.vec_to_int(v, d)}")

mons = ck.monomials_upto(d, 2)
print(f"\n{len(mons)} monomials of Hamming weight <= 2 over this domain,")
print(f"so Z_6 coefficients span 6^{len(mons)} formal combinations.")

# the bundled worked function: a weight-2 combination with 8 nonzero terms
f = example72.function()
print("\nvalue table of the bundled 72-point function (first 16 entries):")
print(" ", list(f.table[:16]))
print("  Hamming degree:", example72.monomial_form().hamming_degree())

# pinning x2 (flat position 1) splits the domain into two 36-point classes
for c in (0, 1):
    view = ck.restrict(f, (1,), (c,))
    support = view.support
    print(f"\nrestriction x2={c}: support size {len(support)}, "
          f"first points {[int(x) for x in support[:6]]}")
    form = example72.restriction_form(c)
    agree = all(view(int(x)) == form.evaluate(int(x)) for x in support)
    print(f"  closed form agrees on the whole support: {agree}")

# the restricted sequence keeps literal zeros off the support
seq = ck.psi_restricted(f, (1,), (0,))
print("\npsi of the x2=0 restriction, first 12 entries (None = literal zero):")
print(" ", list(seq.entries[:12]))
