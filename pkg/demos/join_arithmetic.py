"""Tour of join-ring arithmetic: blocks, embedding, augmentation, units.

A join ring glues group rings F_q[G_1], ..., F_q[G_d] along constant
off-diagonal blocks.  Multiplication has a closed block formula; embedding
into full n x n matrices gives an independent way to check every product.
"""

from joinrings import (
    aug_matrix,
    join_embed,
    join_idempotents,
    join_inverse,
    join_is_unit,
    parse_join_element,
    parse_shape_spec,
)

shape = parse_shape_spec("join(C3,C5;F2)")
print(f"shape: {shape!r}")
print(f"dimension over F_2: {shape.dimension()}, matrix size: {shape.n}x{shape.n}")

a = parse_join_element("1+g1;1+g2+g3;a[1][2]=1;a[2][1]=1", shape)
b = parse_join_element("g2;1+g4;a[1][2]=0;a[2][1]=1", shape)

print("\nmatrix embedding of a:")
for row in join_embed(a):
    print("  ", row)

ab = a * b
print("\nblock product a*b embeds to the same matrix as the matrix product:")
print("  ", join_embed(ab) == [
    [sum(x * y for x, y in zip(r, c)) % 2 for c in zip(*join_embed(b))]
    for r in join_embed(a)
])

print("\naugmentation matrix of a (image in M_2(F_2)):")
for row in aug_matrix(a):
    print("  ", row)

print(f"\nis a a unit? {join_is_unit(a)}")
if join_is_unit(a):
    inv = join_inverse(a)
    print(f"a * a^-1 == 1: {a * inv == shape.one()}")

subs = [g.full_subgroup() for g in shape.groups]
idems = join_idempotents(shape, subs)
print(f"\n{len(idems)} central orthogonal idempotents; they sum to 1:")
total = shape.zero()
for e in idems:
    total = total + e
print("  sum == one:", total == shape.one())
