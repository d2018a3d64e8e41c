"""From the strip picture to the interval exchange, and what it does and does not have."""

from aytwist.exactnum import NumberField
from aytwist.strips import (
    IntervalExchange,
    ay_strip,
    first_return,
    iet_symmetries,
    renormalize_strip,
    saf_invariant,
    scaling_conjugacy,
    self_similar_arcs,
)

for g in (3, 4, 5):
    s = ay_strip(g)
    lam = s.field.gen()
    print(f"\n--- genus {g}, lambda = {lam.decimal(10)} ---")
    print("top intervals:", " ".join(label for label, _ in s.intervals))
    print(f"top width {s.total_width}  = {s.total_width.decimal(8)}")

    e = first_return(s)
    print(f"first return: {len(e.lengths)} pieces, permutation {e.permutation}")
    for st, ln, im, _ in e.pieces():
        print(f"  [{st.decimal(6)}, +{ln.decimal(6)}) -> {im.decimal(6)}")

    r = first_return(renormalize_strip(s))
    scale = scaling_conjugacy(e, r)
    print(f"renormalized exchange is the same map scaled by {scale} (1/lambda: {scale == lam.inverse()})")
    arc = self_similar_arcs(e, lam.inverse(), first_only=True)
    print("inducing on an arc of length C/lambda starting at", arc[0] if arc else None, "gives it back")
    print("circle symmetries:", len(iet_symmetries(e)), "(identity only)")
    print("SAF vanishes:", saf_invariant(e).is_zero())

F = NumberField.ay(3)
rotation = IntervalExchange(F.one() + F.gen(), (F.one(), F.gen()), (F.gen(), F.zero()), (False, False))
print(f"\nfor contrast, rotating by lambda on a circle of length 1 + lambda has SAF {saf_invariant(rotation).entries[0][1]} (1 ^ lambda)")
