"""Lift the family to the orientation double cover and compare the two sides."""

from aytwist import nonorientable_instance, orientable_lift, word_action
from aytwist.ayfamily import core_curve_image_check, lift_intersection_records, lifted_sign_choice
from aytwist.curveweb import cap_surface
from aytwist.exactnum import IntPolynomial, char_poly
from aytwist.exactnum.factor import factor_list

g = 4
inst = nonorientable_instance(g)
lift = orientable_lift(inst)

print(f"downstairs: {inst.word}   ({cap_surface(inst.system).name()})")
print(f"upstairs:   {lift.word}   ({cap_surface(lift.system).name()})")
print("curves:", ", ".join(lift.system.labels))

print("\ni(a, r^j(b)):", lift_intersection_records(lift))
for label, info in lifted_sign_choice(lift)["twists"].items():
    print(f"  twist about {label}: sheet {info['sheet']:+d}, direction {info['direction']:+d}")

cp = char_poly(word_action(lift.system, lift.word).matrix)
print(f"\nlifted char poly factors:")
for f, k in factor_list(cp):
    mark = "  <- downstairs polynomial" if f == IntPolynomial.ay_polynomial(g) else ""
    print(f"  ({f})^{k}{mark}")

rep = core_curve_image_check(inst)
print("\nfree group check of the twist direction")
print(f"  gamma            = {rep.gamma}")
print(f"  T_c(gamma)       = {rep.twisted}")
print(f"  r(T_c(gamma))    = {rep.image}")
print(f"  band core gamma' = {rep.expected}")
print(f"  conjugate: {rep.passed}   (opposite twist would give a match: {rep.opposite_twist_passes})")
