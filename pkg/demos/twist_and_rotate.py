"""Build the nonorientable family member for a few genera and look at its action.

    python3 demos/twist_and_rotate.py [g ...]
"""

import sys

from aytwist import nonorientable_instance, penner_check, pf_analysis, word_action
from aytwist.curveweb import cap_surface, intersection_matrix


def show(g):
    inst = nonorientable_instance(g)
    cs = inst.system
    print(f"\n=== genus {g}: {inst.word} on {g} curves ===")
    print("intersection matrix:")
    print(intersection_matrix(cs))
    print(f"capped surface: {cap_surface(cs).name()}")

    m = word_action(cs, inst.word).matrix
    print("action of one twist then one click:")
    print(m)

    pf = pf_analysis(m)
    print(f"char poly  {pf.char_poly}")
    print(f"stretch    {pf.interval.decimal(15)}")
    # eigenvector entries are exact elements of Q(lambda)
    print("eigenvector", ", ".join(str(x) for x in pf.eigenvector))

    # the g-th power is a product of positive twists, one per curve
    rep = penner_check(cs, word=inst.power_word(), expected=inst.expected)
    print(f"g-th power = {inst.power_product()}")
    print(f"Penner conditions hold: {rep.verdict}")


if __name__ == "__main__":
    for g in [int(a) for a in sys.argv[1:]] or [3, 5, 7]:
        show(g)
