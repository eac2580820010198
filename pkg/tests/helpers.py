"""Shared test fixtures: knot corpus and seeded random generators."""

import random

import rimtwist as rt

TREFOIL = rt.parse_knot("T(2,3)")
FIGURE_EIGHT = rt.parse_knot("braid(3; 1 -2 1 -2)")
FIGURE_EIGHT_PD = rt.PD(((4, 2, 5, 1), (8, 6, 1, 5), (6, 3, 7, 4), (2, 7, 3, 8)))
TREFOIL_PD = rt.PD(((1, 4, 2, 5), (3, 6, 4, 1), (5, 2, 6, 3)))
TREFOIL_SUM = rt.parse_knot("T(2,3)#mirror(T(2,3))")

SMALL_CORPUS = [
    ("3_1", TREFOIL),
    ("4_1", FIGURE_EIGHT),
    ("T(2,5)", rt.parse_knot("T(2,5)")),
    ("T(3,4)", rt.parse_knot("T(3,4)")),
    ("3_1#mirror(3_1)", TREFOIL_SUM),
]


def random_knot_braids(seed, count, max_len=8, max_strands=4):
    """Braids with single-component closure, at most max_len crossings."""
    rng = random.Random(seed)
    out = []
    while len(out) < count:
        strands = rng.randint(2, max_strands)
        length = rng.randint(1, max_len)
        word = tuple(
            rng.choice([1, -1]) * rng.randint(1, strands - 1) for _ in range(length)
        )
        if rt.braid_closure_components(strands, word) == 1:
            out.append(rt.Braid(strands, word))
    return out


def random_knot_exprs(seed, count):
    """Left-associated expression trees for parser round-trip checks."""
    rng = random.Random(seed)

    def leaf():
        kind = rng.choice(["unknot", "torus", "braid", "pd"])
        if kind == "unknot":
            return rt.Unknot()
        if kind == "torus":
            pairs = [(2, 3), (2, 5), (3, 4), (3, 5), (2, 7)]
            return rt.TorusKnot(*rng.choice(pairs))
        if kind == "braid":
            braids = [
                rt.Braid(2, (1, 1, 1)),
                rt.Braid(3, (1, -2, 1, -2)),
                rt.Braid(2, (-1, -1, -1)),
                rt.Braid(2, (1,)),
            ]
            return rng.choice(braids)
        return rt.PD(((1, 4, 2, 5), (3, 6, 4, 1), (5, 2, 6, 3)))

    def term(depth):
        e = leaf()
        if depth > 0 and rng.random() < 0.4:
            return rt.Mirror(term(depth - 1))
        return e

    out = []
    for _ in range(count):
        expr = term(2)
        for _ in range(rng.randint(0, 2)):
            expr = rt.ConnectedSum(expr, term(2))
        out.append(expr)
    return out
