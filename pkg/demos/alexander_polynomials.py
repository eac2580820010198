"""Alexander polynomials three ways: Wirtinger + Fox calculus, the torus
closed form, and connected sums assembled at the presentation level.

Run:  python demos/alexander_polynomials.py
"""

from math import gcd

import rimtwist as rt

print("=== parsing knots ===")
for text in ["T(2,3)", "braid(3; 1 -2 1 -2)", "T(2,3)#mirror(T(2,3))",
             "pd((1,4,2,5),(3,6,4,1),(5,2,6,3))"]:
    expr = rt.parse_knot(text)
    print(f"  {text:40s} -> {expr!r}")

print()
print("=== Wirtinger presentation of the trefoil (closure of sigma_1^3) ===")
pres = rt.wirtinger_from_braid(rt.torus_braid(2, 3))
print(f"  {pres}")
print(f"  meridian: g{pres.meridian}")
print(f"  abelianization: {rt.abelianization(pres)}  (infinite cyclic, as for every knot)")

print()
print("=== Fox derivatives of the first relator ===")
for j in range(1, 4):
    d = rt.fox_derivative(pres.relators[0], j)
    print(f"  d(r1)/d(g{j}) = {rt.poly_text(d)}")

print()
print("=== Alexander polynomials ===")
for text in ["unknot", "T(2,3)", "T(2,5)", "braid(3; 1 -2 1 -2)", "T(3,4)"]:
    delta = rt.alexander_of_knot(rt.parse_knot(text))
    print(f"  {text:24s} Delta = {rt.poly_text(delta)}")

print()
print("=== torus closed form (1-t)(1-t^pq) / ((1-t^p)(1-t^q)) vs Fox calculus ===")
for p in range(2, 6):
    for q in range(p + 1, 6):
        if gcd(p, q) != 1:
            continue
        closed = rt.torus_alexander(p, q)
        via_fox = rt.alexander_polynomial(rt.wirtinger_from_braid(rt.torus_braid(p, q)))
        marker = "ok" if closed == via_fox else "MISMATCH"
        print(f"  T({p},{q}): {rt.poly_text(closed):42s} [{marker}]")

print()
print("=== connected sums multiply, mirrors reverse the variable ===")
tre = rt.alexander_of_knot(rt.parse_knot("T(2,3)"))
summed = rt.alexander_of_knot(rt.parse_knot("T(2,3)#mirror(T(2,3))"))
print(f"  Delta(T(2,3))              = {rt.poly_text(tre)}")
print(f"  Delta(T(2,3)#mirror)       = {rt.poly_text(summed)}")
print(f"  square of the first        = {rt.poly_text((tre * tre).normalize())}")
mirror = rt.alexander_of_knot(rt.parse_knot("mirror(braid(2; 1 1 1 1 1))"))
print(f"  Delta(mirror T(2,5))       = {rt.poly_text(mirror)}  (equals Delta(t^-1) up to units)")
