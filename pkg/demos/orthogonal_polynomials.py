"""The polynomials r_k attached to a C-fraction are orthogonal for the moment functional.

L(x^n) = f_n.  Each r_k kills x^0 .. x^(b_k - 1) and sends x^(b_k) to a_0 ... a_(k-1).
For the Catalan-at-x^2 fraction with unit numerators r_k is a Fibonacci polynomial.
"""

from hankelfrac import (
    BSeq,
    CFrac,
    MomentFunctional,
    Ring,
    cfrac_expand,
    fibonacci_poly,
    p_poly,
    r_poly,
    p_relations,
)

b = BSeq((-1, 0, 0, 3, 3, 7, 8, 9))
R = Ring.standard(b.K)
cf = CFrac.from_bseq(b, R.a, R)
L = MomentFunctional(cfrac_expand(cf, cf.exact_order()))

for k in range(6):
    r = r_poly(b, R.a, k)
    row = [str(L(r, n)) for n in range(b.at(k) + 1)]
    print(f"r_{k} = {r}")
    print(f"   L(r_{k} x^n), n=0..{b.at(k)}:", ", ".join(row))

f = L.moments
print("p_3 =", p_poly(f, 3))
for rel in p_relations(b, R.a, 8):
    extra = f" factor {rel.factor}" if rel.kind == "boundary" else ""
    print(f"p_{rel.m}: {rel.kind:<8} B={rel.B:<2} r_{rel.k}{extra}  verified={rel.holds}")

ident = BSeq(tuple(range(-1, 9)))
print("Fibonacci check:", all(r_poly(ident, [1] * 9, k) == fibonacci_poly(k + 1) for k in range(9)))
