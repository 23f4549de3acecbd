"""Predict a whole Hankel transform from the index sequence alone, then check it.

For a valid index sequence b every nonzero determinant sits at some n = b_k and
is a signed monomial in the numerators.  We print the prediction next to the
brute-force value for a few shapes, with fully symbolic numerators.
"""

import random

from hankelfrac import (
    BSeq,
    CFrac,
    Ring,
    cfrac_expand,
    hankel_transform,
    predicted_transform,
    random_bseq,
)


def compare(b: BSeq, upto: int):
    R = Ring.standard(b.K)
    cf = CFrac.from_bseq(b, R.a, R)
    upto = min(upto, cf.exact_order() // 2)
    actual = hankel_transform(cfrac_expand(cf, 2 * upto), 0, upto)
    predicted = predicted_transform(b, upto)
    print(f"b = {b}")
    for n, (p, v) in enumerate(zip(predicted, actual)):
        mark = "ok" if p.to_scalar(R) == v else "MISMATCH"
        print(f"  d({n}) = {str(p):<36} {mark}")


compare(BSeq((-1, 0, 0, 1, 2, 2, 3, 4, 4)), 4)
compare(BSeq((-1, 0, 0, 3, 3, 7, 8, 9)), 8)

rng = random.Random(5)
compare(random_bseq(rng, 10, target=14), 7)
