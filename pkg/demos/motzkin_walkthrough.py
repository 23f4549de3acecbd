"""Motzkin numbers: a series whose shifted Hankel determinants repeat with period 6.

The Motzkin series expands as a C-fraction with powers 1, 1, 2 repeating and
all numerators 1.  Its plain Hankel determinants are all 1, the shifted ones
cycle through 1, 0, -1, -1, 0, 1.  Because some shifted determinants vanish,
the series has no expansion with every power equal to 1.
"""

from hankelfrac import (
    CFrac,
    ZeroDeterminant,
    builtin_series,
    cfrac_expand,
    hankel_transform,
    reconstruct_cfrac,
)


def show(label, values):
    print(f"{label:<28}", " ".join(str(v) for v in values))


f = builtin_series("motzkin", 24)
show("Motzkin numbers", f.coeffs[:12])

cf = CFrac(lambda n: (1, 1, 2)[n % 3], lambda n: 1)
assert cfrac_expand(cf, 24) == f
print("C-fraction with powers 1,1,2,... reproduces the series")

show("det(f_{i+j})", hankel_transform(f, 0, 11))
show("det(f_{i+j+1})", hankel_transform(f, 1, 11))

try:
    reconstruct_cfrac(f, 3)
except ZeroDeterminant as exc:
    print(f"no unit-power fraction: first zero at n={exc.n}, offset {exc.offset};",
          "numerators recovered before that:", [str(a) for a in exc.partial])

# With a parameter u the same shape gives Fibonacci-polynomial ratios.
g = builtin_series("motzkin-u", 12, 3)
show("motzkin-u(3) numerators", reconstruct_cfrac(g, 3))
