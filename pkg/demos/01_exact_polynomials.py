"""Exact polynomials over the rationals.

Polynomials live over a ``VarTable`` that fixes the variable order and
tags each name as an unknown or a parameter.  Coefficients are exact
``Fraction`` values, so nothing here ever rounds.
"""
# %%
from dend.poly import GREVLEX, LEX, VarTable, poly_substitute, reduce_modulo, s_polynomial

table = VarTable.of(["a11", "a12", "a21", "a22"], ["alpha"])
p = table.parse("a11^2 + a11")
q = table.parse("alpha*a22 + 1/2")
print("p      =", p)
print("q      =", q)
print("p * q  =", p * q)

# %% Printing is canonical (descending graded reverse lex), so parsing the
# printed form gives the same polynomial back.
r = table.parse("(a11 - 2*a12)^3")
print("r      =", r)
assert table.parse(str(r)) == r

# %% Substitution is simultaneous; evaluation is exact.
swap = poly_substitute(table.parse("a11 - a12"), {"a11": table.var("a12"), "a12": table.var("a11")})
print("swap   =", swap)
print("p(2)   =", p.evaluate({"a11": 2}))
print("q(1/3) =", q.evaluate({"alpha": 3, "a22": "1/3"}))

# %% Division with remainder and S-polynomials, in two variables.
xy = VarTable(["x", "y"])
x, y = xy.var("x"), xy.var("y")
print("x^2*y mod (x - y), lex  :", reduce_modulo(x ** 2 * y, [x - y], LEX))
print("S(x^2 - 1, x*y - 1), lex:", s_polynomial(x ** 2 - 1, x * y - 1, LEX))
print("leading term of 3*x*y^2 + x^3 under grevlex:", (3 * x * y ** 2 + x ** 3).leading_monomial(GREVLEX))
