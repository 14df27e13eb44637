"""Groebner bases, ideal membership and radical membership.

``buchberger`` returns the reduced, monic basis, so two generating sets
of the same ideal give identical output.  ``radical_member`` asks
whether a polynomial vanishes on the zero set, which can hold even when
it is not in the ideal itself.
"""
# %%
from dend.groebner import Ideal, buchberger, ideal_member, radical_member
from dend.poly import GREVLEX, LEX, VarTable

xy = VarTable(["x", "y"])
x, y = xy.var("x"), xy.var("y")

gb = buchberger(Ideal([x ** 2 - 1, x * y - 1], LEX))
print("lex basis    :", [str(g) for g in gb.basis])
print("grevlex basis:", [str(g) for g in buchberger(Ideal([x * y - 1, x ** 2 - 1], GREVLEX)).basis])
print("x - y in I   :", ideal_member(x - y, gb))
print("{x, 1 - x} is the unit ideal:", buchberger(Ideal([x, 1 - x])).is_unit())

# %% x^2 generates an ideal that does not contain x, but x vanishes on its zeros.
square = Ideal([x ** 2])
print("x in <x^2>      :", ideal_member(x, buchberger(square)))
print("x in rad <x^2>  :", radical_member(x, square))
