# Smooth conics: the strange point, a rational point, and a 2x2 representation.
from theta2 import Conic, conic_sdr, det, find_local_point, find_point, parse_form, ratfunc_field
from theta2.conics import inseparable_point_any
from theta2.funcfield import places_up_to

K = ratfunc_field(1)
C = Conic.from_form(parse_form("X^2 + X*Y + T*Z^2", K))
print("conic:", C)
print("smoothness value:", C.smoothness_value(), " strange point:", [str(x) for x in C.strange_point()])

ins = inseparable_point_any(C)
print("t =", ins.t, " square in K?", ins.rational)
print("point over K(sqrt t):", [str(x) for x in ins.point_on_original])

found = find_point(C)
print("rational point:", [str(x) for x in found.point], "via", found.method)

res = conic_sdr(C, found.point)
print("M =", res.matrix.to_lists(), " lambda =", res.lam)
print("det(M) == lambda * F:", det(res.matrix) == C.form().scale(res.lam))

for v in places_up_to(K, 2):
    lp = find_local_point(C, v, N=12)
    print(f"  local point at {v}: {lp.status} ({lp.reason})")
