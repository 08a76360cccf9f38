# Twisted Hesse cubics: when is there a symmetric representation, and where?
from theta2 import HesseCubic, det, field_new, hesse_local_global_report, hesse_sdr, ratfunc_field
from theta2.cubics import hesse_jacobian, two_torsion

K = ratfunc_field(1)
T = K.T

for m in (T, T * T):
    H = HesseCubic(K, 1, 1, 1, m)
    res = hesse_sdr(H)
    print(H, "->", res.verdict)
    print("   m^-1 abc =", res.square_value, "|", res.criterion)
    J = hesse_jacobian(H)
    print("   Jacobian:", J, "| 2-torsion:", two_torsion(J).verdict())
    rep = hesse_local_global_report(H, 2)
    print("   local:", {str(v): e for v, e in rep.local}, "consistent:", rep.consistent)

# over a finite field every element is a square
F8 = field_new(3)
H = HesseCubic(F8, 1, 1, 1, F8.gen)
res = hesse_sdr(H)
print(H, "->", res.verdict, "s =", res.root)
print("det check:", det(res.matrix) == H.form().scale(res.lam))

# m = 0: supersingular Jacobian, nothing to find
print(hesse_sdr(HesseCubic(field_new(2), 1, 1, 1, 0)).criterion)
