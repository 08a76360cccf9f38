# Arithmetic in GF(2^k) and F_2(T), and the determinant of a symmetric pencil.
from theta2 import det, field_new, parse_form, ratfunc_field
from theta2.fixtures import f2_cubic_pencil
from theta2.hassewitt import count_points, is_ordinary

F4 = field_new(2)
g = F4.gen
print("GF(4):", [str(x) for x in F4.elements()])
print("g^2 =", g * g, " sqrt(g) =", F4.sqrt(g))

K = ratfunc_field(1)
T = K.T
print("in F_2(T):", (T ** 3 + T) / (T + 1), "is a square?", K.is_square(T ** 2 + 1))

# a symmetric 3x3 pencil over F_2
M = f2_cubic_pencil()
for row in M.to_lists():
    print("   ", row)
F = det(M)
print("det =", F)
print("ordinary:", is_ordinary(F), " points over F_2:", count_points(F))

# forms can be typed in directly
G = parse_form("X^3 + g*X*Y*Z + Y^3 + Z^3", field_new(3))
print("over GF(8):", G)
