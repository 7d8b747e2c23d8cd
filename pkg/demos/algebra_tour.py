from fiblucas import QuatAlgebra, SymAlgebra, CycRat, EPS, SeqParams, GLParams, u_quaternion, sym_from_sequence

def show(v):
    return [str(c) for c in v]


# generalized quaternions H(alpha, beta) with basis 1, e2, e3, e4
H = QuatAlgebra(-1, 3)
one, e2, e3, e4 = H.basis()
print("e2 e3 =", show((e2 * e3).c), " e3 e2 =", show((e3 * e2).c), " e4 e2 =", show((e4 * e2).c))

x = H.element((1, 2, 0, -1))
y = H.element((0, 1, 1, 1))
print("N(xy) =", (x * y).norm(), "= N(x) N(y) =", x.norm() * y.norm())

# the U-quaternion stacks four consecutive u_n values
print(show(u_quaternion(SeqParams(2), GLParams(1, 1), 0, H).c))

# degree-3 symbol algebra over Q(eps), eps^2 + eps + 1 = 0
print("eps^2 =", EPS * EPS, " eps^3 =", EPS ** 3)
A = SymAlgebra(CycRat(2), CycRat(1, 1))
print("y x == eps x y:", A.y * A.x == (A.x * A.y).scale(EPS))
print("x^3 =", (A.x ** 3).coeffs[0], " y^3 =", (A.y ** 3).coeffs[0])

# Lucas numbers 2, 1, 3, ... laid out on the nine basis monomials
L = sym_from_sequence("lucas", 0, A)
print([str(c.a) for c in L.coeffs])
