from fiblucas import SeqParams, GLParams, seq_a, seq_b, binet_a, u_number, identity_check
from fiblucas.sequences import roots

# l = 1 gives Fibonacci and Lucas, l = 2 the Pell numbers
for l in (1, 2, 3):
    p = SeqParams(l)
    print("l =", l, "a:", [seq_a(p, n) for n in range(10)])
    print("      b:", [seq_b(p, n) for n in range(10)])

# negative indices follow a_{-n} = (-1)^(n+1) a_n
p = SeqParams(1)
print([seq_a(p, n) for n in range(-6, 7)])

# Binet is evaluated exactly in Q(sqrt(l^2+4)); the irrational part cancels
al, be = roots(SeqParams(2))
print("roots for l=2:", al, be)
x = (al**10 - be**10) / (al - be)
print("a_10 via Binet:", x, "->", binet_a(SeqParams(2), 10))

# the mixed numbers u_n^{p,q} = p a_{n-1} + q b_n obey the same recurrence
print([u_number(SeqParams(2), GLParams(1, 1), n) for n in range(8)])

# a few identity checks; each report carries both sides
for ident, n, m in [("P31_I", 4, 7), ("P31_VI", 9, None), ("P32_II", 5, None)]:
    r = identity_check(ident, SeqParams(3), n, m)
    print(ident, n, m, r.lhs, "==", r.rhs, r.holds)
