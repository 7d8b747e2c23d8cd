from fiblucas import SeqParams, QuatAlgebra, closure_check, lattice_membership, scalar_product_decompose, eval_combination
from fiblucas.orders import GeneratorTerm, generator, printed_scalar_decompose, generator_rank, ambient_rank

# product of two scaled generators, split into six generators
par = SeqParams(1)
g1, g2 = GeneratorTerm(1, 1, 1), GeneratorTerm(2, 1, 1)
comb = scalar_product_decompose(par, g1, g2)
for t in comb.terms:
    print(t)
print("direct product:", generator(par, g1) * generator(par, g2))
print("six terms:     ", eval_combination(par, comb))
print("printed signs: ", eval_combination(par, printed_scalar_decompose(par, g1, g2)))

# in the algebra, lattice membership is decided by integer row reduction
H = QuatAlgebra(-1, 2)
prod = generator(par, g1, H) * generator(par, g2, H)
print("witness:", lattice_membership(par, H, prod, (0, 8)))

# the generators only span a rank-3 lattice
for alg in (QuatAlgebra(-1, -1), QuatAlgebra(-1, 2)):
    print(alg, "rank", generator_rank(par, alg, (0, 20)), "of", ambient_rank(alg))

# so products usually fall outside, except when alpha l^2 + beta = 1
for l, a, b in [(1, -1, 2), (1, -1, -1), (2, -1, 5), (2, 2, 3)]:
    rep = closure_check(SeqParams(l), QuatAlgebra(a, b), 100, 42)
    print(f"l={l} alpha={a} beta={b}: alpha l^2 + beta = {a * l * l + b}, failures {len(rep.failures)}/100")
