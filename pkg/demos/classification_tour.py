from fiblucas import SeqParams, classify, conic_search, family_certificate, hilbert_symbol

# Hamilton's quaternions: -1 at the real place and at 2, nowhere else
c = classify(-1, -1)
print(c.verdict.value, c.evidence)

# a small point on -x^2 + 5y^2 = z^2 is enough to split H(-1, 5)
print(conic_search(-1, 5, 10))
print(classify(-1, 5).verdict.value)

# 319 = 11 * 29 is 3 mod 4, so -x^2 + 319 y^2 = z^2 has no point
print(classify(-1, 319).verdict.value, [hilbert_symbol(-1, 319, v) for v in ("inf", 2, 11, 29)])

# family certificates carry their own evidence and can be re-checked
for case, l, n in [("iii", 1, 2), ("iv", 2, 3), ("vii", 1, 2), ("viii", 3, 4), ("ix", 1, 6), ("xi", 1, 7)]:
    cert = family_certificate(case, SeqParams(l), n)
    print(case, l, n, cert.alpha, cert.beta, cert.verdict.value, type(cert.evidence).__name__, cert.recheck())
