"""Reverse-engineer component data from the published hexagon Gram.

Model: Q(K_i,K_i) = phi_i (= tb-1), Q(K_i,K_j) = ell_ij (= lk, half the
signed crossing count), Q(core,K_i) = lam_i/2, Q(core,core) = 0.
ell is held at c * det(s_i,s_j)/2; phi_i are solved per basis guess.
Basis candidates: 4 of the natural kernel vectors (opposite pairs,
consecutive alternating triples, full alternating triples), in any order,
with either sign, plus the core in any of the five positions.
"""

import itertools
from fractions import Fraction

P = [
    [0, -2, 1, 0, 0],
    [-2, -4, -1, 1, 1],
    [1, -1, -2, 1, 0],
    [0, 1, 1, -2, -1],
    [0, 1, 0, -1, -3],
]

ORDERS = {
    "mine": [(1, 0), (1, 1), (0, 1), (-1, 0), (-1, -1), (0, -1)],
    "paper": [(1, 0), (0, -1), (-1, -1), (-1, 0), (0, 1), (1, 1)],
}
N = 6


def det2(a, b):
    return a[0] * b[1] - a[1] * b[0]


def kernel_vectors():
    out = []
    for i in range(3):
        v = [0] * N
        v[i] = 1
        v[i + 3] = 1
        out.append(("p%d" % (i + 1), tuple(v)))
    for i in range(N):
        v = [0] * N
        v[i] = 1
        v[(i + 1) % N] = -1
        v[(i + 2) % N] = 1
        out.append(("t%d" % (i + 1), tuple(v)))
    for off in (0, 1):
        v = [0] * N
        for i in range(off, N, 2):
            v[i] = 1
        out.append(("alt%d" % off, tuple(v)))
    return out


def solve_linear(rows, rhs):
    """Exact solve of possibly overdetermined system; None if inconsistent.
    Returns one solution with free variables set to 0 plus basis count."""
    m = [list(map(Fraction, r)) + [Fraction(b)] for r, b in zip(rows, rhs)]
    nr, nc = len(m), N
    piv = []
    r = 0
    for c in range(nc):
        k = next((i for i in range(r, nr) if m[i][c] != 0), None)
        if k is None:
            continue
        m[r], m[k] = m[k], m[r]
        inv = 1 / m[r][c]
        m[r] = [x * inv for x in m[r]]
        for i in range(nr):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        piv.append(c)
        r += 1
    for i in range(r, nr):
        if m[i][nc] != 0:
            return None, None
    sol = [Fraction(0)] * nc
    for i, c in enumerate(piv):
        sol[c] = m[i][nc]
    return sol, nc - len(piv)


def main():
    vecs_all = kernel_vectors()
    hits = 0
    for oname, S in ORDERS.items():
        D = [[det2(S[i], S[j]) for j in range(N)] for i in range(N)]
        for combo in itertools.permutations(vecs_all, 4):
            for signs in itertools.product((1, -1), repeat=4):
                basis = [tuple(s * x for x in v) for s, (_, v) in
                         zip(signs, combo)]
                for c_link in (1, -1, 2, -2):
                    # equations for phi from the satellite block
                    rows, rhs = [], []
                    ok = True
                    for a in range(4):
                        for b in range(a, 4):
                            va, vb = basis[a], basis[b]
                            const = Fraction(0)
                            for i in range(N):
                                for j in range(N):
                                    if i != j:
                                        const += Fraction(
                                            va[i] * vb[j] * c_link
                                            * D[i][j], 2)
                            coeff = [va[i] * vb[i] for i in range(N)]
                            rows.append(coeff)
                            rhs.append(P[a + 1][b + 1] - const)
                    phi, free = solve_linear(rows, rhs)
                    if phi is None:
                        continue
                    # lam from the core row (underdetermined is fine)
                    lrows = [[Fraction(x, 2) for x in basis[a]]
                             for a in range(4)]
                    lrhs = [P[0][a + 1] for a in range(4)]
                    lam, lfree = solve_linear(lrows, lrhs)
                    if lam is None:
                        continue
                    hits += 1
                    names = [("-" if s < 0 else "") + n
                             for s, (n, _) in zip(signs, combo)]
                    print("FIT order=%s basis=%s c=%s phi=%s (free %d) "
                          "lam=%s (free %d)"
                          % (oname, names, c_link,
                             [str(x) for x in phi], free,
                             [str(x) for x in lam], lfree))
                    if hits >= 12:
                        return
    print("done, %d fits" % hits)


if __name__ == "__main__":
    main()
