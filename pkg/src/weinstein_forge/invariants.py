"""Homology, intersection form, and fundamental group from handle data.

A diagram with one 0-handle, k 1-handles and m 2-handles gives the cellular
chain complex  Z^m --d2--> Z^k --0--> Z.  Everything here is exact integer
linear algebra: Smith normal form with unimodular certificates, a Hermite
kernel basis for H2, congruence diagonalization for the signature, and
Tietze reduction for the fundamental group.
"""

from fractions import Fraction
import string


def _check_rect(A):
    for row in A:
        if len(row) != len(A[0]):
            raise ValueError("ragged matrix")
        for x in row:
            if isinstance(x, bool) or not isinstance(x, int):
                raise ValueError("matrix entries must be integers")


def _identity(n):
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def _matmul(A, B):
    return [[sum(A[i][k] * B[k][j] for k in range(len(B)))
             for j in range(len(B[0]) if B else 0)] for i in range(len(A))]


def smith_normal_form(A):
    """(U, D, V) with U*A*V = D diagonal, d_i >= 0, d_i | d_{i+1}, and
    U, V unimodular.  Certificates are returned so callers can re-verify."""
    _check_rect(A)
    rows = len(A)
    cols = len(A[0]) if rows else 0
    D = [[int(x) for x in row] for row in A]
    U = _identity(rows)
    V = _identity(cols)

    def row_add(dst, src, t):
        D[dst] = [a + t * b for a, b in zip(D[dst], D[src])]
        U[dst] = [a + t * b for a, b in zip(U[dst], U[src])]

    def col_add(dst, src, t):
        for r in range(rows):
            D[r][dst] += t * D[r][src]
        for r in range(cols):
            V[r][dst] += t * V[r][src]

    def row_swap(i, j):
        D[i], D[j] = D[j], D[i]
        U[i], U[j] = U[j], U[i]

    def col_swap(i, j):
        for r in range(rows):
            D[r][i], D[r][j] = D[r][j], D[r][i]
        for r in range(cols):
            V[r][i], V[r][j] = V[r][j], V[r][i]

    def row_negate(i):
        D[i] = [-x for x in D[i]]
        U[i] = [-x for x in U[i]]

    t = 0
    while t < min(rows, cols):
        piv = None
        for i in range(t, rows):
            for j in range(t, cols):
                if D[i][j] != 0 and (piv is None or abs(D[i][j]) < abs(D[piv[0]][piv[1]])):
                    piv = (i, j)
        if piv is None:
            break
        row_swap(t, piv[0])
        col_swap(t, piv[1])
        while True:
            # clear column t below the pivot, stealing smaller remainders
            again = False
            for i in range(t + 1, rows):
                if D[i][t] != 0:
                    row_add(i, t, -(D[i][t] // D[t][t]))
                    if D[i][t] != 0:
                        row_swap(t, i)
                        again = True
            for j in range(t + 1, cols):
                if D[t][j] != 0:
                    col_add(j, t, -(D[t][j] // D[t][t]))
                    if D[t][j] != 0:
                        col_swap(t, j)
                        again = True
            if again:
                continue
            # pivot must divide the remaining block for the divisor chain
            bad = None
            for i in range(t + 1, rows):
                for j in range(t + 1, cols):
                    if D[i][j] % D[t][t] != 0:
                        bad = i
                        break
                if bad is not None:
                    break
            if bad is None:
                break
            row_add(t, bad, 1)
        if D[t][t] < 0:
            row_negate(t)
        t += 1
    return U, D, V


def _column_hnf(M):
    """Canonical column Hermite form of an integer matrix (column ops only).
    Pivots positive, zeros to the right of each pivot in its row, entries to
    the left reduced into [0, pivot)."""
    rows = len(M)
    cols = len(M[0]) if rows else 0
    H = [list(row) for row in M]

    def col_add(dst, src, t):
        for r in range(rows):
            H[r][dst] += t * H[r][src]

    def col_swap(i, j):
        for r in range(rows):
            H[r][i], H[r][j] = H[r][j], H[r][i]

    c = 0
    for i in range(rows):
        if c == cols:
            break
        while True:
            live = [j for j in range(c, cols) if H[i][j] != 0]
            if len(live) <= 1:
                break
            live.sort(key=lambda j: abs(H[i][j]))
            j0 = live[0]
            for j in live[1:]:
                col_add(j, j0, -(H[i][j] // H[i][j0]))
        live = [j for j in range(c, cols) if H[i][j] != 0]
        if not live:
            continue
        if live[0] != c:
            col_swap(c, live[0])
        if H[i][c] < 0:
            for r in range(rows):
                H[r][c] = -H[r][c]
        for j in range(c):
            col_add(j, c, -(H[i][j] // H[i][c]))
        c += 1
    return H


def kernel_basis(A):
    """Deterministic basis of the integer kernel ker(A: Z^cols -> Z^rows),
    as a list of column tuples in Hermite-reduced form."""
    _check_rect(A)
    rows = len(A)
    cols = len(A[0]) if rows else 0
    _, D, V = smith_normal_form(A)
    r = sum(1 for i in range(min(rows, cols)) if D[i][i] != 0)
    if r == cols:
        return []
    raw = [[V[i][j] for j in range(r, cols)] for i in range(cols)]
    H = _column_hnf(raw)
    return [tuple(H[i][j] for i in range(cols)) for j in range(cols - r)]


def _det(M):
    n = len(M)
    if n == 0:
        return 1
    A = [[Fraction(x) for x in row] for row in M]
    sign = 1
    for c in range(n):
        piv = next((r for r in range(c, n) if A[r][c] != 0), None)
        if piv is None:
            return 0
        if piv != c:
            A[c], A[piv] = A[piv], A[c]
            sign = -sign
        for r in range(c + 1, n):
            if A[r][c] != 0:
                f = A[r][c] / A[c][c]
                A[r] = [a - f * b for a, b in zip(A[r], A[c])]
    det = Fraction(sign)
    for c in range(n):
        det *= A[c][c]
    assert det.denominator == 1
    return int(det)


def _congruence_diagonal(M):
    """Diagonal of a rational matrix congruent to symmetric M."""
    n = len(M)
    A = [[Fraction(x) for x in row] for row in M]

    def add(i, j, f):
        A[i] = [a + f * b for a, b in zip(A[i], A[j])]
        for r in range(n):
            A[r][i] += f * A[r][j]

    def swap(i, j):
        A[i], A[j] = A[j], A[i]
        for r in range(n):
            A[r][i], A[r][j] = A[r][j], A[r][i]

    diag = []
    for i in range(n):
        if A[i][i] == 0:
            j = next((j for j in range(i + 1, n) if A[j][j] != 0), None)
            if j is not None:
                swap(i, j)
            else:
                j = next((j for j in range(i + 1, n) if A[i][j] != 0), None)
                if j is None:
                    continue
                add(i, j, Fraction(1))
        p = A[i][i]
        for r in range(i + 1, n):
            if A[r][i] != 0:
                add(r, i, -A[r][i] / p)
        diag.append(p)
    return diag


def form_invariants(gram):
    """rank / signature / parity / determinant of a symmetric integer form."""
    _check_rect(gram) if gram else None
    n = len(gram)
    for i in range(n):
        for j in range(n):
            if gram[i][j] != gram[j][i]:
                raise ValueError("Gram matrix must be symmetric")
    diag = _congruence_diagonal(gram)
    parity = "even" if all(gram[i][i] % 2 == 0 for i in range(n)) else "odd"
    return {
        "rank": len(diag),
        "signature": sum(1 if d > 0 else -1 for d in diag),
        "parity": parity,
        "determinant": _det(gram),
    }


class ChainData:
    """d2 over Z (1-handles x 2-handles), per-component framings (tb - 1),
    and the symmetric doubled-linking matrix (signed inter-component
    crossing counts, twice the linking number)."""

    def __init__(self, d2, framings, linking):
        m = len(framings)
        if d2:
            _check_rect(d2)
            if len(d2[0]) != m:
                raise ValueError("d2 has %d columns but %d framings"
                                 % (len(d2[0]), m))
        if len(linking) != m or any(len(row) != m for row in linking):
            raise ValueError("linking matrix must be %d x %d" % (m, m))
        for i in range(m):
            for j in range(m):
                if linking[i][j] != linking[j][i]:
                    raise ValueError("linking matrix must be symmetric")
        self.d2 = [list(row) for row in d2]
        self.framings = list(framings)
        self.linking = [list(row) for row in linking]
        self.n_one = len(d2)
        self.n_two = m


class HomologyReport:
    def __init__(self, groups, euler, snf_left, snf_diag, snf_right):
        self.groups = groups
        self.euler = euler
        self.snf_left = snf_left
        self.snf_diag = snf_diag
        self.snf_right = snf_right

    def to_json(self):
        return {"groups": [{"rank": r, "torsion": t} for r, t in self.groups],
                "euler": self.euler}

    def __eq__(self, other):
        return isinstance(other, HomologyReport) and self.groups == other.groups

    def __repr__(self):
        return "HomologyReport(%r)" % (self.groups,)


def homology(c):
    """H_0..H_4 of the handlebody: H0 = Z, H1 = coker d2, H2 = ker d2."""
    k, m = c.n_one, c.n_two
    if k == 0 or m == 0:
        U, D, V = _identity(k), [[0] * m for _ in range(k)], _identity(m)
        r = 0
    else:
        U, D, V = smith_normal_form(c.d2)
        r = sum(1 for i in range(min(k, m)) if D[i][i] != 0)
    torsion = [D[i][i] for i in range(r) if D[i][i] > 1]
    groups = [(1, []), (k - r, torsion), (m - r, []), (0, []), (0, [])]
    return HomologyReport(groups, 1 - k + m, U, D, V)


class IntersectionForm:
    def __init__(self, basis, gram, invariants):
        self.basis = basis
        self.gram = gram
        self.invariants = invariants

    def to_json(self):
        return {"basis": [list(v) for v in self.basis], "gram": self.gram,
                "invariants": self.invariants}

    def __repr__(self):
        return "IntersectionForm(gram=%r, %r)" % (self.gram, self.invariants)


def intersection_form(c):
    """Gram matrix of the intersection pairing on a Hermite basis of ker d2.

    Diagonal entries extend the framings, off-diagonal entries the linking
    numbers, bilinearly to kernel vectors.
    """
    m = c.n_two
    if c.n_one == 0:
        basis = [tuple(1 if i == j else 0 for i in range(m)) for j in range(m)]
    else:
        basis = kernel_basis(c.d2)
    M = [[Fraction(c.framings[i]) if i == j else Fraction(c.linking[i][j], 2)
          for j in range(m)] for i in range(m)]
    raw = [[sum(u[i] * M[i][j] * v[j] for i in range(m) for j in range(m))
            for v in basis] for u in basis]
    # half-integral linking contributes twice per unordered pair, so the
    # pairing is integral on ker d2
    for row in raw:
        for x in row:
            if x.denominator != 1:
                raise ValueError("intersection pairing is not integral "
                                 "on the chosen basis")
    gram = [[int(x) for x in row] for row in raw]
    return IntersectionForm(basis, gram, form_invariants(gram))


def _free_reduce(word):
    out = []
    for x in word:
        if out and out[-1] == -x:
            out.pop()
        else:
            out.append(x)
    return tuple(out)


def _cyclic_reduce(word):
    w = list(_free_reduce(word))
    while len(w) >= 2 and w[0] == -w[-1]:
        w = w[1:-1]
    return tuple(w)


def _invert(word):
    return tuple(-x for x in reversed(word))


class GroupPresentation:
    """Generators are names; relators are tuples of nonzero signed 1-based
    generator indices (+i = generator i, -i = its inverse)."""

    def __init__(self, generators, relators, verdict="unknown"):
        self.generators = list(generators)
        k = len(self.generators)
        for w in relators:
            for x in w:
                if not isinstance(x, int) or x == 0 or abs(x) > k:
                    raise ValueError("relator letter %r out of range" % (x,))
        self.relators = [tuple(w) for w in relators]
        self.verdict = verdict

    def abelianization(self):
        """(free rank, torsion) of the abelianized group; matches the H1
        convention of `homology`."""
        k = len(self.generators)
        if k == 0:
            return (0, [])
        E = [[sum(1 if x == g + 1 else -1 if x == -(g + 1) else 0 for x in w)
              for w in self.relators] for g in range(k)]
        if not self.relators:
            return (k, [])
        _, D, _ = smith_normal_form(E)
        r = sum(1 for i in range(min(k, len(self.relators))) if D[i][i] != 0)
        return (k - r, [D[i][i] for i in range(r) if D[i][i] > 1])

    def word_text(self, w):
        parts = []
        for x in w:
            name = self.generators[abs(x) - 1]
            parts.append(name if x > 0 else name + "^-1")
        return " ".join(parts) if parts else "1"

    def to_text(self):
        gens = ", ".join(self.generators)
        rels = ", ".join(self.word_text(w) for w in self.relators)
        return "< %s | %s >" % (gens, rels)

    def to_json(self):
        return {"generators": list(self.generators),
                "relators": [list(w) for w in self.relators],
                "verdict": self.verdict}

    def __repr__(self):
        return "GroupPresentation(%s, verdict=%r)" % (self.to_text(), self.verdict)


def _substitute(word, gen, replacement):
    out = []
    for x in word:
        if x == gen:
            out.extend(replacement)
        elif x == -gen:
            out.extend(_invert(replacement))
        else:
            out.append(x)
    return tuple(out)


def _drop_generator(word, gen):
    out = []
    for x in word:
        a = abs(x)
        assert a != gen
        out.append((a - 1 if a > gen else a) * (1 if x > 0 else -1))
    return tuple(out)


def _is_commutator_presentation(gens, relators):
    k = len(gens)
    if k < 2 or not relators:
        return False
    pairs = set()
    for w in relators:
        if len(w) != 4:
            return False
        a, b = abs(w[0]), abs(w[1])
        if a == b:
            return False
        matched = False
        for rot in range(4):
            v = w[rot:] + w[:rot]
            for cand in (v, _invert(v)):
                x, y = cand[0], cand[1]
                if cand == (x, y, -x, -y):
                    pairs.add(frozenset((abs(x), abs(y))))
                    matched = True
        if not matched:
            return False
    want = {frozenset((i, j)) for i in range(1, k + 1) for j in range(i + 1, k + 1)}
    return pairs == want


def simplify_presentation(g, budget=1000):
    """Tietze reduction: free/cyclic reduction, generator elimination when a
    relator holds a generator exactly once, greedy relator multiplication.

    The verdict is conservative: "trivial" and "Z^k" only when the reduced
    presentation certifies it, otherwise "inconclusive".
    """
    gens = list(g.generators)
    relators = [_cyclic_reduce(w) for w in g.relators]
    relators = [w for w in relators if w]
    steps = 0

    changed = True
    while changed and steps < budget:
        changed = False
        # eliminate a generator that some relator mentions exactly once
        for ri, w in enumerate(relators):
            target = None
            for gen in range(1, len(gens) + 1):
                if sum(1 for x in w if abs(x) == gen) == 1:
                    target = gen
                    break
            if target is None:
                continue
            i = next(i for i, x in enumerate(w) if abs(x) == target)
            u, v = w[:i], w[i + 1:]
            if w[i] > 0:
                replacement = _invert(u) + _invert(v)
            else:
                replacement = v + u
            relators = [relators[j] for j in range(len(relators)) if j != ri]
            relators = [_cyclic_reduce(_substitute(r, target, replacement))
                        for r in relators]
            relators = [_drop_generator(r, target) for r in relators if r]
            gens = gens[:target - 1] + gens[target:]
            steps += 1
            changed = True
            break
        if changed:
            continue
        # greedy shortening by multiplying with (rotated) other relators
        for i in range(len(relators)):
            if changed or steps >= budget:
                break
            for j in range(len(relators)):
                if i == j or changed:
                    continue
                rj = relators[j]
                for rot in range(len(rj)):
                    v = rj[rot:] + rj[:rot]
                    for cand_tail in (v, _invert(v)):
                        cand = _cyclic_reduce(relators[i] + cand_tail)
                        if len(cand) < len(relators[i]):
                            relators[i] = cand
                            steps += 1
                            changed = True
                            break
                    if changed:
                        break
        if changed:
            relators = [w for w in relators if w]

    if not gens:
        verdict = "trivial"
    elif not relators:
        verdict = "Z" if len(gens) == 1 else "free of rank %d" % len(gens)
    elif _is_commutator_presentation(gens, relators):
        verdict = "Z^%d" % len(gens)
    else:
        verdict = "inconclusive"
    return GroupPresentation(gens, relators, verdict)


def _generator_names(k):
    names = []
    for i in range(k):
        if i < len(string.ascii_lowercase):
            names.append(string.ascii_lowercase[i])
        else:
            names.append("g%d" % i)
    return names


def chain_data(d):
    """ChainData of a front diagram: d2 from signed 1-handle passage counts,
    framings tb - 1, linking numbers from the crossing count."""
    from . import front_diagram as fd
    inv = fd.classical_invariants(d)
    words = fd.handle_words(d)
    k = fd.one_handle_count(d)
    d2 = [[sum(1 if x == h + 1 else -1 if x == -(h + 1) else 0 for x in w)
           for w in words] for h in range(k)]
    framings = [tb - 1 for tb in inv.tb]
    return ChainData(d2, framings, inv.linking_doubled)


def pi1_presentation(d):
    """One generator per 1-handle, one relator per component: its signed
    1-handle passage word in traversal order."""
    from . import front_diagram as fd
    words = fd.handle_words(d)
    k = fd.one_handle_count(d)
    return GroupPresentation(_generator_names(k), [tuple(w) for w in words])


def invariant_report(d):
    """Text block in display order: pi1, H0..H4, intersection form."""
    c = chain_data(d)
    h = homology(c)
    f = intersection_form(c)
    p = simplify_presentation(pi1_presentation(d))
    lines = ["pi1: %s (%s)" % (p.verdict, p.to_text())]
    for i, (rank, torsion) in enumerate(h.groups):
        parts = []
        if rank == 1:
            parts.append("Z")
        elif rank > 1:
            parts.append("Z^%d" % rank)
        parts.extend("Z/%d" % t for t in torsion)
        lines.append("H%d: %s" % (i, " + ".join(parts) if parts else "0"))
    lines.append("intersection form on H2: %r" % (f.gram,))
    lines.append("  rank %(rank)d, signature %(signature)d, %(parity)s, "
                 "determinant %(determinant)d" % f.invariants)
    return "\n".join(lines)
