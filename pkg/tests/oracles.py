"""Independent reference computations used by the tests.

Nothing here imports the package's linear algebra: ranks go through sympy's
DomainMatrix (over QQ or an algebraic field QQ<zeta_d>), complexes are built
straight from model documents, and Milnor numbers come from truncated
Jacobian quotients.
"""

from __future__ import annotations

import random
from fractions import Fraction
from functools import lru_cache
from itertools import combinations

import sympy as sp
from sympy import QQ
from sympy.polys.matrices import DomainMatrix


# ---------------------------------------------------------------------------
# fields and ranks


@lru_cache(maxsize=None)
def field(d: int):
    if d <= 2:
        return QQ, QQ(1) if d == 1 else QQ(-1)
    zeta = sp.exp(2 * sp.pi * sp.I / d)
    K = QQ.algebraic_field(zeta)
    return K, K.from_sympy(zeta)


def zeta_power(d: int, k: int):
    K, z = field(d)
    k %= d
    out = K.one
    for _ in range(k):
        out = out * z
    return out


def from_cycnum(x, d):
    """Convert a package CycNum (read only through its coefficient list)."""
    K, _ = field(d)
    total = K.zero
    for k, c in enumerate(x.coeffs):
        if c:
            total += K.convert(QQ(Fraction(c).numerator, Fraction(c).denominator)) * zeta_power(d, k)
    return total


def dm(rows, ncols, d=1):
    K, _ = field(d)
    return DomainMatrix([list(r) for r in rows], (len(rows), ncols), K)


def rank(rows, ncols, d=1) -> int:
    if not rows or not ncols:
        return 0
    return dm(rows, ncols, d).rank()


def rank_of_exact(m) -> int:
    rows = [[from_cycnum(m[i, j], m.order) for j in range(m.cols)] for i in range(m.rows)]
    return rank(rows, m.cols, m.order)


def rank_last_pivot(rows) -> int:
    """Fraction elimination scanning columns right to left, pivot = largest |entry|."""
    a = [[Fraction(x) for x in r] for r in rows]
    if not a:
        return 0
    ncols = len(a[0])
    r = 0
    for c in reversed(range(ncols)):
        piv = max(range(r, len(a)), key=lambda i: abs(a[i][c]), default=None)
        if piv is None or a[piv][c] == 0:
            continue
        a[r], a[piv] = a[piv], a[r]
        for i in range(len(a)):
            if i != r and a[i][c]:
                f = a[i][c] / a[r][c]
                a[i] = [x - f * y for x, y in zip(a[i], a[r])]
        r += 1
        if r == len(a):
            break
    return r


# ---------------------------------------------------------------------------
# complexes from raw documents


def _order(doc):
    return {v["id"]: k for k, v in enumerate(doc["vertical"])}


def lambda_ids(doc, d):
    mult = {v["id"]: v["multiplicity"] for v in doc["vertical"]}
    jset = {i for i, m in mult.items() if m % d == 0}
    return [s["id"] for s in doc["strata"] if set(s["I"]) <= jset and set(s["touches"]) <= jset]


def cech_matrices(doc, d, basis_ids, kappa=None, a=1):
    """Degree-graded basis and differential rows (lists) over QQ<zeta_d>."""
    K, _ = field(d)
    rank_of = _order(doc)
    by_id = {s["id"]: s for s in doc["strata"]}
    length = doc["n"] + 1
    graded = [[] for _ in range(length)]
    for sid in basis_ids:
        graded[len(by_id[sid]["I"]) - 1].append(sid)
    mats = []
    for j in range(length - 1):
        rows = []
        for child in graded[j + 1]:
            s = by_id[child]
            order_i = sorted(s["I"], key=rank_of.__getitem__)
            row = []
            for parent in graded[j]:
                val = K.zero
                for i, p in s["parents"].items():
                    if p == parent:
                        sign = -1 if order_i.index(i) % 2 else 1
                        e = 0 if kappa is None else kappa[(parent, child)]
                        val += K.convert(QQ(sign)) * zeta_power(d, a * e)
                row.append(val)
            rows.append(row)
        mats.append((rows, len(graded[j])))
    return graded, mats


def cohomology_from_matrices(dims, mats, d):
    ranks = [rank(rows, ncols, d) for rows, ncols in mats]
    out = []
    for j, c in enumerate(dims):
        out.append(c - (ranks[j] if j < len(ranks) else 0) - (ranks[j - 1] if j else 0))
    return out


def square_is_zero(mats, d) -> bool:
    for j in range(len(mats) - 1):
        r2, c2 = mats[j + 1]
        r1, c1 = mats[j]
        if not r2 or not c1 or not r1:
            continue
        prod = dm(r2, c2, d) * dm(r1, c1, d)
        if not prod.is_zero_matrix:
            return False
    return True


def oracle_cohomology(doc, d, basis_ids=None, kappa=None, a=1):
    ids = lambda_ids(doc, d) if basis_ids is None else list(basis_ids)
    graded, mats = cech_matrices(doc, d, ids, kappa, a)
    return [len(g) for g in graded], cohomology_from_matrices([len(g) for g in graded], mats, d)


def kernel_on_cohomology_bruteforce(ds, dt, phi, j, d=1):
    """Kernel of H^j(S) -> H^j(T) through explicit cocycle bases.

    ``ds``/``dt``: lists of (rows, ncols) per degree; ``phi``: (rows, ncols) in degree j.
    """
    K, _ = field(d)

    def mat(entry):
        rows, ncols = entry
        return dm(rows, ncols, d) if rows else DomainMatrix.zeros((0, ncols), K)

    src_dim = phi[1]
    d_out = mat(ds[j]) if j < len(ds) else DomainMatrix.zeros((0, src_dim), K)
    cocycles = d_out.nullspace().transpose() if d_out.shape[0] else DomainMatrix.eye(src_dim, K)
    if cocycles.shape[1] == 0:
        return 0
    image = mat(phi) * cocycles
    dt_prev = mat(dt[j - 1]) if j >= 1 else DomainMatrix.zeros((image.shape[0], 0), K)
    joint = image.hstack(-dt_prev) if dt_prev.shape[1] else image
    pre = joint.shape[1] - joint.rank()
    pre -= dt_prev.shape[1] - (dt_prev.rank() if dt_prev.shape[1] else 0)
    bound = mat(ds[j - 1]).rank() if j >= 1 and ds[j - 1][0] else 0
    return pre - bound


# ---------------------------------------------------------------------------
# random models


def random_model_doc(rng: random.Random, max_strata: int = 8) -> dict:
    """Valid, fully explicit model document with at most ``max_strata`` strata."""
    n = rng.choice([1, 2])
    # n = 2 leans towards three components so triple points fit the budget
    k = rng.choice([3, 3, 4]) if n == 2 else rng.randint(2, 4)
    skip = 0.15 if n == 2 else 0.35
    ids = [f"V{i}" for i in range(k)]
    mult = {v: rng.choice([1, 2, 3, 4, 6]) for v in ids}
    strata = {v: {"id": v, "I": [v], "touches": set(), "parents": {}} for v in ids}
    budget = max_strata - k
    pair_comps: dict[frozenset, list[str]] = {}
    pairs = list(combinations(ids, 2))
    rng.shuffle(pairs)
    for p, q in pairs:
        if budget <= 0 or rng.random() < skip:
            continue
        for c in range(min(budget, rng.choice([1, 1, 1, 2]))):
            sid = f"{p}{q}_{c}"
            strata[sid] = {"id": sid, "I": [p, q], "touches": set(), "parents": {p: q, q: p}}
            pair_comps.setdefault(frozenset((p, q)), []).append(sid)
            budget -= 1
    if n == 2:
        for tri in combinations(ids, 3):
            if budget <= 0:
                break
            if not all(frozenset(x) in pair_comps for x in combinations(tri, 2)) or rng.random() < 0.3:
                continue
            sid = "".join(tri)
            parents = {i: rng.choice(pair_comps[frozenset(set(tri) - {i})]) for i in tri}
            strata[sid] = {"id": sid, "I": list(tri), "touches": set(), "parents": parents}
            budget -= 1
    for s in strata.values():
        for i, p in s["parents"].items():
            strata[p]["touches"].add(i)

    def push(sid, t):
        s = strata[sid]
        if t in s["I"]:
            return
        s["touches"].add(t)
        for p in s["parents"].values():
            push(p, t)

    for sid in list(strata):
        if rng.random() < 0.2:
            outside = [v for v in ids if v not in strata[sid]["I"]]
            if outside:
                push(sid, rng.choice(outside))
    doc = {
        "n": n,
        "vertical": [{"id": v, "multiplicity": mult[v]} for v in ids],
        "strata": [
            {"id": s["id"], "I": s["I"], "touches": sorted(s["touches"]), "parents": s["parents"]}
            for s in strata.values()
        ],
        "flags": {},
    }
    return doc


def divisors_of_some(doc):
    out = set()
    for v in doc["vertical"]:
        m = v["multiplicity"]
        out.update(e for e in range(1, m + 1) if m % e == 0)
    return sorted(out)


def random_trivial_and_gauge(rng: random.Random, doc, d):
    """A children-closed subset of lambda-strata and a gauge kappa on it."""
    lam = set(lambda_ids(doc, d))
    chosen = {s for s in lam if rng.random() < 0.6}
    children = {}
    for s in doc["strata"]:
        for p in s["parents"].values():
            children.setdefault(p, set()).add(s["id"])
    stack = list(chosen)
    while stack:
        s = stack.pop()
        for c in children.get(s, ()):
            if c not in chosen:
                chosen.add(c)
                stack.append(c)
    assert chosen <= lam
    g = {s: rng.randrange(d) for s in chosen}
    kappa = {}
    for s in doc["strata"]:
        if s["id"] not in chosen:
            continue
        for p in s["parents"].values():
            if p in chosen:
                kappa[(p, s["id"])] = (g[s["id"]] - g[p]) % d
    # keep declaration order for the basis
    ordered = [s["id"] for s in doc["strata"] if s["id"] in chosen]
    return ordered, kappa


# ---------------------------------------------------------------------------
# Milnor numbers


def _monomials(nvars, maxdeg):
    out = []

    def rec(prefix, left, k):
        if k == nvars - 1:
            out.append(tuple(prefix + [left]))
            return
        for e in range(left + 1):
            rec(prefix + [e], left - e, k + 1)

    for deg in range(maxdeg + 1):
        rec([], deg, 0)
    return out


def _truncated_quotient_dim(gens, nvars, N):
    basis = _monomials(nvars, N - 1)
    index = {m: i for i, m in enumerate(basis)}
    rows = {}
    for g in gens:
        gmin = min(sum(e) for e in g)
        for m in _monomials(nvars, N - 1 - gmin):
            row = {}
            for e, c in g.items():
                t = tuple(x + y for x, y in zip(m, e))
                if sum(t) < N:
                    row[index[t]] = QQ(int(c))
            if row:
                rows[len(rows)] = row
    if not rows:
        return len(basis)
    M = DomainMatrix(rows, (len(rows), len(basis)), QQ)
    return len(basis) - M.rank()


def milnor_number(f, xs) -> int:
    """dim O/(J_f) at the origin: dim C[x]/(J + m^N) once it stops growing.

    If the dimension agrees at N and N + 1 then m^N lies in J + m^(N+1), so
    m^N lies in J locally (Nakayama) and the value is exact.
    """
    gens = [dict(sp.Poly(sp.diff(f, x), *xs).terms()) for x in xs]
    prev = None
    N = 2
    while True:
        cur = _truncated_quotient_dim(gens, len(xs), N)
        if cur == prev:
            return cur
        prev = cur
        N += 1


def t_ppp_milnor(p: int) -> int:
    x, y, z = sp.symbols("x y z")
    return milnor_number(x**p + y**p + z**p + x * y * z, (x, y, z))
