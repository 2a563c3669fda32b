"""Offline construction of the SBP operator tables in src/sbp1d/tables.cpp.

First derivatives: diagonal-norm operators of order 2, 4, 6.  The order 6
closure has one free parameter (q45 below).

Second derivatives D2(b): narrow interior stencil, compatible with D1:

    -H D2(b) = sum_s b_s M_s + e0 b0 S0 - eN bN SN
    M_s      = h_s d_s d_s^T + P^T G_s P

d_s is row s of D1, P takes undivided differences of order q+1 and every G_s is
PSD.  So the remainder sum_s b_s P^T G_s P is PSD whenever b >= 0, including
the tensor-valued version.  Interior G is fixed by the bandwidth, the boundary
G_s come from an SDP (maximise a PSD margin, then minimise the next-order
truncation error), and are finally snapped onto the accuracy constraints in
exact rational arithmetic.

usage: python3 design_operators.py ../../src/sbp1d/tables.cpp
"""
import sys
from fractions import Fraction as Fr
from math import comb

import cvxpy as cp
import numpy as np
import sympy as sp
import scipy.linalg as sla

Q45 = Fr(7, 10)


def d1_order6(q45):
    H = [Fr(13649, 43200), Fr(12013, 8640), Fr(2711, 4320), Fr(5359, 4320), Fr(7877, 8640), Fr(43801, 43200)]
    interior = {-3: Fr(-1, 60), -2: Fr(3, 20), -1: Fr(-3, 4), 1: Fr(3, 4), 2: Fr(-3, 20), 3: Fr(1, 60)}
    n = 9
    Q = sp.zeros(6, n)
    syms = []
    for i in range(6):
        for j in range(i + 1, 6):
            s = sp.Symbol(f"q{i}{j}")
            syms.append(s)
            Q[i, j] = s
    for i in range(6):
        for j in range(i):
            Q[i, j] = -Q[j, i]
    Q[0, 0] = sp.Rational(-1, 2)
    for i in range(6):
        for j in range(6, n):
            v = interior.get(i - j, Fr(0))
            Q[i, j] = -sp.Rational(v.numerator, v.denominator)
    eqs = []
    for i in range(6):
        for p in range(4):
            lhs = sum(Q[i, j] * sp.Integer(j) ** p for j in range(n))
            hi = sp.Rational(H[i].numerator, H[i].denominator)
            eqs.append(sp.expand(lhs - (hi * p * sp.Integer(i) ** (p - 1) if p > 0 else 0)))
    eqs.append(Q[4, 5] - sp.Rational(q45.numerator, q45.denominator))
    sol = sp.solve(eqs, syms, dict=True)
    assert len(sol) == 1
    rows = []
    for i in range(6):
        hi = sp.Rational(H[i].numerator, H[i].denominator)
        row = [Fr(str(sp.Rational(Q[i, j].subs(sol[0]) / hi))) for j in range(n)]
        while row and row[-1] == 0:
            row.pop()
        rows.append(row)
    return H, rows


def family(order):
    if order == 2:
        return dict(H=[Fr(1, 2)], rows=[[Fr(-1), Fr(1)]], interior=[Fr(-1, 2), Fr(0), Fr(1, 2)],
                    S=[Fr(-3, 2), Fr(2), Fr(-1, 2)])
    if order == 4:
        return dict(H=[Fr(17, 48), Fr(59, 48), Fr(43, 48), Fr(49, 48)],
                    rows=[[Fr(-24, 17), Fr(59, 34), Fr(-4, 17), Fr(-3, 34)],
                          [Fr(-1, 2), Fr(0), Fr(1, 2)],
                          [Fr(4, 43), Fr(-59, 86), Fr(0), Fr(59, 86), Fr(-4, 43)],
                          [Fr(3, 98), Fr(0), Fr(-59, 98), Fr(0), Fr(32, 49), Fr(-4, 49)]],
                    interior=[Fr(1, 12), Fr(-2, 3), Fr(0), Fr(2, 3), Fr(-1, 12)],
                    S=[Fr(-11, 6), Fr(3), Fr(-3, 2), Fr(1, 3)])
    H, rows = d1_order6(Q45)
    return dict(H=H, rows=rows, interior=[Fr(-1, 60), Fr(3, 20), Fr(-3, 4), Fr(0), Fr(3, 4), Fr(-3, 20), Fr(1, 60)],
                S=[Fr(-25, 12), Fr(4), Fr(-3), Fr(4, 3), Fr(-1, 4)])


def diff_rows(order, ncols):
    P = []
    for a in range(ncols - order):
        row = [0] * ncols
        for k in range(order + 1):
            row[a + k] = (-1) ** (order - k) * comb(order, k)
        P.append(row)
    return P


def interior_G(q, d):
    w = 2 * q + 1
    P = sp.Matrix(diff_rows(q + 1, w))
    G = sp.zeros(q, q)
    syms = []
    for a in range(q):
        for b in range(a, q):
            s = sp.Symbol(f"g{a}{b}")
            syms.append(s)
            G[a, b] = G[b, a] = s
    dv = sp.Matrix([sp.Rational(x.numerator, x.denominator) for x in d])
    M = dv * dv.T + P.T * G * P
    sol = sp.solve([M[i, j] for i in range(w) for j in range(w) if j - i > q], syms, dict=True)
    assert len(sol) == 1 and len(sol[0]) == len(syms)
    Mi = M.subs(sol[0])
    to_fr = lambda e: Fr(str(sp.Rational(e)))
    return [[to_fr(Mi[i, j]) for j in range(w)] for i in range(w)], [[to_fr(G.subs(sol[0])[i, j]) for j in range(q)] for i in range(q)]


class Design:
    def __init__(self, order):
        self.order = order
        q = self.q = order // 2
        fam = self.fam = family(order)
        self.m = len(fam["H"])
        self.r = self.m + q
        self.k = self.r - q - 1
        self.L = self.r + 4 * q + 4
        L = self.L
        self.H = [Fr(1)] * L
        self.H[:self.m] = fam["H"]
        self.D = [[Fr(0)] * L for _ in range(L)]
        for i, row in enumerate(fam["rows"]):
            for j, c in enumerate(row):
                self.D[i][j] = c
        for i in range(self.m, L):
            for kk, c in enumerate(fam["interior"]):
                j = i - q + kk
                if 0 <= j < L:
                    self.D[i][j] = c
        self.S0 = [Fr(0)] * L
        for j, c in enumerate(fam["S"]):
            self.S0[j] = c
        self.Mint, self.Gint = interior_G(q, fam["interior"])
        self.P = diff_rows(q + 1, self.r)
        # the list of accuracy conditions: (row, a, c)
        self.conds = [(i, a, c) for a in range(q + 2) for c in range(1, q + 2 - a + 1)
                      if a + c <= q + 1 for i in range(self.r)]
        self.lead = [(i, a, c) for a in range(q + 3) for c in range(1, q + 3 - a + 1)
                     if a + c == q + 2 for i in range(self.r)]
        self.var = [(s, a, b) for s in range(self.m) for a in range(self.k) for b in range(a, self.k)]

    def fixed_M(self, s):
        """Known part of M_s as dict (i, j) -> value."""
        out = {}
        q = self.q
        if s < self.m:
            for i in range(self.L):
                if self.D[s][i] == 0:
                    continue
                for j in range(self.L):
                    if self.D[s][j] != 0:
                        out[(i, j)] = self.H[s] * self.D[s][i] * self.D[s][j]
        else:
            w = 2 * q + 1
            for a in range(w):
                for b in range(w):
                    i, j = s - q + a, s - q + b
                    if i < self.L and j < self.L and self.Mint[a][b] != 0:
                        out[(i, j)] = self.Mint[a][b]
        return out

    def system(self, conds, exact=True):
        """Affine map G-entries -> residuals, A z + f."""
        num = (lambda v: v) if exact else float
        L = self.L
        x = [Fr(i) for i in range(L)]
        fixed = [self.fixed_M(s) for s in range(L)]
        A = [[num(Fr(0))] * len(self.var) for _ in conds]
        f = [num(Fr(0))] * len(conds)
        vidx = {v: n for n, v in enumerate(self.var)}
        for row, (i, a, c) in enumerate(conds):
            b = [xx ** a for xx in x]
            u = [xx ** c for xx in x]
            acc = Fr(0)
            for s in range(L):
                if b[s] == 0:
                    continue
                for (ii, j), v in fixed[s].items():
                    if ii == i:
                        acc += b[s] * v * u[j]
            if i == 0:
                acc += b[0] * sum(self.S0[j] * u[j] for j in range(L))
            exact_val = c * (a + c - 1) * x[i] ** (a + c - 2) if a + c >= 2 else Fr(0)
            scale = Fr(1, max(1, L ** (a + c - 2)))
            f[row] = num((-acc / self.H[i] - exact_val) * scale)
            Pu = [sum(pr[j] * u[j] for j in range(self.r)) for pr in self.P]
            for s in range(self.m):
                if b[s] == 0:
                    continue
                for aa in range(self.k):
                    for bb in range(aa, self.k):
                        if aa == bb:
                            v = self.P[aa][i] * Pu[aa] if i < self.r else 0
                        else:
                            v = (self.P[aa][i] * Pu[bb] + self.P[bb][i] * Pu[aa]) if i < self.r else 0
                        if v:
                            A[row][vidx[(s, aa, bb)]] = num(-b[s] * v / self.H[i] * scale)
        return A, f

    def unpack(self, z):
        G = [[[None] * self.k for _ in range(self.k)] for _ in range(self.m)]
        for n, (s, a, b) in enumerate(self.var):
            G[s][a][b] = G[s][b][a] = z[n]
        return G

    def solve(self, margin=1e-4, slack=1.1):
        A, f = self.system(self.conds, exact=False)
        A, f = np.array(A), np.array(f)
        z0 = np.linalg.lstsq(A, -f, rcond=1e-10)[0]
        assert np.max(np.abs(A @ z0 + f)) < 1e-10, "inconsistent accuracy conditions"
        _, sv, Vt = np.linalg.svd(A)
        rank = int(np.sum(sv > 1e-10 * sv[0]))
        N = Vt[rank:].T
        B, g = self.system(self.lead, exact=False)
        B, g = np.array(B), np.array(g)
        w = cp.Variable(N.shape[1])
        z = z0 + N @ w
        t = cp.Variable()
        cons = []
        Gsum = 0
        for s in range(self.m):
            ent = {}
            for n, (ss, a, b) in enumerate(self.var):
                if ss == s:
                    ent[(a, b)] = z[n]
            G = cp.bmat([[ent[(min(a, b), max(a, b))] for b in range(self.k)] for a in range(self.k)])
            G = (G + G.T) / 2
            Gsum = Gsum + G
            cons.append(G >> t * np.eye(self.k))
        cons.append(t <= margin)
        feas = cp.Problem(cp.Maximize(t), cons)
        feas.solve(solver=cp.CLARABEL)
        if t.value is None or t.value <= 0:
            raise RuntimeError(f"order {self.order}: no PSD closure (margin {t.value})")
        cons[-1] = t >= 0.5 * t.value
        # spectral bound on the constant coefficient operator: M(1) <= lam H
        L = self.L
        Mfix = np.zeros((L, L))
        for s in range(L):
            for (i, j), v in self.fixed_M(s).items():
                Mfix[i, j] += float(v)
        Pb = np.zeros((self.k, L))
        Pb[:, :self.r] = np.array(self.P, dtype=float)
        M1 = Mfix + Pb.T @ Gsum @ Pb
        M1 = (M1 + M1.T) / 2
        lam = cp.Variable()
        Hd = np.diag([float(v) for v in self.H])
        cons.append(lam * Hd - M1 >> 0)
        spec = cp.Problem(cp.Minimize(lam), cons)
        spec.solve(solver=cp.CLARABEL)
        lam_min = lam.value
        cons.append(lam <= slack * lam_min)
        prob = cp.Problem(cp.Minimize(cp.sum_squares(B @ z + g)), cons)
        prob.solve(solver=cp.CLARABEL)
        zv = z.value
        print(f"order {self.order}: rank {rank}, lead {np.sum((B @ zv + g) ** 2):.3e}, margin {t.value:.2e}, "
              f"lam {lam.value:.3f} (min {lam_min:.3f})",
              file=sys.stderr)
        self.snap(zv)

    def snap(self, zv):
        """Move zv onto the accuracy constraints exactly (rational arithmetic)."""
        A, f = self.system(self.conds, exact=True)
        Af = np.array([[float(v) for v in row] for row in A])
        # independent rows and pivot columns
        _, _, prow = sla.qr(Af.T, pivoting=True)
        sv = np.linalg.svd(Af, compute_uv=False)
        rank = int(np.sum(sv > 1e-10 * sv[0]))
        rows = list(prow[:rank])
        _, _, pcol = sla.qr(Af[rows], pivoting=True)
        cols = list(pcol[:rank])
        z = [Fr(float(v)) for v in zv]
        for c in cols:
            z[c] = sp.Symbol(f"p{c}")
        eqs = []
        for rr in rows:
            e = sp.Rational(f[rr].numerator, f[rr].denominator)
            for c in range(len(z)):
                if A[rr][c] != 0:
                    zc = z[c] if isinstance(z[c], sp.Symbol) else sp.Rational(z[c].numerator, z[c].denominator)
                    e += sp.Rational(A[rr][c].numerator, A[rr][c].denominator) * zc
            eqs.append(e)
        sol = sp.solve(eqs, [z[c] for c in cols], dict=True)[0]
        for c in cols:
            z[c] = Fr(str(sp.Rational(sol[z[c]])))
        # every condition must now hold exactly
        for rr in range(len(A)):
            assert f[rr] + sum(A[rr][c] * z[c] for c in range(len(z)) if A[rr][c] != 0) == 0
        self.z = z
        self.G = self.unpack(z)
        for s in range(self.m):
            ev = np.linalg.eigvalsh(np.array([[float(v) for v in row] for row in self.G[s]]))
            assert ev[0] > 0, ev

    def tables(self):
        """Exact D2 closure coefficients C[i][j][s] (h = 1) and interior stencil."""
        q, r, L = self.q, self.r, self.L
        W = r + q
        C = [[[Fr(0)] * W for _ in range(W)] for _ in range(r)]
        for s in range(W):
            M = self.fixed_M(s)
            if s < self.m and self.k > 0:
                G = self.G[s]
                for a in range(self.k):
                    for b in range(self.k):
                        if G[a][b] == 0:
                            continue
                        for i in range(r):
                            if self.P[a][i] == 0:
                                continue
                            for j in range(r):
                                if self.P[b][j] != 0:
                                    M[(i, j)] = M.get((i, j), Fr(0)) + self.P[a][i] * G[a][b] * self.P[b][j]
            for (i, j), v in M.items():
                if i < r:
                    C[i][j][s] -= v / self.H[i]
        for j in range(W):
            C[0][j][0] -= self.S0[j] / self.H[0] if j < L else 0
        w = 2 * q + 1
        Ci = [[Fr(0)] * w for _ in range(w)]  # [dj+q][ds+q]
        for ds in range(-q, q + 1):
            for dj in range(-q, q + 1):
                a = q - ds
                bb = q - ds + dj
                if 0 <= bb < w:
                    Ci[dj + q][ds + q] = -self.Mint[a][bb]
        return C, Ci


def fmt(v):
    return repr(float(v))


def emit(designs, path):
    out = []
    out.append("// Generated by tools/sbp_design/design_operators.py, do not edit.")
    out.append('#include "esbp/sbp1d.hpp"')
    out.append("")
    out.append("namespace esbp::tables {")
    out.append("")
    for d in designs:
        o = d.order
        C, Ci = d.tables()
        q, r = d.q, d.r
        W = r + q
        fam = d.fam
        out.append(f"static const double H{o}[] = {{{', '.join(fmt(v) for v in fam['H'])}}};")
        nd = max(len(row) for row in fam["rows"])
        out.append(f"static const double D1_{o}[{len(fam['rows'])}][{nd}] = {{")
        for row in fam["rows"]:
            row = list(row) + [Fr(0)] * (nd - len(row))
            out.append("    {" + ", ".join(fmt(v) for v in row) + "},")
        out.append("};")
        out.append(f"static const double D1int_{o}[] = {{{', '.join(fmt(v) for v in fam['interior'])}}};")
        out.append(f"static const double S_{o}[] = {{{', '.join(fmt(v) for v in fam['S'])}}};")
        out.append(f"static const double D2_{o}[{r}][{W}][{W}] = {{")
        for i in range(r):
            out.append("    {")
            for j in range(W):
                out.append("        {" + ", ".join(fmt(v) for v in C[i][j]) + "},")
            out.append("    },")
        out.append("};")
        w = 2 * q + 1
        out.append(f"static const double D2int_{o}[{w}][{w}] = {{")
        for row in Ci:
            out.append("    {" + ", ".join(fmt(v) for v in row) + "},")
        out.append("};")
        out.append("")
    out.append("const Family& family(int order)")
    out.append("{")
    for d in designs:
        o = d.order
        nd = max(len(row) for row in d.fam["rows"])
        W = d.r + d.q
        out.append(f"    static const Family f{o} = make_family({o}, {d.m}, H{o}, &D1_{o}[0][0], {nd}, D1int_{o}, "
                   f"S_{o}, {len(d.fam['S'])}, &D2_{o}[0][0][0], {d.r}, {W}, &D2int_{o}[0][0]);")
    out.append("    switch (order) {")
    for d in designs:
        out.append(f"    case {d.order}: return f{d.order};")
    out.append("    }")
    out.append('    throw std::invalid_argument("unsupported order");')
    out.append("}")
    out.append("")
    out.append("}")
    out.append("")
    with open(path, "w") as fh:
        fh.write("\n".join(out))


if __name__ == "__main__":
    designs = []
    for order in (2, 4, 6):
        d = Design(order)
        if d.k > 0:
            d.solve()
        else:
            d.G = []
            A, f = d.system(d.conds)
            assert all(v == 0 for v in f)
        designs.append(d)
    emit(designs, sys.argv[1] if len(sys.argv) > 1 else "tables.cpp")
