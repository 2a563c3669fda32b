import numpy as np, sys
from design_operators import Design
from fractions import Fraction as Fr

def full_d2(d, C, Ci, N, b):
    q, r = d.q, d.r
    W = r + q
    A = np.zeros((N, N))
    Cf = np.array([[[float(v) for v in row] for row in M] for M in C])
    Cif = np.array([[float(v) for v in row] for row in Ci])
    for i in range(N):
        if i < r:
            for j in range(W):
                A[i, j] += Cf[i, j] @ b[:W]
        elif i >= N - r:
            ii = N - 1 - i
            for j in range(W):
                A[i, N - 1 - j] += Cf[ii, j] @ b[::-1][:W]
        else:
            for dj in range(-q, q + 1):
                A[i, i + dj] += Cif[dj + q] @ b[i - q:i + q + 1]
    return A

for order in [int(a) for a in sys.argv[1:]] or (2, 4, 6):
    d = Design(order)
    if d.k:
        d.solve()
    else:
        d.G = []
    C, Ci = d.tables()
    N = 60
    ev = np.linalg.eigvals(full_d2(d, C, Ci, N, np.ones(N)))
    # interior symbol max
    th = np.linspace(0, np.pi, 2001)
    Cif = np.array([[float(v) for v in row] for row in Ci]).sum(axis=1)
    sym = np.array([sum(Cif[k] * np.exp(1j * (k - d.q) * t) for k in range(2 * d.q + 1)).real for t in th])
    print(order, "max|eig|", np.max(np.abs(ev)), "max imag", np.max(np.abs(ev.imag)), "interior", np.max(-sym))
    rng = np.random.default_rng(0)
    b = rng.uniform(0.1, 1, N)
    ev = np.linalg.eigvals(full_d2(d, C, Ci, N, b))
    print("   random b: max|eig|", np.max(np.abs(ev)), "max real", np.max(ev.real))
