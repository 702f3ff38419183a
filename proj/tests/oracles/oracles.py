"""Independent high-precision reference values for the unit tests (mpmath)."""
import mpmath as mp

mp.mp.dps = 40


def fgn_gamma(d, k):
    a = 2 * d + 1
    k = abs(k)
    return (abs(k + 1) ** a - 2 * abs(k) ** a + abs(k - 1) ** a) / 2


def f0(d, lam):
    # Σ_k |λ+2πk|^{-s} via Hurwitz zeta
    s = 2 * d + 2
    x = lam / (2 * mp.pi)
    tail = (2 * mp.pi) ** (-s) * (mp.zeta(s, x) + mp.zeta(s, 1 - x))
    c = mp.gamma(2 * d + 2) * mp.cos(mp.pi * d) / (2 * mp.pi)
    return c * abs(1 - mp.exp(1j * lam)) ** 2 * tail


def composed(d, theta, phi, lam):
    z = mp.exp(1j * lam)
    th = sum(c * z ** i for i, c in enumerate(theta))
    ph = sum(c * z ** i for i, c in enumerate(phi))
    return abs(th / ph) ** 2 * f0(d, lam)


def gamma_quad(d, theta, phi, k):
    f = lambda l: composed(d, theta, phi, l) * mp.cos(k * l)
    return 2 * mp.quad(f, [0, mp.mpf('1e-8'), mp.mpf('1e-4'), mp.mpf('0.01'), 0.5, 1, 2, mp.pi])


def sigma0_sq(d):
    g = lambda l: mp.log(f0(d, l))
    I = 2 * mp.quad(g, [0, mp.mpf('1e-8'), mp.mpf('1e-4'), mp.mpf('0.01'), 0.5, 1, 2, mp.pi])
    return 2 * mp.pi * mp.exp(I / (2 * mp.pi))


def mu_series(z, d, terms=200):
    return sum(mp.mpf(k) ** (2 * d + 1) * z ** k for k in range(1, terms + 1))


def r_fun(s, d):
    return mp.re(mp.polylog(-2 * d - 1, s) + mp.polylog(-2 * d - 1, 1 / s))


def Q(z, d):
    mu = lambda w: mp.polylog(-2 * d - 1, w)
    return (1 / z - 2 + z) * (mu(z) + mu(1 / z)) / (4 * mp.pi)


def q_plus_richardson(t, d):
    # Richardson extrapolation in ε of Q(t + iε) over ε ∈ {1e-3, 1e-4, 1e-5}
    e = [mp.mpf('1e-3'), mp.mpf('1e-4'), mp.mpf('1e-5')]
    v = [Q(t + 1j * x, d) for x in e]
    r1 = (10 * v[1] - v[0]) / 9
    r2 = (10 * v[2] - v[1]) / 9
    return (100 * r2 - r1) / 99




def q1_nystrom(d, ts, sign=+1):
    # Dense Nyström on geometric Gauss–Legendre panels, evaluated by the natural interpolant
    import numpy as np
    from numpy.polynomial.legendre import leggauss
    x, w = leggauss(20)
    edges = [0.0] + [0.5 ** k for k in range(120, 0, -1)] + list(np.arange(1.0, 81.0, 1.0))
    R = []; W = []
    for a, b in zip(edges[:-1], edges[1:]):
        R.append((a + b) / 2 + (b - a) / 2 * x); W.append((b - a) / 2 * w)
    R = np.concatenate(R); W = np.concatenate(W)
    c = sign * np.sin(np.pi * d) / np.pi
    m = c * W * np.exp(-R)
    K = m[None, :] / (R[None, :] + R[:, None])
    v = np.linalg.solve(np.eye(len(R)) - K, np.ones(len(R)))
    return [1 + np.sum(m * v / (R + t)) for t in ts]


def vandermonde(zeta):
    # V rows (1, ζ, ζ², …) for each node plus the row for node 0; u = (1/(ζ−1), …, −1)
    m = len(zeta)
    V = mp.matrix(m + 1, m + 1)
    for i, z in enumerate(zeta):
        for j in range(m + 1):
            V[i, j] = mp.mpf(z) ** j
    V[m, 0] = 1
    inv = V ** -1
    u = [1 / (mp.mpf(z) - 1) for z in zeta] + [-1]
    eVe = inv[m, m]
    oneVe = sum(inv[i, m] for i in range(m + 1))
    eVu = sum(inv[m, j] * u[j] for j in range(m + 1))
    return eVe, oneVe, eVu


def main():
    out = {}
    for d in (0.25, -0.25):
        for k in (1, 10, 100):
            out[f"fgn_gamma d={d} k={k}"] = fgn_gamma(mp.mpf(d), k)
        out[f"sigma0_sq d={d}"] = sigma0_sq(mp.mpf(d))
    d = mp.mpf('0.25')
    out["f d=0.25 phi=1-0.5z lambda=pi/2"] = composed(d, [1], [1, -0.5], mp.pi / 2)
    out["f0 d=0.25 lambda=1"] = f0(d, 1)
    for k in (0, 1, 5):
        out[f"gamma quad d=0.25 phi=1-0.5z k={k}"] = gamma_quad(d, [1], [1, -0.5], k)
        out[f"gamma quad d=-0.25 theta=1+0.4z k={k}"] = gamma_quad(mp.mpf('-0.25'), [1, 0.4], [1], k)
    out["mu series z=0.1 d=0.25"] = mu_series(mp.mpf('0.1'), d)
    out["mu series z=0.2+0.3i d=0.25"] = mu_series(mp.mpc('0.2', '0.3'), d)
    out["s0 d=0.25"] = mp.findroot(lambda s: r_fun(s, d), (-0.9, -0.01), solver='anderson')
    out["Q+ t=2 d=0.25 richardson"] = q_plus_richardson(2, d)
    ts = [0.01, 0.1, 1.0, 10.0, 100.0]
    for dd in (0.25, -0.25):
        for sign, name in ((1, "q1"), (-1, "p1")):
            for t, v in zip(ts, q1_nystrom(dd, ts, sign)):
                out[f"{name} d={dd} t={t}"] = mp.mpf(float(v))
    for zeta in ([0.5], [0.5, -0.25]):
        for name, v in zip(("eVe", "oneVe", "eVu"), vandermonde(zeta)):
            out[f"{name} zeta={zeta}"] = v
    for key, v in out.items():
        if isinstance(v, mp.mpc):
            print(f"{key}: {mp.nstr(v.real, 17)} {mp.nstr(v.imag, 17)}")
        else:
            print(f"{key}: {mp.nstr(v, 17)}")


if __name__ == "__main__":
    main()
