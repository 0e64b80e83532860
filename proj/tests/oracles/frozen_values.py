"""Independent oracle for the frozen values in the C++ tests.

Evaluates entropies, moments and Fourier amplitudes by direct mpmath / numpy
quadrature of the textbook wavefunctions. Shares no code with the library.
Run: python3 tests/oracles/frozen_values.py
"""
import mpmath as mp
import numpy as np

mp.mp.dps = 20


def osc_psi(n, beta):
    beta = mp.mpf(beta)
    norm = mp.mpf(2) ** (-mp.mpf(n) / 2) * mp.pi ** (-0.25) / mp.sqrt(mp.factorial(n)) * beta ** 0.25
    return lambda x: norm * mp.exp(-beta * x * x / 2) * mp.hermite(n, mp.sqrt(beta) * x)


def box_psi(n, xc):
    xc = mp.mpf(xc)
    k = n * mp.pi / xc
    a = mp.sqrt(2 / xc)
    if n % 2:
        return lambda x: a * mp.cos(k * x)
    return lambda x: a * mp.sin(k * x)


def entropy(rho, pts):
    def f(t):
        r = rho(t)
        return -r * mp.log(r) if r > 0 else mp.mpf(0)
    return mp.quad(f, pts)


# Hermite roots for n <= 2 are 0 and +-1/sqrt(2).
HERMITE_ROOTS = {0: [], 1: [mp.mpf(0)], 2: [-1 / mp.sqrt(2), 1 / mp.sqrt(2)]}


def osc_sx(n, beta):
    beta = mp.mpf(beta)
    psi = osc_psi(n, beta)
    pts = [-mp.inf] + [r / mp.sqrt(beta) for r in HERMITE_ROOTS[n]] + [mp.inf]
    return entropy(lambda x: psi(x) ** 2, pts)


def box_ft(n, xc, p):
    xc = mp.mpf(xc)
    psi = box_psi(n, xc)
    re = mp.quad(lambda x: psi(x) * mp.cos(p * x), [-xc / 2, 0, xc / 2])
    im = -mp.quad(lambda x: psi(x) * mp.sin(p * x), [-xc / 2, 0, xc / 2])
    return (re + 1j * im) / mp.sqrt(2 * mp.pi)


def box_sp(n, xc, near_panels=300, panels=2_000_000):
    """Sp = 2 * integral over [0, inf) of -g ln g, panel by panel between the zeros of g.

    The first `near_panels` panels use mpmath tanh-sinh (robust to the u^2 ln u
    cusps at the zeros); the far tail uses vectorized float64 Gauss-Legendre,
    where those cusps contribute below 1e-13. Beyond `panels` the tail is < 1e-15.
    """
    k_mp = n * mp.pi / mp.mpf(xc)
    xc_mp = mp.mpf(xc)
    period_mp = 2 * mp.pi / xc_mp
    offset_mp = period_mp / 2 if n % 2 else mp.mpf(0)
    trig_mp = mp.cos if n % 2 else mp.sin

    def f_mp(p):
        d = k_mp * k_mp - p * p
        if abs(d) < mp.mpf('1e-25'):
            g = xc_mp / (4 * mp.pi)
        else:
            g = 4 * k_mp * k_mp * trig_mp(p * xc_mp / 2) ** 2 / (mp.pi * xc_mp * d * d)
        return -g * mp.log(g) if g > 0 else mp.mpf(0)

    edges = [mp.mpf(0)] + [offset_mp + j * period_mp for j in range(near_panels + 1)]
    edges = sorted(set(edges))
    total = mp.mpf(0)
    for a, b in zip(edges[:-1], edges[1:]):
        total += mp.quad(f_mp, [a, b])
    total = float(total)

    xc = float(xc)
    k = n * np.pi / xc
    period = 2 * np.pi / xc
    start_edge = float(edges[-1])
    t, w = np.polynomial.legendre.leggauss(24)
    chunk = 100_000
    for start in range(0, panels, chunk):
        a = (start_edge + np.arange(start, start + chunk) * period)[:, None]
        p = a + (t[None, :] + 1) * period / 2
        trig = np.cos(p * xc / 2) if n % 2 else np.sin(p * xc / 2)
        g = 4 * k * k * trig ** 2 / (np.pi * xc * (k * k - p * p) ** 2)
        f = np.where(g > 0, -g * np.log(np.where(g > 0, g, 1.0)), 0.0)
        total += float(np.sum(f * w[None, :]) * period / 2)
    return 2 * total


if __name__ == "__main__":
    print("box gamma n=1 xc=1 p=0 (|FT|^2):", abs(box_ft(1, 1, 0)) ** 2)
    print("box |FT|^2 n=3 xc=2 p=1.7:", abs(box_ft(3, 2, mp.mpf('1.7'))) ** 2)
    print("box |FT|^2 n=2 xc=1.5 p=-3.1:", abs(box_ft(2, 1.5, mp.mpf('-3.1'))) ** 2)
    print("box |FT|^2 n=1 xc=1 p=pi:", abs(box_ft(1, 1, mp.pi)) ** 2)
    for n in (1, 2, 3):
        print("box Sp xc=1 n=%d:" % n, box_sp(n, 1))
    print("box Sp xc=0.1 n=3:", box_sp(3, 0.1))
    print("box Sp xc=4 n=1:", box_sp(1, 4))
    for n in (0, 1, 2):
        print("osc Sx beta=1 n=%d:" % n, osc_sx(n, 1))
    print("osc Sx beta=0.06 n=2:", osc_sx(2, '0.06'))
    print("osc Sp w=0.06 n=1 (Sx at beta=1/0.06):", osc_sx(1, 1 / mp.mpf('0.06')))
    for n in (1, 2, 3):
        psi = box_psi(n, 6)
        m2 = mp.quad(lambda x: x * x * psi(x) ** 2, [-3, 3])
        print("box dx xc=6 n=%d:" % n, mp.sqrt(m2))
    psi = osc_psi(0, 1)
    print("osc FT n=0 p=0:", mp.quad(psi, [-mp.inf, mp.inf]) / mp.sqrt(2 * mp.pi))
    print("1+ln pi:", 1 + mp.log(mp.pi), " 0.5 ln(pi e):", mp.log(mp.pi * mp.e) / 2)
