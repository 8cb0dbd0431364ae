"""Regenerate the shipped zero tables with mpmath.

Not part of the library: computing zeros is out of scope there, the tables are
data.  Run from the repository root::

    python tools/generate_zero_tables.py zeta      # 2000 zeta ordinates
    python tools/generate_zero_tables.py lfunc     # L-function ordinates
    python tools/generate_zero_tables.py lfunc 10 2   # a single character

Character indexing follows ``zetaexplicit.dirichlet.characters_mod``: the unit
group mod q is cyclic for q in {3, 4, 10} with generator g (2, 3 and 7), and
character k sends g to exp(2 pi i k / phi(q)).
"""

from __future__ import annotations

import sys
from pathlib import Path

import mpmath as mp

DATA = Path(__file__).resolve().parents[1] / "src" / "zetaexplicit" / "data"
N_ZETA = 2000
N_L = 100

# q -> (generator, phi(q))
GROUPS = {3: (2, 2), 4: (3, 2), 10: (7, 4)}


def zeta_table(n: int = N_ZETA) -> None:
    mp.mp.dps = 25
    out = DATA / "zeta_zeros.txt"
    with out.open("w") as fh:
        fh.write(f"# imaginary parts of the first {n} nontrivial zeros of zeta\n")
        for k in range(1, n + 1):
            fh.write(mp.nstr(mp.zetazero(k).imag, 17, strip_zeros=False) + "\n")
            if k % 100 == 0:
                print("zeta", k, flush=True)


def character_values(q: int, k: int) -> list[complex]:
    g, phi = GROUPS[q]
    vals = [0j] * q
    a = 1
    for j in range(phi):
        vals[a] = complex(mp.expjpi(mp.mpf(2 * j * k) / phi))
        a = a * g % q
    return vals


def primitive_values(q: int, k: int) -> tuple[int, list]:
    """Values of the primitive character inducing character k mod q."""
    vals = character_values(q, k)
    for f in sorted(d for d in range(1, q + 1) if q % d == 0):
        ok = True
        prim = [0j] * f
        for a in range(q):
            if vals[a] == 0:
                continue
            r = a % f
            if prim[r] == 0:
                prim[r] = vals[a]
            elif abs(prim[r] - vals[a]) > 1e-12:
                ok = False
                break
        if ok:
            return f, [mp.mpc(v) for v in prim]
    raise AssertionError


def l_zeros(q: int, k: int, n: int = N_L):
    """Positive and negative ordinates of zeros of L(s, chi_k) on the line."""
    mp.mp.dps = 20
    f, chi = primitive_values(q, k)
    par = 0 if abs(chi[f - 1] - 1) < 1e-12 else 1

    def lam(t):
        s = mp.mpc(0.5, t)
        return (f / mp.pi) ** ((s + par) / 2) * mp.gamma((s + par) / 2) * mp.dirichlet(s, chi)

    probe = lam(mp.mpf("3.3"))
    eps = probe / mp.conj(probe)
    root = mp.sqrt(eps)

    def z(t):
        t = mp.mpf(t)
        s = mp.mpc(0.5, t)
        theta = t / 2 * mp.log(f / mp.pi) + mp.im(mp.loggamma((s + par) / 2))
        return mp.re(mp.expj(theta) * mp.dirichlet(s, chi) / root)

    found = {1: [], -1: []}
    for sign in (1, -1):
        t, step = 0.0, 0.04
        prev = z(sign * 1e-3)
        while len(found[sign]) < n:
            t += step
            cur = z(sign * t)
            if prev * cur < 0:
                lo, hi = sorted((sign * (t - step), sign * t))
                found[sign].append(abs(mp.findroot(z, (lo, hi), solver="anderson")))
            prev = cur
    return f, found[1], found[-1]


def main_term(f: int, t: float) -> float:
    return float(t / mp.pi * mp.log(f * t / (2 * mp.pi * mp.e)))


def lfunc_tables(only_q: int | None = None, only_k: int | None = None) -> None:
    for q, (g, phi) in GROUPS.items():
        if only_q is not None and q != only_q:
            continue
        for k in range(1, phi):
            if only_k is not None and k != only_k:
                continue
            f, pos, neg = l_zeros(q, k)
            real = (2 * k) % phi == 0
            # crude completeness check against the zero-counting main term
            for T in (40.0, 80.0):
                count = sum(1 for v in pos if v < T) + sum(1 for v in neg if v < T)
                assert abs(count - main_term(f, T)) < 2.5, (q, k, T, count)
            files = [("", pos)] if real else [("", pos), ("_neg", neg)]
            for suffix, vals in files:
                out = DATA / f"L_q{q}_chi{k}{suffix}.txt"
                with out.open("w") as fh:
                    fh.write(f"# L q={q} chi={k}\n")
                    if suffix:
                        fh.write("# negative ordinates, stored as absolute values\n")
                    for v in vals:
                        fh.write(mp.nstr(v, 17, strip_zeros=False) + "\n")
            print("L", q, k, "conductor", f, pos[:2], neg[:2], flush=True)


if __name__ == "__main__":
    which = sys.argv[1] if len(sys.argv) > 1 else "all"
    if which in ("lfunc", "all"):
        # optional: lfunc <q> [<k>]
        args = [int(a) for a in sys.argv[2:4]]
        lfunc_tables(*args)
    if which in ("zeta", "all"):
        zeta_table()
