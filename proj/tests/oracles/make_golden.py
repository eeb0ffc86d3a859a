#!/usr/bin/env python3
"""Freeze golden values for the C++ tests.

Everything here is computed with mpmath at 30 digits, independently of the
C++ code paths (direct quadrature of the integrands, mpmath's own elliptic
functions). Re-run only when a reference value is intentionally changed:

    python3 tests/oracles/make_golden.py tests/golden
"""
import json
import sys
from pathlib import Path

import mpmath as mp

mp.mp.dps = 30

L_FIG5 = mp.mpf("2.170803")
E_FIG5 = mp.mpf("-0.78622")


def cornu(t):
    c = mp.quad(lambda u: mp.cos(u * u), [0, t])
    s = mp.quad(lambda u: mp.sin(u * u), [0, t])
    return c, s


def frame(e, l):
    m, n = cornu(l)
    a, b = cornu(e)
    theta = mp.atan2(b - n, a - m)
    return m, n, theta


def profile(e, l, lam, n):
    m, nn, theta = frame(e, l)
    c, s = mp.cos(theta), mp.sin(theta)
    rows = []
    for i in range(n):
        t = e + (l - e) * mp.mpf(i) / (n - 1)
        ct, st = cornu(t)
        x = c * (ct - m) + s * (st - nn)
        y = s * (ct - m) - c * (st - nn)
        w = (l - t) ** lam if lam != 0 else mp.mpf(1)
        rows.append((t, x, y, x * w, y * w))
    return rows


def dn(u, k):
    return mp.ellipfun("dn", u, m=k * k)


def cn(u, k):
    return mp.ellipfun("cn", u, m=k * k)


def epsilon(u, k):
    return mp.quad(lambda v: dn(v, k) ** 2, [0, u])


def fmt(v):
    return mp.nstr(v, 20, strip_zeros=False, min_fixed=-mp.inf, max_fixed=mp.inf)


def write_csv(path, header, rows):
    with open(path, "w", newline="\n") as f:
        f.write(",".join(header) + "\n")
        for r in rows:
            f.write(",".join(fmt(v) for v in r) + "\n")


def main(out):
    out = Path(out)
    out.mkdir(parents=True, exist_ok=True)

    c1, s1 = cornu(1)
    cl, sl = cornu(L_FIG5)
    ce, se = cornu(E_FIG5)
    m, n, theta = frame(E_FIG5, L_FIG5)
    k = mp.mpf("0.3")
    eps1 = epsilon(1, k)
    # shifted Euler phase m*u - u^2/2 with m = 0 at t = 1
    se_c = mp.quad(lambda u: mp.cos(-u * u / 2), [0, 1])
    se_s = mp.quad(lambda u: mp.sin(-u * u / 2), [0, 1])
    # shifted Euler with m = 1.5 at t = 2
    se2_c = mp.quad(lambda u: mp.cos(mp.mpf("1.5") * u - u * u / 2), [0, 2])
    se2_s = mp.quad(lambda u: mp.sin(mp.mpf("1.5") * u - u * u / 2), [0, 2])

    scalars = {
        "fresnel_c_1": fmt(c1),
        "fresnel_s_1": fmt(s1),
        "fresnel_c_l": fmt(cl),
        "fresnel_s_l": fmt(sl),
        "fresnel_c_e": fmt(ce),
        "fresnel_s_e": fmt(se),
        "fig5_theta": fmt(theta),
        "jacobi_epsilon_1_0.3": fmt(eps1),
        "jacobi_cn_1_0.3": fmt(cn(1, k)),
        "elastica_x_1_0.3": fmt(2 * k * cn(1, k)),
        "elastica_y_1_0.3": fmt(2 * eps1 - 1),
        "shifted_euler_m0_cos_1": fmt(se_c),
        "shifted_euler_m0_sin_1": fmt(se_s),
        "shifted_euler_m1.5_cos_2": fmt(se2_c),
        "shifted_euler_m1.5_sin_2": fmt(se2_s),
    }
    (out / "scalars.json").write_text(json.dumps(scalars, indent=2) + "\n")

    write_csv(out / "fig5_profile.csv", ["s", "xt", "yt", "x", "y"],
              profile(E_FIG5, L_FIG5, 2, 512))

    # Monotonicity sweep of the projected coordinate u(t) = stretched x.
    sweep = {}
    for name, lam in [("fig4", 0), ("fig5", 2), ("lambda1", 1), ("lambda3", 3)]:
        rows = profile(E_FIG5, L_FIG5, lam, 2048)
        us = [r[3] for r in rows]
        ts = [r[0] for r in rows]
        sign = None
        reversal = None
        for i in range(1, len(us)):
            d = us[i] - us[i - 1]
            sg = d > 0
            if sign is None:
                sign = sg
            elif sg != sign:
                reversal = (ts[i - 1], ts[i])
                break
        entry = {"lambda": lam, "monotone": reversal is None}
        if reversal is not None:
            m_, n_, th_ = frame(E_FIG5, L_FIG5)
            cth, sth = mp.cos(th_), mp.sin(th_)

            def u_of(t):
                ct, st = cornu(t)
                x = cth * (ct - m_) + sth * (st - n_)
                return x * ((L_FIG5 - t) ** lam if lam != 0 else 1)

            du = lambda t: mp.diff(u_of, t)
            tstar = mp.findroot(du, (ts[max(0, i - 3)], ts[min(len(ts) - 1, i + 2)]),
                                solver="anderson")
            # The fold [tstar, l] covers u values between u(tstar) and u(l) = 0;
            # the single-valued part of [e, tstar] ends where u returns to u(l).
            tzero = mp.findroot(u_of, (E_FIG5 + mp.mpf("1e-6"), tstar), solver="anderson")
            entry.update({
                "reversal_interval": [fmt(reversal[0]), fmt(reversal[1])],
                "fold_point": fmt(tstar),
                "fold_u": fmt(u_of(tstar)),
                "single_valued_window": [fmt(E_FIG5), fmt(tzero)],
            })
        sweep[name] = entry
    (out / "monotonicity.json").write_text(json.dumps(sweep, indent=2) + "\n")


if __name__ == "__main__":
    main(sys.argv[1] if len(sys.argv) > 1 else "tests/golden")
