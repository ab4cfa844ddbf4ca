#!/usr/bin/env python3
"""Straight-line evaluations of the closed-form reference values used by the
unit and acceptance tests. Run once; the output is committed as
tests/oracle_values.hpp and must not be edited by hand.

    python3 tests/oracles/derive_oracles.py > tests/oracle_values.hpp
"""

import mpmath as mp

mp.mp.dps = 40

vals = []


def put(name, value, note):
    vals.append((name, mp.mpf(value), note))


# State transforms.
eps, gam = mp.mpf("0.1"), mp.mpf(2)
put("kPrimToConsE", 1 / (gam - 1) + eps**2 / 2 * 1 * (1 + 1), "E of (1,1,1,1), gamma=2, eps=0.1")
E = mp.mpf("1.01")
put("kConsToPrimP", (gam - 1) * (E - eps**2 / 2 * (1 + 1)), "p of (1,1,1,1.01), gamma=2, eps=0.1")

# Reconstruction on cell averages (0, 1, 3), dx = 1, theta = 2.
theta = 2
a, b, c = theta * (1 - 0), (3 - 0) / mp.mpf(2), theta * (3 - 1)
slope = min(a, b, c)
put("kMinmodSlope", slope, "generalized minmod of (0,1,3), theta=2")
put("kFaceMinus", 1 + slope / 2, "x-minus face value right of the middle cell")

# Split scalars.
put("kRhoMaxConst", 1 + mp.mpf("0.1") ** 4, "rho_max for rho=1, eps=0.1")
put("kPMinConst", 1 - mp.mpf("0.1") ** 4, "p_min for p=1, eps=0.1")


def ctilde(rho, p, rmax, pmin, eps, gam):
    return mp.sqrt(gam * (rmax - rho) * (p - pmin) / (rho * rmax)) / eps


put("kCtildeEps1", ctilde(1, 2, 2, 1, 1, mp.mpf("1.4")), "modified sound speed, eps=1")
put("kCtildeEps01", ctilde(1, 1 + mp.mpf("1e-4"), 2, 1, mp.mpf("0.1"), mp.mpf("1.4")), "modified sound speed, eps=0.1")

# Central-upwind flux scalar pin: a+=2, a-=-1, f-=3, f+=6, w-=1, w+=2.
ap, am = mp.mpf(2), mp.mpf(-1)
put("kCuScalar", (ap * 3 - am * 6) / (ap - am) + ap * am / (ap - am) * (2 - 1), "CU flux without anti-diffusion")

# Anti-diffusion: a+=1, a-=-1, w-=0, w+=2, zero fluxes.
wint = (1 * 2 - (-1) * 0 - 0 + 0) / mp.mpf(2)
put("kAntiIntermediate", wint, "intermediate state")
put("kAntiDelta", min(wint - 0, 2 - wint), "anti-diffusion value")

# Nonconservative products.
rmax, rho, e = mp.mpf(2), mp.mpf(1), mp.mpf(1)
put("kFluctU", -((rmax - rho) / (e**2 * rho * rmax)) * mp.mpf("0.1"), "u-row of B times a 0.1 pressure jump")
put("kFluctP", -mp.mpf("1.4") * mp.mpf("0.01") * mp.mpf("0.2"), "p-row of C times a 0.2 v jump")

# Stiff operator.
put("kStiffU", 1 / (mp.mpf("0.1") ** 2 * 2), "grad x / (eps^2 rho_max), eps=0.1, rho_max=2")
put("kStiffP", mp.mpf("1.4") * 1 * 2, "gamma p_min div(x, y)")

# Helmholtz coefficients.
put("kSigmaStage1", mp.mpf("0.01") ** 2 * mp.mpf("1.4") * 1 / (mp.mpf("0.1") ** 2 * 2), "dt=0.01, p_min=1, rho_max=2")
put("kSigmaStage2", mp.mpf("0.01") ** 2 * mp.mpf("1.4") * 1 / (mp.mpf("0.1") ** 2 * 3), "dt=0.01, p*_min=1, rho*_max=3")

# Conservative flux of (1,2,1,1), gamma=1.4.
def cflux(rho, u, v, p, gam, eps):
    E = p / (gam - 1) + eps**2 / 2 * rho * (u * u + v * v)
    return [rho * u, rho * u * u + p / eps**2, rho * u * v, u * (E + p)]


f1 = cflux(1, 2, 1, 1, mp.mpf("1.4"), 1)
f05 = cflux(1, 2, 1, 1, mp.mpf("1.4"), mp.mpf("0.5"))
for i, (x, y) in enumerate(zip(f1, f05)):
    put(f"kConsFluxEps1_{i}", x, "conservative x-flux, eps=1")
    put(f"kConsFluxEps05_{i}", y, "conservative x-flux, eps=0.5")
put("kSoundSpeedEps01", mp.sqrt(1 * 1 / mp.mpf(1)) / mp.mpf("0.1"), "c for rho=p=gamma=1, eps=0.1")

# Time step and switching function.
put("kDtExample", mp.mpf("0.475") * min(mp.mpf("0.1") / 2, mp.mpf("0.1") / 4), "K min(dx/2, dy/4)")
put("kSwitchEps015", 1 - mp.mpf("0.15") ** 14, "s at eps0")
put("kSwitchEps05", mp.mpf("0.5") ** 14, "s at 0.5")


def switch(e, e0=mp.mpf("0.15"), e1=mp.mpf("0.4"), al=14):
    if e <= e0:
        return 1 - e**al
    if e >= e1:
        return (1 - e) ** al
    xi = (e - e0) / (e1 - e0)
    return mp.e ** (1 - 1 / (1 - xi**2)) * ((1 - e0**al) - (1 - e1) ** al) + (1 - e1) ** al


put("kSwitchEps025", switch(mp.mpf("0.25")), "s in the blending branch")

# Benchmarks.
put("kVortexRhoR1", 1 - 1 / (16 * mp.pi**2), "vortex density at unit radius, eps=1")
put("kVortexPR1", 1 + (1 - 1 / (16 * mp.pi**2)) ** 2, "vortex pressure at unit radius, eps=1, gamma=2")
put("kGreshoPOuter", 1 + mp.mpf("0.01") * (4 * mp.log(2) - 2), "Gresho outer pressure, eps=0.1")
put("kGreshoPRing", 1 + mp.mpf("0.01") * (4 * mp.log(5 * mp.mpf("0.3")) + 4 - 20 * mp.mpf("0.3") + 12.5 * mp.mpf("0.09")),
    "Gresho pressure at r=0.3, eps=0.1")
put("kShearUPi", mp.tanh(mp.mpf("7.5")), "double shear u at y=pi")
put("kShearUQuarterPi", mp.tanh(15 * (mp.mpf("0.25") - mp.mpf("0.5"))), "double shear u at y=pi/4")
put("kBaroclinicU", mp.sqrt(mp.mpf("1.4")), "baroclinic u where cos = 1")
put("kBaroclinicRhoLow", 1 + mp.mpf("0.05") / 2000 * 2 + 4.5 * mp.mpf("0.05") * 1, "baroclinic rho at x=0, y=1")
put("kBaroclinicRhoHigh", 1 + mp.mpf("0.05") / 2000 * 2 + 4.5 * mp.mpf("0.05") * 5 - mp.mpf("1.8"),
    "baroclinic rho at x=0, y=5")

print("// Generated by tests/oracles/derive_oracles.py. Do not edit.")
print("#pragma once")
print()
print("namespace oracle {")
print()
for name, v, note in vals:
    print(f"// {note}")
    print(f"inline constexpr double {name} = {mp.nstr(v, 20, min_fixed=-100, max_fixed=100)};")
print()
print("}  // namespace oracle")
