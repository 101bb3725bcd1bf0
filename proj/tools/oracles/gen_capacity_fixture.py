#!/usr/bin/env python3
# SPDX-License-Identifier: Apache-2.0
#
# Independent reference values for the capacity tests. Correlation matrices are built
# directly (closed form for the exponential model, dense trapezoid rule for the one-ring
# model) and the capacity bound is taken from numpy's Hermitian eigenvalues.
#
#   python3 tools/oracles/gen_capacity_fixture.py > tests/fixtures/capacity_oracle.json

import json
import math

import numpy as np

ETA = 10.0 ** (60.0 / 10.0)
M = 100


def capacity_ub(R, eta, m):
    lam = np.linalg.eigvalsh(R)
    lam = np.clip(lam, 0.0, None)
    return float(np.sum(np.log2(1.0 + eta / m * lam)))


def exponential(m, rho):
    idx = np.arange(m)
    lag = np.abs(idx[:, None] - idx[None, :])
    if rho == 0.0:
        return np.eye(m)
    return rho ** lag.astype(float)


def onering_ula(m, spacing, phi, delta, points=400001):
    # r(l) = 1/(2 delta) * int exp(i 2 pi d l sin(phi + x)) dx, trapezoid on a dense grid
    x = np.linspace(-delta, delta, points)
    w = np.full(points, x[1] - x[0])
    w[0] *= 0.5
    w[-1] *= 0.5
    w /= 2.0 * delta
    s = np.sin(phi + x)
    r = np.empty(m, dtype=complex)
    for l in range(m):
        r[l] = np.sum(w * np.exp(1j * 2.0 * math.pi * spacing * l * s))
    R = np.empty((m, m), dtype=complex)
    for a in range(m):
        for b in range(m):
            R[a, b] = r[a - b] if a >= b else np.conj(r[b - a])
    return R


def main():
    rhos = [0.0, 0.2, 0.4, 0.6, 0.8, 1.0]
    exp_values = [capacity_ub(exponential(M, rho), ETA, M) for rho in rhos]

    delta = math.radians(30.0)
    onering = {}
    for phi_deg in (0.0, 90.0):
        R = onering_ula(M, 0.5, math.radians(phi_deg), delta)
        onering[str(int(phi_deg))] = capacity_ub(R, ETA, M)

    out = {
        "description": "capacity upper bound oracle, M=100, snr 60 dB",
        "exponential": {"antennas": M, "snr_db": 60.0, "rho": rhos, "capacity_ub": exp_values},
        "onering_ula": {
            "antennas": M,
            "snr_db": 60.0,
            "spacing": 0.5,
            "azimuth_spread_deg": 30.0,
            "azimuth_deg": [0.0, 90.0],
            "capacity_ub": [onering["0"], onering["90"]],
        },
    }
    print(json.dumps(out, indent=2))


if __name__ == "__main__":
    main()
