"""Information gain versus disturbance for two equiprobable pure states.

Sweeps the symmetric attack family for a few state separations, printing
the closed-form curve next to the end-to-end pipeline (effect square
root, conjugation, numeric repair optimization), and finishes with the
finite-difference stationarity evidence that the symmetric attack is
optimal at fixed information gain.
"""

import math

import numpy as np

from conal import (
    closed_form_point,
    make_scenario,
    pipeline_point,
    stationarity_check,
    sweep,
)

INV_SQRT2 = 1.0 / math.sqrt(2.0)

# ---------------------------------------------------------------------------
# The tradeoff curve at c = 1/sqrt(2) (orthogonality angle 90 degrees).
# ---------------------------------------------------------------------------
sc = make_scenario(INV_SQRT2)
print(f"states: v0 = {np.round(sc.v0, 6)}, v1 = {np.round(sc.v1, 6)}")
print(f"overlap s = {sc.s:.6f}\n")

print(f"{'beta':>5} | {'I (bits)':>12} | {'D':>12} | {'pipeline dI':>11} | {'pipeline dD':>11}")
print("-" * 62)
for beta in np.linspace(0.0, 1.0, 11):
    cf = closed_form_point(INV_SQRT2, float(beta))
    pp = pipeline_point(INV_SQRT2, float(beta))
    print(
        f"{beta:5.2f} | {cf.info_bits:12.9f} | {cf.disturbance:12.9f} | "
        f"{abs(cf.info_bits - pp.info_bits):11.2e} | "
        f"{abs(cf.disturbance - pp.disturbance):11.2e}"
    )

print("""
At beta = 1 the attack effects are rank one: Eve learns the most
(I = 0.399 bits) and the states are damaged the most (D = 1/2 - sqrt(3)/4).
The pipeline columns show the independent numeric route agreeing with the
closed forms far below the 1e-9 contract.
""")

# ---------------------------------------------------------------------------
# How the endpoint moves with the separation c.
# ---------------------------------------------------------------------------
print(f"{'c':>5} | {'I at beta=1':>12} | {'D at beta=1':>12}")
print("-" * 36)
for c in (0.1, 0.3, 0.5, INV_SQRT2, 0.9, 0.99, 1.0):
    pt = closed_form_point(c, 1.0)
    print(f"{c:5.3f} | {pt.info_bits:12.9f} | {pt.disturbance:12.9f}")

print("""
Identical states (c = 0) carry no information and suffer no detectable
disturbance; orthogonal states (c = 1) give a full bit for free.  The
tension peaks in between.
""")

# ---------------------------------------------------------------------------
# Per-outcome anatomy at one interior point.
# ---------------------------------------------------------------------------
pt = pipeline_point(0.6, 0.5)
for m, o in enumerate(pt.outcomes):
    print(
        f"outcome {m}: p = {o.p:.4f}, q = {o.q:.4f}, I_m = {o.info_bits:.5f} bits, "
        f"D_m = {o.disturbance:.6f}"
    )
    print(
        f"           angles: theta = {o.angles.theta:.4f}, theta_m = {o.angles.theta_m:.4f}, "
        f"deficit = {o.angles.delta_m:.4f}, repair offset = {o.angles.omega_m:+.4f}"
    )

print("""
Each outcome shrinks the angle between the two candidate states; the
repair rotation turns the shrunken pair back toward the originals,
tilted toward the more likely branch.
""")

# ---------------------------------------------------------------------------
# Stationarity: no constrained first-order improvement exists.
# ---------------------------------------------------------------------------
for c, beta in ((0.5, 0.3), (INV_SQRT2, 0.5), (0.9, 0.7)):
    rep = stationarity_check(c, beta)
    print(
        f"c = {c:.3f}, beta = {beta:.1f}: constrained |dD| = "
        f"{rep.max_constrained_derivative:.2e}, mirror residual = "
        f"{rep.mirror_max_residual:.2e}, passes = {rep.passes}"
    )

print("""
Holding the information gain fixed kills every perturbation along the
state-separating axis, and in the remaining directions the disturbance
gradient vanishes: the symmetric attack is a stationary point of the
tradeoff.
""")

# ---------------------------------------------------------------------------
# The library sweep validates itself when asked.
# ---------------------------------------------------------------------------
points = sweep(0.8, np.linspace(0.0, 1.0, 6), verify=True)
print(f"verified sweep at c = 0.8: {len(points)} points, "
      f"I range [{points[0].info_bits:.3f}, {points[-1].info_bits:.3f}] bits")
