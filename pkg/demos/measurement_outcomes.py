"""Per-outcome geometry of a generalized measurement.

Builds a noisy two-outcome measurement, splits each operator into a
rotation times a positive part, and applies it to a state: the unrescaled
post-measurement vectors carry the outcome probability as their height,
and only the positive parts matter for the statistics.
"""

import numpy as np

from conal import (
    GeneralizedMeasurement,
    apply_all,
    apply_outcome,
    build_basis,
    psi_matrix,
    split,
    validate,
)
from conal.linalg import sqrt_psd
from conal.sampling import random_kraus_set, random_unitary

rng = np.random.default_rng(21)
tau = build_basis(2)

# ---------------------------------------------------------------------------
# An unsharp two-outcome measurement along Z, with a deliberate rotation
# tacked onto the second operator.
# ---------------------------------------------------------------------------
strength = 0.8
e0 = np.diag([(1 + strength) / 2, (1 - strength) / 2]).astype(complex)
e1 = np.eye(2) - e0
U = random_unitary(rng, 2)
meas = GeneralizedMeasurement(dim=2, kraus=(sqrt_psd(e0), U @ sqrt_psd(e1)))

report = validate(meas)
print(f"completeness residual: {report.completeness_residual:.2e}")
print(f"effect minimum eigenvalues: {[f'{w:.4f}' for w in report.min_effect_eigenvalues]}")
print(f"coordinate sum of effects: {np.round(report.conal_sum, 12)}  (must be (2,0,0,0))\n")

# ---------------------------------------------------------------------------
# Polar splitting: operator = rotation * positive part.
# ---------------------------------------------------------------------------
for m, (U_m, root_m) in enumerate(split(meas)):
    from_identity = np.max(np.abs(U_m - np.eye(2)))
    print(f"outcome {m}: unitary distance from identity {from_identity:.3f}, "
          f"positive part diagonal {np.round(np.diag(root_m).real, 4)}")

print("""
The second unitary is the rotation we planted.  It changes where the
post-measurement state points, but not the probability of the outcome:
""")

# ---------------------------------------------------------------------------
# Apply to a superposition state.
# ---------------------------------------------------------------------------
plus = np.array([[0.5, 0.5], [0.5, 0.5]], dtype=complex)
records = apply_all(meas, plus, tau)
for rec in records:
    print(f"outcome {rec.index}: p = {rec.probability:.4f}, "
          f"unrescaled = {np.round(rec.unrescaled, 4)}, height = probability: "
          f"{abs(rec.unrescaled[0] - rec.probability) < 1e-12}")

print(f"\ntotal probability: {sum(r.probability for r in records):.12f}")

# The same statistics come from the positive parts alone; the planted
# rotation acts on the outcome vector afterwards.
root1 = sqrt_psd(meas.kraus[1].conj().T @ meas.kraus[1])
plain = apply_outcome(root1, plus, tau, index=1)
rotated = psi_matrix(split(meas)[1][0], tau) @ plain.rescaled
print(f"\nrotation equivalence on outcome 1: "
      f"max |psi(U) * plain - actual| = {np.max(np.abs(rotated - records[1].rescaled)):.2e}")

# ---------------------------------------------------------------------------
# Random measurements keep all the structure.
# ---------------------------------------------------------------------------
meas = GeneralizedMeasurement(dim=3, kraus=random_kraus_set(rng, 3, 4))
state = np.eye(3, dtype=complex) / 3
records = apply_all(meas, state, build_basis(3))
print(f"\nrandom 4-outcome measurement on a qutrit: probabilities "
      f"{[f'{r.probability:.4f}' for r in records]} "
      f"(sum {sum(r.probability for r in records):.12f})")
