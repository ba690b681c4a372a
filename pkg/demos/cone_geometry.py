"""States as real vectors: the light cone picture of positivity.

Walks through the coordinate embedding, shows that density matrices live
inside a cone of revolution with pure states exactly on its boundary, and
exhibits the dimension-3 surprise: the cone has corners cut off, so not
every boundary direction is a physical state.
"""

import numpy as np

from conal import (
    build_basis,
    cone_contains,
    embed,
    fixed_states,
    is_generalized_pure,
    is_positive_vec,
    minkowski_product,
)

rng = np.random.default_rng(7)

# ---------------------------------------------------------------------------
# A qubit state is four real numbers.
# ---------------------------------------------------------------------------
tau = build_basis(2)
print("The d=2 basis is the identity plus the three Pauli matrices;")
print("a hermitian matrix A becomes the vector (Tr A, Tr AX, Tr AY, Tr AZ).\n")

up = np.array([[1, 0], [0, 0]], dtype=complex)        # |0><0|
mixed = np.eye(2) / 2
for name, state in (("|0><0|", up), ("I/2  ", mixed)):
    v = embed(state, tau)
    print(f"  {name} -> {np.round(v, 12)}   "
          f"minkowski norm {minkowski_product(v, v):+.3f}   "
          f"pure: {is_generalized_pure(v, tau)}")

print("""
Pure states have Minkowski norm zero: they are light-like vectors of the
metric diag(1, -1, -1, -1).  Mixed states are time-like, sitting strictly
inside the cone.  The height (first component) is the trace, so a unit
trace slice of the cone is the familiar Bloch ball.
""")

# ---------------------------------------------------------------------------
# Scaling is allowed: the picture covers operators of any positive trace.
# ---------------------------------------------------------------------------
for scale in (0.25, 2.0):
    v = embed(scale * up, tau)
    print(f"  {scale:4.2f} * |0><0| -> {np.round(v, 12)}   pure: "
          f"{is_generalized_pure(v, tau)}")

print("""
Rays through the origin stay rays; that is what lets individual
measurement outcomes (which shrink the trace to the outcome probability)
live inside the same picture.
""")

# ---------------------------------------------------------------------------
# d = 3: the cone of revolution is only an outer bound.
# ---------------------------------------------------------------------------
tau3 = build_basis(3)
A = np.diag([2 / 3, 2 / 3, -1 / 3]).astype(complex)
v = embed(A, tau3)
print("d = 3: the matrix diag(2/3, 2/3, -1/3) has trace 1 and squared")
print("Hilbert-Schmidt norm 1, so its vector is exactly light-like:")
print(f"  on the revolution cone: {cone_contains(v)}")
print(f"  minkowski norm:         {minkowski_product(v, v):+.2e}")
print(f"  actually positive:      {is_positive_vec(v, tau3)}")
print("""
Membership in the revolution cone is necessary but, beyond qubits, not
sufficient: the positive operators form a strictly smaller convex subcone.
Only for d = 2 do the two coincide.
""")

# ---------------------------------------------------------------------------
# Fixed states of a measurement element.
# ---------------------------------------------------------------------------
root = np.diag([0.9, 0.4]).astype(complex)
print("Eigen-decomposing the real 4x4 matrix of rho -> sqrt(E) rho sqrt(E)")
print(f"for sqrt(E) = diag(0.9, 0.4) gives eigenvalues")
pairs = fixed_states(root, tau)
for w, vec in pairs:
    print(f"  {w:8.4f}  direction {np.round(vec, 6)}")
print("""
The eigenvalues are 0.81 = 0.9^2, 0.16 = 0.4^2 and twice 0.36 = 0.9*0.4:
the basis projectors are the invariant directions, each rescaled by the
square of its own singular value when this outcome fires.
""")
