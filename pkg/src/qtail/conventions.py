"""Sign conventions shared by every method.

Braid letter ``+i`` is a positive crossing, so ``"2: 1 1 1"`` closes to the
right-handed trefoil with Jones polynomial q + q^3 - q^4 (q = A^-4).  This
is what the bracket oracle computes.

``R_POWER_OF_POSITIVE`` says which R-matrix power a positive crossing gets
in the state sum.  With R on positive crossings the framing correction is
q^(+w (N^2-1)/4), w the writhe; then sigma_1 closes to exactly 1 and the
trefoil matches the bracket exactly.  For an N = 2 link with c components the
state sum is (-1)^(c-1) times the bracket value, since the bracket gives the
unlink the value (-A^2 - A^-2)^(c-1).

``TWIST_SIGN_OF_POSITIVE`` says which gamma sign the skein twist formula uses
for a positive half-twist: gamma with ``+`` exponents is a negative crossing
once we set q = A^-4.

Both were fixed by matching the N = 2 trefoil against the bracket oracle;
the calibration tests pin them.
"""

R_POWER_OF_POSITIVE = 1
TWIST_SIGN_OF_POSITIVE = -1
