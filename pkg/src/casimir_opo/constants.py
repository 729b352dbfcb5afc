"""Physical constants (SI, CODATA, 10 significant digits).

All boundary quantities are SI; internal dynamics are dimensionless with
hbar = 1 and vacuum quadrature variance 1/2.
"""

SPEED_OF_LIGHT = 299792458.0  # m/s (exact)
VACUUM_PERMITTIVITY = 8.8541878128e-12  # F/m
HBAR = 1.054571817e-34  # J*s

# Vacuum variance per quadrature in the (x, p) convention used throughout.
VACUUM_VARIANCE = 0.5
