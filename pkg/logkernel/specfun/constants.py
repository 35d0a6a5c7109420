"""Mathematical constants in double precision."""

import math

PI = math.pi
HALF_PI = 0.5 * math.pi
TWO_PI = 2.0 * math.pi
LN2 = math.log(2.0)
LN_PI = math.log(math.pi)

# Euler-Mascheroni constant
EULER_GAMMA = 0.57721566490153286060651209008240243

ZETA2 = math.pi**2 / 6.0
ZETA3 = 1.2020569031595942853997381615114499
