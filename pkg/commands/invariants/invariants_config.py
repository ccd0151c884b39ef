# Largest degree in x_i of the invariant polynomial searched at each flag level
MAX_DEGREE_IN_T = 6
# Largest total degree of each unknown coefficient numerator
MAX_COEFF_DEGREE = 6
# Report a level as trivial instead of unresolved when the generators translate x_i
# and fix every later coordinate
CERTIFY_TRIVIAL = False
