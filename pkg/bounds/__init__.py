# Bounds package
# Contains closed-form lower and upper bounds on gamma(q, d)
