# Kahler Cup Square
# Exact boundary geometry of the complex hyperbolic plane and Gromov norm certificates
