# Remark Checks
# Falbel tetrahedron, octahedron and cube triangulations, Eisenstein-Picard tuple
