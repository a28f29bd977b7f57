# Certificate Search
# Face orbits, relation kernels and the exact LP behind lower-bound certificates
