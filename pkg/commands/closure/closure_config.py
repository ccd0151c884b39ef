# Largest closure enumerated before reporting overflow
CLOSURE_CAP = 64
