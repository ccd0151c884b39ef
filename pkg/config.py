### GENERAL SETUP
LOG_TO_FILE = False
LOG_FILE = "jonquieres.log"

### POLYNOMIAL ENGINE
# Number of x-variables carried by the shared polynomial ring (x1..xN).
# Larger values slow down every gcd, keep it close to the biggest n you use.
MAX_VARIABLES = 8
# Number of canonical renders kept in the LRU cache
RENDER_CACHE_SIZE = 4096

### GROUP ARITHMETIC
# Cross-check the closed-form composition law in J against direct substitution
VERIFY_COMPOSITION = True

### PARALLELISM
# Worker processes used for independent sub-checks (line-check sweeps).
# 1 keeps everything in the current process.
PARALLEL_JOBS = 1
