# Default upper bound for --sweep when no value is given
SWEEP_MAX = 7
