# Number of powers tried for Jhat elements before reporting unknown(cap)
ORDER_CAP = 64
