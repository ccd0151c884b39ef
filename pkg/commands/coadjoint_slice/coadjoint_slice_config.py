# Constants tried in order for each cut x_d = c
CANDIDATES = [0, 1, -1, 2, -2, 3]
