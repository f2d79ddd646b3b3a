"""Scaled minimal polynomials 2^d Phi_n(x) of cos(2 pi / n) for 3 <= n <= 32.

Coefficients are listed from the constant term upward.
"""

MINPOLY_TABLE = {
    3: (1, 2),
    4: (0, 2),
    5: (-1, 2, 4),
    6: (-1, 2),
    7: (-1, -4, 4, 8),
    8: (-2, 0, 4),
    9: (1, -6, 0, 8),
    10: (-1, -2, 4),
    11: (1, 6, -12, -32, 16, 32),
    12: (-3, 0, 4),
    13: (-1, 6, 24, -32, -80, 32, 64),
    14: (1, -4, -4, 8),
    15: (1, 8, -16, -8, 16),
    16: (2, 0, -16, 0, 16),
    17: (1, -8, -40, 80, 240, -192, -448, 128, 256),
    18: (-1, -6, 0, 8),
    19: (1, 10, -40, -160, 240, 672, -448, -1024, 256, 512),
    20: (5, 0, -20, 0, 16),
    21: (1, -16, 32, 48, -96, -32, 64),
    22: (-1, 6, 12, -32, -16, 32),
    23: (-1, -12, 60, 280, -560, -1792, 1792, 4608, -2304, -5120, 1024, 2048),
    24: (1, 0, -16, 0, 16),
    25: (-1, 10, 100, -40, -800, 32, 2240, 0, -2560, 0, 1024),
    26: (-1, -6, 24, 32, -80, -32, 64),
    27: (1, 18, 0, -240, 0, 864, 0, -1152, 0, 512),
    28: (-7, 0, 56, 0, -112, 0, 64),
    29: (-1, 14, 112, -448, -2016, 4032, 13440, -15360, -42240, 28160, 67584, -24576, -53248, 8192, 16384),
    30: (1, -8, -16, 8, 16),
    31: (-1, -16, 112, 672, -2016, -8064, 13440, 42240, -42240, -112640, 67584, 159744, -53248, -114688, 16384, 32768),
    32: (2, 0, -64, 0, 320, 0, -512, 0, 256),
}
