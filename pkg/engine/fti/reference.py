"""
Published reference values used by `verify --reference-tables` and the tests.

E8 data uses the length-ordered numbering (τ_1 ... τ_8 with w_a² = 2, 4, 6, 8, 12,
14, 20, 30). Polynomials are written in the text form parse_poly reads.
"""


def e8(*coords):
    return tuple(coords) + (0,) * (8 - len(coords))


E8_W = {a: e8(*([0] * (a - 1) + [1])) for a in range(1, 9)}

E8_ORBIT_SIZES = (240, 2160, 6720, 17280, 60480, 69120, 241920, 483840)
E8_WEYL_ORDER = 696729600
E8_RHO_SQUARED = 620
E8_GRAM_DIAGONAL = (2, 4, 6, 8, 12, 14, 20, 30)
E8_WEYL_ROOT_COORDS = (29, 46, 57, 68, 84, 91, 110, 135)
E8_HIGHEST_ROOT = (2, 2, 3, 3, 4, 4, 5, 6)
E8_RATIONAL_MODEL_VECTOR = (1, 3, 5, 5, 7, 7, 9, 11)

E8_TAU1_TAU2 = {e8(1, 1): 1, E8_W[1]: 126, E8_W[2]: 64, E8_W[3]: 27, E8_W[4]: 8}

E8_A12 = '-2*tau1*tau2 + 504*tau1 + 192*tau2 + 54*tau3 + 8*tau4'

E8_C = {
    1: '240 + 29*tau1',
    2: '126*tau1 + 46*tau2',
    3: '168*tau1 + 84*tau2 + 57*tau3',
    4: '192*tau2 + 72*tau3 + 68*tau4',
    5: '-7560*tau1 - 3672*tau2 - 1512*tau3 - 312*tau4 + 84*tau5 + 60*tau1*tau2',
    6: '-12096*tau1 - 6144*tau2 - 2448*tau3 - 656*tau4 + 40*tau5 + 91*tau6 + 96*tau1*tau2',
    7: (
        '-14515200 - 5231520*tau1 - 1715040*tau2 - 462600*tau3 - 85440*tau4 + 4280*tau5'
        ' + 525*tau6 + 110*tau7 + 60480*tau1^2 + 14880*tau1*tau2 - 1080*tau1*tau3'
        ' - 175*tau1*tau4 + 40*tau2*tau3'
    ),
    8: (
        '1221350400 + 440847360*tau1 + 147717360*tau2 + 40671720*tau3 + 7663040*tau4'
        ' - 387480*tau5 - 52435*tau6 - 1985*tau7 + 135*tau8 - 7644672*tau1^2'
        ' - 2343552*tau1*tau2 - 95256*tau1*tau3 - 8583*tau1*tau4 + 1952*tau1*tau5'
        ' + 204*tau1*tau6 - 66144*tau2^2 - 17664*tau2*tau3 - 399*tau2*tau4'
        ' + 24*tau2*tau5 - 648*tau3^2 - 84*tau3*tau4 + 36288*tau1^3 + 9024*tau1^2*tau2'
    ),
}

E8_M_TO_TAU = {
    e8(1, 1): 'tau1*tau2 - 126*tau1 - 64*tau2 - 27*tau3 - 8*tau4',
    e8(0, 1, 1): (
        '-362880 - 141372*tau1 - 48084*tau2 - 13644*tau3 - 2668*tau4 + 145*tau5 + 28*tau6'
        ' + 1512*tau1^2 + 456*tau1*tau2 - 27*tau1*tau3 - 7*tau1*tau4 + tau2*tau3'
    ),
    e8(1, 0, 0, 1): (
        '4032*tau1 + 1984*tau2 + 792*tau3 + 200*tau4 - 16*tau5 - 7*tau6 + tau1*tau4'
        ' - 32*tau1*tau2'
    ),
    e8(0, 1, 0, 0, 1): (
        '38707200 + 13809600*tau1 + 4643920*tau2 + 1272600*tau3 + 238400*tau4'
        ' - 12050*tau5 - 1575*tau6 - 60*tau7 - 283248*tau1^2 - 88888*tau1*tau2'
        ' - 8064*tau1*tau3 - 1457*tau1*tau4 + 118*tau1*tau5 + 21*tau1*tau6'
        ' - 2156*tau2^2 - 656*tau2*tau3 - 56*tau2*tau4 + tau2*tau5 + 1512*tau1^3'
        ' + 456*tau1^2*tau2 - 27*tau3^2 - 6*tau3*tau4'
    ),
}

# reflection-pair tables: a -> [(l, k, dominant point, count)]
E8_PAIR_TABLES = {
    1: [(2, 1, e8(), 240)],
    2: [(2, 1, E8_W[1], 126)],
    3: [(2, 1, E8_W[2], 84), (3, 1, E8_W[1], 56), (3, 2, E8_W[1], 56)],
    4: [(2, 1, E8_W[3], 72), (3, 1, E8_W[2], 64), (3, 2, E8_W[2], 64)],
    5: [
        (2, 1, e8(1, 1), 60), (3, 1, E8_W[4], 56), (3, 2, E8_W[4], 56),
        (4, 1, E8_W[3], 27), (4, 2, E8_W[2], 84), (4, 3, E8_W[3], 27),
    ],
    6: [
        (2, 1, E8_W[5], 40), (3, 1, e8(1, 1), 32), (3, 2, e8(1, 1), 32),
        (4, 1, E8_W[4], 28), (4, 2, E8_W[3], 72), (4, 3, E8_W[4], 28),
    ],
    7: [
        (2, 1, e8(0, 1, 1), 40), (3, 1, e8(1, 0, 0, 1), 35), (3, 2, e8(1, 0, 0, 1), 35),
        (4, 1, E8_W[6], 35), (4, 2, E8_W[5], 40), (4, 3, E8_W[6], 35),
        (5, 1, E8_W[5], 16), (5, 2, E8_W[4], 56), (5, 3, E8_W[4], 56), (5, 4, E8_W[5], 16),
    ],
    8: [
        (2, 1, e8(0, 1, 0, 0, 1), 24), (3, 1, e8(0, 0, 1, 1), 20), (3, 2, e8(0, 0, 1, 1), 20),
        (4, 1, e8(1, 0, 0, 0, 0, 1), 15), (4, 2, e8(1, 0, 0, 0, 1), 40),
        (4, 3, e8(1, 0, 0, 0, 0, 1), 15),
        (5, 1, e8(0, 1, 0, 1), 21), (5, 2, e8(0, 1, 1), 16), (5, 3, e8(0, 1, 1), 16),
        (5, 4, e8(0, 1, 0, 1), 21),
        (6, 1, E8_W[7], 10), (6, 2, E8_W[6], 35), (6, 3, E8_W[5], 40), (6, 4, E8_W[6], 35),
        (6, 5, E8_W[7], 10),
    ],
}

# (label, ε constant, ε ν-coefficient, f_min grading, (n·n), height), first 29 states
E8_SPECTRUM = [
    (e8(), 0, 0, 0, 0, 0),
    (e8(1), -2, -58, 2, 2, 29),
    (e8(0, 1), -4, -92, 2, 4, 46),
    (e8(0, 0, 1), -6, -114, 3, 6, 57),
    (e8(2), -8, -116, 4, 8, 58),
    (e8(0, 0, 0, 1), -8, -136, 3, 8, 68),
    (e8(1, 1), -10, -150, 4, 10, 75),
    (e8(0, 0, 0, 0, 1), -12, -168, 4, 12, 84),
    (e8(1, 0, 1), -14, -172, 5, 14, 86),
    (e8(0, 0, 0, 0, 0, 1), -14, -182, 4, 14, 91),
    (e8(0, 2), -16, -184, 4, 16, 92),
    (e8(1, 0, 0, 1), -16, -194, 5, 16, 97),
    (e8(0, 1, 1), -18, -206, 5, 18, 103),
    (e8(3), -18, -174, 6, 18, 87),
    (e8(2, 1), -20, -208, 6, 20, 104),
    (e8(0, 0, 0, 0, 0, 0, 1), -20, -220, 5, 20, 110),
    (e8(1, 0, 0, 0, 1), -22, -226, 6, 22, 113),
    (e8(0, 1, 0, 1), -22, -228, 5, 22, 114),
    (e8(0, 0, 2), -24, -228, 6, 24, 114),
    (e8(1, 0, 0, 0, 0, 1), -24, -240, 6, 24, 120),
    (e8(2, 0, 1), -26, -230, 7, 26, 115),
    (e8(1, 2), -26, -242, 6, 26, 121),
    (e8(0, 0, 1, 1), -26, -250, 6, 26, 125),
    (e8(2, 0, 0, 1), -28, -252, 7, 28, 126),
    (e8(0, 1, 0, 0, 1), -28, -260, 6, 28, 130),
    (e8(1, 1, 1), -30, -264, 7, 30, 132),
    (e8(0, 0, 0, 0, 0, 0, 0, 1), -30, -270, 6, 30, 135),
    (e8(4), -32, -232, 8, 32, 116),
    (e8(3, 1), -34, -266, 8, 34, 133),
]
E8_SPECTRUM_HEIGHT_BOUND = 135

E8_DEGENERATE_PAIR = (e8(0, 2, 1), e8(2, 0, 0, 0, 0, 1))
E8_DEGENERATE_EIGENVALUE = (-38, -298)
E8_DEGENERATE_HEIGHT = 149

# cos θ = numerator / sqrt(radicand)
E8_FLAG_ANGLES = {
    'weyl': (155, 28246),
    'minimal': (29, 952),
}

# corrected E6 list, τ_i = orbit function of the Bourbaki weight W_i;
# B_i = b_i - 2ν c_i
E6_FOOTNOTE = {
    1: {'b': '-4/3*tau1', 'c': '8*tau1'},
    2: {'b': '-4/3*tau2', 'c': '11*tau2 + 72'},
    3: {'b': '-10/3*tau3', 'c': '15*tau3 + 40*tau6'},
    4: {'b': '-10/3*tau4', 'c': '21*tau4 + 24*tau1*tau6 - 84*tau2 - 648'},
    5: {'b': '-2*tau5', 'c': '15*tau5 + 40*tau1'},
    6: {'b': '-6*tau6', 'c': '8*tau6'},
}

# trigonometric columns: integer Weyl vector, integer co-Weyl vector, minimal vector
CHARACTERISTIC_VECTORS = {
    'G2': {'weyl': (3, 5), 'coweyl': (5, 9), 'minimal': (1, 2), 'sorted': True},
    'F4': {'weyl': (8, 11, 15, 21), 'coweyl': (11, 16, 21, 30), 'minimal': (1, 2, 2, 3), 'sorted': True},
    'E6': {'weyl': (8, 8, 11, 15, 15, 21), 'minimal': (1, 1, 2, 2, 2, 3), 'sorted': False},
    'E7': {'weyl': (27, 34, 49, 52, 66, 75, 96), 'minimal': (1, 2, 2, 2, 3, 3, 4), 'sorted': False},
    'E8': {'weyl': E8_WEYL_ROOT_COORDS, 'minimal': E8_HIGHEST_ROOT, 'sorted': False},
}
