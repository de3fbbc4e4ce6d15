"""Literal transcriptions of the classified multiplication tables.

Each printed product ``e_i o e_j = sum c_k e_k`` is one ``(i, j, {k: c})``
line, in the order it is printed.  Lines are kept verbatim even where they
are inconsistent; two lines with the same ``(i, j)`` are deliberately
preserved so the loader can reject them.  Coefficients are ints or strings
in the coefficient grammar.
"""

from math import comb


def nf_lines(top):
    """e_i o e_j = C(i+j-1, j) e_{i+j} for 2 <= i+j <= top."""
    return [
        (i, j, {i + j: comb(i + j - 1, j)})
        for i in range(1, top)
        for j in range(1, top)
        if i + j <= top
    ]


# fixed-dimension lists -----------------------------------------------------

DIM_LEQ_4 = {
    "Z_1^1": (1, []),
    "Z_2^1": (2, [(1, 1, {2: 1})]),
    "Z_3^1": (3, [(1, 1, {2: 1}), (1, 2, {3: "1/2"}), (2, 1, {3: 1})]),
    "Z_3^2": (3, [(1, 2, {3: 1}), (2, 1, {3: -1})]),
    "Z_3^3": (3, [(1, 1, {3: 1}), (1, 2, {3: 1}), (2, 2, {3: "alpha"})]),
    "Z_3^4": (3, [(1, 1, {3: 1}), (1, 2, {3: 1}), (2, 1, {3: 1})]),
    "Z_4^1": (4, [(1, 1, {2: 1}), (1, 2, {3: 1}), (2, 1, {3: 2}), (1, 3, {4: 1}), (2, 2, {4: 3}), (3, 1, {4: 3})]),
    "Z_4^2": (4, [(1, 1, {3: 1}), (1, 2, {4: 1}), (1, 3, {4: 1}), (3, 1, {4: 2})]),
    "Z_4^3": (4, [(1, 1, {3: 1}), (1, 3, {4: 1}), (2, 2, {4: 1}), (3, 1, {4: 2})]),
    "Z_4^4": (4, [(1, 2, {3: 1}), (1, 3, {4: 1}), (2, 1, {3: -1})]),
    "Z_4^5": (4, [(1, 2, {3: 1}), (1, 3, {4: 1}), (2, 1, {3: -1}), (2, 2, {4: 1})]),
    "Z_4^6": (4, [(1, 1, {4: 1}), (1, 2, {3: 1}), (2, 1, {3: -1}), (2, 2, {3: -2, 4: 1})]),
    "Z_4^7": (4, [(1, 2, {3: 1}), (2, 1, {4: 1}), (2, 2, {3: -1})]),
    "Z_4^8": (4, [(1, 1, {3: 1}), (1, 2, {4: 1}), (2, 1, {3: "-alpha"}), (2, 2, {4: -1})]),
    "Z_4^9": (4, [(1, 1, {4: 1}), (1, 2, {4: "alpha"}), (2, 1, {4: "-alpha"}), (2, 2, {4: 1}), (3, 3, {4: 1})]),
    "Z_4^10": (4, [(1, 2, {4: 1}), (1, 3, {4: 1}), (2, 1, {4: -1}), (2, 2, {4: 1}), (3, 1, {4: 1})]),
    "Z_4^11": (4, [(1, 1, {4: 1}), (1, 2, {4: 1}), (2, 1, {4: -1}), (3, 3, {4: 1})]),
    "Z_4^12": (4, [(1, 2, {3: 1}), (2, 1, {4: 1})]),
    "Z_4^13": (4, [(1, 2, {3: 1}), (2, 1, {3: -1}), (2, 2, {4: 1})]),
    "Z_4^14": (4, [(2, 1, {4: 1}), (2, 2, {3: 1})]),
    "Z_4^15": (4, [(1, 2, {4: 1}), (2, 2, {3: 1}), (2, 1, {4: "(1+alpha)/(1-alpha)"})]),
    "Z_4^16": (4, [(1, 2, {4: 1}), (2, 1, {4: -1}), (3, 3, {4: 1})]),
}

R1_DIM5 = {
    "KF_5^1": [(1, 1, {2: 1}), (1, 2, {3: 1}), (2, 1, {3: 1})],
    "KF_5^2": [(1, 4, {2: 1}), (1, 2, {3: 1}), (4, 1, {3: -1})],
    "KF_5^3": [(1, 4, {2: 1}), (1, 2, {3: 1}), (4, 1, {3: -1}), (4, 1, {3: 1})],
}

R2_DIM5 = {
    "KF_5^1": [(1, 1, {2: 1}), (4, 4, {5: 1}), (1, 2, {3: 1}), (4, 5, {3: 1}), (2, 1, {3: 2}), (5, 4, {3: 2})],
    "KF_5^2": [
        (1, 1, {2: 1}), (1, 2, {3: 1}), (1, 4, {5: 1}), (1, 5, {3: 1}),
        (2, 1, {3: 2}), (4, 1, {2: -1}), (4, 2, {3: -1}), (4, 5, {3: -1}),
    ],
    "KF_5^3": [
        (1, 1, {2: 1}), (1, 2, {3: 1}), (1, 4, {5: 1}), (1, 5, {3: "beta"}),
        (2, 1, {3: 2}), (2, 4, {3: "beta-1"}), (4, 1, {2: -1}), (4, 4, {5: -1}),
        (4, 2, {3: -1}), (4, 5, {3: "-beta"}), (5, 1, {3: "beta-1"}), (5, 4, {3: "-2*beta"}),
    ],
    "KF_5^4": [(1, 1, {2: 1}), (1, 2, {3: 1}), (1, 4, {5: 1}), (2, 1, {3: 2}), (4, 4, {5: -1})],
    "KF_5^5": [(1, 4, {2: 1}), (1, 2, {3: 1}), (1, 5, {3: -1}), (4, 1, {5: 1}), (4, 2, {3: 1}), (4, 5, {3: -1})],
    "KF_5^6": [(1, 4, {2: 1}), (1, 2, {3: 1}), (1, 5, {3: -1}), (4, 1, {5: 1})],
    "KF_5^7": [
        (1, 1, {2: 1}), (1, 2, {3: 1}), (1, 4, {5: 1}), (1, 5, {3: 1}),
        (2, 1, {3: 2}), (2, 4, {3: 1}), (5, 1, {3: 1}),
    ],
    "KF_5^8": [(1, 1, {2: 1}), (1, 2, {3: 1}), (1, 4, {5: 1}), (2, 1, {3: 2})],
    "KF_5^9": [(1, 1, {2: 1}), (1, 2, {3: 1}), (1, 4, {5: -1}), (2, 1, {3: 2}), (4, 1, {5: 1}), (4, 5, {3: 1})],
    "KF_5^10": [(1, 1, {2: 1}), (1, 4, {5: -1}), (4, 1, {5: 1}), (4, 5, {3: 1})],
    "KF_5^11": [(1, 1, {2: 1}), (1, 2, {3: 1}), (1, 4, {5: -1}), (1, 5, {3: 1}), (2, 1, {3: 2}), (4, 1, {5: 1})],
    "KF_5^12": [(1, 1, {2: 1}), (1, 2, {3: 1}), (1, 4, {5: -1}), (2, 1, {3: 2}), (4, 1, {5: 1})],
    "KF_5^13": [(1, 1, {2: 1}), (1, 4, {5: -1}), (1, 5, {3: 1}), (4, 1, {5: 1})],
    "KF_5^14": [(1, 1, {2: 1}), (1, 2, {3: 1}), (1, 4, {5: "alpha"}), (2, 1, {3: 2}), (4, 1, {5: 1})],
    "KF_5^15": [
        (1, 1, {2: 1}), (1, 4, {5: "alpha"}), (1, 5, {3: "2*alpha/(1+alpha)"}), (2, 4, {3: "2*alpha"}),
        (4, 1, {5: 1}), (4, 2, {3: 1}), (5, 1, {3: 2}),
    ],
    "KF_5^16": [
        (1, 1, {2: 1}), (1, 2, {3: 1}), (1, 4, {5: "-1/2"}), (1, 5, {3: -2}),
        (2, 1, {3: 2}), (2, 4, {3: -1}), (4, 1, {5: 1}), (4, 2, {3: 1}), (5, 1, {3: 2}),
    ],
    "KF_5^17": [
        (1, 1, {2: 1}), (1, 4, {5: "-1/2"}), (1, 5, {3: -2}), (2, 4, {3: -1}),
        (4, 1, {5: 1}), (4, 2, {3: 1}), (5, 1, {3: 2}),
    ],
}

R2_DIM6 = {
    "KF_6^1": nf_lines(4) + [(1, 5, {6: 1}), (5, 1, {6: 1})],
    "KF_6^2": nf_lines(4) + [(1, 5, {6: 1}), (5, 1, {6: 1}), (5, 5, {6: 1})],
    "KF_6^3": nf_lines(4) + [(1, 5, {6: 1}), (5, 5, {6: 1})],
    "KF_6^4": nf_lines(4) + [(5, 1, {6: 1})],
    "KF_6^5": [
        (1, 1, {2: 1}), (1, 3, {4: 1}), (1, 5, {6: 1}), (1, 6, {3: 1}),
        (2, 5, {3: -1}), (5, 1, {2: -3, 6: -2}), (5, 2, {3: 1}), (5, 5, {2: 2, 6: 1}),
        (5, 6, {3: -2}), (6, 1, {3: -1}), (6, 5, {3: 1}),
    ],
    "KF_6^6": [
        (1, 1, {2: 1}), (1, 3, {4: 1}), (1, 5, {6: 1}), (1, 6, {3: 1}),
        (2, 5, {3: -1}), (5, 1, {6: -2}), (5, 2, {3: 1}), (6, 1, {3: -1}),
    ],
    "KF_6^7": [(1, 1, {2: 1}), (1, 3, {4: 1}), (1, 5, {6: 1}), (1, 6, {3: 1}), (3, 1, {4: 1}), (5, 1, {6: -1})],
}

R2_DIM7 = {
    "KF_7^1": nf_lines(5) + [(1, 6, {7: 1}), (6, 1, {6: "alpha"})],
    "KF_7^2": nf_lines(5) + [(1, 6, {7: 1}), (6, 1, {7: 1}), (6, 6, {7: 1})],
    "KF_7^3": nf_lines(5) + [(1, 6, {7: 1}), (6, 6, {7: 1})],
    "KF_7^4": nf_lines(5) + [(6, 1, {7: 1})],
    "KF_7^5": [
        (1, 1, {2: 1}), (1, 3, {4: 1}), (1, 4, {5: 1}), (1, 6, {7: 1}),
        (1, 7, {3: 1}), (2, 6, {3: -1}), (3, 1, {4: -1}), (6, 1, {7: -2}),
        (6, 2, {3: 1}), (7, 1, {3: -1}),
    ],
    "KF_7^6": [
        (1, 1, {2: 1}), (1, 3, {4: 1}), (1, 4, {5: 1}), (1, 6, {7: 1}),
        (1, 7, {3: 1}), (2, 6, {3: -1}), (3, 1, {4: -1}), (6, 1, {7: -2}),
        (6, 2, {3: 1}), (6, 4, {5: 1}), (7, 1, {3: -1}),
    ],
}

R3 = {
    "A3_5": (5, [(1, 2, {3: 1}), (2, 1, {3: -1}), (1, 3, {4: 1}), (2, 3, {5: 1})]),
    "A3_6": (6, [
        (1, 2, {3: 1}), (1, 3, {4: 1}), (1, 5, {6: 1}), (2, 1, {3: -1}), (2, 3, {5: 1}),
        (2, 4, {6: -1}), (3, 3, {6: 1}), (4, 2, {6: 1}), (5, 1, {6: -1}),
    ]),
    "A3_7": (7, [
        (1, 2, {3: 1}), (1, 3, {4: 1}), (1, 5, {6: 1}), (1, 6, {7: 1}),
        (2, 1, {3: -1}), (2, 3, {5: 1}), (2, 4, {6: -1}), (3, 3, {6: 1}),
        (4, 2, {6: 1}), (4, 3, {7: 2}), (5, 1, {6: -1}),
    ]),
}


# general-n families ---------------------------------------------------------

def nf(n):
    return nf_lines(n)


def filiform(variant, n):
    lines = nf_lines(n - 1)
    if variant == 2:
        lines.append((n, 1, {n - 1: 1}))
    elif variant == 3:
        lines.append((n, n, {n - 1: 1}))
    return lines


def r1_general(n):
    return nf_lines(n - 2)


def r2_general(variant, n):
    lines = nf_lines(n - 2)
    a, z = n - 1, n
    if variant == 1:
        lines += [(1, a, {z: 1}), (a, 1, {z: "alpha"})]
    elif variant == 2:
        lines += [(1, a, {z: 1}), (a, 1, {z: 1}), (a, a, {z: 1})]
    elif variant == 3:
        lines += [(1, a, {z: 1}), (a, a, {z: 1})]
    else:
        lines += [(a, 1, {z: 1})]
    return lines
