"""Golden data for Fl(3) and Fl(4).

The Fl(4) matrices are indexed by permutations in window notation, listed in
lexicographic order. Entry (i, j) of ``FL4_CSM`` is the coefficient of
[X(w_i)] in the nonequivariant CSM class of the cell X(w_j)°;
``FL4_CSM_INVERSE`` is its inverse.
"""

FL4_WINDOWS = ('1234', '1243', '1324', '1342', '1423', '1432', '2134', '2143', '2314', '2341', '2413', '2431', '3124', '3142', '3214', '3241', '3412', '3421', '4123', '4132', '4213', '4231', '4312', '4321')

FL4_CSM = (
    ( 1,  1,  1,  1,  1,  1,  1,  1,  1,  1,  1,  1,  1,  1,  1,  1,  1,  1,  1,  1,  1,  1,  1,  1),
    ( 0,  1,  0,  2,  1,  2,  0,  1,  0,  3,  1,  3,  0,  2,  0,  3,  2,  3,  1,  2,  1,  3,  2,  3),
    ( 0,  0,  1,  1,  2,  2,  0,  0,  2,  2,  3,  3,  1,  1,  2,  2,  4,  4,  2,  2,  3,  3,  4,  4),
    ( 0,  0,  0,  1,  0,  1,  0,  0,  0,  3,  0,  3,  0,  1,  0,  3,  1,  3,  0,  1,  0,  3,  1,  3),
    ( 0,  0,  0,  0,  1,  1,  0,  0,  0,  0,  2,  2,  0,  0,  0,  0,  4,  4,  1,  1,  2,  2,  4,  4),
    ( 0,  0,  0,  0,  0,  1,  0,  0,  0,  0,  0,  3,  0,  0,  0,  0,  2,  5,  0,  1,  0,  3,  2,  5),
    ( 0,  0,  0,  0,  0,  0,  1,  1,  1,  1,  1,  1,  2,  2,  2,  2,  2,  2,  3,  3,  3,  3,  3,  3),
    ( 0,  0,  0,  0,  0,  0,  0,  1,  0,  2,  1,  2,  0,  3,  0,  4,  3,  4,  2,  4,  2,  6,  4,  6),
    ( 0,  0,  0,  0,  0,  0,  0,  0,  1,  1,  2,  2,  0,  0,  1,  1,  4,  4,  0,  0,  2,  2,  4,  4),
    ( 0,  0,  0,  0,  0,  0,  0,  0,  0,  1,  0,  1,  0,  0,  0,  1,  0,  1,  0,  0,  0,  1,  0,  1),
    ( 0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  1,  1,  0,  0,  0,  0,  3,  3,  0,  0,  1,  1,  3,  3),
    ( 0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  1,  0,  0,  0,  0,  0,  2,  0,  0,  0,  1,  0,  2),
    ( 0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  1,  1,  1,  1,  1,  1,  3,  3,  3,  3,  3,  3),
    ( 0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  1,  0,  2,  1,  2,  0,  2,  0,  5,  2,  5),
    ( 0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  1,  1,  2,  2,  0,  0,  3,  3,  5,  5),
    ( 0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  1,  0,  1,  0,  0,  0,  2,  0,  2),
    ( 0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  1,  1,  0,  0,  0,  0,  1,  1),
    ( 0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  1,  0,  0,  0,  0,  0,  1),
    ( 0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  1,  1,  1,  1,  1,  1),
    ( 0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  1,  0,  2,  1,  2),
    ( 0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  1,  1,  2,  2),
    ( 0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  1,  0,  1),
    ( 0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  1,  1),
    ( 0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  1),
)

FL4_CSM_INVERSE = (
    ( 1, -1, -1,  2,  2, -1, -1,  1,  2, -5, -5,  3,  2, -3, -1,  4,  6, -3, -5,  4,  3, -4, -3,  1),
    ( 0,  1,  0, -2, -1,  1,  0, -1,  0,  5,  2, -3,  0,  3,  0, -4, -4,  3,  2, -4, -1,  4,  2, -1),
    ( 0,  0,  1, -1, -2,  1,  0,  0, -2,  3,  5, -3, -1,  1,  1, -2, -6,  3,  3, -2, -3,  3,  3, -1),
    ( 0,  0,  0,  1,  0, -1,  0,  0,  0, -3,  0,  3,  0, -1,  0,  2,  2, -3,  0,  2,  0, -3, -1,  1),
    ( 0,  0,  0,  0,  1, -1,  0,  0,  0,  0, -2,  3,  0,  0,  0,  0,  4, -3, -1,  1,  1, -2, -2,  1),
    ( 0,  0,  0,  0,  0,  1,  0,  0,  0,  0,  0, -3,  0,  0,  0,  0, -2,  3,  0, -1,  0,  2,  1, -1),
    ( 0,  0,  0,  0,  0,  0,  1, -1, -1,  2,  2, -1, -2,  3,  1, -4, -4,  2,  5, -4, -3,  4,  3, -1),
    ( 0,  0,  0,  0,  0,  0,  0,  1,  0, -2, -1,  1,  0, -3,  0,  4,  3, -2, -2,  4,  1, -4, -2,  1),
    ( 0,  0,  0,  0,  0,  0,  0,  0,  1, -1, -2,  1,  0,  0, -1,  1,  4, -2,  0,  0,  3, -2, -3,  1),
    ( 0,  0,  0,  0,  0,  0,  0,  0,  0,  1,  0, -1,  0,  0,  0, -1,  0,  2,  0,  0,  0,  2,  0, -1),
    ( 0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  1, -1,  0,  0,  0,  0, -3,  2,  0,  0, -1,  1,  2, -1),
    ( 0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  1,  0,  0,  0,  0,  0, -2,  0,  0,  0, -1,  0,  1),
    ( 0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  1, -1, -1,  2,  2, -1, -3,  2,  3, -3, -3,  1),
    ( 0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  1,  0, -2, -1,  1,  0, -2,  0,  3,  1, -1),
    ( 0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  1, -1, -2,  1,  0,  0, -3,  2,  3, -1),
    ( 0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  1,  0, -1,  0,  0,  0, -2,  0,  1),
    ( 0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  1, -1,  0,  0,  0,  0, -1,  1),
    ( 0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  1,  0,  0,  0,  0,  0, -1),
    ( 0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  1, -1, -1,  2,  2, -1),
    ( 0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  1,  0, -2, -1,  1),
    ( 0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  1, -1, -2,  1),
    ( 0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  1,  0, -1),
    ( 0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  1, -1),
    ( 0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  1),
)

# Nonequivariant CSM classes of the Schubert cells of Fl(3), keyed by the
# reduced word of the cell (1-based); values map reduced words of Schubert
# classes to coefficients.
FL3_CSM = {
    (1, 2, 1): {(1, 2, 1): 1, (1, 2): 1, (2, 1): 1, (1,): 2, (2,): 2, (): 1},
    (1, 2): {(1, 2): 1, (1,): 1, (2,): 2, (): 1},
    (2, 1): {(2, 1): 1, (1,): 2, (2,): 1, (): 1},
    (1,): {(1,): 1, (): 1},
    (2,): {(2,): 1, (): 1},
    (): {(): 1},
}

# Total Chern class of the tangent bundle of Fl(3)
FL3_TANGENT = {(1, 2, 1): 1, (1, 2): 2, (2, 1): 2, (1,): 6, (2,): 6, (): 6}

# Projective line: CSM and dual CSM of the open cell, and c(TP^1)
P1_CSM = {(1,): 1, (): 1}
P1_DUAL_CSM = {(1,): 1, (): -1}
P1_TANGENT = {(1,): 1, (): 2}

# P^2 as A2 / P with P generated by s1: CSM class of the open cell
P2_OPEN_CELL_CSM = {(1, 2): 1, (2,): 2, (): 1}
P2_NAIVE_DUAL_PAIRING = -2
P2_NORMALIZED_PAIRING = 0
