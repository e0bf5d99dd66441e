"""Connection matrices between row polynomials and numerators.

U maps a Sheffer row to the numerator of its row generating function;
F is the exponential analog; S = F U^{-1} carries ordinary numerators
to exponential ones.  The beta families conjugate an exact rational
argument shift by these matrices, and every one is built along two
independent routes that must agree.
"""

from fractions import Fraction as Q

from riordan import FinMatrix, beta_matrix, core_matrix, exp_matrix, tilde_matrix


def show(label, m):
    print(label)
    cells = [[str(v) for v in row] for row in m.data]
    widths = [max(len(cells[i][j]) for i in range(m.n_rows))
              for j in range(m.n_cols)]
    for row in cells:
        print("   " + "  ".join(c.rjust(w) for c, w in zip(row, widths)))


show("U_3 (columns are (1-x)^(3-p) times Eulerian numerators, over 3!):",
     core_matrix("U", 3))
show("its inverse has factorial-power columns:", core_matrix("Uinv", 3))
show("F_2:", exp_matrix("F", 2))
show("S_3 (equal to both F U^{-1} and its closed form):", exp_matrix("S", 3))

show("the one-parameter family G_2 at beta = 1:", beta_matrix("G", 2, 1))
show("G_2 at beta = 1/2 (rational shifts are exact):",
     beta_matrix("G", 2, Q(1, 2)))

j = core_matrix("J", 2)
lhs = beta_matrix("G", 2, Q(-1, 2))
rhs = j * beta_matrix("G", 2, Q(1, 2)) * j
print("negating beta conjugates by the reversal:", lhs == rhs)

show("H_3 (the exponential-side family):", beta_matrix("H", 3, 1))
show("the order-n companions: A_3:", beta_matrix("A", 3, 1))
show("T_3:", beta_matrix("T", 3, 1))
show("the nilpotent X_3 with I + X_n the n-th root of the shift:",
     beta_matrix("X", 3))
print("I + X_3 equals G_3 at beta = 1/3:",
      FinMatrix.identity(4) + beta_matrix("X", 3) == beta_matrix("G", 3, Q(1, 3)))
show("stripping the first row and column of S_4 gives its companion:",
     tilde_matrix("St", 4))
