"""Look inside the bivariate series: coefficient tables and y-columns.

Beyond the y = 0 specialization the expansion engine can tabulate any
rectangle of coefficients [x^n y^m] psi and extract whole columns, each
of which is itself a candidate for guessing.
"""

from tuttesolve import (FAIL, CoeffTable, QSeries, column_series,
                        guess_algeq, parse_equation)

EQUATION = "y**2*psi**2 + (x + x*g*y - y - y**2)*psi + y - x*g"


def main() -> None:
    eq = parse_equation(EQUATION)

    tab = CoeffTable.build(eq, 8, 6)
    print(f"coefficient table, rows n = 0..8, columns m = 0..6:")
    for n in range(tab.shape[0]):
        row = "  ".join(f"{tab.entry(n, m)!s:>8}" for m in range(tab.shape[1]))
        print(f"  n={n:<2} {row}")
    print()

    # column m = 0 is the specialized sequence the pipeline certifies
    bottom = column_series(eq, 0, 10)
    print("column m = 0:", ", ".join(str(v) for v in bottom))

    guessed = guess_algeq(QSeries(list(bottom)), 4, 3, margin=4)
    if guessed is not FAIL:
        print("guessed equation for that column:", guessed.P.render())

    # higher columns have no small algebraic equation at this order;
    # the guesser says so instead of inventing one
    first = column_series(eq, 1, 16)
    print("column m = 1:", ", ".join(str(v) for v in list(first)[:8]), "...")
    got = guess_algeq(QSeries(list(first)), 4, 3, margin=4)
    print("guess outcome for column m = 1 at these bounds:", got)


if __name__ == "__main__":
    main()
