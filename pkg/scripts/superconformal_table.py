"""Solve for the Hamiltonian field of U = lam t + 2t(eps thb - th epsb) and
compare it row by row with the reference display."""

from supercontact.calculus import R1N2
from supercontact.checks import superconformal_table
from supercontact.contact import standard_form
from supercontact.syntax import Context, print_canonical


def main() -> None:
    X, rows = superconformal_table(standard_form(R1N2), Context(R1N2))
    width = max(len(print_canonical(got)) for _, got, _, _ in rows)
    print(f"{'coord':<6} {'solver':<{width}}  display  [verdict]")
    for name, got, shown, verdict in rows:
        print(f"{name:<6} {print_canonical(got):<{width}}  {print_canonical(shown)}  [{verdict}]")


if __name__ == "__main__":
    main()
