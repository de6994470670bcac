"""Print the Maurer-Cartan series for the built-in presentations, together
with the stabilizer component and the flatness residual."""

from supercontact.lie import BUILTIN_ALGEBRAS, exponent_of, flatness_residual, maurer_cartan
from supercontact.syntax import print_canonical


def main() -> None:
    for name, (pres, chart) in BUILTIN_ALGEBRAS.items():
        mc = maurer_cartan(exponent_of(pres), chart)
        print(f"[{name}] {mc.order} nonzero series terms")
        for s in pres.symbols:
            tag = " (stabilizer)" if s in pres.stabilizer else ""
            print(f"  Omega_{s}{tag} = {print_canonical(mc.omega[s])}")
        print(f"  flatness residual = {flatness_residual(mc, chart)}")


if __name__ == "__main__":
    main()
