"""Exact Gaussian elimination for systems linear in unknown generators.

Each equation ``e = 0`` is written as ``sum_j u_j * A_j + b`` with the unknown
on the left.  Pivots must be even with a nonzero constant body so that they
can be inverted with :func:`kernel.invert`; elimination right-multiplies, so
the left position of the unknowns is preserved throughout.
"""

from __future__ import annotations

from .kernel import Generator, Parity, SuperExpr, body, invert, mul, parity_of, split_left, substitute


class SolveError(ValueError):
    pass


class NoSolution(SolveError):
    pass


class NotUnique(SolveError):
    pass


def _rows(equations, unknowns):
    index = set(unknowns)
    rows = []
    for eq in equations:
        parts = split_left(eq, lambda g: g in index)
        coeffs: dict[Generator, SuperExpr] = {}
        rhs = SuperExpr()
        for (evens, odds), rest in parts.items():
            if not evens and not odds:
                rhs = rest
            elif not odds and len(evens) == 1 and evens[0][1] == 1:
                coeffs[evens[0][0]] = rest
            elif not evens and len(odds) == 1:
                coeffs[odds[0]] = rest
            else:
                raise SolveError("equation is not linear in the unknowns")
        if coeffs or rhs:
            rows.append((coeffs, rhs))
    return rows


def _pivotable(a: SuperExpr) -> bool:
    if parity_of(a) != Parity.EVEN:
        return False
    b = body(a)
    return b.is_constant() and bool(b)


def solve_linear(equations: list[SuperExpr], unknowns: list[Generator]) -> dict[Generator, SuperExpr]:
    """Unique solution of ``equations == 0``; raises NoSolution / NotUnique."""
    rows = _rows(equations, unknowns)
    pivots: list[tuple[Generator, dict, SuperExpr]] = []
    active = rows
    for u in unknowns:
        choice = None
        for n, (coeffs, rhs) in enumerate(active):
            a = coeffs.get(u)
            if a and _pivotable(a):
                choice = n
                break
        if choice is None:
            if any(coeffs.get(u) for coeffs, _ in active):
                raise SolveError(f"no constant-body pivot for unknown {u.name}")
            raise NotUnique("solution not unique")
        coeffs, rhs = active[choice]
        inv = invert(coeffs[u])
        pivots.append((u, coeffs, rhs))
        rest = []
        for n, (c2, r2) in enumerate(active):
            if n == choice:
                continue
            a = c2.get(u)
            if a:
                factor = mul(inv, a)
                new = {}
                for v, cv in c2.items():
                    if v == u:
                        continue
                    new[v] = cv - mul(coeffs.get(v, SuperExpr()), factor)
                for v, cv in coeffs.items():
                    if v != u and v not in new:
                        new[v] = -mul(cv, factor)
                c2 = {v: cv for v, cv in new.items() if cv}
                r2 = r2 - mul(rhs, factor)
            if c2 or r2:
                rest.append((c2, r2))
        active = rest
    for coeffs, rhs in active:
        if coeffs:
            raise SolveError("unresolved unknowns after elimination")
        if rhs:
            raise NoSolution("no solution")
    solution: dict[Generator, SuperExpr] = {}
    for u, coeffs, rhs in reversed(pivots):
        acc = rhs
        for v, cv in coeffs.items():
            if v != u:
                acc = acc + mul(solution[v], cv)
        solution[u] = -mul(acc, invert(coeffs[u]))
    return solution


def check_solution(equations, solution) -> bool:
    return all(not substitute(eq, solution) for eq in equations)
