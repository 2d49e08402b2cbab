import pytest

from tautilt.specfile import fixture

ACCEPTANCE_LINES: list[str] = []


@pytest.fixture(scope="session")
def a2():
    return fixture("a2")


@pytest.fixture(scope="session")
def a3():
    return fixture("a3")


@pytest.fixture(scope="session")
def a3rad2():
    return fixture("a3-rad2")


@pytest.fixture(scope="session")
def lam():
    return fixture("example-7")


@pytest.fixture(scope="session")
def r_xy():
    return fixture("r-xy")


@pytest.fixture(scope="session")
def dual_a2():
    return fixture("a2-dual-numbers")


@pytest.fixture(scope="session")
def dual_a3():
    return fixture("a3-dual-numbers")


@pytest.fixture
def acceptance_log():
    return ACCEPTANCE_LINES


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES):
            terminalreporter.write_line(line)


# ---------------------------------------------------------------------------
# independent oracles (sympy linear algebra straight from the arrow matrices)

def sympy_hom_dim(M, N) -> int:
    """dim Hom(M, N) as the solution space of ``N_a f_s = f_t M_a`` over all arrows."""
    import sympy

    alg = M.alg
    offs, tot = [], 0
    for i in range(alg.n):
        offs.append(tot)
        tot += N.dims[i] * M.dims[i]
    if tot == 0:
        return 0
    rows = []
    for k, (lab, _) in enumerate(alg.arrow_elems):
        s, t = alg.arrow_ends(k)
        Ma = sympy.Matrix(M.arrow_map(lab).data) if M.dims[t] and M.dims[s] else sympy.zeros(M.dims[t], M.dims[s])
        Na = sympy.Matrix(N.arrow_map(lab).data) if N.dims[t] and N.dims[s] else sympy.zeros(N.dims[t], N.dims[s])
        # unknown f_i is N.dims[i] x M.dims[i], row-major
        for r in range(N.dims[t]):
            for c in range(M.dims[s]):
                row = [0] * tot
                for m in range(N.dims[s]):
                    row[offs[s] + m * M.dims[s] + c] += Na[r, m]
                for m in range(M.dims[t]):
                    row[offs[t] + r * M.dims[t] + m] -= Ma[m, c]
                rows.append(row)
    if not rows:
        return tot
    return tot - sympy.Matrix(rows).rank()


def random_rep(alg, draw_int, dims):
    """A representation of a relation-free quiver with integer matrices from ``draw_int``."""
    from tautilt.exactlin import Mat
    from tautilt.rep import Module

    maps = {}
    for k, (lab, _) in enumerate(alg.arrow_elems):
        s, t = alg.arrow_ends(k)
        maps[lab] = Mat(dims[t], dims[s], [[draw_int() for _ in range(dims[s])] for _ in range(dims[t])])
    return Module.from_arrows(alg, dims, maps)
