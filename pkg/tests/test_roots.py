import random

import pytest

from strandbox import (
    DomainError,
    admissible_sequences,
    beta,
    cartan,
    closed_form_families,
    closed_form_positive_roots,
    coxeter,
    delta,
    enumerate_positive_roots,
    forms,
    gamma,
    is_admissible_sequence,
    quadratic,
    reflect,
    ringel_form,
    sym_form,
)
from strandbox.roots import reflect_orientation, simple_root

from conftest import all_orientations
from oracles import reflection_closure_alt


def test_cartan_matrix_pattern():
    cd = cartan(3)
    assert cd.rows == ((2, -1, 0), (-2, 2, -2), (0, -1, 2))
    assert cd.d == (2, 1, 2)
    cd5 = cartan(5)
    assert cd5.rows[0] == (2, -1, 0, 0, 0)
    assert cd5.rows[1] == (-2, 2, -1, 0, 0)
    assert cd5.rows[3] == (0, 0, -1, 2, -2)
    assert cd5.rows[4] == (0, 0, 0, -1, 2)
    with pytest.raises(DomainError):
        cartan(2)


def test_dc_symmetric():
    for n in range(3, 9):
        cd = cartan(n)
        for i in range(1, n + 1):
            for j in range(1, n + 1):
                assert cd.d[i - 1] * cd.c(i, j) == cd.d[j - 1] * cd.c(j, i)


def test_delta():
    assert delta(cartan(4)) == (1, 2, 2, 1)
    assert quadratic(cartan(3), delta(cartan(3))) == 0


def test_reflection_examples():
    cd = cartan(3)
    assert reflect(cd, 1, simple_root(cd, 2)) == (1, 1, 0)
    assert reflect(cd, 2, simple_root(cd, 1)) == (1, 2, 0)
    for i in (1, 2, 3):
        a = simple_root(cd, i)
        assert reflect(cd, i, a) == tuple(-v for v in a)


def test_reflection_involution_and_q_invariance():
    rng = random.Random(11)
    for n in (3, 5):
        cd = cartan(n)
        for _ in range(200):
            x = tuple(rng.randint(-4, 4) for _ in range(n))
            for i in range(1, n + 1):
                assert reflect(cd, i, reflect(cd, i, x)) == x
                assert quadratic(cd, reflect(cd, i, x)) == quadratic(cd, x)


def test_forms():
    cd = cartan(3)
    for i in (1, 2, 3):
        assert quadratic(cd, simple_root(cd, i)) == cd.d[i - 1]
    rng = random.Random(5)
    omega = ("R", "R")
    for _ in range(200):
        x = tuple(rng.randint(-3, 3) for _ in range(3))
        y = tuple(rng.randint(-3, 3) for _ in range(3))
        lhs = ringel_form(cd, omega, x, y) + ringel_form(cd, omega, y, x)
        assert lhs == sym_form(cd, x, y)
    out = forms(cd, delta(cd), delta(cd), omega)
    assert out["q"] == 0 and out["sym"] == 0 and out["ringel"] == 0


def test_enumerate_examples():
    cd = cartan(3)
    roots4 = enumerate_positive_roots(cd, 4)
    for v in ((1, 0, 0), (0, 1, 0), (0, 0, 1), (1, 1, 0), (1, 2, 0), (1, 2, 1)):
        assert v in roots4
    assert all(all(c >= 0 for c in r) for r in roots4)


def test_enumerate_closure_under_delta_shift():
    cd = cartan(4)
    bound = 12
    found = enumerate_positive_roots(cd, bound)
    dl = delta(cd)
    for r in found:
        if quadratic(cd, r) in (1, 2):
            shifted = tuple(a + b for a, b in zip(r, dl))
            if sum(shifted) <= bound:
                assert shifted in found


def test_enumerate_traversal_independence():
    for n in (3, 4, 5):
        cd = cartan(n)
        mine = enumerate_positive_roots(cd, 10)
        alt = reflection_closure_alt(cd, 10, reflect, delta(cd))
        assert mine == alt


def test_real_roots_within_q_criterion():
    for n in (3, 4, 5):
        cd = cartan(n)
        dl = delta(cd)
        for r in enumerate_positive_roots(cd, 10):
            q = quadratic(cd, r)
            if r[0] > 0 and r == tuple(r[0] * v for v in dl):
                assert q == 0
            else:
                assert q in (1, 2)


def test_q_criterion_exact_small_rank():
    # for n = 3, 4 the q-criterion together with positivity is exact
    for n in (3, 4):
        cd = cartan(n)
        dl = delta(cd)
        bound = 8
        box = set()

        def gen(prefix, left):
            if len(prefix) == n:
                if any(prefix):
                    yield tuple(prefix)
                return
            for v in range(left + 1):
                yield from gen(prefix + [v], left - v)

        for x in gen([], bound):
            q = quadratic(cd, x)
            if q in (1, 2):
                box.add(x)
            elif q == 0 and x[0] > 0 and x == tuple(x[0] * v for v in dl):
                box.add(x)
        assert box == enumerate_positive_roots(cd, bound)


def test_admissible_sequences():
    assert admissible_sequences(("R", "R"), "+") == [(3, 2, 1)]
    assert is_admissible_sequence(("R", "R"), (3, 2, 1), "+")
    assert not is_admissible_sequence(("R", "R"), (1, 2, 3), "+")
    assert is_admissible_sequence(("R", "R"), (1, 2, 3), "-")
    for orient in all_orientations(4):
        omega = tuple(orient)
        for seq in admissible_sequences(omega, "+"):
            assert is_admissible_sequence(omega, tuple(reversed(seq)), "-")
            # rotation property: rotated sequence admissible for the reflected orientation
            rotated = seq[1:] + seq[:1]
            assert is_admissible_sequence(reflect_orientation(omega, seq[0]), rotated, "+")


def test_coxeter_and_beta_gamma():
    cd = cartan(3)
    seq = (3, 2, 1)
    cox = coxeter(cd, seq)
    assert cox.apply(delta(cd), 1) == delta(cd)
    assert cox.apply(delta(cd), -1) == delta(cd)
    assert beta(cd, seq, 1, "+") == simple_root(cd, 3)
    assert gamma(cd, seq, 3, "+") == simple_root(cd, 1)
    assert beta(cd, seq, 3, "+") == (1, 2, 2)  # rank of P_1
    # c and c^-1 invert each other
    rng = random.Random(2)
    for _ in range(50):
        x = tuple(rng.randint(-3, 3) for _ in range(3))
        assert cox.apply(cox.apply(x, 1), -1) == x


def test_rotation_lemma():
    for n in (3, 4, 5):
        cd = cartan(n)
        for orient in all_orientations(n):
            omega = tuple(orient)
            for seq in admissible_sequences(omega, "+"):
                rotated = seq[1:] + seq[:1]
                omega2 = reflect_orientation(omega, seq[0])
                depth = 6
                cox1 = coxeter(cd, seq)
                cox2 = coxeter(cd, rotated)

                def orbit(cox, s, d):
                    out = set()
                    for k in range(1, n + 1):
                        x = beta(cd, s, k, "+")
                        y = gamma(cd, s, k, "+")
                        for r in range(d):
                            out.add(x)
                            out.add(y)
                            x = cox.apply(x, -1)
                            y = cox.apply(y, 1)
                    return out

                a1 = simple_root(cd, seq[0])
                big1 = orbit(cox1, seq, depth) - {a1}
                big2 = orbit(cox2, rotated, depth + 1) - {a1}
                for x in orbit(cox1, seq, depth - 1) - {a1}:
                    assert reflect(cd, seq[0], x) in big2
                for y in orbit(cox2, rotated, depth - 1) - {a1}:
                    assert reflect(cd, seq[0], y) in big1
                break  # one sequence per orientation keeps this quick


def test_closed_form_matches_bfs():
    cd = cartan(3)
    omega = ("R", "R")
    assert closed_form_positive_roots(cd, omega, (3, 2, 1), 12) == \
        enumerate_positive_roots(cd, 12)
    with pytest.raises(DomainError):
        closed_form_positive_roots(cd, omega, (1, 2, 3), 12)


def test_closed_form_families_disjoint():
    for n, omega, seq in ((3, ("R", "R"), (3, 2, 1)), (4, ("R", "R", "L"), None)):
        cd = cartan(n)
        if seq is None:
            seq = admissible_sequences(omega, "+")[0]
        fams = closed_form_families(cd, omega, seq, 12)
        names = list(fams)
        for i, a in enumerate(names):
            for b in names[i + 1:]:
                assert not (fams[a] & fams[b]), (a, b, fams[a] & fams[b])
        realish = fams["preprojective"] | fams["preinjective"]
        for x in realish:
            assert quadratic(cd, x) in (1, 2)


def test_alternating_orientation_closed_form():
    # alternating spine: every vertex admissible; the window root is a_1 + a_2
    omega = ("R", "L", "R")
    cd = cartan(4)
    seq = admissible_sequences(omega, "+")[0]
    assert closed_form_positive_roots(cd, omega, seq, 12) == enumerate_positive_roots(cd, 12)
