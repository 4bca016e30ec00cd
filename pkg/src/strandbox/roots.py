"""Affine C-tilde Cartan data, reflections, forms, roots, Coxeter transformations.

Root vectors are integer tuples in the simple-root basis.  Positive roots are
enumerated as the reflection closure of the simple roots intersected with the
positive orthant and a height bound, together with the multiples of the
minimal imaginary root delta = (1,2,...,2,1).  The closed-form description via
beta/gamma Coxeter orbits plus delta-shifted window sums is provided for
cross-checking.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import DomainError, InternalCheckError


@dataclass(frozen=True)
class CartanData:
    n: int
    rows: tuple[tuple[int, ...], ...]  # the Cartan matrix C
    d: tuple[int, ...]                 # symmetrizer diagonal

    def c(self, i, j):
        return self.rows[i - 1][j - 1]


def cartan(n):
    """The C-tilde_{n-1} Cartan matrix with minimal symmetrizer diag(2,1,..,1,2)."""
    if n < 3:
        raise DomainError("the C-tilde Cartan pattern requires n >= 3")
    rows = []
    for i in range(1, n + 1):
        row = [0] * n
        row[i - 1] = 2
        if i > 1:
            row[i - 2] = -2 if i == 2 else -1
        if i < n:
            row[i] = -2 if i == n - 1 else -1
        rows.append(tuple(row))
    d = (2,) + (1,) * (n - 2) + (2,)
    cd = CartanData(n, tuple(rows), d)
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            if cd.d[i - 1] * cd.c(i, j) != cd.d[j - 1] * cd.c(j, i):
                raise InternalCheckError("DC is not symmetric")
    return cd


def delta(cd: CartanData):
    return (1,) + (2,) * (cd.n - 2) + (1,)


def simple_root(cd, i):
    return tuple(1 if j == i else 0 for j in range(1, cd.n + 1))


def height(x):
    return sum(x)


def is_nonnegative(x):
    return all(v >= 0 for v in x)


def reflect(cd, i, x):
    """s_i(x): subtract (sum_j c_ij x_j) from coordinate i."""
    pairing = sum(cd.c(i, j + 1) * x[j] for j in range(cd.n))
    out = list(x)
    out[i - 1] -= pairing
    return tuple(out)


def sym_form(cd, x, y):
    """The symmetric bilinear form x^T (DC) y."""
    total = 0
    for i in range(cd.n):
        if x[i]:
            di = cd.d[i]
            row = cd.rows[i]
            total += x[i] * di * sum(row[j] * y[j] for j in range(cd.n))
    return total


def quadratic(cd, x):
    s = sym_form(cd, x, x)
    if s % 2:
        raise InternalCheckError("symmetric form is odd on the diagonal")
    return s // 2


def ringel_form(cd, orientation, x, y):
    """The orientation-dependent bilinear form with
    <x,y> + <y,x> = x^T(DC)y and hom - ext1 = <rank,rank> on locally free modules.

    The arrow term weights x at the source and y at the target of each
    spine arrow.
    """
    if orientation is None or len(orientation) != cd.n - 1:
        raise DomainError("ringel form needs a spine orientation of length n-1")
    total = sum(cd.d[i] * x[i] * y[i] for i in range(cd.n))
    for k, direction in enumerate(orientation, start=1):
        i, j = (k, k + 1) if direction == "R" else (k + 1, k)
        total += cd.d[j - 1] * cd.c(j, i) * x[i - 1] * y[j - 1]
    return total


def forms(cd, x, y, orientation=None):
    """Bundle of the quadratic, symmetric and (optionally) Ringel forms."""
    out = {"q": quadratic(cd, x), "sym": sym_form(cd, x, y)}
    if orientation is not None:
        out["ringel"] = ringel_form(cd, orientation, x, y)
    return out


# ---------------------------------------------------------------------------
# positive roots
# ---------------------------------------------------------------------------

def enumerate_positive_roots(cd, bound):
    """Positive roots of height <= bound: reflection closure of the simple
    roots within the positive orthant, united with the positive multiples of
    delta."""
    if bound < 1:
        return set()
    dl = delta(cd)
    found = set()
    frontier = [simple_root(cd, i) for i in range(1, cd.n + 1) if height(simple_root(cd, i)) <= bound]
    found.update(frontier)
    while frontier:
        nxt = []
        for x in frontier:
            for i in range(1, cd.n + 1):
                y = reflect(cd, i, x)
                if y not in found and is_nonnegative(y) and 0 < height(y) <= bound:
                    found.add(y)
                    nxt.append(y)
        frontier = nxt
    for x in found:
        if quadratic(cd, x) not in (1, 2):
            raise InternalCheckError(f"real-root candidate {x} has bad length")
    m = 1
    while m * height(dl) <= bound:
        found.add(tuple(m * v for v in dl))
        m += 1
    return found


# ---------------------------------------------------------------------------
# orientations and admissible sequences
# ---------------------------------------------------------------------------

def is_sink(orientation, n, v):
    """Sink of the loop-free spine quiver under the R/L edge directions."""
    left_in = v == 1 or orientation[v - 2] == "R"
    right_in = v == n or orientation[v - 1] == "L"
    return left_in and right_in


def is_source(orientation, n, v):
    left_out = v == 1 or orientation[v - 2] == "L"
    right_out = v == n or orientation[v - 1] == "R"
    return left_out and right_out


def reflect_orientation(orientation, v):
    """Flip the spine edges incident to v."""
    out = list(orientation)
    if v >= 2:
        out[v - 2] = "L" if out[v - 2] == "R" else "R"
    if v <= len(orientation):
        out[v - 1] = "L" if out[v - 1] == "R" else "R"
    return tuple(out)


def nonadmissible_vertices(orientation, n):
    return [v for v in range(1, n + 1)
            if not is_sink(orientation, n, v) and not is_source(orientation, n, v)]


def is_admissible_sequence(orientation, seq, polarity="+"):
    n = len(orientation) + 1
    if sorted(seq) != list(range(1, n + 1)):
        return False
    omega = tuple(orientation)
    test = is_sink if polarity == "+" else is_source
    for v in seq:
        if not test(omega, n, v):
            return False
        omega = reflect_orientation(omega, v)
    return True


def admissible_sequences(orientation, polarity="+"):
    """All +- (or -)-admissible orderings of the vertices."""
    n = len(orientation) + 1
    test = is_sink if polarity == "+" else is_source
    out = []

    def rec(omega, prefix, remaining):
        if not remaining:
            out.append(tuple(prefix))
            return
        for v in sorted(remaining):
            if test(omega, n, v):
                rec(reflect_orientation(omega, v), prefix + [v], remaining - {v})

    rec(tuple(orientation), [], set(range(1, n + 1)))
    return out


# ---------------------------------------------------------------------------
# Coxeter transformations
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class CoxeterTransform:
    cd: CartanData
    seq: tuple[int, ...]

    def apply(self, x, power=1):
        """c^power(x), where c = s_{i_n} ... s_{i_1}."""
        order = self.seq if power > 0 else tuple(reversed(self.seq))
        for _ in range(abs(power)):
            for i in order:
                x = reflect(self.cd, i, x)
        return x


def coxeter(cd, seq):
    n = cd.n
    if sorted(seq) != list(range(1, n + 1)):
        raise DomainError("a Coxeter sequence must order the vertices")
    return CoxeterTransform(cd, tuple(seq))


def beta(cd, seq, k, polarity="+"):
    """beta_{i,k} for an admissible sequence (1-based k)."""
    if polarity == "+":
        x = simple_root(cd, seq[k - 1])
        for i in reversed(seq[:k - 1]):
            x = reflect(cd, i, x)
        return x
    x = simple_root(cd, seq[k - 1])
    for i in seq[k:]:
        x = reflect(cd, i, x)
    return x


def gamma(cd, seq, k, polarity="+"):
    """gamma_{i,k} for an admissible sequence (1-based k)."""
    if polarity == "+":
        x = simple_root(cd, seq[k - 1])
        for i in seq[k:]:
            x = reflect(cd, i, x)
        return x
    x = simple_root(cd, seq[k - 1])
    for i in reversed(seq[:k - 1]):
        x = reflect(cd, i, x)
    return x


def _orbit_within_bound(cd, cox, start, power_sign, bound):
    """{c^(power_sign * r)(start) : r >= 0} truncated to the height bound.

    The orbit heights are eventually periodic-plus-positive-drift, so once a
    full quasi-period stays above the bound the stream has left for good.
    """
    guard = 2 * cd.n
    out = []
    x = start
    misses = 0
    while misses < guard:
        if is_nonnegative(x) and 0 < height(x) <= bound:
            out.append(x)
            misses = 0
        else:
            misses += 1
        x = cox.apply(x, power_sign)
    return out


def closed_form_families(cd, orientation, seq, bound):
    """The four families of the Coxeter-orbit description of the positive
    roots, separately: preprojective beta-orbits, preinjective gamma-orbits,
    delta-shifted window sums of a distinguished root, and the imaginary
    multiples of delta."""
    if not is_admissible_sequence(orientation, seq, "+"):
        raise DomainError("closed form requires a +-admissible sequence")
    cox = coxeter(cd, seq)
    n = cd.n
    preproj = set()
    preinj = set()
    for k in range(1, n + 1):
        preproj.update(_orbit_within_bound(cd, cox, beta(cd, seq, k, "+"), -1, bound))
        preinj.update(_orbit_within_bound(cd, cox, gamma(cd, seq, k, "+"), +1, bound))
    nonadm = nonadmissible_vertices(orientation, n)
    if nonadm:
        alpha = simple_root(cd, nonadm[0])
    else:
        alpha = tuple(a + b for a, b in zip(simple_root(cd, 1), simple_root(cd, 2)))
    powers = [alpha]
    for _ in range(2 * n):
        powers.append(cox.apply(powers[-1], 1))
    dl = delta(cd)
    windows = set()
    for p_start in range(0, n - 1):
        for q in range(0, n - 2):
            x = tuple(sum(powers[j][t] for j in range(p_start, p_start + q + 1)) for t in range(n))
            m = 0
            while True:
                shifted = tuple(a + m * b for a, b in zip(x, dl))
                if height(shifted) > bound:
                    break
                if is_nonnegative(shifted):
                    windows.add(shifted)
                m += 1
    imaginary = set()
    m = 1
    while m * height(dl) <= bound:
        imaginary.add(tuple(m * v for v in dl))
        m += 1
    return {"preprojective": preproj, "preinjective": preinj,
            "windows": windows, "imaginary": imaginary}


def closed_form_positive_roots(cd, orientation, seq, bound):
    """Union of the four closed-form families."""
    fams = closed_form_families(cd, orientation, seq, bound)
    out = set()
    for part in fams.values():
        out |= part
    return out
