"""String and band modules: dimension/rank vectors, representations, Hom/Ext.

A module reference is a canonical string word, a band-module class (band +
simple parameter polynomial + tube level), or the zero module.  Explicit
representations are built over an exact field (rationals by default, or a
prime field) so Hom dimensions come out of kernel computations exactly.

Ext^1 is computed for locally free modules only, through the homological
identity  hom(X,Y) - ext1(X,Y) = <rank X, rank Y>  with the
orientation-dependent bilinear form from `roots`.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from . import roots
from .algebra import arrows_by_source, arrows_by_target, loop_arrows
from .errors import DomainError, InternalCheckError, NotLocallyFree
from .linalg import companion_matrix, mat_inverse, mat_mul, mat_rank, poly_pow, zero_matrix
from .strings import (
    Band,
    Letter,
    StringWord,
    can_append,
    canonical_band,
    canonical_string,
    concat,
    format_word,
    parse_band,
    parse_word,
    trivial_word,
    word,
    word_sort_key,
)


class ZeroModule:
    """The zero module; arises only as tau of projectives / tau^{-1} of injectives."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "zero"


ZERO = ZeroModule()


@dataclass(frozen=True)
class StringModule:
    word: StringWord

    def __repr__(self):
        return f"M({format_word(self.word)})"


@dataclass(frozen=True)
class BandModuleClass:
    band: Band
    param: tuple[int, ...]  # monic polynomial, ascending coefficients, p(0) != 0
    level: int

    @property
    def param_degree(self):
        return len(self.param) - 1

    def __repr__(self):
        return f"M({self.band!r}; deg={self.param_degree}, level={self.level})"


def string_module(w: StringWord):
    return StringModule(canonical_string(w))


def simple_module(p, vertex):
    return StringModule(trivial_word(p, vertex))


def canonical_simple_param(s):
    """A degree-s monic polynomial with nonzero constant term (T-1, or T^s-2).

    Irreducible over the rationals; callers working over other fields supply
    their own parameter polynomial.
    """
    if s < 1:
        raise DomainError("parameter degree must be >= 1")
    if s == 1:
        return (-1, 1)
    return (-2,) + (0,) * (s - 1) + (1,)


def band_module(b, param=None, level=1):
    if isinstance(b, StringWord):
        b = Band(b.presentation, b.letters)
    b = canonical_band(b)
    if param is None:
        param = canonical_simple_param(1)
    param = tuple(param)
    if len(param) < 2 or param[-1] != 1 or param[0] == 0:
        raise DomainError("band parameter must be monic of degree >= 1 with nonzero constant term")
    if level < 1:
        raise DomainError("band level must be >= 1")
    return BandModuleClass(b, param, level)


def module_key(m):
    """Stable identity used for node keys and deduplication."""
    if m is ZERO:
        return ("zero",)
    if isinstance(m, StringModule):
        return ("string", word_sort_key(m.word))
    return ("band", tuple(map(str, m.band.letters)), m.param, m.level)


# ---------------------------------------------------------------------------
# dimension and rank vectors
# ---------------------------------------------------------------------------

def dim_vector(m):
    """Per-vertex dimensions: walk visit counts (scaled for band classes)."""
    if m is ZERO:
        raise DomainError("the zero module has no dimension vector here")
    if isinstance(m, StringModule):
        p = m.word.presentation
        walk = m.word.walk()
        return tuple(walk.count(i) for i in p.vertices)
    p = m.band.presentation
    factor = m.level * m.param_degree
    walk = m.band.walk()
    return tuple(factor * walk.count(i) for i in p.vertices)


def dim_sum(m):
    return sum(dim_vector(m))


def _loop_vertices(p):
    return sorted({a.source for a in loop_arrows(p)})


def is_locally_free(m):
    """e_iM free over H_i for all i: at a loop vertex the loop must act as a
    square-zero map of rank dim_i/2, i.e. every visit is paired by a loop edge."""
    if m is ZERO:
        raise DomainError("local freeness is asked of nonzero modules")
    if isinstance(m, StringModule):
        p = m.word.presentation
        letters = m.word.letters
        walk = m.word.walk()
    else:
        p = m.band.presentation
        letters = m.band.letters
        walk = m.band.walk()
    for v in _loop_vertices(p):
        visits = walk.count(v)
        loops = sum(1 for c in letters if c.arrow.is_loop and c.arrow.source == v)
        if 2 * loops != visits:
            return False
    return True


def rank_vector(m):
    """Free ranks r_i: halve dimensions at the loop vertices."""
    if not is_locally_free(m):
        raise NotLocallyFree(f"{m!r} is not locally free")
    p = m.word.presentation if isinstance(m, StringModule) else m.band.presentation
    dims = dim_vector(m)
    loops = set(_loop_vertices(p))
    return tuple(d // 2 if i in loops else d for i, d in zip(p.vertices, dims))


# ---------------------------------------------------------------------------
# explicit representations
# ---------------------------------------------------------------------------

@dataclass
class Representation:
    presentation: object
    dims: tuple[int, ...]
    mats: dict
    scalar: object = Fraction


def _position_slots(p, walk):
    """Walk positions grouped by vertex, in walk order."""
    slots = {u: [] for u in p.vertices}
    for pos, v in enumerate(walk):
        slots[v].append(pos)
    return slots


def build_representation(m, scalar=Fraction):
    """Explicit matrices for a module reference.

    Basis convention: walk order.  Band classes at level l over a degree-s
    parameter use the companion matrix of param^l as the distinguished block
    on the first letter of the band.
    """
    if m is ZERO:
        raise DomainError("cannot build the zero representation this way")
    if isinstance(m, StringModule):
        p = m.word.presentation
        walk = m.word.walk()
        slots = _position_slots(p, walk)
        dims = tuple(len(slots[u]) for u in p.vertices)
        index = {}
        for u in p.vertices:
            for k, pos in enumerate(slots[u]):
                index[pos] = k
        mats = {a.name: zero_matrix(dims[a.target - 1], dims[a.source - 1], scalar)
                for a in p.arrows}
        one = scalar(1)
        for k, c in enumerate(m.word.letters):
            if c.sign > 0:
                src_pos, tgt_pos = k + 1, k
            else:
                src_pos, tgt_pos = k, k + 1
            mats[c.arrow.name][index[tgt_pos]][index[src_pos]] = one
        return Representation(p, dims, mats, scalar)

    p = m.band.presentation
    walk = m.band.walk()
    mcount = len(walk)
    d = m.level * m.param_degree
    phi = companion_matrix(poly_pow(m.param, m.level), scalar)
    phi_inv = mat_inverse(phi, scalar)
    ident = [[scalar(1) if i == j else scalar(0) for j in range(d)] for i in range(d)]
    slots = _position_slots(p, walk)
    dims = tuple(d * len(slots[u]) for u in p.vertices)
    offset = {}
    for u in p.vertices:
        for k, pos in enumerate(slots[u]):
            offset[pos] = d * k
    mats = {a.name: zero_matrix(dims[a.target - 1], dims[a.source - 1], scalar)
            for a in p.arrows}
    for k, c in enumerate(m.band.letters):
        if k == 0:
            block = phi if c.sign > 0 else phi_inv
        else:
            block = ident
        if c.sign > 0:
            src_pos, tgt_pos = (k + 1) % mcount, k
        else:
            src_pos, tgt_pos = k, (k + 1) % mcount
        mat = mats[c.arrow.name]
        ro, co = offset[tgt_pos], offset[src_pos]
        for i in range(d):
            for j in range(d):
                if block[i][j]:
                    mat[ro + i][co + j] = mat[ro + i][co + j] + block[i][j]
    return Representation(p, dims, mats, scalar)


def relations_vanish(rep: Representation):
    """Check that every relation path acts by zero."""
    for rel in rep.presentation.relations:
        prod = rep.mats[rel[0].name]
        for a in rel[1:]:
            prod = mat_mul(prod, rep.mats[a.name], rep.scalar)
        if any(any(x for x in row) for row in prod):
            return False
    return True


# ---------------------------------------------------------------------------
# Hom and Ext
# ---------------------------------------------------------------------------

def hom_dim(x: Representation, y: Representation):
    """dim of the intertwiner space {f : f phi^x = phi^y f over all arrows}."""
    if x.presentation != y.presentation:
        raise DomainError("hom between modules over different presentations")
    p = x.presentation
    offsets = {}
    total = 0
    for u in p.vertices:
        offsets[u] = total
        total += y.dims[u - 1] * x.dims[u - 1]
    if total == 0:
        return 0
    zero = x.scalar(0)
    rows = []
    for a in p.arrows:
        i, j = a.source, a.target
        dxi, dyi = x.dims[i - 1], y.dims[i - 1]
        dxj, dyj = x.dims[j - 1], y.dims[j - 1]
        if dyj * dxi == 0:
            continue
        xa = x.mats[a.name]
        ya = y.mats[a.name]
        for r in range(dyj):
            for c in range(dxi):
                row = [zero] * total
                # coefficient of F_j[r, k]: X_a[k, c]
                for k in range(dxj):
                    if xa[k][c]:
                        row[offsets[j] + r * dxj + k] = row[offsets[j] + r * dxj + k] + xa[k][c]
                # coefficient of F_i[k, c]: -Y_a[r, k]
                for k in range(dyi):
                    if ya[r][k]:
                        row[offsets[i] + k * dxi + c] = row[offsets[i] + k * dxi + c] - ya[r][k]
                if any(row):
                    rows.append(row)
    return total - mat_rank(rows)


def hom_dim_modules(x, y, scalar=Fraction):
    return hom_dim(build_representation(x, scalar), build_representation(y, scalar))


def ext1_dim_locally_free(x, y, scalar=Fraction):
    """Ext^1 between locally free modules via the bilinear-form identity."""
    rx, ry = rank_vector(x), rank_vector(y)
    p = x.word.presentation if isinstance(x, StringModule) else x.band.presentation
    cd = roots.cartan(p.n)
    pairing = roots.ringel_form(cd, p.orientation, rx, ry)
    value = hom_dim_modules(x, y, scalar) - pairing
    if value < 0:
        raise InternalCheckError(
            f"hom - <rank,rank> = {value} < 0 for {x!r}, {y!r}")
    return value


def is_rigid(m, scalar=Fraction):
    return ext1_dim_locally_free(m, m, scalar) == 0


# ---------------------------------------------------------------------------
# projectives, injectives, radicals, socle quotients
# ---------------------------------------------------------------------------

def _max_direct_path_from(p, a):
    """Maximal direct string whose first (rightmost) arrow is a."""
    letters = [Letter(a, 1)]
    while True:
        head = letters[0]
        cand = [b for b in arrows_by_source(p)[head.target]
                if _can_prepend(p, letters, Letter(b, 1))]
        if not cand:
            return word(p, letters)
        if len(cand) > 1:
            raise InternalCheckError("non-unique path continuation")
        letters.insert(0, Letter(cand[0], 1))


def _max_direct_path_into(p, a):
    """Maximal direct string whose last (leftmost) arrow is a."""
    letters = [Letter(a, 1)]
    while True:
        tail = letters[-1]
        cand = [b for b in arrows_by_target(p)[tail.source]
                if can_append(p, tuple(letters), Letter(b, 1))]
        if not cand:
            return word(p, letters)
        if len(cand) > 1:
            raise InternalCheckError("non-unique path continuation")
        letters.append(Letter(cand[0], 1))


def _can_prepend(p, letters, c):
    inv = [x.inverse for x in reversed(letters)]
    return can_append(p, tuple(inv), c.inverse)


def projective_string(p, i):
    """P_i as a string module: the two maximal paths out of i glued at i."""
    outs = arrows_by_source(p)[i]
    if not outs:
        return simple_module(p, i)
    paths = [_max_direct_path_from(p, a) for a in outs]
    if len(paths) == 1:
        return string_module(paths[0])
    return string_module(concat(paths[0], paths[1].inverse))


def injective_string(p, i):
    """I_i as a string module: the two maximal paths into i glued at i."""
    ins = arrows_by_target(p)[i]
    if not ins:
        return simple_module(p, i)
    paths = [_max_direct_path_into(p, a) for a in ins]
    if len(paths) == 1:
        return string_module(paths[0])
    return string_module(concat(paths[0].inverse, paths[1]))


def rad_decomposition(p, i):
    """Indecomposable summands of rad P_i (0, 1 or 2 string modules)."""
    parts = []
    for a in arrows_by_source(p)[i]:
        u = _max_direct_path_from(p, a)
        if len(u) == 1:
            parts.append(simple_module(p, a.target))
        else:
            parts.append(string_module(word(p, u.letters[:-1])))
    return sorted(parts, key=lambda m: word_sort_key(m.word))


def soc_quotient_decomposition(p, i):
    """Indecomposable summands of I_i / soc I_i."""
    parts = []
    for a in arrows_by_target(p)[i]:
        u = _max_direct_path_into(p, a)
        if len(u) == 1:
            parts.append(simple_module(p, a.source))
        else:
            parts.append(string_module(word(p, u.letters[1:])))
    return sorted(parts, key=lambda m: word_sort_key(m.word))


@lru_cache(maxsize=None)
def projective_table(p):
    """Map canonical projective string -> vertex."""
    return {projective_string(p, i).word: i for i in p.vertices}


@lru_cache(maxsize=None)
def injective_table(p):
    return {injective_string(p, i).word: i for i in p.vertices}


def is_projective(m):
    if not isinstance(m, StringModule):
        return False
    return m.word in projective_table(m.word.presentation)


def is_injective(m):
    if not isinstance(m, StringModule):
        return False
    return m.word in injective_table(m.word.presentation)


# ---------------------------------------------------------------------------
# text and JSON forms
# ---------------------------------------------------------------------------

def format_module(m):
    if m is ZERO:
        return "zero"
    if isinstance(m, StringModule):
        return format_word(m.word)
    base = format_word(m.band)
    if m.param_degree == 1 and m.level == 1:
        return f"band({base})"
    return f"band({base};{m.param_degree};{m.level})"


def parse_module(p, text):
    text = text.strip()
    if text == "zero":
        return ZERO
    if text.startswith("band(") and text.endswith(")"):
        inner = text[5:-1]
        parts = inner.split(";")
        band = parse_band(p, parts[0])
        deg = int(parts[1]) if len(parts) > 1 else 1
        level = int(parts[2]) if len(parts) > 2 else 1
        return band_module(band, canonical_simple_param(deg), level)
    return string_module(parse_word(p, text))


def module_to_json(m):
    if m is ZERO:
        return json.dumps({"kind": "zero"})
    if isinstance(m, StringModule):
        return json.dumps({"kind": "string", "word": format_word(m.word)})
    return json.dumps({
        "kind": "band",
        "band": format_word(m.band),
        "param_degree": m.param_degree,
        "level": m.level,
    })


def module_from_json(p, text):
    doc = json.loads(text)
    if doc["kind"] == "zero":
        return ZERO
    if doc["kind"] == "string":
        return string_module(parse_word(p, doc["word"]))
    band = parse_band(p, doc["band"])
    return band_module(band, canonical_simple_param(doc["param_degree"]), doc["level"])
