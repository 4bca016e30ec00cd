"""Words over signed arrows: strings, bands, canonical forms, enumeration.

Words follow the composition convention of path algebras: in w = c_1...c_m
consecutive letters satisfy s(c_i) = t(c_{i+1}), so the word starts (left)
at t(w) = t(c_1) and ends at s(w) = s(c_m).  A string is a reduced walk
avoiding the relation ideal; a band is a primitive cyclic string all of
whose powers are strings.

Strings are identified with their inverses (relation rho); bands also with
all rotations (rho').  Canonical representatives minimize a fixed letter
order: loops before spine arrows, then by source vertex, direct before
inverse.  All values are immutable.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product

from .algebra import (
    Presentation,
    arrow_named,
    arrows_by_source,
    arrows_by_target,
    is_ctilde,
    relation_lengths,
    spine_arrows,
)
from .errors import DomainError, InternalCheckError, UnsupportedPresentation


@dataclass(frozen=True)
class Letter:
    arrow: object
    sign: int  # +1 direct, -1 formal inverse

    @property
    def source(self):
        return self.arrow.target if self.sign < 0 else self.arrow.source

    @property
    def target(self):
        return self.arrow.source if self.sign < 0 else self.arrow.target

    @property
    def inverse(self):
        return Letter(self.arrow, -self.sign)

    def __repr__(self):
        return self.arrow.name + ("~" if self.sign < 0 else "")


def letter_key(c: Letter):
    a = c.arrow
    return (0 if a.is_loop else 1, a.source, a.target, 0 if c.sign > 0 else 1)


@dataclass(frozen=True)
class StringWord:
    """A string: either trivial at a vertex (with a +-/- side tag) or a
    nonempty word of letters."""

    presentation: Presentation
    letters: tuple[Letter, ...]
    base: int | None = None
    tag: int = 1

    @property
    def is_trivial(self):
        return not self.letters

    @property
    def source(self):
        return self.letters[-1].source if self.letters else self.base

    @property
    def target(self):
        return self.letters[0].target if self.letters else self.base

    def __len__(self):
        return len(self.letters)

    @property
    def inverse(self):
        if not self.letters:
            return StringWord(self.presentation, (), self.base, -self.tag)
        return StringWord(self.presentation, tuple(c.inverse for c in reversed(self.letters)))

    def walk(self):
        """Vertices x_1..x_{m+1} visited by the word."""
        if not self.letters:
            return (self.base,)
        return (self.letters[0].target,) + tuple(c.source for c in self.letters)

    def __repr__(self):
        return format_word(self)


@dataclass(frozen=True)
class Band:
    presentation: Presentation
    letters: tuple[Letter, ...]

    def __len__(self):
        return len(self.letters)

    def walk(self):
        """Vertices x_1..x_m (cyclic; x_{m+1} = x_1)."""
        return tuple(c.target for c in self.letters)

    def __repr__(self):
        return format_letters(self.letters)


def trivial_word(p, vertex, tag=1):
    if vertex not in p.vertices:
        raise DomainError(f"no vertex {vertex}")
    return StringWord(p, (), vertex, tag)


def word(p, letters):
    """Internal fast constructor; no validity check."""
    return StringWord(p, tuple(letters))


def string_word(p, letters):
    """Validating constructor: raises DomainError unless the word is a string."""
    w = word(p, letters)
    if not is_string(w):
        raise DomainError(f"not a string: {format_letters(letters)}")
    return w


def word_sort_key(w: StringWord):
    if w.is_trivial:
        return (0, (w.base,))
    return (len(w.letters), tuple(letter_key(c) for c in w.letters))


# ---------------------------------------------------------------------------
# validity
# ---------------------------------------------------------------------------

def _window_forbidden(p, window):
    """True iff the letter window or its inverse is a relation."""
    rels = set(p.relations)
    if all(c.sign > 0 for c in window):
        if tuple(c.arrow for c in window) in rels:
            return True
    if all(c.sign < 0 for c in window):
        if tuple(c.arrow for c in reversed(window)) in rels:
            return True
    return False


def _letters_valid(p, letters):
    for c, d in zip(letters, letters[1:]):
        if c.source != d.target:
            return False
        if d == c.inverse:
            return False
    m = len(letters)
    for length in relation_lengths(p):
        for i in range(m - length + 1):
            if _window_forbidden(p, letters[i:i + length]):
                return False
    return True


def is_string(w):
    """Validity per the string definition; DomainError on foreign letters."""
    if isinstance(w, Band):
        w = StringWord(w.presentation, w.letters)
    if isinstance(w, StringWord):
        p, letters = w.presentation, w.letters
        if w.is_trivial:
            return w.base in p.vertices and w.tag in (1, -1)
    else:
        raise DomainError("is_string expects a StringWord or Band")
    arrows = set(p.arrows)
    for c in letters:
        if c.arrow not in arrows:
            raise DomainError(f"letter {c!r} does not belong to {p!r}")
    return _letters_valid(p, letters)


def can_append(p, letters, c):
    """Whether letters + (c,) is still backtrack- and relation-free.

    Assumes `letters` is already valid; only the new tail is checked.
    """
    if letters:
        last = letters[-1]
        if last.source != c.target:
            return False
        if c == last.inverse:
            return False
    new = tuple(letters) + (c,)
    for length in relation_lengths(p):
        if len(new) >= length and _window_forbidden(p, new[-length:]):
            return False
    return True


def canonical_string(w: StringWord):
    """Representative of the rho-class {w, w^-1}: minimal in the word order."""
    if not is_string(w):
        raise DomainError("canonical_string requires a string")
    if w.is_trivial:
        return trivial_word(w.presentation, w.base)
    return min(w, w.inverse, key=word_sort_key)


# ---------------------------------------------------------------------------
# bands
# ---------------------------------------------------------------------------

def _as_letter_word(p_or_w, maybe_letters=None):
    if maybe_letters is not None:
        return StringWord(p_or_w, tuple(maybe_letters))
    if isinstance(p_or_w, Band):
        return StringWord(p_or_w.presentation, p_or_w.letters)
    return p_or_w


def is_band(w, letters=None):
    """Nontrivial closed string, all of whose powers are strings, primitive."""
    w = _as_letter_word(w, letters)
    if w.is_trivial or not is_string(w):
        return False
    if w.source != w.target:
        return False
    p = w.presentation
    m = len(w.letters)
    max_rel = max(relation_lengths(p), default=2)
    reps = max(2, -(-max_rel // m) + 1)
    if not _letters_valid(p, w.letters * reps):
        return False
    for d in range(1, m):
        if m % d == 0 and w.letters == w.letters[:d] * (m // d):
            return False
    return True


def canonical_band(b):
    """Representative of the rho'-class: minimum over rotations and inverses."""
    if isinstance(b, StringWord):
        b = Band(b.presentation, b.letters)
    if not is_band(StringWord(b.presentation, b.letters)):
        raise DomainError("canonical_band requires a band")
    m = len(b.letters)
    candidates = []
    for letters in (b.letters, tuple(c.inverse for c in reversed(b.letters))):
        for i in range(m):
            candidates.append(letters[i:] + letters[:i])
    best = min(candidates, key=lambda ls: tuple(letter_key(c) for c in ls))
    return Band(b.presentation, best)


# ---------------------------------------------------------------------------
# enumeration
# ---------------------------------------------------------------------------

def raw_extensions(w: StringWord):
    """All letters c with w.c a string (no side bookkeeping)."""
    p = w.presentation
    at = w.source
    out = []
    for a in arrows_by_target(p)[at]:
        c = Letter(a, 1)
        if can_append(p, w.letters, c):
            out.append(c)
    for a in arrows_by_source(p)[at]:
        c = Letter(a, -1)
        if can_append(p, w.letters, c):
            out.append(c)
    return out


def enumerate_strings(p, max_len):
    """All rho-classes of strings of length <= max_len, canonically sorted.

    The search extends raw words on the right only; every string arises this
    way because its length-(l-1) prefix is again a string.  Deduplication by
    rho happens on the result set, not on the frontier (a word and its
    inverse extend at different ends).
    """
    if max_len < 0:
        raise DomainError("max_len must be >= 0")
    seen = set()
    frontier = [trivial_word(p, u) for u in p.vertices]
    for w in frontier:
        seen.add(canonical_string(w))
    for _ in range(max_len):
        nxt = []
        for w in frontier:
            for c in raw_extensions(w):
                ext = StringWord(p, w.letters + (c,))
                nxt.append(ext)
                seen.add(canonical_string(ext))
        frontier = nxt
    return sorted(seen, key=word_sort_key)


def spine_walk_word(p):
    """The string w_0 from vertex 1 to vertex n using every spine edge once."""
    if not is_ctilde(p):
        raise UnsupportedPresentation("spine walk requires the C-tilde family")
    named = {frozenset((a.source, a.target)): a for a in spine_arrows(p)}
    letters = []
    for k in range(p.n - 1, 0, -1):
        a = named[frozenset((k, k + 1))]
        letters.append(Letter(a, 1) if a.source == k else Letter(a, -1))
    return word(p, letters)


def enumerate_bands(p, max_dl):
    """All rho'-classes of bands of delta-length <= max_dl (C-tilde only).

    Generated from the standard form w0^-1 en^± w0 e1^± ... w0 e1^±, which
    exhausts all bands of the family.
    """
    if not is_ctilde(p):
        raise UnsupportedPresentation("band enumeration requires the C-tilde family")
    if max_dl < 1:
        raise DomainError("max_dl must be >= 1")
    w0 = spine_walk_word(p)
    w0_inv = w0.inverse
    e1 = arrow_named(p)["e1"]
    en = arrow_named(p)[f"e{p.n}"]
    seen = set()
    for m in range(1, max_dl + 1):
        for signs in product((1, -1), repeat=2 * m):
            letters = []
            for j in range(m):
                letters.extend(w0_inv.letters)
                letters.append(Letter(en, signs[2 * j]))
                letters.extend(w0.letters)
                letters.append(Letter(e1, signs[2 * j + 1]))
            cand = word(p, letters)
            if not is_band(cand):
                continue
            if {c.sign for c in cand.letters} != {1, -1}:
                raise InternalCheckError("band without both letter directions")
            seen.add(canonical_band(cand))
    return sorted(seen, key=lambda b: (len(b.letters), tuple(letter_key(c) for c in b.letters)))


def delta_length(b):
    """Number of spine copies in the band's standard form."""
    if isinstance(b, StringWord):
        b = Band(b.presentation, b.letters)
    p = b.presentation
    if not is_ctilde(p):
        raise UnsupportedPresentation("delta-length requires the C-tilde family")
    m1 = sum(1 for c in b.letters if c.arrow.name == "e1")
    mn = sum(1 for c in b.letters if c.arrow.name == f"e{p.n}")
    if m1 != mn or len(b.letters) != 2 * p.n * m1 or m1 == 0:
        raise DomainError("not a band of the C-tilde family")
    return m1


# ---------------------------------------------------------------------------
# concatenation
# ---------------------------------------------------------------------------

def concat(*parts):
    """Concatenate words left to right (composition order); validates result."""
    parts = [w for w in parts if w is not None]
    if not parts:
        raise DomainError("empty concatenation")
    p = parts[0].presentation
    letters = []
    for w in parts:
        letters.extend(w.letters)
    if letters:
        return string_word(p, letters)
    return trivial_word(p, parts[0].base)


# ---------------------------------------------------------------------------
# text forms
# ---------------------------------------------------------------------------

def format_letters(letters):
    return ".".join(c.arrow.name + ("~" if c.sign < 0 else "") for c in letters)


def format_word(w):
    if isinstance(w, Band):
        return format_letters(w.letters)
    if w.is_trivial:
        return f"triv({w.base})"
    return format_letters(w.letters)


def parse_word(p, text):
    """Parse the dotted letter syntax or 'triv(u)'; validates the result."""
    text = text.strip()
    if text.startswith("triv(") and text.endswith(")"):
        try:
            vertex = int(text[5:-1])
        except ValueError:
            raise DomainError(f"bad trivial string: {text!r}") from None
        return trivial_word(p, vertex)
    named = arrow_named(p)
    letters = []
    for chunk in text.split("."):
        chunk = chunk.strip()
        sign = 1
        if chunk.endswith("~"):
            sign = -1
            chunk = chunk[:-1]
        if chunk not in named:
            raise DomainError(f"unknown arrow {chunk!r}")
        letters.append(Letter(named[chunk], sign))
    return string_word(p, letters)


def parse_band(p, text):
    w = parse_word(p, text)
    return canonical_band(w)
