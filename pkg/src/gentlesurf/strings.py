"""Strings, bands, string-module dimension vectors and projective resolutions.

A word is a walk in the quiver written left to right.  A forward letter
traverses an arrow from source to target, an inverse letter from target to
source.  Letter syntax: ``a12`` / ``A12`` for arrow 12 forward / inverse and
``e7`` for the trivial word at vertex 7.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Hashable, Iterable, NamedTuple

from .errors import GentleSurfError, HypothesisViolated, NonComposableWalk, NotGentle, WordNotBand
from .quiver import Arrow, BoundQuiver, Quiver
from .surface import id_key, parse_id

FORWARD, INVERSE = 1, -1


class Letter(NamedTuple):
    arrow: Hashable
    direction: int  # FORWARD or INVERSE

    def inverse(self) -> "Letter":
        return Letter(self.arrow, -self.direction)

    def key(self):
        return (id_key(self.arrow), -self.direction)

    def __str__(self) -> str:
        return ("a" if self.direction == FORWARD else "A") + str(self.arrow)


def letter_start(q: Quiver, L: Letter):
    a = q.arrow[L.arrow]
    return a.source if L.direction == FORWARD else a.target


def letter_end(q: Quiver, L: Letter):
    a = q.arrow[L.arrow]
    return a.target if L.direction == FORWARD else a.source


@dataclass(frozen=True)
class Word:
    start: Hashable
    letters: tuple[Letter, ...] = ()

    def __len__(self) -> int:
        return len(self.letters)

    def vertices(self, q: Quiver) -> list:
        vs = [self.start]
        for L in self.letters:
            vs.append(letter_end(q, L))
        return vs

    def end(self, q: Quiver):
        return letter_end(q, self.letters[-1]) if self.letters else self.start

    def inverse(self, q: Quiver) -> "Word":
        return Word(self.end(q), tuple(L.inverse() for L in reversed(self.letters)))

    def key(self):
        return (len(self.letters), id_key(self.start), tuple(L.key() for L in self.letters))

    def __add__(self, other: "Word") -> "Word":
        return Word(self.start, self.letters + other.letters)

    def __str__(self) -> str:
        if not self.letters:
            return f"e{self.start}"
        return " ".join(map(str, self.letters))


def word_from_letters(q: Quiver, letters: Iterable[Letter], start=None) -> Word:
    letters = tuple(letters)
    if letters:
        start = letter_start(q, letters[0])
    return Word(start, letters)


def parse_word(q: Quiver, text: str) -> Word:
    tokens = [t for t in text.replace(",", " ").split() if t]
    if len(tokens) == 1 and tokens[0][0] == "e":
        v = parse_id(tokens[0][1:])
        if v not in set(q.vertices):
            raise GentleSurfError(f"unknown vertex {v!r}")
        return Word(v)
    letters = []
    for t in tokens:
        if t[0] not in "aA" or len(t) < 2:
            raise GentleSurfError(f"bad letter {t!r}")
        aid = parse_id(t[1:])
        if aid not in q.arrow:
            raise GentleSurfError(f"unknown arrow {aid!r}")
        letters.append(Letter(aid, FORWARD if t[0] == "a" else INVERSE))
    if not letters:
        raise GentleSurfError("empty word")
    w = word_from_letters(q, letters)
    check_composable(q, w)
    return w


def check_composable(q: Quiver, w: Word) -> None:
    cur = w.start
    for i, L in enumerate(w.letters):
        if letter_start(q, L) != cur:
            raise NonComposableWalk(f"letter {i} ({L}) does not start at {cur!r}")
        cur = letter_end(q, L)


def can_follow(bq: BoundQuiver, L1: Letter, L2: Letter) -> bool:
    """Whether L2 may come right after L1 inside a string (composability assumed)."""
    if L1.arrow == L2.arrow and L1.direction != L2.direction:
        return False
    if L1.direction == FORWARD and L2.direction == FORWARD:
        return not bq.is_relation(L1.arrow, L2.arrow)
    if L1.direction == INVERSE and L2.direction == INVERSE:
        return not bq.is_relation(L2.arrow, L1.arrow)
    return True


def is_string(bq: BoundQuiver, w: Word) -> bool:
    check_composable(bq.quiver, w)
    return all(can_follow(bq, a, b) for a, b in zip(w.letters, w.letters[1:]))


def letters_from(q: Quiver, v) -> list[Letter]:
    out = [Letter(a.id, FORWARD) for a in q.out_arrows(v)]
    out += [Letter(a.id, INVERSE) for a in q.in_arrows(v)]
    return sorted(out, key=Letter.key)


def right_extensions(bq: BoundQuiver, w: Word) -> list[Letter]:
    q = bq.quiver
    cands = letters_from(q, w.end(q))
    if not w.letters:
        return cands
    last = w.letters[-1]
    return [L for L in cands if can_follow(bq, last, L)]


def canonical_string(q: Quiver, w: Word) -> Word:
    """Representative of {w, w^-1}."""
    inv = w.inverse(q)
    return min(w, inv, key=Word.key)


def _gentle_bound_ok(bq: BoundQuiver) -> bool:
    from .gentle import check_gentle

    return check_gentle(bq).is_gentle


def _walk_strings(bq: BoundQuiver, max_len: int, check_bound: bool):
    """Every string (as an oriented walk) of length <= max_len."""
    q = bq.quiver
    stack = [Word(v) for v in reversed(q.vertices)]
    while stack:
        w = stack.pop()
        yield w
        if len(w) >= max_len:
            continue
        ext = right_extensions(bq, w)
        if check_bound and w.letters:
            assert len(ext) <= 2, f"string {w} has {len(ext)} one-letter extensions"
        for L in reversed(ext):
            stack.append(Word(w.start, w.letters + (L,)))


def enumerate_strings(bq: BoundQuiver, max_len: int) -> list[Word]:
    """All strings of length <= max_len, one per inversion pair, sorted."""
    q = bq.quiver
    check_bound = _gentle_bound_ok(bq)
    out = [w for w in _walk_strings(bq, max_len, check_bound) if w.key() <= w.inverse(q).key()]
    return sorted(out, key=Word.key)


# bands


@dataclass(frozen=True)
class Band:
    word: Word

    def __len__(self) -> int:
        return len(self.word)

    def __str__(self) -> str:
        return str(self.word)


def rotations(q: Quiver, w: Word) -> list[Word]:
    n = len(w.letters)
    return [word_from_letters(q, w.letters[i:] + w.letters[:i]) for i in range(n)]


def primitive_root(letters: tuple) -> tuple[tuple, int]:
    n = len(letters)
    for d in range(1, n + 1):
        if n % d == 0 and letters[:d] * (n // d) == letters:
            return letters[:d], n // d
    return letters, 1


def is_cyclic_string(bq: BoundQuiver, w: Word) -> bool:
    """Closed nonempty string whose square is again a string."""
    q = bq.quiver
    if not w.letters or w.end(q) != w.start:
        return False
    return is_string(bq, w) and can_follow(bq, w.letters[-1], w.letters[0])


def is_band(bq: BoundQuiver, w: Word) -> bool:
    return is_cyclic_string(bq, w) and primitive_root(w.letters)[1] == 1


def canonical_band(q: Quiver, w: Word, rotation_only: bool = False) -> Word:
    cands = rotations(q, w)
    if not rotation_only:
        cands += rotations(q, w.inverse(q))
    return min(cands, key=Word.key)


def enumerate_bands(bq: BoundQuiver, max_len: int, rotation_only: bool = False) -> list[Band]:
    """Bands of length <= max_len, one per rotation class (and inversion unless
    ``rotation_only``), sorted by length then letters."""
    q = bq.quiver
    found = set()
    for w in _walk_strings(bq, max_len, False):
        if not w.letters or w.end(q) != w.start:
            continue
        if not can_follow(bq, w.letters[-1], w.letters[0]):
            continue
        if primitive_root(w.letters)[1] != 1:
            continue
        c = canonical_band(q, w, rotation_only)
        # each class is reached from each of its rotations; keep the canonical one
        if c == w:
            found.add(c)
    return [Band(w) for w in sorted(found, key=Word.key)]


def band_count_by_length(bq: BoundQuiver, max_len: int, rotation_only: bool = False) -> dict[int, int]:
    counts = Counter(len(b) for b in enumerate_bands(bq, max_len, rotation_only))
    return {L: counts.get(L, 0) for L in range(1, max_len + 1)}


def dim_vector(bq: BoundQuiver, w: Word | Band) -> dict:
    """Multiplicity of each vertex along the string, or once around the band."""
    q = bq.quiver
    if isinstance(w, Band):
        vs = w.word.vertices(q)[:-1]
    else:
        vs = w.vertices(q)
    c = Counter(vs)
    return {v: c.get(v, 0) for v in q.vertices}


# projectives, injectives and the Gorenstein resolutions


def maximal_path(bq: BoundQuiver, first: Arrow) -> list[Arrow]:
    """Longest relation-free path beginning with ``first``."""
    q = bq.quiver
    path = [first]
    seen = {first.id}
    while True:
        nxt = [b for b in q.out_arrows(path[-1].target) if not bq.is_relation(path[-1].id, b.id)]
        if not nxt:
            return path
        if len(nxt) > 1:
            raise NotGentle(f"arrow {path[-1].id!r} has {len(nxt)} relation-free continuations")
        if nxt[0].id in seen:
            raise GentleSurfError("relation-free oriented cycle: algebra is infinite dimensional")
        path.append(nxt[0])
        seen.add(nxt[0].id)


def maximal_path_into(bq: BoundQuiver, last: Arrow) -> list[Arrow]:
    """Longest relation-free path ending with ``last``, in path order."""
    return [Arrow(a.id, a.target, a.source) for a in reversed(maximal_path(bq.opposite(), bq.quiver.opposite().arrow[last.id]))]


def _forward_word(path: list[Arrow]) -> Word:
    return Word(path[0].source, tuple(Letter(a.id, FORWARD) for a in path))


def projective_string(bq: BoundQuiver, x) -> Word:
    """String of P_x: p1^-1 p2 for the maximal relation-free paths leaving x."""
    q = bq.quiver
    outs = sorted(q.out_arrows(x), key=lambda a: id_key(a.id))
    paths = [maximal_path(bq, a) for a in outs]
    if not paths:
        return Word(x)
    w = _forward_word(paths[0]).inverse(q) if len(paths) == 2 else Word(x)
    tail = paths[-1]
    return Word(w.start, w.letters + _forward_word(tail).letters)


def injective_string(bq: BoundQuiver, x) -> Word:
    """String of I_x: q1 q2^-1 for the maximal relation-free paths entering x."""
    q = bq.quiver
    ins = sorted(q.in_arrows(x), key=lambda a: id_key(a.id))
    paths = [maximal_path_into(bq, a) for a in ins]
    if not paths:
        return Word(x)
    # reorient the arrows returned from the opposite quiver
    paths = [[q.arrow[a.id] for a in p] for p in paths]
    w = _forward_word(paths[0])
    if len(paths) == 2:
        w = w + _forward_word(paths[1]).inverse(q)
    return w


def _tail_after(bq: BoundQuiver, path: list[Arrow], x) -> list[Arrow]:
    """Continuation beyond x of the maximal path through ``path`` (which ends at x)."""
    full = maximal_path(bq, path[0])
    return full[len(path):]


def _module_class(q: Quiver, w: Word):
    return canonical_string(q, w)


@dataclass(frozen=True)
class ResolutionReport:
    side: str  # "injective": I_x resolved by projectives; "projective": P_x coresolved by injectives
    vertex: Hashable
    module: Word
    cover: tuple[tuple[Hashable, Word], ...]  # (y, string of P_y) or (y, string of I_y)
    kernel: tuple[tuple[Hashable | None, Word], ...]  # summand and the vertex whose P/I it equals
    kernel_is_projective: bool

    def as_dict(self) -> dict:
        return {
            "side": self.side,
            "vertex": self.vertex,
            "module": str(self.module),
            "cover": [[y, str(w)] for y, w in self.cover],
            "kernel": [[y, str(w)] for y, w in self.kernel],
            "ok": self.kernel_is_projective,
        }


def _check_hypothesis(bq: BoundQuiver) -> None:
    q = bq.quiver
    for a, b in bq.relations:
        ok = any(
            bq.is_relation(b, g.id) and bq.is_relation(g.id, a)
            for g in q.out_arrows(q.arrow[b].target)
        )
        if not ok:
            raise HypothesisViolated(f"relation ({a!r}, {b!r}) does not close up to a 3-cycle of relations")


def _injective_resolution(bq: BoundQuiver, x) -> ResolutionReport:
    q = bq.quiver
    module = injective_string(bq, x)
    ins = sorted(q.in_arrows(x), key=lambda a: id_key(a.id))
    into = [[q.arrow[a.id] for a in maximal_path_into(bq, a)] for a in ins]
    proj = {v: _module_class(q, projective_string(bq, v)) for v in q.vertices}
    cover, kernel = [], []
    tails = []
    for path in into:
        top = path[0].source
        cover.append((top, projective_string(bq, top)))
        # the other branch of P_top, beyond its first arrow
        others = [a for a in q.out_arrows(top) if a.id != path[0].id]
        for o in others:
            rest = maximal_path(bq, o)[1:]
            kernel.append(_forward_word(rest) if rest else Word(o.target))
        tails.append(_tail_after(bq, path, x))
    if len(into) == 2:
        t1, t2 = tails
        w = Word(x)
        if t1:
            w = _forward_word(t1).inverse(q)
        if t2:
            w = Word(w.start, w.letters + _forward_word(t2).letters)
        kernel.append(w)
    elif len(into) == 1:
        (t1,) = tails
        if len(t1) > 1:
            kernel.append(_forward_word(t1[1:]))
        elif t1:
            kernel.append(Word(t1[0].target))
    else:
        cover.append((x, projective_string(bq, x)))
        for o in sorted(q.out_arrows(x), key=lambda a: id_key(a.id)):
            rest = maximal_path(bq, o)[1:]
            kernel.append(_forward_word(rest) if rest else Word(o.target))
    labelled = []
    for w in kernel:
        c = _module_class(q, w)
        match = next((v for v in q.vertices if proj[v] == c), None)
        labelled.append((match, w))
    ok = all(v is not None for v, _ in labelled)
    return ResolutionReport("injective", x, module, tuple(cover), tuple(labelled), ok)


def _flip_word(w: Word) -> Word:
    return Word(w.start, tuple(L.inverse() for L in w.letters))


def verify_gorenstein_one(bq: BoundQuiver) -> list[ResolutionReport]:
    """Resolve every injective by projectives and coresolve every projective
    by injectives in two steps; each report records whether the second term
    is again projective (resp. injective)."""
    _check_hypothesis(bq)
    reports = [_injective_resolution(bq, x) for x in bq.quiver.vertices]
    op = bq.opposite()
    for x in bq.quiver.vertices:
        r = _injective_resolution(op, x)
        # modules over the opposite algebra are dual modules: same vertices, letters reversed
        reports.append(
            ResolutionReport(
                "projective",
                x,
                _flip_word(r.module),
                tuple((y, _flip_word(w)) for y, w in r.cover),
                tuple((y, _flip_word(w)) for y, w in r.kernel),
                r.kernel_is_projective,
            )
        )
    return reports


# growth


@dataclass(frozen=True)
class GrowthReport:
    band_counts: dict
    composable_pair: tuple | None  # (band, band, shared vertex)
    growth_class: str  # RepresentationFinite | DomesticCandidate | NonPolynomial
    saturated: bool

    def as_dict(self) -> dict:
        pair = None
        if self.composable_pair:
            b1, b2, v = self.composable_pair
            pair = {"first": str(b1), "second": str(b2), "vertex": v}
        return {
            "band_counts": {str(k): v for k, v in self.band_counts.items()},
            "composable_pair": pair,
            "class": self.growth_class,
            "saturated": self.saturated,
        }


def rotations_at(q: Quiver, w: Word, v) -> list[Word]:
    return [r for r in rotations(q, w) if r.start == v]


def composable_at(bq: BoundQuiver, b1: Word, b2: Word, v) -> tuple[Word, Word] | None:
    """Rotations of b1 and of b2 or b2^-1 starting at v whose products in any
    order are strings, so that every word in them is a string."""
    q = bq.quiver
    for r1 in rotations_at(q, b1, v):
        for cand in (b2, b2.inverse(q)):
            for r2 in rotations_at(q, cand, v):
                if can_follow(bq, r1.letters[-1], r2.letters[0]) and can_follow(bq, r2.letters[-1], r1.letters[0]):
                    return r1, r2
    return None


def growth_report(bq: BoundQuiver, max_len: int, rotation_only: bool = False) -> GrowthReport:
    q = bq.quiver
    bands = enumerate_bands(bq, max_len, rotation_only)
    counts = Counter(len(b) for b in bands)
    band_counts = {L: counts.get(L, 0) for L in range(1, max_len + 1)}
    pair = None
    pairs = []
    for i, b1 in enumerate(bands):
        for b2 in bands[i + 1:]:
            if len(b1) + len(b2) <= max_len:
                pairs.append((len(b1) + len(b2), i, b1, b2))
    for _, _, b1, b2 in sorted(pairs, key=lambda p: p[:2]):
        shared = set(b1.word.vertices(q)) & set(b2.word.vertices(q))
        for v in sorted(shared, key=id_key):
            hit = composable_at(bq, b1.word, b2.word, v)
            if hit:
                pair = (hit[0], hit[1], v)
                break
        if pair:
            break
    strings_long = any(len(w) > max_len // 2 for w in _walk_strings(bq, max_len, False))
    saturated = not strings_long
    if pair:
        cls = "NonPolynomial"
    elif not bands and saturated:
        cls = "RepresentationFinite"
    else:
        cls = "DomesticCandidate"
    return GrowthReport(band_counts, pair, cls, saturated)
