"""Geodesic combings of the Cayley graph: one chosen geodesic per vertex.

Open paths are closed up by returning to their start through the combing;
all mean values of open areas are relative to the chosen combing.
"""

from __future__ import annotations

from .presentation import AbelianPresentation, CanonicalForm
from .words import Word

COMBING_KINDS = ("staircase", "bfs-lex")


class GeodesicCombing:
    """Deterministic rule assigning a geodesic word T[v] to every vertex v."""

    kind: str

    def __init__(self, p: AbelianPresentation):
        self.p = p

    def comb_to(self, v: CanonicalForm) -> Word:
        raise NotImplementedError


class StaircaseCombing(GeodesicCombing):
    """Axis staircase on Z^r: all +-a_1 steps first, then +-a_2, and so on."""

    kind = "staircase"

    def __init__(self, p: AbelianPresentation):
        if not p.is_standard_free:
            raise ValueError("staircase combing needs a standard free-abelian presentation")
        super().__init__(p)

    def comb_to(self, v: CanonicalForm) -> Word:
        codes: list[int] = []
        for i, x in enumerate(v.free_part, start=1):
            codes += [i if x > 0 else -i] * abs(x)
        return Word(tuple(codes))


class BfsLexCombing(GeodesicCombing):
    """Breadth-first tree combing with lexicographic (generator, sign) tie-breaks."""

    kind = "bfs-lex"

    def __init__(self, p: AbelianPresentation):
        super().__init__(p)
        self._parent: dict[CanonicalForm, tuple[CanonicalForm, int] | None] = {
            p.identity(): None
        }
        self._frontier = [p.identity()]
        self._radius = 0

    def _grow(self, radius: int) -> None:
        p = self.p
        while self._radius < radius and self._frontier:
            nxt = []
            for g in self._frontier:
                for code in p.generator_codes:
                    h = p.step(g, code)
                    if h not in self._parent:
                        self._parent[h] = (g, code)
                        nxt.append(h)
            self._frontier = nxt
            self._radius += 1

    def comb_to(self, v: CanonicalForm) -> Word:
        while v not in self._parent:
            if not self._frontier:
                raise ValueError(f"vertex {v} unreachable in the Cayley graph")
            self._grow(self._radius + 1)
        codes: list[int] = []
        node = v
        while True:
            entry = self._parent[node]
            if entry is None:
                break
            node, code = entry
            codes.append(code)
        codes.reverse()
        return Word(tuple(codes))


def make_combing(p: AbelianPresentation, kind: str = "staircase") -> GeodesicCombing:
    if kind == "staircase":
        return StaircaseCombing(p)
    if kind == "bfs-lex":
        return BfsLexCombing(p)
    raise ValueError(f"unknown combing kind {kind!r}; expected one of {COMBING_KINDS}")


def comb_to(c: GeodesicCombing, v: CanonicalForm) -> Word:
    """The geodesic word T[e, v]."""
    return c.comb_to(v)


def comb_between(c: GeodesicCombing, u: CanonicalForm, v: CanonicalForm) -> Word:
    """The word of T[u, v] = u T[e, u^-1 v], read as a path based at u."""
    p = c.p
    return c.comb_to(p.compose(p.inverse_cf(u), v))


def close_path(c: GeodesicCombing, gamma: Word, base: CanonicalForm | None = None) -> Word:
    """Close an open path: gamma followed by the reversed combing word.

    Returns gamma * T[start, end]^-1, a closed word at the base vertex; the
    combing word depends only on the displacement, so the base is optional.
    """
    if gamma.lazy:
        raise ValueError("paths are non-lazy words")
    p = c.p
    displacement = p.canonical_of_word(gamma)
    tilde = c.comb_to(displacement)
    return gamma * tilde.inverse()
