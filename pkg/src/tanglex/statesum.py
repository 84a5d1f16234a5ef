"""Crossing expansion tables and the two tangle evaluators.

A crossing is rewritten as a formal sum of crossingless local pictures on its
four corners.  Corners are numbered 0 = bottom-left, 1 = bottom-right,
2 = top-right, 3 = top-left (circularly).  The base tables are stated for the
positive and negative crossing with both strands pointing up; the tables for
the other three orientation patterns rotate every local picture by the
quarter-turn count carried in CrossingInfo.rot (resolutions are unoriented,
so rotation only permutes corner labels).

Two table forms are kept: the 7-term undotted form and the equivalent 5-term
dotted form.  ``evaluate_naive`` expands with the 7-term tables and reduces
each state inside the diagram space; ``evaluate_dp`` composes slice by slice
in the quotient space, carrying coordinates in the canonical dotted basis
(at most 2^(width+bottom-1) keys per cut).
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .laurent import LaurentPoly, ONE, ZERO
from .diagram import (ClassVector, DiagramVector, FlatDiagram, canonical_rep,
                      dotted_class)
from .tangle import (CAP, CUP, OVER, UNDER, EndpointCountError, MorseWord,
                     analyze)

_Q = LaurentPoly.q_power(1)
_QI = LaurentPoly.q_power(-1)
_Z = _Q - _QI          # q - q^-1


@dataclass(frozen=True)
class TableTerm:
    coeff: LaurentPoly
    chords: tuple     # ((corner, corner, dotted), ...)
    ticks: frozenset  # of corners


def _term(coeff, chords, ticks):
    norm = tuple(sorted((min(a, b), max(a, b), bool(d)) for a, b, d in chords))
    return TableTerm(coeff, norm, frozenset(ticks))


def _rotate(term: TableTerm, k: int) -> TableTerm:
    if k % 4 == 0:
        return term
    return _term(term.coeff,
                 [((a + k) % 4, (b + k) % 4, d) for a, b, d in term.chords],
                 [(c + k) % 4 for c in term.ticks])


_POS5 = (
    _term(_Q, [(0, 3, True), (1, 2, True)], []),
    _term(_Z, [(0, 3, True)], [1, 2]),
    _term(_Q, [(1, 3, True)], [0, 2]),
    _term(_QI, [(0, 2, True)], [1, 3]),
    _term(-_QI, [], [0, 1, 2, 3]),
)
_NEG5 = (
    _term(_QI, [(0, 3, True), (1, 2, True)], []),
    _term(-_Z, [(1, 2, True)], [0, 3]),
    _term(_QI, [(0, 2, True)], [1, 3]),
    _term(_Q, [(1, 3, True)], [0, 2]),
    _term(-_Q, [], [0, 1, 2, 3]),
)
_POS7 = (
    _term(_Q, [(0, 3, False), (1, 2, False)], []),
    _term(_Q, [(1, 3, False)], [0, 2]),
    _term(-_Q, [(1, 2, False)], [0, 3]),
    _term(-_Q, [], [0, 1, 2, 3]),
    _term(_QI, [(0, 2, False)], [1, 3]),
    _term(-_QI, [(0, 3, False)], [1, 2]),
    _term(-_QI, [], [0, 1, 2, 3]),
)
_NEG7 = (_term(_QI, [(0, 3, False), (1, 2, False)], []),) + _POS7[1:]


class ExpansionTable:
    """All 8 (sign, orientation pattern) crossing tables, dotted and undotted."""

    def __init__(self):
        self.five = {}
        self.seven = {}
        for rot in range(4):
            self.five[(1, rot)] = tuple(_rotate(t, rot) for t in _POS5)
            self.five[(-1, rot)] = tuple(_rotate(t, rot) for t in _NEG5)
            self.seven[(1, rot)] = tuple(_rotate(t, rot) for t in _POS7)
            self.seven[(-1, rot)] = tuple(_rotate(t, rot) for t in _NEG7)

    def smoothing(self, rot: int) -> TableTerm:
        """The oriented-smoothing resolution (the two-cups picture) for a
        pattern; it carries coefficient q / q^-1 in the two tables."""
        return _rotate(_term(ONE, [(0, 3, False), (1, 2, False)], []), rot)


@lru_cache(maxsize=1)
def base_tables() -> ExpansionTable:
    return ExpansionTable()


# ---------------------------------------------------------------------------
# generic application of a local piece to a partial-diagram state
#
# A state is (ends, done):
#   ends[p]  for cut position p (0-based): ('c', partner_position, dot)
#            | ('b', bottom_point, dot) | ('t', None, dot)
#   done     frozenset of ('chord', i, j, dot) and ('tick', i) on bottom points
# The strand dot flag is stored at both ends of a strand.

_CUP_TERM_PLAIN = (_term(ONE, [(2, 3, False)], []),)
_CUP_TERMS_DOTTED = (_term(ONE, [(2, 3, True)], []),
                     _term(ONE, [], [2, 3]))
_CAP_TERM = (_term(ONE, [(0, 1, False)], []),)


def _apply_piece(ends, done, where, term, consumed, produced):
    """Apply one local picture.  ``where`` is the 0-based position of the
    piece's left corner.  Returns (factor, ends', done') or None if killed."""
    ends = list(ends)
    done = set(done)
    factor = 1

    if produced and not consumed:          # cup: make room first
        for i, e in enumerate(ends):
            if e[0] == "c" and e[1] >= where:
                ends[i] = ("c", e[1] + 2, e[2])
        ends[where:where] = [None, None]
    corner_pos = {}
    if consumed:
        corner_pos[0], corner_pos[1] = where, where + 1
    if produced:
        corner_pos[3], corner_pos[2] = where, where + 1

    # build the little strand graph on the piece's corners
    edges = []
    marker = [0]

    def interior():
        marker[0] += 1
        return ("i", marker[0])

    if consumed:
        a, b = ends[where], ends[where + 1]
        if a[0] == "c" and a[1] == where + 1:
            edges.append((("k", 0), ("k", 1), a[2]))
        else:
            for corner, e in ((0, a), (1, b)):
                if e[0] == "c":
                    far = ("c", e[1])
                elif e[0] == "b":
                    far = ("b", e[1])
                else:
                    far = interior()
                edges.append((("k", corner), far, e[2]))
    for u, v, dot in term.chords:
        edges.append((("k", u), ("k", v), dot))
    for c in term.ticks:
        edges.append((("k", c), interior(), False))

    # trace composite strands
    adj = {}
    for idx, (x, y, _) in enumerate(edges):
        adj.setdefault(x, []).append(idx)
        adj.setdefault(y, []).append(idx)
    results = []   # (end_x, end_y, dot) with ends outside the piece
    used = [False] * len(edges)
    for start in list(adj):
        if len(adj[start]) != 1:
            continue  # walk only from path ends
        first = adj[start][0]
        if used[first]:
            continue
        node, dot = start, False
        while True:
            nxt = None
            for idx in adj[node]:
                if not used[idx]:
                    nxt = idx
                    break
            if nxt is None:
                break
            used[nxt] = True
            x, y, d = edges[nxt]
            dot = dot or d
            node = y if x == node else x
        results.append((start, node, dot))
    for idx, (x, y, d) in enumerate(edges):
        if not used[idx]:     # leftover cycles through corners 0,1
            used[idx] = True
            dot = d
            node = y
            while node != x:
                nxt = next(i for i in adj[node] if not used[i])
                used[nxt] = True
                xx, yy, dd = edges[nxt]
                dot = dot or dd
                node = yy if xx == node else xx
            if not dot:
                return None
            factor = -factor

    # install the traced strands back into the state
    new_ports = {}

    def classify(endpoint):
        if endpoint[0] == "k":
            return ("port", corner_pos[endpoint[1]])
        if endpoint[0] == "i":
            return ("interior", None)
        return endpoint  # ('c', pos) or ('b', pt)

    for x, y, dot in results:
        cx, cy = classify(x), classify(y)
        kinds = {cx[0], cy[0]}
        if dot and "interior" in kinds:
            return None
        if cx[0] == "interior" and cy[0] == "interior":
            continue
        if cx[0] == "interior":
            cx, cy = cy, cx
        if cy[0] == "interior":
            if cx[0] == "port":
                new_ports[cx[1]] = ("t", None, dot)
            elif cx[0] == "b":
                done.add(("tick", cx[1]))
            else:
                ends[cx[1]] = ("t", None, dot)
        elif cx[0] == "port" and cy[0] == "port":
            new_ports[cx[1]] = ("c", cy[1], dot)
            new_ports[cy[1]] = ("c", cx[1], dot)
        elif cx[0] == "port" or cy[0] == "port":
            if cy[0] == "port":
                cx, cy = cy, cx
            new_ports[cx[1]] = (cy[0], cy[1], dot)
            if cy[0] == "c":
                ends[cy[1]] = ("c", cx[1], dot)
        elif cx[0] == "b" and cy[0] == "b":
            i, j = min(cx[1], cy[1]), max(cx[1], cy[1])
            done.add(("chord", i, j, dot))
        elif cx[0] == "c" and cy[0] == "c":
            ends[cx[1]] = ("c", cy[1], dot)
            ends[cy[1]] = ("c", cx[1], dot)
        else:
            if cx[0] == "b":
                cx, cy = cy, cx
            ends[cx[1]] = ("b", cy[1], dot)

    for pos, entry in new_ports.items():
        ends[pos] = entry
    if consumed and not produced:          # cap: close the gap
        del ends[where:where + 2]
        for i, e in enumerate(ends):
            assert not (e[0] == "c" and e[1] in (where, where + 1))
            if e[0] == "c" and e[1] > where + 1:
                ends[i] = ("c", e[1] - 2, e[2])
    return factor, tuple(ends), frozenset(done)


def _finalize(ends, done, bottom_count: int) -> FlatDiagram:
    w = len(ends)
    n = bottom_count + w

    def idx(pos0):
        return bottom_count + w - pos0

    chords = []
    ticks = []
    for item in done:
        if item[0] == "chord":
            chords.append((item[1], item[2], item[3]))
        else:
            ticks.append(item[1])
    for p, e in enumerate(ends):
        if e[0] == "c":
            if e[1] > p:
                chords.append((idx(p), idx(e[1]), e[2]))
        elif e[0] == "b":
            chords.append((e[1], idx(p), e[2]))
        else:
            ticks.append(idx(p))
    return FlatDiagram.make(n, chords, ticks)


# ---------------------------------------------------------------------------
# the multilinear (state sum) evaluator


def expand_states(word: MorseWord, dotted: bool = False):
    """Expand every crossing by its table and reduce each state.

    Returns (DiagramVector, raw_state_count); the count includes states that
    were pruned, so it always equals (7 or 5)^(number of crossings).
    """
    an = analyze(word)
    tables = base_tables().five if dotted else base_tables().seven
    branch = 5 if dotted else 7
    k = word.bottom_count

    suffix = [0] * (len(word.slices) + 1)
    for i in range(len(word.slices) - 1, -1, -1):
        suffix[i] = suffix[i + 1] + (word.slices[i].kind in (OVER, UNDER))

    init = (tuple(("b", p + 1, False) for p in range(k)), frozenset())
    states = {init: (ONE, 1)}
    killed = 0
    ci = iter(an.crossings)
    for t, sl in enumerate(word.slices):
        after = branch ** suffix[t + 1]
        if sl.kind == CUP:
            terms, consumed, produced = _CUP_TERM_PLAIN, False, True
        elif sl.kind == CAP:
            terms, consumed, produced = _CAP_TERM, True, False
        else:
            info = next(ci)
            terms = tables[(info.sign, info.rot)]
            consumed = produced = True
        where = sl.pos - 1
        new = {}
        for (ends, done), (coeff, count) in states.items():
            for term in terms:
                res = _apply_piece(ends, done, where, term, consumed, produced)
                if res is None:
                    killed += count * after
                    continue
                factor, e2, d2 = res
                c = coeff * term.coeff
                if factor < 0:
                    c = -c
                key = (e2, d2)
                old_c, old_n = new.get(key, (ZERO, 0))
                # cancelled states are carried with coefficient zero so the
                # raw-state tally stays exact
                new[key] = (old_c + c, old_n + count)
        states = new
    vec = DiagramVector(word.endpoint_count)
    total = killed
    for (ends, done), (coeff, count) in states.items():
        total += count
        if coeff:
            vec.add_term(_finalize(ends, done, k), coeff)
    expected = branch ** word.crossing_count()
    assert total == expected, f"state count {total} != {expected}"
    return vec, total


def evaluate_naive(word: MorseWord) -> DiagramVector:
    """Full expansion over the 7-term tables, reduced in the diagram space."""
    return expand_states(word, dotted=False)[0]


# ---------------------------------------------------------------------------
# the slice-composition evaluator in the quotient space


def _rep_state(subset, k: int, w: int):
    """canonical_rep(subset) on k + w points, as an (ends, done) state."""
    n = k + w
    rep = canonical_rep(subset, n)
    ends = [None] * w
    done = set()

    def pos(idx):
        return k + w - idx

    for i, j, dot in rep.chords:
        if j <= k:
            done.add(("chord", i, j, dot))
        elif i > k:
            ends[pos(i)] = ("c", pos(j), dot)
            ends[pos(j)] = ("c", pos(i), dot)
        else:
            ends[pos(j)] = ("b", i, dot)
    for p in rep.ticks:
        if p <= k:
            done.add(("tick", p))
        else:
            ends[pos(p)] = ("t", None, False)
    return tuple(ends), frozenset(done)


_transition_cache = {}


def _transitions(sig, key, k, w):
    """Lazily built map: basis key -> ((new key, coefficient), ...)."""
    cache = _transition_cache.setdefault(sig, {})
    hit = cache.get(key)
    if hit is not None:
        return hit
    kind = sig[0]
    if kind == CUP:
        terms, consumed, produced = _CUP_TERMS_DOTTED, False, True
        where = sig[1] - 1
    elif kind == CAP:
        terms, consumed, produced = _CAP_TERM, True, False
        where = sig[1] - 1
    else:
        terms = base_tables().five[(sig[2], sig[3])]
        consumed = produced = True
        where = sig[1] - 1
    # the piece acts on cut positions; convert to 0-based list slots, which
    # run left to right while boundary indices run right to left
    ends, done = _rep_state(key, k, w)
    out = []
    for term in terms:
        res = _apply_piece(ends, done, where, term, consumed, produced)
        if res is None:
            continue
        factor, e2, d2 = res
        diag = _finalize(e2, d2, k)
        sign, subset = dotted_class(diag)
        coeff = term.coeff if factor * sign > 0 else -term.coeff
        out.append((subset, coeff))
    out = tuple(out)
    cache[key] = out
    return out


def evaluate_dp(word: MorseWord) -> ClassVector:
    """Coordinates of the tangle in the canonical basis of the quotient
    space, computed by composing one slice at a time."""
    an = analyze(word)
    k = word.bottom_count
    # initial sliver: nested undotted strands from bottom i to cut i
    state = {}
    for bits in range(1 << k):
        s = []
        for p in range(1, k + 1):
            if bits >> (p - 1) & 1:
                s += [p, 2 * k + 1 - p]
        state[tuple(sorted(s))] = ONE
    ci = iter(an.crossings)
    w = k
    for sl in word.slices:
        if sl.kind == CUP:
            sig = (CUP, sl.pos, k, w)
        elif sl.kind == CAP:
            sig = (CAP, sl.pos, k, w)
        else:
            info = next(ci)
            sig = ("x", sl.pos, info.sign, info.rot, k, w)
        new = {}
        for subset, coeff in state.items():
            for s2, co in _transitions(sig, subset, k, w):
                c = new.get(s2, ZERO) + coeff * co
                if c:
                    new[s2] = c
                elif s2 in new:
                    del new[s2]
        state = new
        w += 2 if sl.kind == CUP else (-2 if sl.kind == CAP else 0)
    return ClassVector(k + w, state)


# ---------------------------------------------------------------------------
# the scalar invariant of a 2-endpoint tangle


def delta_scalar(word: MorseWord) -> LaurentPoly:
    """Sum of the state coefficients whose diagram is the bare boundary-to-
    boundary strand: no loops, no strand with exactly one boundary endpoint."""
    if word.endpoint_count != 2:
        raise EndpointCountError("delta needs exactly 2 boundary endpoints")
    v = evaluate_naive(word)
    return v[FlatDiagram.make(2, [(1, 2, False)], [])]


def delta_from_class(cv: ClassVector) -> LaurentPoly:
    """The same scalar read off the quotient coordinates of a 2-endpoint
    tangle; the two keys carry equal values for any true tangle image."""
    if cv.boundary_count != 2:
        raise EndpointCountError("expected a 2-endpoint class vector")
    lam = cv[(1, 2)]
    if lam != cv[()]:
        raise AssertionError(
            "inconsistent quotient coordinates: not a tangle image")
    return lam
