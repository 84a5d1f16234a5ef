"""Oriented tangle diagrams in Morse position.

A tangle is a bottom-to-top word of elementary slices acting on a row of
strands: ``cup i`` births two strands at positions i, i+1; ``cap i`` joins the
strands at i, i+1; ``x+ i`` / ``x- i`` cross them with the left strand passing
over / under.  Orientations are declared (per bottom endpoint and per cup) and
propagated; inconsistent words are rejected.

Boundary points of the whole tangle are numbered clockwise from a basepoint at
the far left: bottom endpoints 1..k left to right, then top endpoints right to
left.

Sign convention: a crossing where the left strand passes over and both strands
point upward is positive; the sign is unchanged when both strand directions
reverse.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from functools import lru_cache


class TangleError(Exception):
    pass


class TangleSyntaxError(TangleError):
    pass


class WidthError(TangleError):
    pass


class OrientationError(TangleError):
    pass


class EndpointCountError(TangleError):
    pass


class MoveError(TangleError):
    pass


CUP, CAP, OVER, UNDER = "cup", "cap", "over", "under"
_CROSSINGS = (OVER, UNDER)


@dataclass(frozen=True)
class Slice:
    kind: str
    pos: int


@dataclass(frozen=True)
class MorseWord:
    """An oriented tangle diagram as a validated slice word."""

    bottom_count: int
    slices: tuple
    bottom_orientations: tuple  # 'up' / 'down' per bottom endpoint
    cup_orientations: tuple     # 'cw' / 'ccw' per cup slice, in slice order

    def __post_init__(self):
        analyze(self)  # validates widths and orientations

    @property
    def top_count(self) -> int:
        return analyze(self).widths[-1]

    @property
    def endpoint_count(self) -> int:
        return self.bottom_count + self.top_count

    def crossing_count(self) -> int:
        return sum(1 for s in self.slices if s.kind in _CROSSINGS)

    def __str__(self) -> str:
        return format_word(self)


class _Analysis:
    """Derived structure of a word: widths, wires, directions, crossings."""

    __slots__ = ("widths", "wire_dir", "levels", "crossings", "top_dirs",
                 "bottom_dirs")

    def __init__(self, widths, wire_dir, levels, crossings, top_dirs,
                 bottom_dirs):
        self.widths = widths
        self.wire_dir = wire_dir      # wire id -> +1 (up) / -1 (down)
        self.levels = levels          # per level, tuple of wire ids
        self.crossings = crossings    # CrossingInfo per crossing slice
        self.top_dirs = top_dirs
        self.bottom_dirs = bottom_dirs


@dataclass(frozen=True)
class CrossingInfo:
    slice_index: int
    pos: int
    kind: str
    d1: int  # direction of the strand on the "/" diagonal (+1 = upward)
    d2: int  # direction of the strand on the "\" diagonal
    sign: int
    rot: int  # quarter-turns carrying the up-up pattern to this one


@dataclass(frozen=True)
class OrientedCrossing:
    """Crossing sign plus the pair of strand directions."""

    sign: int
    orientation_pattern: tuple  # ('up'|'down', 'up'|'down') for ("/", "\\")


_ROT_OF_PATTERN = {(1, 1): 0, (-1, 1): 1, (-1, -1): 2, (1, -1): 3}


def _crossing_sign(kind: str, d1: int, d2: int) -> int:
    parallel = d1 == d2
    if kind == OVER:
        return 1 if parallel else -1
    return -1 if parallel else 1


@lru_cache(maxsize=None)
def analyze(word: MorseWord) -> _Analysis:
    """Trace wires, propagate orientations, and classify crossings."""
    k = word.bottom_count
    if k < 0:
        raise WidthError("negative bottom count")
    if len(word.bottom_orientations) != k:
        raise OrientationError("need one up/down per bottom endpoint")
    n_cups = sum(1 for s in word.slices if s.kind == CUP)
    if len(word.cup_orientations) != n_cups:
        raise OrientationError("need one cw/ccw per cup")

    next_wire = k
    current = list(range(k))
    widths = [k]
    levels = [tuple(current)]
    # orientation constraints: absolute assignments and opposite-direction pairs
    assigned = {}
    for i, o in enumerate(word.bottom_orientations):
        if o not in ("up", "down"):
            raise OrientationError(f"bad bottom orientation {o!r}")
        assigned[i] = 1 if o == "up" else -1
    opposite = []
    raw_crossings = []
    cup_idx = 0
    for t, sl in enumerate(word.slices):
        w = len(current)
        if sl.kind == CUP:
            if not 1 <= sl.pos <= w + 1:
                raise WidthError(
                    f"slice {t}: cup {sl.pos} out of range at width {w}")
            left, right = next_wire, next_wire + 1
            next_wire += 2
            lab = word.cup_orientations[cup_idx]
            cup_idx += 1
            if lab == "cw":
                assigned[left], assigned[right] = 1, -1
            elif lab == "ccw":
                assigned[left], assigned[right] = -1, 1
            else:
                raise OrientationError(f"bad cup orientation {lab!r}")
            current[sl.pos - 1:sl.pos - 1] = [left, right]
        elif sl.kind == CAP:
            if not 1 <= sl.pos <= w - 1:
                raise WidthError(
                    f"slice {t}: cap {sl.pos} out of range at width {w}")
            a, b = current[sl.pos - 1], current[sl.pos]
            opposite.append((a, b))
            del current[sl.pos - 1:sl.pos + 1]
        elif sl.kind in _CROSSINGS:
            if not 1 <= sl.pos <= w - 1:
                raise WidthError(
                    f"slice {t}: crossing {sl.pos} out of range at width {w}")
            a, b = current[sl.pos - 1], current[sl.pos]
            raw_crossings.append((t, sl.pos, sl.kind, a, b))
            current[sl.pos - 1], current[sl.pos] = b, a
        else:
            raise TangleError(f"unknown slice kind {sl.kind!r}")
        widths.append(len(current))
        levels.append(tuple(current))

    # propagate directions through the opposite-pairs graph
    wire_dir = dict(assigned)
    adj = {}
    for a, b in opposite:
        adj.setdefault(a, []).append(b)
        adj.setdefault(b, []).append(a)
    stack = list(wire_dir)
    while stack:
        a = stack.pop()
        for b in adj.get(a, ()):
            want = -wire_dir[a]
            if b in wire_dir:
                if wire_dir[b] != want:
                    raise OrientationError(
                        "inconsistent strand orientations")
            else:
                wire_dir[b] = want
                stack.append(b)
    if len(wire_dir) != next_wire:
        raise OrientationError("strand with undetermined orientation")

    crossings = tuple(
        CrossingInfo(t, pos, kind, wire_dir[a], wire_dir[b],
                     _crossing_sign(kind, wire_dir[a], wire_dir[b]),
                     _ROT_OF_PATTERN[(wire_dir[a], wire_dir[b])])
        for t, pos, kind, a, b in raw_crossings)
    top_dirs = tuple(wire_dir[i] for i in current)
    bottom_dirs = tuple(wire_dir[i] for i in range(k))
    return _Analysis(tuple(widths), wire_dir, tuple(levels), crossings,
                     top_dirs, bottom_dirs)


def crossing_signs(word: MorseWord) -> list:
    """Sign and orientation pattern for each crossing slice, in order."""
    name = {1: "up", -1: "down"}
    return [OrientedCrossing(c.sign, (name[c.d1], name[c.d2]))
            for c in analyze(word).crossings]


def writhe(word: MorseWord) -> int:
    return sum(c.sign for c in analyze(word).crossings)


# ---------------------------------------------------------------------------
# the tangle language


def parse(text: str) -> MorseWord:
    """Parse the tangle language: ';'-separated statements
    ``bottom <k> [up|down]{k}``, ``cup <i> cw|ccw``, ``cap <i>``,
    ``x+ <i>``, ``x- <i>``."""
    bottom = None
    orients = ()
    slices = []
    cups = []
    for idx, stmt in enumerate(text.split(";")):
        words = stmt.split()
        if not words:
            continue
        head = words[0]
        try:
            if head == "bottom":
                if bottom is not None:
                    raise TangleSyntaxError(
                        f"statement {idx}: duplicate bottom declaration")
                k = int(words[1])
                if len(words) != 2 + k:
                    raise TangleSyntaxError(
                        f"statement {idx}: bottom {k} needs {k} orientations")
                orients = tuple(words[2:])
                if any(o not in ("up", "down") for o in orients):
                    raise TangleSyntaxError(
                        f"statement {idx}: orientations must be up/down")
                bottom = k
            elif head == "cup":
                if len(words) != 3 or words[2] not in ("cw", "ccw"):
                    raise TangleSyntaxError(
                        f"statement {idx}: expected 'cup <i> cw|ccw'")
                slices.append(Slice(CUP, int(words[1])))
                cups.append(words[2])
            elif head == "cap":
                if len(words) != 2:
                    raise TangleSyntaxError(
                        f"statement {idx}: expected 'cap <i>'")
                slices.append(Slice(CAP, int(words[1])))
            elif head in ("x+", "x-"):
                if len(words) != 2:
                    raise TangleSyntaxError(
                        f"statement {idx}: expected '{head} <i>'")
                slices.append(Slice(OVER if head == "x+" else UNDER,
                                    int(words[1])))
            else:
                raise TangleSyntaxError(
                    f"statement {idx}: unknown statement {head!r}")
        except ValueError as exc:
            raise TangleSyntaxError(f"statement {idx}: {exc}") from exc
    if bottom is None:
        raise TangleSyntaxError("missing 'bottom' declaration")
    return MorseWord(bottom, tuple(slices), orients, tuple(cups))


def format_word(word: MorseWord) -> str:
    parts = [" ".join(["bottom", str(word.bottom_count),
                       *word.bottom_orientations]).rstrip()]
    cup_idx = 0
    for sl in word.slices:
        if sl.kind == CUP:
            parts.append(f"cup {sl.pos} {word.cup_orientations[cup_idx]}")
            cup_idx += 1
        elif sl.kind == CAP:
            parts.append(f"cap {sl.pos}")
        else:
            parts.append(f"{'x+' if sl.kind == OVER else 'x-'} {sl.pos}")
    return "; ".join(parts) + ";"


# ---------------------------------------------------------------------------
# turning number


def turning_number(word: MorseWord) -> int:
    """Signed count of oriented loops after smoothing every crossing.

    Each loop contributes +-1/2 per critical point: a minimum traversed left
    to right or a maximum traversed right to left counts +1/2, the reverses
    -1/2.  The single open strand is discarded.
    """
    if word.endpoint_count != 2:
        raise EndpointCountError("turning number needs exactly 2 endpoints")
    an = analyze(word)

    parent = {}

    def find(x):
        while parent.get(x, x) != x:
            parent[x] = parent.get(parent[x], parent[x])
            x = parent[x]
        return x

    def union(x, y):
        parent[find(x)] = find(y)

    turns = []  # (port_left, port_right, 'min'|'max')
    port_dir = {}
    next_port = 0

    def new_port(d):
        nonlocal next_port
        p = next_port
        next_port = p + 1
        port_dir[p] = d
        return p

    current = [new_port(d) for d in an.bottom_dirs]
    bottom_ports = list(current)
    ci = iter(an.crossings)
    cup_idx = 0
    for sl in word.slices:
        if sl.kind == CUP:
            lab = word.cup_orientations[cup_idx]
            cup_idx += 1
            dl = 1 if lab == "cw" else -1
            a, b = new_port(dl), new_port(-dl)
            turns.append((a, b, "min"))
            union(a, b)
            current[sl.pos - 1:sl.pos - 1] = [a, b]
        elif sl.kind == CAP:
            a, b = current[sl.pos - 1], current[sl.pos]
            turns.append((a, b, "max"))
            union(a, b)
            del current[sl.pos - 1:sl.pos + 1]
        else:
            info = next(ci)
            a, b = current[sl.pos - 1], current[sl.pos]
            if info.d1 == info.d2:
                # parallel: oriented smoothing is the identity, no swap
                pass
            else:
                # antiparallel: smooth to a maximum below and a minimum above
                turns.append((a, b, "max"))
                union(a, b)
                na, nb = new_port(info.d2), new_port(info.d1)
                turns.append((na, nb, "min"))
                union(na, nb)
                current[sl.pos - 1], current[sl.pos] = na, nb
    open_roots = {find(p) for p in bottom_ports + current}
    total = 0
    for a, b, kind in turns:
        if find(a) in open_roots:
            continue
        if kind == "min":
            total += 1 if port_dir[a] == -1 else -1
        else:
            total += 1 if port_dir[b] == 1 else -1
    if total % 2:
        raise AssertionError("half-turn count of closed loops must be even")
    return total // 2


# ---------------------------------------------------------------------------
# braids


def braid_to_tangle(word, strands: int) -> MorseWord:
    """A 2-endpoint tangle whose closure is the braid closure: strands 2..n
    are trace-closed to the right by nested cups and caps, strand 1 is cut."""
    if strands < 1:
        raise ValueError("strands must be >= 1")
    for g in word:
        if g == 0 or abs(g) > strands - 1:
            raise ValueError(f"generator {g} out of range for {strands} strands")
    slices = [Slice(CUP, i) for i in range(2, strands + 1)]
    cups = ("cw",) * (strands - 1)
    slices += [Slice(OVER if g > 0 else UNDER, abs(g)) for g in word]
    slices += [Slice(CAP, i) for i in range(strands, 1, -1)]
    return MorseWord(1, tuple(slices), ("up",), cups)


# ---------------------------------------------------------------------------
# Reidemeister moves


@dataclass(frozen=True)
class R1Move:
    slice_index: int
    position: int
    side: str       # 'left' | 'right': which side the curl bulges to
    crossing: str   # 'over' | 'under'


@dataclass(frozen=True)
class R2Move:
    slice_index: int
    position: int
    first: str      # kind of the lower inserted crossing: 'over' | 'under'


@dataclass(frozen=True)
class R3Move:
    slice_index: int  # start of three consecutive crossing slices


# Slice-level R3 triples (a, b, c): [a@p, b@p+1, c@p] <-> [c@p+1, b@p, a@p+1].
# Valid exactly when the braid identity s_i^a s_{i+1}^b s_i^c =
# s_{i+1}^c s_i^b s_{i+1}^a holds; the two alternating mixed triples fail it.
VALID_R3_TRIPLES = frozenset(
    t for t in [(OVER, OVER, OVER), (UNDER, UNDER, UNDER),
                (OVER, OVER, UNDER), (UNDER, UNDER, OVER),
                (OVER, UNDER, UNDER), (UNDER, OVER, OVER)])


def _strand_dir_at(word: MorseWord, level: int, position: int) -> int:
    an = analyze(word)
    if not 0 <= level <= len(word.slices):
        raise MoveError(f"level {level} out of range")
    wires = an.levels[level]
    if not 1 <= position <= len(wires):
        raise MoveError(f"no strand at position {position} of level {level}")
    return an.wire_dir[wires[position - 1]]


def _rebuild(word: MorseWord, slices, cups) -> MorseWord:
    return MorseWord(word.bottom_count, tuple(slices),
                     word.bottom_orientations, tuple(cups))


def _cup_label_index(word: MorseWord, slice_index: int) -> int:
    return sum(1 for s in word.slices[:slice_index] if s.kind == CUP)


def apply_move(word: MorseWord, move, seed=None) -> MorseWord:
    """Return a word differing from ``word`` by one oriented Reidemeister
    move.  Raises MoveError when the move does not apply at the site."""
    slices = list(word.slices)
    cups = list(word.cup_orientations)
    if isinstance(move, R1Move):
        t, p = move.slice_index, move.position
        d = _strand_dir_at(word, t, p)
        kind = OVER if move.crossing == "over" else UNDER
        if move.side == "right":
            ins = [Slice(CUP, p + 1), Slice(kind, p), Slice(CAP, p + 1)]
            label = "cw" if d == 1 else "ccw"
        elif move.side == "left":
            ins = [Slice(CUP, p), Slice(kind, p + 1), Slice(CAP, p)]
            label = "cw" if d == -1 else "ccw"
        else:
            raise MoveError(f"bad R1 side {move.side!r}")
        slices[t:t] = ins
        cups.insert(_cup_label_index(word, t), label)
        return _rebuild(word, slices, cups)
    if isinstance(move, R2Move):
        t, p = move.slice_index, move.position
        level_width = analyze(word).widths[t] if t <= len(word.slices) else -1
        if not 1 <= p <= level_width - 1:
            raise MoveError(f"no adjacent strand pair at position {p}")
        first = OVER if move.first == "over" else UNDER
        second = UNDER if first == OVER else OVER
        slices[t:t] = [Slice(first, p), Slice(second, p)]
        return _rebuild(word, slices, cups)
    if isinstance(move, R3Move):
        t = move.slice_index
        try:
            s1, s2, s3 = slices[t], slices[t + 1], slices[t + 2]
        except IndexError:
            raise MoveError("R3 needs three consecutive slices") from None
        kinds = (s1.kind, s2.kind, s3.kind)
        if not all(k in _CROSSINGS for k in kinds):
            raise MoveError("R3 site must be three crossings")
        p = s1.pos
        if s3.pos != p or s2.pos not in (p - 1, p + 1):
            raise MoveError("R3 site must look like p, p+-1, p")
        if kinds not in VALID_R3_TRIPLES:
            raise MoveError(f"not a valid R3 triple: {kinds}")
        q = s2.pos
        slices[t:t + 3] = [Slice(s3.kind, q), Slice(s2.kind, p),
                           Slice(s1.kind, q)]
        return _rebuild(word, slices, cups)
    raise MoveError(f"unknown move {move!r}")


def move_sites(word: MorseWord):
    """All applicable move descriptors on ``word`` (used by the fuzzers)."""
    an = analyze(word)
    out = []
    for t in range(len(word.slices) + 1):
        w = an.widths[t]
        for p in range(1, w + 1):
            for side in ("left", "right"):
                for cr in ("over", "under"):
                    out.append(R1Move(t, p, side, cr))
        for p in range(1, w):
            for first in ("over", "under"):
                out.append(R2Move(t, p, first))
    for t in range(len(word.slices) - 2):
        s1, s2, s3 = word.slices[t:t + 3]
        if (s1.kind in _CROSSINGS and s2.kind in _CROSSINGS
                and s3.kind in _CROSSINGS and s1.pos == s3.pos
                and s2.pos in (s1.pos - 1, s1.pos + 1)
                and (s1.kind, s2.kind, s3.kind) in VALID_R3_TRIPLES):
            out.append(R3Move(t))
    return out


def random_move(rng: random.Random, word: MorseWord):
    return rng.choice(move_sites(word))


def random_word(rng: random.Random, max_crossings: int = 8,
                bottom: int = 1, max_width: int = 6) -> MorseWord:
    """A random valid oriented word, used by the fuzz suites.

    With bottom=1 the result always has exactly 2 endpoints.
    """
    orients = tuple(rng.choice(("up", "down")) for _ in range(bottom))
    slices = []
    cups = []
    dirs = list(1 if o == "up" else -1 for o in orients)
    budget = rng.randint(0, max_crossings)
    steps = rng.randint(budget, budget + 6)
    for _ in range(steps):
        w = len(dirs)
        choices = []
        if w < max_width:
            choices.append(CUP)
        if budget > 0 and w >= 2:
            choices += [OVER, UNDER]
        cap_sites = [p for p in range(1, w) if dirs[p - 1] == -dirs[p]]
        if cap_sites:
            choices.append(CAP)
        if not choices:
            break
        kind = rng.choice(choices)
        if kind == CUP:
            p = rng.randint(1, w + 1)
            lab = rng.choice(("cw", "ccw"))
            slices.append(Slice(CUP, p))
            cups.append(lab)
            dirs[p - 1:p - 1] = [1, -1] if lab == "cw" else [-1, 1]
        elif kind == CAP:
            p = rng.choice(cap_sites)
            slices.append(Slice(CAP, p))
            del dirs[p - 1:p + 1]
        else:
            p = rng.randint(1, w - 1)
            slices.append(Slice(kind, p))
            dirs[p - 1], dirs[p] = dirs[p], dirs[p - 1]
            budget -= 1
    # close down to the smallest width the orientations allow
    while True:
        cap_sites = [p for p in range(1, len(dirs)) if dirs[p - 1] == -dirs[p]]
        if not cap_sites:
            break
        p = rng.choice(cap_sites)
        slices.append(Slice(CAP, p))
        del dirs[p - 1:p + 1]
    return MorseWord(bottom, tuple(slices), orients, tuple(cups))
