"""Arcs over the interval: landing indices and horizontal extent.

A left tail describes the history of a point; comparing the symbols next
to the dot with the head of the kneading sequence tells at which forward
images of the turning point the associated arc lands.  A slot count n
"matches" when the last n-1 symbols of the tail equal the first n-1 of
nu.  Matches whose shared word holds an odd number of 1s feed the left
landing index, even ones the right landing index; n=1 always matches and
is even, so the right index exists for every tail.

The horizontal extent of an arc is the interval between the x-positions
of T^lo(c) and T^hi(c), where hi minimizes x over even matches and lo
maximizes x over odd matches (falling back to index 2, the left end of
the core interval).  Match sets of eventually periodic data are either
finite within a computable bound or contain full arithmetic
progressions, which is detected exactly.

Joined pairs: two tails that differ in exactly one slot -m and whose
shared last m-1 symbols equal the head of nu bound a gap at level m; the
bulge side is right when that shared word has an even ones-count.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from math import lcm
from typing import Optional

from .errors import AmbiguousAtDepth, MalformedSequence
from .kneading import C, KneadingSequence, is_admissible_right, is_admissible_tail, tent
from .sequences import (
    Comparison,
    LeftTail,
    Order,
    RightSeq,
    TwoSidedSeq,
    compare_right,
    parity,
    plex_compare,
    shift_two_sided,
    tails_equal_horizon,
)
from .cantor import compare_tails

TAU_INF = math.inf


def match_indices(tail: LeftTail, nu: KneadingSequence, upto: int) -> list:
    """All n in [1, upto] whose last-(n-1) window equals the head of nu."""
    out = []
    for n in range(1, upto + 1):
        if not nu.exact and n - 1 > int(nu.validated_depth):
            break
        if tail.window(n - 1) == nu.expand(n - 1):
            out.append(n)
    return out


def _match_data(tail: LeftTail, nu: KneadingSequence):
    """Representative matches up to the detection bound, their parity
    classes, and the set of parity classes with infinitely many matches."""
    step = lcm(len(tail.period), len(nu.seq.period))
    t0 = len(tail.transient) + len(nu.seq.preperiod)
    bound = t0 + 2 * step + 2
    if not nu.exact:
        bound = min(bound, int(nu.validated_depth) + 1)
    ms = match_indices(tail, nu, bound)
    pclass = {n: parity(nu.expand(n - 1)) for n in ms}
    inf: set = set()
    if nu.exact:
        mset = set(ms)
        blk = nu.seq.expand(len(nu.seq.preperiod) + step)[len(nu.seq.preperiod) :]
        delta = parity(blk)
        for n in ms:
            # two deep matches a full joint period apart pin the tail to
            # the head pattern and the progression continues forever
            if n > t0 and n + step in mset:
                if delta:
                    inf |= {0, 1}
                else:
                    inf.add(pclass[n])
    return ms, pclass, inf


def tau_right(tail: LeftTail, nu: KneadingSequence):
    """Largest even-class match (right landing index); may be TAU_INF."""
    ms, pc, inf = _match_data(tail, nu)
    if 0 in inf:
        return TAU_INF
    return max(n for n in ms if pc[n] == 0)


def tau_left(tail: LeftTail, nu: KneadingSequence):
    """Largest odd-class match above 1, TAU_INF, or None when there is none."""
    ms, pc, inf = _match_data(tail, nu)
    if 1 in inf:
        return TAU_INF
    od = [n for n in ms if pc[n] == 1 and n > 1]
    return max(od) if od else None


def orbit_compare(i: int, j: int, nu: KneadingSequence) -> Comparison:
    """x-order of T^i(c) versus T^j(c) through their itineraries."""
    if i < 1 or j < 1:
        raise IndexError("orbit indices start at 1")
    if nu.exact:
        return compare_right(nu.seq.shift(i - 1), nu.seq.shift(j - 1))
    d = int(nu.validated_depth)
    if i - 1 >= d or j - 1 >= d:
        raise AmbiguousAtDepth(f"orbit index beyond validated depth {d}", depth=d)
    word = nu.expand(d)
    return plex_compare(word[i - 1 :], word[j - 1 :])


def _orbit_cmp_merge(i: int, j: int, nu: KneadingSequence) -> Order:
    # undecided at the available depth means the two cut points cannot be
    # told apart; layout identifies them (kept under the smaller index)
    c = orbit_compare(i, j, nu)
    return c.order if c.decided else Order.EQUAL


@dataclass(frozen=True)
class Projection:
    """Horizontal extent of an arc, as orbit indices of the endpoints."""

    lo_index: int
    hi_index: int
    tau_l: object  # int, TAU_INF, or None
    tau_r: object  # int or TAU_INF
    degenerate: bool


def arc_projection(tail: LeftTail, nu: KneadingSequence) -> Projection:
    ms, pc, inf = _match_data(tail, nu)
    ev = [n for n in ms if pc[n] == 0]
    od = [n for n in ms if pc[n] == 1 and n > 1]
    tr = TAU_INF if 0 in inf else max(ev)
    tl = TAU_INF if 1 in inf else (max(od) if od else None)
    hi = ev[0]
    for n in ev[1:]:
        if _orbit_cmp_merge(n, hi, nu) is Order.LESS:
            hi = n
    if od:
        lo = od[0]
        for n in od[1:]:
            if _orbit_cmp_merge(n, lo, nu) is Order.GREATER:
                lo = n
    else:
        lo = 2
    deg = _orbit_cmp_merge(lo, hi, nu) is Order.EQUAL
    return Projection(lo, hi, tl, tr, deg)


def window_taus(word: str, nu: KneadingSequence):
    """Landing indices computed from a finite window alone."""
    # highest level whose match is certified AND whose cut point can be
    # placed: a truncated nu cannot order the index validated_depth + 1
    cap = len(word) + 1
    if not nu.exact:
        cap = min(cap, int(nu.validated_depth))
    tl, tr = None, 1
    for m in range(2, cap + 1):
        k = m - 1
        if word[len(word) - k :] != nu.expand(k):
            continue
        if parity(nu.expand(k)) == 0:
            tr = m
        else:
            tl = m
    return tl, tr


def window_projection(word: str, nu: KneadingSequence) -> Projection:
    tl, tr = window_taus(word, nu)
    lo = tl if tl is not None else 2
    deg = _orbit_cmp_merge(lo, tr, nu) is Order.EQUAL
    return Projection(lo, tr, tl, tr, deg)


def resolve_x(indices, nu: KneadingSequence, mode: str = "rank", slope=None) -> dict:
    """Map orbit indices to x-positions.

    rank mode: exact order statistics as fractions spread over [0, 1],
    with plex-equal indices sharing one position (the orbit has landed on
    a periodic point).  value mode: the actual orbit of the given slope.
    """
    idx = sorted(set(indices))
    if not idx:
        return {}
    if mode == "value":
        s = slope if slope is not None else nu.slope
        if s is None:
            raise MalformedSequence("value mode needs a slope")
        out = {}
        x = C
        for i in range(1, max(idx) + 1):
            x = tent(s, x)
            if i in idx:
                out[i] = float(x)
        return out
    if mode != "rank":
        raise MalformedSequence(f"unknown x mode {mode!r}")
    groups: list = []
    for i in idx:
        placed = False
        for gi, g in enumerate(groups):
            order = _orbit_cmp_merge(i, g[0], nu)
            if order is Order.EQUAL:
                g.append(i)
                placed = True
                break
            if order is Order.LESS:
                groups.insert(gi, [i])
                placed = True
                break
        if not placed:
            groups.append([i])
    count = len(groups)
    out = {}
    for gi, g in enumerate(groups):
        xv = Fraction(gi, count - 1) if count > 1 else Fraction(0)
        for i in g:
            out[i] = xv
    return out


def side_of_level(nu: KneadingSequence, m: int) -> str:
    if not nu.exact and m - 1 > int(nu.validated_depth):
        raise AmbiguousAtDepth(f"side of level {m} needs more of nu", depth=nu.validated_depth)
    return "right" if parity(nu.expand(m - 1)) == 0 else "left"


def _flip(sym: str) -> str:
    if sym == "0":
        return "1"
    if sym == "1":
        return "0"
    raise MalformedSequence(f"cannot flip symbol {sym!r}")


def flip_at(tail: LeftTail, m: int) -> LeftTail:
    """The tail with the symbol in slot -m flipped."""
    if m < 1:
        raise IndexError("slots are counted from 1 leftward")
    p, t = tail.period, tail.transient
    if m <= len(t):
        i = len(t) - m
        return LeftTail(p, t[:i] + _flip(t[i]) + t[i + 1 :])
    w = tail.window(m)
    phase = tail.window(m + len(p))[: len(p)]
    return LeftTail(phase, _flip(w[0]) + w[1:])


@dataclass(frozen=True)
class Join:
    level: int
    side: str
    low: LeftTail
    high: LeftTail


def boundary_pairs(
    tails,
    nu: KneadingSequence,
    level: Optional[int] = None,
    context: Optional[LeftTail] = None,
    check_tau: bool = False,
) -> list:
    """Joined pairs among the given tails.

    A pair joins at level m when the tails differ in slot -m alone and
    their shared last m-1 symbols equal the head of nu.  With a context
    the pair is ordered by height, otherwise by notation.  check_tau
    additionally demands that m is the landing index on the join's side
    for both tails.
    """
    ts = list(tails)
    out = []
    for ai in range(len(ts)):
        for bi in range(ai + 1, len(ts)):
            a, b = ts[ai], ts[bi]
            h = tails_equal_horizon(a, b)
            wa, wb = a.window(h), b.window(h)
            diffs = [k for k in range(1, h + 1) if wa[h - k] != wb[h - k]]
            if len(diffs) != 1:
                continue
            m = diffs[0]
            if flip_at(a, m) != b:
                continue
            if not nu.exact and m - 1 > int(nu.validated_depth):
                continue  # cannot certify the shared word; not a proven join
            if a.window(m - 1) != nu.expand(m - 1):
                continue
            if level is not None and m != level:
                continue
            side = side_of_level(nu, m)
            if check_tau:
                landing = tau_right if side == "right" else tau_left
                if landing(a, nu) != m or landing(b, nu) != m:
                    continue
            lo, hi = a, b
            if context is not None:
                if compare_tails(b, a, context).order is Order.LESS:
                    lo, hi = b, a
            elif str(b) < str(a):
                lo, hi = b, a
            out.append(Join(m, side, lo, hi))
    out.sort(key=lambda j: (j.level, str(j.low)))
    return out


def _flip_right_at(seq: RightSeq, k: int) -> RightSeq:
    m = max(k + 1, len(seq.preperiod))
    w = seq.expand(m)
    rest = seq.shift(m)  # purely periodic from here
    return RightSeq(w[:k] + _flip(w[k]) + w[k + 1 :], rest.period)


def identify_partner(ts: TwoSidedSeq, nu: KneadingSequence, depth: int = 8):
    """Find the slot whose flip gives the sequence glued to this one.

    Scans slots by increasing distance from the dot (negative side
    first: -1, 0, -2, 1, ...).  A slot qualifies when everything after
    it reads exactly as nu and the flipped sequence is admissible.
    Returns (slot, partner) or None.  With a truncated nu a slot whose
    after-part merely agrees with nu to the validated depth raises
    AmbiguousAtDepth instead of guessing.
    """
    order = []
    for dist in range(1, depth + 1):
        order.append(-dist)
        if dist - 1 < depth:
            order.append(dist - 1)
    for k in order:
        after = shift_two_sided(ts, k + 1).right
        if nu.exact:
            if compare_right(after, nu.seq).order is not Order.EQUAL:
                continue
        else:
            d = int(nu.validated_depth)
            if after.expand(d) != nu.expand(d):
                continue
            raise AmbiguousAtDepth(
                f"slot {k}: tail agrees with nu to depth {d} but nu is truncated there",
                depth=d,
            )
        if k >= 0:
            cand = TwoSidedSeq(ts.left, _flip_right_at(ts.right, k))
        else:
            cand = TwoSidedSeq(flip_at(ts.left, -k), ts.right)
        if is_admissible_tail(cand.left, nu) and is_admissible_right(cand.right, nu):
            return k, cand
    return None
