"""Height coordinates for left tails.

Relative to a context tail ``L``, each left tail gets a ternary
coordinate whose i-th digit is 2 when the last-i ones-counts of the tail
and of ``L`` share parity, else 0.  The context itself gets all digits 2,
i.e. coordinate 1.  Both inputs are eventually periodic, so the digit
stream is too and the coordinate is an exact rational in the
middle-thirds Cantor set.

``compare_tails`` is the matching order on tails: tails compare the way
their coordinates do.  Cylinder blocks of finite words get the midpoint
of their ternary block, digits then ``(1)``.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from math import lcm

from .errors import MalformedSequence
from .sequences import Comparison, LeftTail, Order, canon_right_words, parity


@dataclass(frozen=True)
class CantorCoordinate:
    """Eventually periodic ternary expansion with its exact value."""

    preperiod: str
    period: str

    def __post_init__(self):
        bad = (set(self.preperiod) | set(self.period)) - set("012")
        if bad or not self.period:
            raise MalformedSequence(f"bad ternary digits {self.preperiod!r}({self.period!r})")
        pre, per = canon_right_words(self.preperiod, self.period)
        object.__setattr__(self, "preperiod", pre)
        object.__setattr__(self, "period", per)

    def ternary(self) -> str:
        return f"{self.preperiod}({self.period})"

    def digit(self, i: int) -> int:
        """Digit d_i, 1-based."""
        if i < 1:
            raise IndexError("digits start at 1")
        if i <= len(self.preperiod):
            return int(self.preperiod[i - 1])
        return int(self.period[(i - 1 - len(self.preperiod)) % len(self.period)])

    @cached_property
    def value(self) -> Fraction:
        t, p = len(self.preperiod), len(self.period)
        head = int(self.preperiod, 3) if t else 0
        num = int(self.period, 3)
        return Fraction(head, 3**t) + Fraction(num, (3**p - 1) * 3**t)

    def __str__(self):
        return self.ternary()


def parse_ternary(text: str) -> CantorCoordinate:
    i = text.find("(")
    if i < 0 or not text.endswith(")"):
        raise MalformedSequence(f"not a ternary expansion: {text!r}")
    return CantorCoordinate(text[:i], text[i + 1 : -1])


def _adjusted_period(word: str) -> int:
    # ones-parity of the suffix repeats with this period
    return len(word) if parity(word) == 0 else 2 * len(word)


def cantor_coordinate(tail: LeftTail, context: LeftTail) -> CantorCoordinate:
    """Ternary height of ``tail`` relative to ``context``.

    digit_i is 2 exactly when the number of 1s in the last i symbols of
    the tail and of the context agree mod 2.  The context maps to 1.
    """
    t = max(len(tail.transient), len(context.transient))
    p = lcm(_adjusted_period(tail.period), _adjusted_period(context.period))
    n = t + p
    ws, wl = tail.window(n), context.window(n)
    digits = []
    ps = pl = 0
    for i in range(1, n + 1):
        if ws[n - i] == "1":
            ps ^= 1
        if wl[n - i] == "1":
            pl ^= 1
        digits.append("2" if ps == pl else "0")
    word = "".join(digits)
    return CantorCoordinate(word[:t], word[t:])


def block_midpoint(word: str, context: LeftTail) -> CantorCoordinate:
    """Midpoint height of the cylinder block of a finite window.

    The window's digits pin a ternary block of width 3^-n; the midpoint
    is that block's digit string followed by repeating 1.
    """
    n = len(word)
    wl = context.window(n)
    digits = []
    ps = pl = 0
    for i in range(1, n + 1):
        if word[n - i] == "1":
            ps ^= 1
        if wl[n - i] == "1":
            pl ^= 1
        digits.append("2" if ps == pl else "0")
    return CantorCoordinate("".join(digits), "1")


def compare_tails(a: LeftTail, b: LeftTail, context: LeftTail) -> Comparison:
    """Exact order of two tails relative to a context tail.

    Scan back from the dot for the first disagreeing slot -k.  If the
    ones-count parities of the shared (k-1)-suffix of the pair and of the
    context's (k-1)-suffix agree, the smaller tail is the one that
    disagrees with the context at -k; otherwise the one that agrees.
    Always decided: agreement over one transient plus a full joint period
    means equal words.
    """
    h = max(len(a.transient), len(b.transient)) + lcm(len(a.period), len(b.period))
    wa, wb = a.window(h), b.window(h)
    if wa == wb:
        return Comparison(Order.EQUAL, True)
    k = next(i for i in range(1, h + 1) if wa[h - i] != wb[h - i])
    shared = wa[h - (k - 1) :] if k > 1 else ""
    delta = (parity(shared) + parity(context.window(k - 1))) % 2
    lk = context.at(-k)
    if delta == 0:
        a_less = wb[h - k] == lk
    else:
        a_less = wa[h - k] == lk
    return Comparison(Order.LESS if a_less else Order.GREATER, True)
