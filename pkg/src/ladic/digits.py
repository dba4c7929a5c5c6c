"""Bi-infinite base-ell digit expansions ``x = sum_n a_n ell**n``.

Digits at ``n >= 0`` are the l-adic expansion of ``[x]``, digits at ``n < 0``
the greedy base-ell expansion of ``{x}``.  For rational coordinates both
sides are eventually periodic, so an expansion is a finite window plus one
repeating block on each side.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction

from .element import SolenoidElement, from_pair
from .errors import DomainError, ParseError
from .rational import PrimeContext, as_context


def _primitive(block: tuple[int, ...]) -> tuple[int, ...]:
    n = len(block)
    for p in range(1, n + 1):
        if n % p == 0 and block == block[:p] * (n // p):
            return block[:p]
    return block


def _rotate(block: tuple[int, ...], k: int) -> tuple[int, ...]:
    k %= len(block)
    return block[k:] + block[:k]


@dataclass(frozen=True)
class DigitExpansion:
    """Digits ``a_lo .. a_(hi-1)`` plus a repeating block on each side.

    ``window[i]`` is ``a_(lo+i)``.  ``padic_tail[j]`` is ``a_(hi+j)`` (ascending
    index) and ``real_tail[j]`` is ``a_(lo-1-j)`` (descending index); both
    repeat forever.  Tails are reduced to primitive blocks on construction.
    """

    ell: int
    lo: int
    hi: int
    window: tuple[int, ...]
    padic_tail: tuple[int, ...]
    real_tail: tuple[int, ...]

    def __post_init__(self):
        if self.lo >= self.hi:
            raise DomainError(f"empty window [{self.lo}, {self.hi})")
        if len(self.window) != self.hi - self.lo:
            raise DomainError("window length does not match [lo, hi)")
        if not self.padic_tail or not self.real_tail:
            raise DomainError("tails must be nonempty")
        for d in (*self.window, *self.padic_tail, *self.real_tail):
            if not 0 <= d < self.ell:
                raise DomainError(f"digit {d} outside 0..{self.ell - 1}")
        if all(d == self.ell - 1 for d in self.real_tail):
            raise DomainError(f"real tail may not repeat {self.ell - 1} forever")
        object.__setattr__(self, "window", tuple(self.window))
        object.__setattr__(self, "padic_tail", _primitive(tuple(self.padic_tail)))
        object.__setattr__(self, "real_tail", _primitive(tuple(self.real_tail)))

    def digit(self, n: int) -> int:
        """``a_n`` for any integer ``n``, reading into the tails as needed."""
        if n >= self.hi:
            return self.padic_tail[(n - self.hi) % len(self.padic_tail)]
        if n < self.lo:
            return self.real_tail[(self.lo - 1 - n) % len(self.real_tail)]
        return self.window[n - self.lo]

    def widen(self, lo: int, hi: int) -> DigitExpansion:
        """Same bi-infinite sequence with the window grown to cover ``[lo, hi)``."""
        lo, hi = min(lo, self.lo), max(hi, self.hi)
        return DigitExpansion(
            self.ell,
            lo,
            hi,
            tuple(self.digit(n) for n in range(lo, hi)),
            _rotate(self.padic_tail, hi - self.hi),
            _rotate(self.real_tail, self.lo - lo),
        )


def _split_cycle(step, state: int) -> tuple[list[int], list[int]]:
    # States are numerators over a fixed denominator; ``step`` maps a state to
    # (digit, next state).  Visited states are remembered to find the cycle.
    seen: dict[int, int] = {}
    digits: list[int] = []
    while state not in seen:
        seen[state] = len(digits)
        d, state = step(state)
        digits.append(d)
    start = seen[state]
    return digits[:start], digits[start:]


def _padic_digits(whole: Fraction, ell: int) -> tuple[list[int], list[int]]:
    """Prefix and repeating block of the l-adic digits ``a_0, a_1, ...`` of ``whole``."""
    den = whole.denominator
    inv = pow(den, -1, ell)

    def step(num):
        d = num * inv % ell
        return d, (num - d * den) // ell

    return _split_cycle(step, whole.numerator)


def _real_digits(frac: Fraction, ell: int) -> tuple[list[int], list[int]]:
    """Prefix and repeating block of the greedy digits ``a_-1, a_-2, ...`` of ``frac``."""
    den = frac.denominator

    def step(num):
        return divmod(num * ell, den)

    return _split_cycle(step, frac.numerator)


def expand(x: SolenoidElement, lo: int, hi: int) -> DigitExpansion:
    """Exact digit expansion of ``x`` over a window containing ``[lo, hi)``.

    The window is widened when needed so that it also contains the
    non-periodic prefix of both sides (and the cut at 0); the tails are then
    purely periodic from the window edges.
    """
    if lo >= hi:
        raise DomainError(f"need lo < hi, got [{lo}, {hi})")
    ell = x.ell
    p_pre, p_cyc = _padic_digits(x.whole, ell)
    r_pre, r_cyc = _real_digits(x.frac, ell)
    hi_eff = max(hi, len(p_pre))
    lo_eff = min(lo, -len(r_pre))

    def a(n: int) -> int:
        if n >= 0:
            return p_pre[n] if n < len(p_pre) else p_cyc[(n - len(p_pre)) % len(p_cyc)]
        k = -n - 1
        return r_pre[k] if k < len(r_pre) else r_cyc[(k - len(r_pre)) % len(r_cyc)]

    return DigitExpansion(
        ell,
        lo_eff,
        hi_eff,
        tuple(a(n) for n in range(lo_eff, hi_eff)),
        _rotate(tuple(p_cyc), hi_eff - len(p_pre)),
        _rotate(tuple(r_cyc), -lo_eff - len(r_pre)),
    )


def _window_sum(d: DigitExpansion) -> Fraction:
    return sum((Fraction(a) * Fraction(d.ell) ** n for n, a in zip(range(d.lo, d.hi), d.window)), Fraction(0))


def _horner(digits, ell: int) -> int:
    # most significant digit first
    value = 0
    for d in digits:
        value = value * ell + d
    return value


def padic_tail_value(d: DigitExpansion) -> Fraction:
    """``sum_{n >= hi} a_n ell**n`` as an l-adic rational (denominator prime to ell)."""
    ell, p = d.ell, len(d.padic_tail)
    block = _horner(reversed(d.padic_tail), ell)
    return Fraction(ell) ** d.hi * Fraction(block, 1 - ell**p)


def real_tail_value(d: DigitExpansion) -> Fraction:
    """``sum_{n < lo} a_n ell**n`` as a real rational in ``[0, ell**lo)``."""
    ell, p = d.ell, len(d.real_tail)
    block = _horner(d.real_tail, ell)
    return Fraction(ell) ** d.lo * Fraction(block, ell**p - 1)


def _check_ctx(d: DigitExpansion, ctx) -> PrimeContext:
    ctx = as_context(ctx if ctx is not None else d.ell)
    if ctx.ell != d.ell:
        raise DomainError(f"expansion is base {d.ell}, context is ell = {ctx.ell}")
    return ctx


def from_digits(d: DigitExpansion, ctx: PrimeContext | int | None = None) -> SolenoidElement:
    """The element whose expansion is ``d``."""
    ctx = _check_ctx(d, ctx)
    return from_pair(_window_sum(d) + padic_tail_value(d), real_tail_value(d), ctx)


def truncate_to_element(d: DigitExpansion, ctx: PrimeContext | int | None = None) -> SolenoidElement:
    """The finite sum over the window only; within ``max(ell**-hi, ell**lo)`` of ``from_digits(d)``."""
    ctx = _check_ctx(d, ctx)
    return from_pair(_window_sum(d), 0, ctx)


# -- text format -------------------------------------------------------------

_DIGITS_RE = re.compile(r"^\s*\(([^()]*)\)([^().]*)\.([^().]*)\(([^()]*)\)\s*$")


def format_digits(d: DigitExpansion) -> str:
    """``(padic tail)a_(hi-1)..a_0.a_(-1)..a_lo(real tail)``.

    The l-adic tail is printed highest index first, like the window to its
    right.  Digits are space separated when ``ell > 10``.
    """
    d = d.widen(0, 0) if d.lo > 0 or d.hi < 0 else d
    sep = " " if d.ell > 10 else ""

    def join(ds):
        return sep.join(str(v) for v in ds)

    left = [d.digit(n) for n in range(d.hi - 1, -1, -1)]
    right = [d.digit(n) for n in range(-1, d.lo - 1, -1)]
    return f"({join(reversed(d.padic_tail))}){join(left)}.{join(right)}({join(d.real_tail)})"


def _tokens(group: str, ell: int) -> list[int]:
    if ell > 10:
        parts = group.split()
    else:
        parts = [c for c in group if not c.isspace()]
    try:
        return [int(p) for p in parts]
    except ValueError:
        raise ParseError(f"bad digit group {group!r}") from None


def parse_digits(text: str, ctx: PrimeContext | int) -> DigitExpansion:
    ell = as_context(ctx).ell
    m = _DIGITS_RE.match(text)
    if m is None:
        raise ParseError(f"not a digit string: {text!r}")
    padic_tail = tuple(reversed(_tokens(m.group(1), ell)))
    left = _tokens(m.group(2), ell)
    right = _tokens(m.group(3), ell)
    real_tail = tuple(_tokens(m.group(4), ell))
    if not padic_tail or not real_tail:
        raise ParseError(f"empty repeating block in {text!r}")
    window = tuple(reversed(right)) + tuple(reversed(left))
    hi, lo = len(left), -len(right)
    if not window:
        # Pull one digit of the l-adic tail into the window to keep lo < hi.
        window, hi = padic_tail[:1], 1
        padic_tail = _rotate(padic_tail, 1)
    try:
        return DigitExpansion(ell, lo, hi, window, padic_tail, real_tail)
    except DomainError as exc:
        raise ParseError(str(exc)) from None
