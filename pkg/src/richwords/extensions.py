"""Standard extensions of rich words.

Every rich word w with |w| >= 2 has exactly one one-letter extension wa whose
longest palindromic suffix is a p a, where p is the longest proper palindromic
suffix of w; that extension (the standard one) is again rich, and a is simply
the letter that precedes p in w. Iterating standard steps from w eventually
reaches the palindromic closure of w.
"""

from __future__ import annotations

from .errors import LengthViolation, NotAPrefix, NotRich
from .palindromes import PalIndex, require_rich
from .words import Word

__all__ = ["std_ext", "is_std_ext", "max_std_ext", "rich_extensions"]


def _require_extendable(idx: PalIndex, w: Word) -> None:
    if not idx.rich:
        raise NotRich(f"{w.chars!r} is not rich")
    if len(w.chars) < 2:
        raise LengthViolation(
            f"standard extension needs length >= 2, got {len(w.chars)}"
        )


def std_ext(w: Word, steps: int = 1) -> Word:
    """The word obtained from ``w`` by ``steps`` standard one-letter extensions.

    ``steps=0`` returns ``w`` itself. Requires ``w`` rich and |w| >= 2.
    """
    idx = PalIndex.of_word(w)
    _require_extendable(idx, w)
    if steps < 0:
        raise LengthViolation(f"step count must be >= 0, got {steps}")
    out = list(w.chars)
    for _ in range(steps):
        ch = idx.std_letter(len(out))
        idx.append(ch)
        out.append(ch)
    return w._wrap("".join(out))


def is_std_ext(u: Word, v: Word) -> bool:
    """Whether ``u`` arises from ``v`` by standard extensions only.

    True when v is a prefix of u and every letter of u beyond v is the
    standard one. Requires ``v`` rich and |v| >= 2.
    """
    idx = PalIndex.of_word(v)
    _require_extendable(idx, v)
    if not u.chars.startswith(v.chars):
        return False
    for k in range(len(v.chars), len(u.chars)):
        ch = u.chars[k]
        if ch != idx.std_letter(k):
            return False
        idx.append(ch)
    return True


def max_std_ext(u: Word, v: Word) -> Word:
    """The longest prefix of ``u`` that is a standard extension of ``v``.

    Requires ``v`` rich, |v| >= 2, and ``v`` a prefix of ``u``.
    """
    if not u.chars.startswith(v.chars):
        raise NotAPrefix(f"{v.chars!r} is not a prefix of {u.chars!r}")
    idx = PalIndex.of_word(v)
    _require_extendable(idx, v)
    k = len(v.chars)
    s = u.chars
    while k < len(s) and s[k] == idx.std_letter(k):
        idx.append(s[k])
        k += 1
    return u[:k]


def rich_extensions(w: Word) -> frozenset[str]:
    """The letters whose append keeps the rich word ``w`` rich.

    Returned as display letters; always nonempty (the standard letter, or for
    very short words any letter, works).
    """
    idx = require_rich(w)
    return frozenset(idx.rich_letters())
