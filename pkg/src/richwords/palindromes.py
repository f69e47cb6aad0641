"""Palindromic structure of words: the incremental index and derived queries.

``PalIndex`` is a palindromic tree (eertree): one node per distinct
palindromic factor, plus two roots. Appending a letter costs amortized O(1)
and answers, for every prefix, the longest palindromic suffix and whether
that suffix occurred for the first time at that step. A word of length n is
rich (has the maximal number n+1 of distinct palindromic factors, counting
the empty word) exactly when every append created a node, which is what makes
the index the workhorse for richness testing, extension search, and the
enumeration tree.

Appends can be undone with ``pop``, so one index can walk a whole search tree
of words in depth-first order without rebuilding.
"""

from __future__ import annotations

from typing import Iterator

from .errors import EmptyPattern, LengthViolation, NotAFactor, NotRich
from .words import Alphabet, Word

__all__ = [
    "PalIndex",
    "lps",
    "lpp",
    "lpps",
    "lppp",
    "pal_factors",
    "pal_factors_avoiding",
    "is_rich",
    "pal_closure",
    "complete_returns",
]


class PalIndex:
    """Incremental palindrome index over a growing and shrinking word.

    Prefix positions are 1-based lengths: ``lps_length(k)`` talks about the
    prefix consisting of the first k letters.
    """

    __slots__ = (
        "alphabet",
        "_chars",
        "_len",
        "_slink",
        "_trans",
        "_first_end",
        "_last",
        "_lps_node",
        "_lps_new",
        "_defects",
        "_lpp",
        "_steps",
    )

    def __init__(self, alphabet: Alphabet):
        self.alphabet = alphabet
        self._chars: list[str] = []
        # node 0: root of length -1, node 1: root of length 0 (the empty word)
        self._len = [-1, 0]
        self._slink = [0, 0]
        self._trans: list[dict[str, int]] = [{}, {}]
        self._first_end = [0, 0]
        self._last = 1
        # per-position records, index i describes the prefix of length i+1
        self._lps_node: list[int] = []
        self._lps_new: list[bool] = []
        self._defects: list[int] = []  # running count of appends that created nothing
        self._lpp: list[int] = []  # running longest palindromic prefix length
        self._steps: list[tuple[int, int]] = []

    @classmethod
    def of_word(cls, w: Word) -> "PalIndex":
        idx = cls(w.alphabet)
        for ch in w.chars:
            idx.append(ch)
        return idx

    # -- growth ---------------------------------------------------------

    def append(self, ch: str) -> bool:
        """Push one letter; returns True when a new palindrome appeared."""
        chars = self._chars
        lens = self._len
        slink = self._slink
        trans = self._trans
        chars.append(ch)
        n = len(chars) - 1
        x = self._last
        while True:
            if lens[x] == -1:
                break
            j = n - lens[x] - 1
            if j >= 0 and chars[j] == ch:
                break
            x = slink[x]
        prev_last = self._last
        node = trans[x].get(ch)
        if node is None:
            new_len = lens[x] + 2
            if new_len == 1:
                sl = 1
            else:
                y = slink[x]
                while True:
                    if lens[y] == -1:
                        break
                    j = n - lens[y] - 1
                    if j >= 0 and chars[j] == ch:
                        break
                    y = slink[y]
                sl = trans[y][ch]
            node = len(lens)
            lens.append(new_len)
            slink.append(sl)
            trans.append({})
            self._first_end.append(n + 1)
            trans[x][ch] = node
            created = True
        else:
            created = False
        self._last = node
        self._lps_node.append(node)
        self._lps_new.append(created)
        prev_defects = self._defects[-1] if self._defects else 0
        self._defects.append(prev_defects + (0 if created else 1))
        prev_lpp = self._lpp[-1] if self._lpp else 0
        self._lpp.append(n + 1 if lens[node] == n + 1 else prev_lpp)
        self._steps.append((prev_last, x if created else -1))
        return created

    def extend(self, text: str) -> None:
        for ch in text:
            self.append(ch)

    def pop(self) -> None:
        """Undo the most recent append."""
        prev_last, created_parent = self._steps.pop()
        ch = self._chars.pop()
        if created_parent >= 0:
            del self._trans[created_parent][ch]
            self._len.pop()
            self._slink.pop()
            self._trans.pop()
            self._first_end.pop()
        self._lps_node.pop()
        self._lps_new.pop()
        self._defects.pop()
        self._lpp.pop()
        self._last = prev_last

    # -- queries --------------------------------------------------------

    def __len__(self) -> int:
        return len(self._chars)

    @property
    def chars(self) -> str:
        return "".join(self._chars)

    @property
    def distinct_palindromes(self) -> int:
        """Distinct nonempty palindromic factors of the current word."""
        return len(self._len) - 2

    @property
    def rich(self) -> bool:
        """Whether the current word is rich (every append created a palindrome)."""
        return not self._defects or self._defects[-1] == 0

    def rich_prefix(self, k: int) -> bool:
        """Whether the prefix of length k is rich."""
        return k == 0 or self._defects[k - 1] == 0

    def lps_length(self, k: int) -> int:
        """Length of the longest palindromic suffix of the length-k prefix."""
        if k == 0:
            return 0
        return self._len[self._lps_node[k - 1]]

    def lps_is_new(self, k: int) -> bool:
        """Whether the lps of the length-k prefix occurs there for the first time."""
        return self._lps_new[k - 1]

    def lpps_length(self, k: int) -> int:
        """Length of the longest proper palindromic suffix of the length-k prefix.

        Defined here for every k >= 1, with value 0 for a single letter.
        """
        node = self._lps_node[k - 1]
        length = self._len[node]
        if length < k:
            return length
        return self._len[self._slink[node]]

    def std_letter(self, k: int) -> str:
        """The letter whose append extends the length-k prefix standardly.

        For a prefix u with longest proper palindromic suffix p, the standard
        extension appends the letter x that precedes p in u (so the new
        longest palindromic suffix becomes x p x); for k = 1 this is the
        letter itself.
        """
        return self._chars[k - self.lpps_length(k) - 1]

    def lpp_length(self) -> int:
        """Length of the longest palindromic prefix of the current word."""
        return self._lpp[-1] if self._lpp else 0

    def rich_letters(self) -> str:
        """Letters whose append keeps the current (rich) word rich."""
        chars = self._chars
        lens = self._len
        slink = self._slink
        n = len(chars)
        out = []
        for ch in self.alphabet.letters:
            x = self._last
            while True:
                if lens[x] == -1:
                    break
                j = n - lens[x] - 1
                if j >= 0 and chars[j] == ch:
                    break
                x = slink[x]
            if ch not in self._trans[x]:
                out.append(ch)
        return "".join(out)

    def iter_palindromes(self) -> Iterator[str]:
        """Every distinct nonempty palindromic factor, as a display string."""
        s = self.chars
        lens = self._len
        ends = self._first_end
        for node in range(2, len(lens)):
            e = ends[node]
            yield s[e - lens[node] : e]


def _lps_chars(s: str, alphabet: Alphabet) -> str:
    idx = PalIndex(alphabet)
    idx.extend(s)
    n = len(s)
    return s[n - idx.lps_length(n) :]


def lps(w: Word) -> Word:
    """Longest palindromic suffix (the empty word for the empty word)."""
    return w._wrap(_lps_chars(w.chars, w.alphabet))


def lpp(w: Word) -> Word:
    """Longest palindromic prefix (the empty word for the empty word)."""
    rev = w.chars[::-1]
    return w._wrap(_lps_chars(rev, w.alphabet)[::-1])


def lpps(w: Word) -> Word:
    """Longest proper palindromic suffix; requires |w| >= 2."""
    if len(w.chars) < 2:
        raise LengthViolation(f"lpps needs length >= 2, got {len(w.chars)}")
    idx = PalIndex.of_word(w)
    n = len(w.chars)
    return w[n - idx.lpps_length(n) :]


def lppp(w: Word) -> Word:
    """Longest proper palindromic prefix; requires |w| >= 2."""
    if len(w.chars) < 2:
        raise LengthViolation(f"lppp needs length >= 2, got {len(w.chars)}")
    rev = w._wrap(w.chars[::-1])
    idx = PalIndex.of_word(rev)
    n = len(w.chars)
    return w[: idx.lpps_length(n)]


def pal_factors(w: Word) -> set[Word]:
    """All distinct palindromic factors, including the empty word."""
    idx = PalIndex.of_word(w)
    out = {w._wrap("")}
    for p in idx.iter_palindromes():
        out.add(w._wrap(p))
    return out


def pal_factors_avoiding(w: Word, r: Word) -> set[Word]:
    """Palindromic factors of ``w`` in which ``r`` does not occur."""
    target = r.chars
    if not target:
        return set()
    idx = PalIndex.of_word(w)
    out = {w._wrap("")}
    for p in idx.iter_palindromes():
        if target not in p:
            out.add(w._wrap(p))
    return out


def is_rich(w: Word) -> bool:
    """Whether ``w`` has |w| + 1 distinct palindromic factors (with the empty word).

    Tested incrementally: each appended letter must contribute a palindrome
    never seen before, equivalently the longest palindromic suffix of every
    prefix occurs there for the first time.
    """
    return PalIndex.of_word(w).rich


def pal_closure(w: Word) -> Word:
    """Shortest palindrome having ``w`` as a prefix.

    With p the longest palindromic suffix and w = u p, the closure is u p u
    reversed onto the end: u p u^R.
    """
    s = w.chars
    p = _lps_chars(s, w.alphabet)
    head = s[: len(s) - len(p)]
    return w._wrap(s + head[::-1])


def complete_returns(w: Word, u: Word) -> set[Word]:
    """All complete returns to ``u`` in ``w``.

    A complete return is a factor containing exactly two occurrences of
    ``u``, one as a prefix and one as a suffix: the stretch between two
    consecutive occurrences, including both.
    """
    if not u.chars:
        raise EmptyPattern("return pattern must be nonempty")
    s, p = w.chars, u.chars
    starts = []
    pos = s.find(p)
    while pos >= 0:
        starts.append(pos)
        pos = s.find(p, pos + 1)
    if not starts:
        raise NotAFactor(f"{p!r} does not occur in {s!r}")
    out = set()
    for a, b in zip(starts, starts[1:]):
        out.add(w._wrap(s[a : b + len(p)]))
    return out


def require_rich(w: Word) -> PalIndex:
    """Index ``w``, raising ``NotRich`` when it is not rich."""
    idx = PalIndex.of_word(w)
    if not idx.rich:
        raise NotRich(f"{w.chars!r} is not rich")
    return idx
