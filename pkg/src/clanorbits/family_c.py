"""The Sp(p,q) family: Sp(2p) x Sp(2q) orbits on the type-C flag variety.

Orbits are the *symmetric* clans of signature (2p, 2q) and length 2n,
n = p + q: mirror positions carry equal signs, pairs mirror to pairs and
never onto themselves.  Simple roots 1..n-1 lift to a pair of mirrored
adjacent moves on the doubled string; root n is a single move at the
middle.  Dimension is d(K) + (l + middle crossings)/2 with d(K) = p^2 + q^2.

A closure is smooth iff the clan avoids the bad patterns or splits as
prefix + open core + mirrored prefix with a pattern-avoiding prefix (the
closure then fibers over a partial flag variety with smooth fiber).
Smooth and rationally smooth coincide, at both isogeny levels.
"""

from __future__ import annotations

from dataclasses import dataclass

from .clans import (
    Clan,
    MINUS,
    PLUS,
    all_sign_clans,
    avoids_bad_patterns,
    concat,
    enumerate_clans,
    is_symmetric,
    length_stat,
    negate,
    reverse_rename,
)
from .closure import _move, lifted_double_move
from .clans import _canonicalize
from .errors import ConsistencyError, InvalidRoot, NotClosed, NotSymmetric, SignatureMismatch

ISOGENY_LEVELS_C = ("sc", "adjoint")


def gamma_circ_c(p: int, q: int) -> Clan:
    """Open-orbit clan: ascending run, doubled sign block, crossed tail.

    Length 2p + 2q; the sign block has 2|p - q| entries ('+' when p > q).
    """
    k = min(p, q)
    sign = PLUS if p >= q else MINUS
    head = list(range(1, 2 * k + 1))
    tail: list[int] = []
    for t in range(k, 0, -1):
        tail += [2 * t - 1, 2 * t]
    return Clan(tuple(head + [sign] * (2 * abs(p - q)) + tail))


def middle_crossings(clan: Clan) -> int:
    """Pairs (s, t) with s in the first half, t in the second, reaching no
    further than the mirror of s (1-based: s <= n < t <= 2n+1-s)."""
    n = len(clan) // 2
    return sum(1 for i, j in clan.pairs if i < n <= j and i + j <= 2 * n - 1)


@dataclass(frozen=True)
class FiberFormC:
    """Witness that a clan splits as prefix + open core + mirrored prefix.

    The orbit closure then fibers over a partial flag variety for K with
    fiber (full type-C flag variety of the core) x (closure of the
    prefix's GL(r) x GL(s) orbit), hence is smooth whenever the prefix
    avoids the bad patterns.
    """

    prefix: Clan
    core: Clan
    r: int
    s: int
    core_p: int
    core_q: int

    def describe(self) -> str:
        return (
            f"prefix {self.prefix or 'empty'} in ({self.r},{self.s}); "
            f"core open orbit of ({self.core_p},{self.core_q})"
        )


class FamilyC:
    name = "c"

    def __init__(self, p: int, q: int):
        if p < 0 or q < 0:
            raise ValueError("signature parts must be nonnegative")
        self.p = p
        self.q = q
        self.n = p + q
        self.clan_length = 2 * self.n
        self.d_K = p * p + q * q

    def meta(self) -> dict:
        return {"family": "c", "p": self.p, "q": self.q}

    def __repr__(self) -> str:
        return f"FamilyC(p={self.p}, q={self.q})"

    def root_indices(self) -> range:
        return range(1, self.n + 1)

    def contains(self, clan: Clan) -> bool:
        return (
            len(clan) == self.clan_length
            and clan.signature == (2 * self.p, 2 * self.q)
            and is_symmetric(clan)
        )

    def _check(self, clan: Clan) -> None:
        if len(clan) != self.clan_length or clan.signature != (2 * self.p, 2 * self.q):
            raise SignatureMismatch(f"{clan} does not live in Sp({self.p},{self.q})")
        if not is_symmetric(clan):
            raise NotSymmetric(f"{clan} is not mirror-symmetric")

    def dimension(self, clan: Clan) -> int:
        self._check(clan)
        total = length_stat(clan) + middle_crossings(clan)
        if total % 2:
            raise ConsistencyError(f"odd length statistic for symmetric clan {clan}")
        return self.d_K + total // 2

    def raise_by(self, clan: Clan, root: int) -> Clan | None:
        n = self.n
        if not 1 <= root <= n:
            raise InvalidRoot(f"root {root} out of range 1..{n}")
        sym = clan.symbols
        if root == n:
            moved = _move(sym, n - 1)
        else:
            moved = lifted_double_move(sym, root - 1, 2 * n - root - 1)
        if moved is None:
            return None
        out = Clan(_canonicalize(moved))
        if not self.contains(out) or self.dimension(out) != self.dimension(clan) + 1:
            raise ConsistencyError(f"raise of {clan} by {root} left the family: {out}")
        return out

    def enumerate(self) -> list[Clan]:
        return [c for c in enumerate_clans(2 * self.p, 2 * self.q) if is_symmetric(c)]

    def closed_clans(self) -> list[Clan]:
        out = []
        for half in all_sign_clans(self.n, self.p):
            out.append(Clan(half.symbols + half.symbols[::-1]))
        return out

    def open_clan(self) -> Clan:
        return gamma_circ_c(self.p, self.q)

    def fiber_form(self, clan: Clan) -> FiberFormC | None:
        """Search all core sizes for a smooth-fiber decomposition."""
        self._check(clan)
        n = self.n
        for m in range(0, n + 1):
            prefix_syms = clan.symbols[:m]
            try:
                prefix = Clan.from_symbols(prefix_syms)
            except ValueError:
                continue
            r, s = prefix.signature
            core_p, core_q = self.p - r, self.q - s
            if core_p < 0 or core_q < 0:
                continue
            core = gamma_circ_c(core_p, core_q)
            if concat(prefix, core, reverse_rename(prefix)) == clan and avoids_bad_patterns(prefix):
                return FiberFormC(prefix, core, r, s, core_p, core_q)
        return None

    def classify(self, clan: Clan) -> bool:
        """True when the orbit closure is smooth: the clan avoids the bad
        patterns, or carries the exceptional fiber-bundle form."""
        self._check(clan)
        return avoids_bad_patterns(clan) or self.fiber_form(clan) is not None

    def positive_roots(self) -> list[tuple[int, int, int]]:
        # long roots 2e_i are never noncompact imaginary, so never listed
        out = []
        for i in range(1, self.n + 1):
            for j in range(i + 1, self.n + 1):
                out.append((i, j, -1))
                out.append((i, j, +1))
        return out

    root_str = staticmethod(
        lambda root: f"e{root[0]}-e{root[1]}" if root[2] < 0 else f"e{root[0]}+e{root[1]}"
    )

    def is_noncompact(self, closed: Clan, root: tuple[int, int, int]) -> bool:
        if not closed.is_all_signs():
            raise NotClosed(f"{closed} is not an all-sign clan")
        i, j, eps = root
        sym = closed.symbols
        other = j - 1 if eps < 0 else 2 * self.n - j
        return sym[i - 1] != sym[other]

    def springer_move(self, closed: Clan, root: tuple[int, int, int]) -> Clan:
        """Replace the root's coordinate quadruple by two fresh pairs."""
        i, j, eps = root
        m = 2 * self.n + 1
        if eps < 0:
            quads = ((i, j), (m - j, m - i))
        else:
            quads = ((i, m - j), (j, m - i))
        out = list(closed.symbols)
        fresh = 2 * self.n + 1
        for pid, (a, b) in enumerate(quads):
            out[a - 1] = out[b - 1] = fresh + pid
        return Clan.from_symbols(out)

    def springer_data(self, closed: Clan) -> list[tuple[tuple[int, int, int], Clan]]:
        """(root, raised clan) for every noncompact imaginary positive root."""
        return [
            (root, self.springer_move(closed, root))
            for root in self.positive_roots()
            if self.is_noncompact(closed, root)
        ]

    def isogeny_fold(self, level: str = "sc"):
        if level not in ISOGENY_LEVELS_C:
            raise ValueError(f"family c levels are {ISOGENY_LEVELS_C}, got {level!r}")
        if level == "adjoint" and self.p == self.q:
            return negate
        return None

    def isogeny_classes(self, level: str = "adjoint") -> list[tuple[Clan, ...]]:
        fold = self.isogeny_fold(level)
        out: dict[Clan, set[Clan]] = {}
        for c in self.enumerate():
            r = c if fold is None else min(c, fold(c))
            out.setdefault(r, set()).add(c)
        return [tuple(sorted(v)) for _, v in sorted(out.items())]
