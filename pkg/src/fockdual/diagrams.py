"""Weight diagrams, core diagrams, blocks, and sign statistics.

A diagram records, for every integer position, which of the two wedge
factors occupies it: 'x' both, '<' plain only, '>' dual only, 'o' neither.
Far left is all 'x' (both tails), far right all 'o'.  Core symbols ('<',
'>') determine the block; the 'x' positions are the degrees of freedom
within a block.
"""

from __future__ import annotations

from dataclasses import dataclass

from .action import Weight, index_sets, unmatched_u, unmatched_w, weight_of
from .partitions import Bipartition

SYMBOLS = ("x", "<", ">", "o")


class MixedWeightError(ValueError):
    """Sign statistics require a pure (all-plus or all-minus) block weight."""


@dataclass(frozen=True)
class WeightDiagram:
    """Canonical window of symbols; 'x' below it, 'o' above it."""

    lo: int
    symbols: tuple[str, ...]

    @property
    def hi(self) -> int:
        return self.lo + len(self.symbols) - 1

    def symbol(self, i: int) -> str:
        if i < self.lo:
            return "x"
        if i > self.hi:
            return "o"
        return self.symbols[i - self.lo]

    def window(self) -> tuple[int, int]:
        return (self.lo, self.hi)

    def core(self) -> "CoreDiagram":
        lt = tuple(self.lo + k for k, s in enumerate(self.symbols) if s == "<")
        gt = tuple(self.lo + k for k, s in enumerate(self.symbols) if s == ">")
        return CoreDiagram(lt, gt)

    def cross_positions(self) -> tuple[int, ...]:
        """The 'x' positions inside the window; below the window all are 'x'."""
        return tuple(self.lo + k for k, s in enumerate(self.symbols) if s == "x")

    def is_packed(self) -> bool:
        """True when no 'o' sits to the left of any 'x'."""
        seen_circle = False
        for s in self.symbols:
            if s == "o":
                seen_circle = True
            elif s == "x" and seen_circle:
                return False
        return True

    def to_json(self, window: tuple[int, int] | None = None) -> dict:
        lo, hi = window if window else (self.lo, self.hi)
        core = self.core()
        return {
            "window": [lo, hi],
            "symbols": "".join(self.symbol(i) for i in range(lo, hi + 1)),
            "core": {"lt": list(core.lt), "gt": list(core.gt)},
        }


@dataclass(frozen=True)
class CoreDiagram:
    """Positions of '<' and '>' only; classifies the block."""

    lt: tuple[int, ...]
    gt: tuple[int, ...]


def diagram_of(bp: Bipartition, t: int) -> WeightDiagram:
    u, w = index_sets(bp, t)
    lo = min(u.tail_start, w.tail_start) + 1
    hi = max(u.max_index(), w.max_index())
    symbols = []
    for i in range(lo, hi + 1):
        in_u, in_w = u.member(i), w.member(i)
        symbols.append("x" if in_u and in_w else "<" if in_u else ">" if in_w else "o")
    while symbols and symbols[0] == "x":
        symbols.pop(0)
        lo += 1
    while symbols and symbols[-1] == "o":
        symbols.pop()
    return WeightDiagram(lo, tuple(symbols))


def diagram_from_json(data: dict) -> WeightDiagram:
    lo = data["window"][0]
    symbols = list(data["symbols"])
    while symbols and symbols[0] == "x":
        symbols.pop(0)
        lo += 1
    while symbols and symbols[-1] == "o":
        symbols.pop()
    return WeightDiagram(lo, tuple(symbols))


def core_of(d: WeightDiagram) -> CoreDiagram:
    return d.core()


def same_block(lam: Bipartition, mu: Bipartition, t: int) -> bool:
    return core_of(diagram_of(lam, t)) == core_of(diagram_of(mu, t))


def weight_from_diagram(d: WeightDiagram) -> Weight:
    core = d.core()
    return Weight.from_items([(i, 1) for i in core.lt] + [(i, -1) for i in core.gt])


def render(d: WeightDiagram, window: tuple[int, int] | None = None) -> str:
    """Window annotation, one character per position, caret under position 0."""
    lo, hi = window if window else (d.lo, d.hi)
    prefix = f"[{lo},{hi}] "
    line = prefix + "".join(d.symbol(i) for i in range(lo, hi + 1))
    if lo <= 0 <= hi:
        line += "\n" + " " * (len(prefix) - lo) + "^"
    return line


def s_of(bp: Bipartition, t: int) -> int:
    """Sum over core symbols of the number of 'x' strictly to their right."""
    d = diagram_of(bp, t)
    crosses = d.cross_positions()
    total = 0
    for p in d.core().lt + d.core().gt:
        total += sum(1 for q in crosses if q > p)
    return total


def u_of(bp: Bipartition, t: int) -> int:
    """Sum of 'x' positions at i >= 0 (t >= 0) resp. i > -t (t < 0)."""
    d = diagram_of(bp, t)
    first = 0 if t >= 0 else -t + 1
    total = sum(q for q in d.cross_positions() if q >= first)
    if d.lo > first:
        # positions below the canonical window are implicit 'x'
        total += sum(range(first, d.lo))
    return total


def _require_pure(bp: Bipartition, t: int) -> None:
    bad = unmatched_u(bp, t) if t >= 0 else unmatched_w(bp, t)
    if bad:
        raise MixedWeightError(
            f"weight of {bp} at t={t} is not {'negative' if t >= 0 else 'positive'}"
        )


def r_remark(bp: Bipartition, t: int) -> int:
    """The closed-form sign exponent s + u read off the diagram (audited)."""
    _require_pure(bp, t)
    return s_of(bp, t) + u_of(bp, t)


def r_operational(bp: Bipartition, t: int) -> int:
    """The sign exponent of the equivariant wedge projection.

    Computed arithmetically (membership counts, no list manipulation):
    the parity of moving the unmatched indices to the front of the host
    wedge, plus the size of the opposite-side partition.  Independent of
    the explicit construction in `action.phi_key`, which it must match.
    """
    _require_pure(bp, t)
    if t >= 0:
        front, host, opposite = unmatched_w(bp, t), index_sets(bp, t)[1], sum(bp.white)
    else:
        front, host, opposite = unmatched_u(bp, t), index_sets(bp, t)[0], sum(bp.black)
    s_sort = sum(host.count_greater(a) - j for j, a in enumerate(front))
    return s_sort + opposite


def discrepancy_law(bp: Bipartition, t: int) -> int:
    """Predicted parity of r_remark - r_operational for a pure-weight vector.

    Equals the sum of displaced indices excluded from the diagram statistic
    (negative ones for t >= 0, those <= -t for t < 0) plus l(l+1)/2 + offset*l
    for l displaced rows on the relevant side with tail offset 0 resp. t.
    """
    u, w = index_sets(bp, t)
    if t >= 0:
        displaced, excluded, offset = u.displaced, [i for i in u.displaced if i < 0], 0
    else:
        displaced, excluded, offset = w.displaced, [i for i in w.displaced if i <= -t], t
    rows = len(displaced)
    return (sum(excluded) + rows * (rows + 1) // 2 + offset * rows) % 2


@dataclass
class SignAuditRow:
    t: int
    lam: Bipartition
    r_remark: int
    r_operational: int
    explained: bool

    @property
    def mismatch(self) -> bool:
        return (self.r_remark - self.r_operational) % 2 != 0

    def to_json(self) -> dict:
        return {
            "t": self.t,
            "lambda": str(self.lam),
            "r_remark": self.r_remark,
            "r_operational": self.r_operational,
            "mismatch": self.mismatch,
            "explained": self.explained,
        }


@dataclass
class SignAuditReport:
    max_size: int
    t_values: tuple[int, ...]
    rows: list[SignAuditRow]

    @property
    def mismatches(self) -> list[SignAuditRow]:
        return [r for r in self.rows if r.mismatch]

    @property
    def unexplained(self) -> list[SignAuditRow]:
        return [r for r in self.rows if r.mismatch and not r.explained]

    @property
    def passed(self) -> bool:
        return not self.unexplained

    def to_json(self) -> dict:
        return {
            "max_size": self.max_size,
            "t_values": list(self.t_values),
            "pure_vectors": len(self.rows),
            "mismatches": [r.to_json() for r in self.mismatches],
            "unexplained": [r.to_json() for r in self.unexplained],
            "passed": self.passed,
        }


def sign_audit(max_size: int, t_values: tuple[int, ...]) -> SignAuditReport:
    """Tabulate r_remark against r_operational over all pure-block vectors.

    A mismatch is explained when its parity equals `discrepancy_law`; any
    other mismatch signals an implementation error.
    """
    from .partitions import enumerate_bipartitions

    rows = []
    for t in t_values:
        for bp in enumerate_bipartitions(max_size):
            try:
                rr, ro = r_remark(bp, t), r_operational(bp, t)
            except MixedWeightError:
                continue
            explained = (rr - ro) % 2 == discrepancy_law(bp, t)
            rows.append(SignAuditRow(t, bp, rr, ro, explained))
    return SignAuditReport(max_size, tuple(t_values), rows)
