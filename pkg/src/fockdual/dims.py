"""Block weights, dimension units q, the Weyl oracle, and minimal tiltings.

A block weight is pure when all its coefficients share one sign; the pure
block at support C = {c_1 > ... > c_|t|} carries the integer dimension
unit q = prod_{a<b in C}(b-a) / prod_{j<|t|} j!, which equals a general
linear group dimension computed independently by the Weyl product formula.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .action import Weight, weight_of
from .diagrams import CoreDiagram, MixedWeightError, core_of, diagram_of, r_operational
from .partitions import Bipartition, from_index_set


class SizeMismatchError(ValueError):
    """Support size must equal |t|."""


class MixedBlockError(ValueError):
    """The operation needs a pure (positive/negative/zero) block."""


@dataclass(frozen=True)
class BlockWeight:
    weight: Weight
    kind: str  # "Positive" | "Negative" | "Mixed" | "Zero"
    support: tuple[int, ...] | None  # decreasing; None when Mixed

    @property
    def pure(self) -> bool:
        return self.kind != "Mixed"

    def to_json(self) -> dict:
        out = {"class": self.kind}
        if self.support is not None:
            out["C"] = list(self.support)
        return out


def classify(theta: Weight, t: int) -> BlockWeight:
    coeffs = {c for _, c in theta.entries}
    support = tuple(sorted(theta.support(), reverse=True))
    if not theta.entries:
        kind = "Zero"
    elif coeffs == {1}:
        kind = "Positive"
    elif coeffs == {-1}:
        kind = "Negative"
    else:
        return BlockWeight(theta, "Mixed", None)
    if len(support) != abs(t):
        raise SizeMismatchError(
            f"pure weight support has {len(support)} entries, expected |t| = {abs(t)}"
        )
    return BlockWeight(theta, kind, support)


def q_theta(support: tuple[int, ...], t: int) -> int:
    """The block dimension unit; always a positive integer."""
    c = tuple(sorted(set(support), reverse=True))
    if len(c) != len(support) or len(c) != abs(t):
        raise SizeMismatchError(f"need {abs(t)} distinct support entries, got {support}")
    num = 1
    for i in range(len(c)):
        for j in range(i + 1, len(c)):
            num *= c[i] - c[j]
    den = 1
    for j in range(1, abs(t)):
        den *= _factorial(j)
    value = Fraction(num, den)
    assert value.denominator == 1 and value > 0, f"q must be a positive integer, got {value}"
    return int(value)


def _factorial(n: int) -> int:
    out = 1
    for k in range(2, n + 1):
        out *= k
    return out


def nu_of(support: tuple[int, ...], t: int) -> tuple[int, ...]:
    """Dominant integral tuple of the block: c_i + i - t (t >= 0) or c_i + i."""
    c = tuple(sorted(set(support), reverse=True))
    if len(c) != len(support) or len(c) != abs(t):
        raise SizeMismatchError(f"need {abs(t)} distinct support entries, got {support}")
    shift = t if t >= 0 else 0
    nu = tuple(ci + (i + 1) - shift for i, ci in enumerate(c))
    assert all(nu[i] >= nu[i + 1] for i in range(len(nu) - 1))
    return nu


def weyl_dim(nu: tuple[int, ...]) -> int:
    """prod_{i<j} (nu_i - nu_j + j - i)/(j - i), exact."""
    k = len(nu)
    if any(nu[i] < nu[i + 1] for i in range(k - 1)):
        raise ValueError("highest weight tuple must be weakly decreasing")
    value = Fraction(1)
    for i in range(k):
        for j in range(i + 1, k):
            value *= Fraction(nu[i] - nu[j] + j - i, j - i)
    assert value.denominator == 1 and value > 0
    return int(value)


def dim_standard(bp: Bipartition, t: int) -> int:
    """Categorical dimension of the standard object: 0 on mixed blocks,
    otherwise a sign times the block unit q."""
    block = classify(weight_of(bp, t), t)
    if not block.pure:
        return 0
    q = q_theta(block.support, t)
    exponent = r_operational(bp, t)
    if t < 0:
        exponent += t * (t - 1) // 2 + sum(block.support)
    return q if exponent % 2 == 0 else -q


def packed_member(core: CoreDiagram, t: int) -> Bipartition:
    """The unique member of the block whose diagram packs all 'x' left of all 'o'.

    The cutoff b (the largest 'x' position) is pinned by the tail count:
    b = #(core <= b) - #lt - 1, the smallest non-core fixed point.  Defined
    for every core; it is the smallest-size member of its block.
    """
    if len(core.gt) - len(core.lt) != t:
        raise SizeMismatchError("core symbol counts do not match the ambient parameter")
    positions = set(core.lt) | set(core.gt)
    # b = #(core <= b) - #lt - 1 forces b into [-#lt - 1, #gt - 1]
    b = None
    for cand in range(-len(core.lt) - 1, len(core.gt)):
        if cand in positions:
            continue
        if sum(1 for p in positions if p <= cand) - len(core.lt) - 1 == cand:
            b = cand
            break
    assert b is not None, "no packing cutoff found in the scanned range"

    def side(side_core: tuple[int, ...], offset: int) -> tuple[int, ...]:
        # walk members of side_core | {non-core <= b} downward; parts are
        # weakly decreasing and hit zero exactly at the packing cutoff
        own = set(side_core)
        prefix = []
        k = 0
        i = max([b, *side_core])
        floor = min([b, 0, *positions]) - len(positions) - 3
        while i >= floor:
            if i in own or (i <= b and i not in positions):
                k += 1
                if i - offset + k <= 0:
                    return from_index_set(prefix, offset)
                prefix.append(i)
            i -= 1
        raise AssertionError("packing walk failed to reach the tail")

    white = side(core.lt, 0)
    black = side(core.gt, t)
    return Bipartition(black, white)


def tilting_from_core(core: CoreDiagram, t: int) -> Bipartition:
    """The label of the unique nonzero-dimension tilting of a pure block."""
    if core.lt and core.gt:
        raise MixedBlockError("block is mixed; no nonzero-dimension tilting exists")
    return packed_member(core, t)


def minimal_tilting_in_block(bp: Bipartition, t: int) -> Bipartition:
    """The bipartition of the unique tilting object with nonzero dimension
    in the block of bp."""
    d = diagram_of(bp, t)
    core = core_of(d)
    if core.lt and core.gt:
        raise MixedBlockError(f"block of {bp} at t={t} is mixed")
    result = tilting_from_core(core, t)
    assert core_of(diagram_of(result, t)) == core
    assert diagram_of(result, t).is_packed()
    return result


def min_member_size(core: CoreDiagram, t: int) -> int:
    """Smallest total size of a bipartition whose diagram has this core."""
    return packed_member(core, t).total


def dims_json(bp: Bipartition, t: int) -> dict:
    """Block data, unit, standard dimension, and minimal tilting for the CLI."""
    block = classify(weight_of(bp, t), t)
    out = {
        "lambda": str(bp),
        "t": t,
        "block": block.to_json(),
        "q": q_theta(block.support, t) if block.pure else None,
        "dim_standard": dim_standard(bp, t),
        "minimal_tilting": str(minimal_tilting_in_block(bp, t)) if block.pure else None,
    }
    return out
