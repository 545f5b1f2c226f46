"""Chevalley action on the tensor of a dual wedge module with a wedge module.

Basis vectors are indexed by bipartitions: the black partition labels the
dual factor (index offset t), the white partition labels the plain factor
(offset 0).  The generators act factor by factor:

    on the plain side   f_a: u_a -> u_{a+1},   e_a: u_{a+1} -> u_a
    on the dual side    e_a: w_a -> w_{a+1},   f_a: w_{a+1} -> w_a

Each move replaces one index of a strictly decreasing sequence by an
adjacent absent value, which never reorders the sequence, so the wedge
Leibniz rule carries no signs.  All arithmetic is exact.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator, Mapping

from .linalg import Vector, vec_combine
from .partitions import (
    Bipartition,
    IndexSet,
    enumerate_bipartitions,
    u_index_set,
    unmatched_indices,
    w_index_set,
)


@dataclass(frozen=True, order=True)
class Weight:
    """Finitely supported integer functional on the index line.

    Stored as (position, coefficient) pairs, ascending, no zeros.
    """

    entries: tuple[tuple[int, int], ...] = ()

    @classmethod
    def from_items(cls, items: Iterable[tuple[int, int]]) -> "Weight":
        acc: dict[int, int] = {}
        for i, c in items:
            acc[i] = acc.get(i, 0) + c
        return cls(tuple(sorted((i, c) for i, c in acc.items() if c)))

    def coeff(self, i: int) -> int:
        for j, c in self.entries:
            if j == i:
                return c
        return 0

    def support(self) -> tuple[int, ...]:
        return tuple(i for i, _ in self.entries)

    @property
    def is_zero(self) -> bool:
        return not self.entries

    def eval_h(self, a: int) -> int:
        """Value on the Cartan element h_a: coeff(a) - coeff(a+1)."""
        return self.coeff(a) - self.coeff(a + 1)

    def __add__(self, other: "Weight") -> "Weight":
        return Weight.from_items(self.entries + other.entries)

    def __sub__(self, other: "Weight") -> "Weight":
        return Weight.from_items(self.entries + tuple((i, -c) for i, c in other.entries))

    def to_json(self) -> dict[str, int]:
        return {str(i): c for i, c in self.entries}

    @classmethod
    def from_json(cls, data: Mapping[str, int]) -> "Weight":
        return cls.from_items((int(i), c) for i, c in data.items())

    def to_str(self) -> str:
        if not self.entries:
            return "0"
        return "".join(f"{'+' if c > 0 else '-'}th({i})" * abs(c) for i, c in self.entries)


ZERO_WEIGHT = Weight()


def weight_root(a: int) -> Weight:
    """The simple root step th(a) - th(a+1) added by e_a."""
    return Weight.from_items([(a, 1), (a + 1, -1)])


def _move_up(parts: tuple[int, ...], offset: int, a: int) -> tuple[int, ...] | None:
    """Replace index a by a+1; None when a is absent or a+1 occupied."""
    nrows = len(parts)
    tail_start = offset - nrows - 1
    if a < tail_start:
        return None
    if a == tail_start:
        if nrows and parts[nrows - 1] + offset - nrows == a + 1:
            return None
        return parts + (1,)
    for k, p in enumerate(parts):
        v = p + offset - (k + 1)
        if v == a:
            if k and parts[k - 1] + offset - k == a + 1:
                return None
            return parts[:k] + (p + 1,) + parts[k + 1 :]
        if v < a:
            break
    return None


def _move_down(parts: tuple[int, ...], offset: int, a: int) -> tuple[int, ...] | None:
    """Replace index a+1 by a; None when a+1 is absent or a occupied."""
    nrows = len(parts)
    tail_start = offset - nrows - 1
    if a + 1 <= tail_start:
        return None
    for k, p in enumerate(parts):
        v = p + offset - (k + 1)
        if v == a + 1:
            below = parts[k + 1] + offset - (k + 2) if k + 1 < nrows else tail_start
            if below == a:
                return None
            if p == 1:
                return parts[:k]
            return parts[:k] + (p - 1,) + parts[k + 1 :]
        if v < a + 1:
            break
    return None


_KEY_CACHE: dict[tuple[str, int, int, tuple[int, ...], tuple[int, ...]], tuple[Bipartition, ...]] = {}


def apply_e_key(bp: Bipartition, a: int, t: int) -> tuple[Bipartition, ...]:
    """Terms of e_a on a basis vector: 0, 1 or 2 keys, each with coefficient +1."""
    cached = _KEY_CACHE.get(("e", a, t, bp.black, bp.white))
    if cached is None:
        terms = []
        black = _move_up(bp.black, t, a)
        if black is not None:
            terms.append(Bipartition(black, bp.white))
        white = _move_down(bp.white, 0, a)
        if white is not None:
            terms.append(Bipartition(bp.black, white))
        cached = tuple(terms)
        _KEY_CACHE[("e", a, t, bp.black, bp.white)] = cached
    return cached


def apply_f_key(bp: Bipartition, a: int, t: int) -> tuple[Bipartition, ...]:
    """Terms of f_a on a basis vector: 0, 1 or 2 keys, each with coefficient +1."""
    cached = _KEY_CACHE.get(("f", a, t, bp.black, bp.white))
    if cached is None:
        terms = []
        black = _move_down(bp.black, t, a)
        if black is not None:
            terms.append(Bipartition(black, bp.white))
        white = _move_up(bp.white, 0, a)
        if white is not None:
            terms.append(Bipartition(bp.black, white))
        cached = tuple(terms)
        _KEY_CACHE[("f", a, t, bp.black, bp.white)] = cached
    return cached


class ModuleVector:
    """Finite linear combination of basis bipartitions at a fixed ambient t."""

    __slots__ = ("t", "terms")

    def __init__(self, t: int, terms: Mapping[Bipartition, object] | None = None):
        self.t = t
        self.terms: Vector = {}
        if terms:
            for k, c in terms.items():
                c = Fraction(c)
                if c:
                    self.terms[k] = c

    @classmethod
    def basis(cls, t: int, bp: Bipartition) -> "ModuleVector":
        return cls(t, {bp: 1})

    @property
    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other) -> bool:
        return isinstance(other, ModuleVector) and self.t == other.t and self.terms == other.terms

    def __add__(self, other: "ModuleVector") -> "ModuleVector":
        if self.t != other.t:
            raise ValueError("ambient parameters differ")
        return ModuleVector(self.t, vec_combine(self.terms, other.terms, 1))

    def __sub__(self, other: "ModuleVector") -> "ModuleVector":
        if self.t != other.t:
            raise ValueError("ambient parameters differ")
        return ModuleVector(self.t, vec_combine(self.terms, other.terms, -1))

    def scale(self, c) -> "ModuleVector":
        return ModuleVector(self.t, {k: Fraction(c) * x for k, x in self.terms.items()})

    def items(self) -> Iterator[tuple[Bipartition, Fraction]]:
        return iter(sorted(self.terms.items(), key=lambda kv: kv[0].sort_key()))

    def __repr__(self) -> str:
        body = " + ".join(f"{c}*v[{k}]" for k, c in self.items()) or "0"
        return f"ModuleVector(t={self.t}: {body})"


def _apply_terms(keyop, v: ModuleVector, a: int) -> ModuleVector:
    out: Vector = {}
    for bp, c in v.terms.items():
        for term in keyop(bp, a, v.t):
            s = out.get(term, Fraction(0)) + c
            if s:
                out[term] = s
            else:
                del out[term]
    return ModuleVector(v.t, out)


def apply_e(a: int, v: ModuleVector) -> ModuleVector:
    return _apply_terms(apply_e_key, v, a)


def apply_f(a: int, v: ModuleVector) -> ModuleVector:
    return _apply_terms(apply_f_key, v, a)


def apply_h(a: int, v: ModuleVector) -> ModuleVector:
    """The Cartan element, computed literally as [e_a, f_a]."""
    return apply_e(a, apply_f(a, v)) - apply_f(a, apply_e(a, v))


def index_sets(bp: Bipartition, t: int) -> tuple[IndexSet, IndexSet]:
    """(plain-side, dual-side) index sets of the basis vector."""
    return u_index_set(bp.white), w_index_set(bp.black, t)


def unmatched_u(bp: Bipartition, t: int) -> tuple[int, ...]:
    u, w = index_sets(bp, t)
    return unmatched_indices(u, w)


def unmatched_w(bp: Bipartition, t: int) -> tuple[int, ...]:
    u, w = index_sets(bp, t)
    return unmatched_indices(w, u)


def weight_of(bp: Bipartition, t: int) -> Weight:
    """+th(i) per unmatched plain index, -th(i) per unmatched dual index."""
    return Weight.from_items(
        [(i, 1) for i in unmatched_u(bp, t)] + [(i, -1) for i in unmatched_w(bp, t)]
    )


class WedgeTVector:
    """Linear combination of strictly decreasing |t|-tuples.

    For t >= 0 the tuples list dual-side indices, for t < 0 plain-side
    indices; t = 0 degenerates to the scalar line keyed by the empty tuple.
    """

    __slots__ = ("t", "terms")

    def __init__(self, t: int, terms: Mapping[tuple[int, ...], object] | None = None):
        self.t = t
        self.terms: Vector = {}
        if terms:
            for k, c in terms.items():
                c = Fraction(c)
                if c:
                    self.terms[k] = c

    @property
    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other) -> bool:
        return isinstance(other, WedgeTVector) and self.t == other.t and self.terms == other.terms

    def __sub__(self, other: "WedgeTVector") -> "WedgeTVector":
        if self.t != other.t:
            raise ValueError("ambient parameters differ")
        return WedgeTVector(self.t, vec_combine(self.terms, other.terms, -1))

    def __repr__(self) -> str:
        letter = "w" if self.t >= 0 else "u"
        body = " + ".join(f"{c}*{letter}{list(k)}" for k, c in sorted(self.terms.items())) or "0"
        return f"WedgeTVector(t={self.t}: {body})"


def tuple_move(key: tuple[int, ...], src: int, dst: int) -> tuple[int, ...] | None:
    """Replace src by dst (dst = src +- 1) in a strictly decreasing tuple."""
    if src not in key or dst in key:
        return None
    return tuple(dst if i == src else i for i in key)


def _wedge_terms(wv: WedgeTVector, up_moves: bool, a: int) -> WedgeTVector:
    # dual-side tuples move up under e, plain-side tuples move up under f
    src, dst = (a, a + 1) if up_moves else (a + 1, a)
    out: Vector = {}
    for key, c in wv.terms.items():
        moved = tuple_move(key, src, dst)
        if moved is not None:
            s = out.get(moved, Fraction(0)) + c
            if s:
                out[moved] = s
            else:
                del out[moved]
    return WedgeTVector(wv.t, out)


def wedge_apply_e(a: int, wv: WedgeTVector) -> WedgeTVector:
    return _wedge_terms(wv, wv.t >= 0, a)


def wedge_apply_f(a: int, wv: WedgeTVector) -> WedgeTVector:
    return _wedge_terms(wv, wv.t < 0, a)


def phi_key(bp: Bipartition, t: int) -> tuple[int, tuple[int, ...]] | None:
    """Image of a basis vector: (sign, decreasing |t|-tuple), or None when zero.

    Nonzero exactly when the weight is negative (t >= 0) or positive (t < 0).
    The sign exponent is the parity of moving the unmatched indices to the
    front of the host wedge plus the size of the opposite-side partition;
    this is the unique choice (vacuum normalized to +1) that commutes with
    the sign-free derivation action, verified against iterated contractions.
    Computed here by explicit list manipulation; the arithmetic counterpart
    lives in `diagrams.r_operational`.
    """
    if t >= 0:
        front, host, opposite_size = unmatched_w(bp, t), index_sets(bp, t)[1], sum(bp.white)
        if unmatched_u(bp, t):
            return None
    else:
        front, host, opposite_size = unmatched_u(bp, t), index_sets(bp, t)[0], sum(bp.black)
        if unmatched_w(bp, t):
            return None
    swaps = opposite_size
    if front:
        prefix = []
        k = 1
        while True:
            i = host.entry(k)
            prefix.append(i)
            if i == front[-1]:
                break
            k += 1
        swaps += sum(prefix.index(a_j) - j for j, a_j in enumerate(front))
    return (-1 if swaps % 2 else 1), front


def phi(v: ModuleVector) -> WedgeTVector:
    """The equivariant projection onto the |t|-fold wedge, extended linearly."""
    out: Vector = {}
    for bp, c in v.terms.items():
        image = phi_key(bp, v.t)
        if image is None:
            continue
        sign, key = image
        s = out.get(key, Fraction(0)) + sign * c
        if s:
            out[key] = s
        else:
            del out[key]
    return WedgeTVector(v.t, out)


@dataclass
class SerreReport:
    """Exact check of the defining A-infinity relations on basis vectors."""

    t: int
    a_range: tuple[int, int]
    max_size: int
    checks: int = 0
    violations: list[dict] = None  # type: ignore[assignment]

    def __post_init__(self):
        if self.violations is None:
            self.violations = []

    @property
    def passed(self) -> bool:
        return not self.violations

    def to_json(self) -> dict:
        return {
            "t": self.t,
            "range": list(self.a_range),
            "max_size": self.max_size,
            "checks": self.checks,
            "violations": self.violations,
            "passed": self.passed,
        }


def cartan_entry(a: int, b: int) -> int:
    if a == b:
        return 2
    if abs(a - b) == 1:
        return -1
    return 0


def _record(report: SerreReport, relation: str, a: int, b: int, bp: Bipartition, diff: ModuleVector):
    report.checks += 1
    if not diff.is_zero:
        report.violations.append(
            {
                "relation": relation,
                "a": a,
                "b": b,
                "lambda": str(bp),
                "residual": {str(k): str(c) for k, c in diff.items()},
            }
        )


def serre_check_vector(report: SerreReport, v: ModuleVector, a: int, b: int, bp: Bipartition):
    ea, fa = apply_e(a, v), apply_f(a, v)
    eb, fb = (ea, fa) if a == b else (apply_e(b, v), apply_f(b, v))
    bracket_ef = apply_e(a, fb) - apply_f(b, ea)
    expect = apply_h(a, v) if a == b else ModuleVector(v.t)
    _record(report, "[e_a,f_b] = delta_ab h_a", a, b, bp, bracket_ef - expect)

    c = cartan_entry(a, b)
    ha_eb = apply_h(a, eb) - apply_e(b, apply_h(a, v))
    _record(report, "[h_a,e_b] = c_ab e_b", a, b, bp, ha_eb - eb.scale(c))
    ha_fb = apply_h(a, fb) - apply_f(b, apply_h(a, v))
    _record(report, "[h_a,f_b] = -c_ab f_b", a, b, bp, ha_fb - fb.scale(-c))

    if abs(a - b) >= 2:
        _record(report, "[e_a,e_b] = 0", a, b, bp, apply_e(a, eb) - apply_e(b, ea))
        _record(report, "[f_a,f_b] = 0", a, b, bp, apply_f(a, fb) - apply_f(b, fa))
    elif abs(a - b) == 1:
        # [x_a,[x_a,x_b]]v = x_a([x_a,x_b]v) - [x_a,x_b](x_a v)
        inner_e = apply_e(a, eb) - apply_e(b, ea)
        inner_on_ea = apply_e(a, apply_e(b, ea)) - apply_e(b, apply_e(a, ea))
        _record(report, "[e_a,[e_a,e_b]] = 0", a, b, bp, apply_e(a, inner_e) - inner_on_ea)
        inner_f = apply_f(a, fb) - apply_f(b, fa)
        inner_on_fa = apply_f(a, apply_f(b, fa)) - apply_f(b, apply_f(a, fa))
        _record(report, "[f_a,[f_a,f_b]] = 0", a, b, bp, apply_f(a, inner_f) - inner_on_fa)


def serre_report(t: int, a_range: tuple[int, int], max_size: int) -> SerreReport:
    """Check every relation on every basis vector in range, exactly."""
    report = SerreReport(t, a_range, max_size)
    lo, hi = a_range
    basis = enumerate_bipartitions(max_size)
    for bp in basis:
        v = ModuleVector.basis(t, bp)
        for a in range(lo, hi + 1):
            for b in range(lo, hi + 1):
                serre_check_vector(report, v, a, b, bp)
    return report
