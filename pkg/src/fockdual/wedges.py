"""Finite windowed models of the dual-wedge x wedge tensor.

Basis keys are pairs (dual tuple, plain tuple) of strictly decreasing
integers inside a window [lo, hi].  The contraction pairs a dual index
against an equal plain index with the sign (-1)^((m-k)+(l-1)) * (-1)^j;
this is the unique extension (up to one global sign per degree) commuting
with all in-window generators.  Kernel chains of iterated contractions
realize the socle layers at desk scale, weight space by weight space.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction

from .action import Weight, tuple_move
from .linalg import Subspace, Vector, kernel

WedgeKey = tuple[tuple[int, ...], tuple[int, ...]]
Window = tuple[int, int]


class OutOfWindowError(ValueError):
    """Generator indices a, a+1 must both lie inside the window."""


class DegreeError(ValueError):
    """Contraction needs at least one factor on each side."""


def wedge_weight(key: WedgeKey) -> Weight:
    wtup, utup = key
    return Weight.from_items([(i, -1) for i in wtup] + [(j, 1) for j in utup])


def all_keys(m: int, n: int, window: Window) -> list[WedgeKey]:
    lo, hi = window
    values = list(range(hi, lo - 1, -1))
    return [
        (w, u)
        for w in itertools.combinations(values, m)
        for u in itertools.combinations(values, n)
    ]


def keys_of_weight(m: int, n: int, window: Window, weight: Weight) -> list[WedgeKey]:
    """Keys of the given weight: the signed support is forced, matched
    indices range over the rest of the window."""
    lo, hi = window
    w_only = [i for i, c in weight.entries if c == -1]
    u_only = [i for i, c in weight.entries if c == 1]
    if any(c not in (-1, 1) for _, c in weight.entries):
        return []
    matched = m - len(w_only)
    if matched < 0 or matched != n - len(u_only):
        return []
    if any(i < lo or i > hi for i in w_only + u_only):
        return []
    free = [i for i in range(hi, lo - 1, -1) if weight.coeff(i) == 0]
    out = []
    for x in itertools.combinations(free, matched):
        w = tuple(sorted(w_only + list(x), reverse=True))
        u = tuple(sorted(u_only + list(x), reverse=True))
        out.append((w, u))
    return out


def _check_window(a: int, window: Window):
    lo, hi = window
    if not (lo <= a <= hi and lo <= a + 1 <= hi):
        raise OutOfWindowError(f"generator {a} needs indices {a},{a+1} inside [{lo},{hi}]")


def wedge_apply_e(a: int, vec: Vector, window: Window) -> Vector:
    """Dual factors move a -> a+1, plain factors a+1 -> a; no signs."""
    _check_window(a, window)
    out: Vector = {}
    for (w, u), c in vec.items():
        moved = tuple_move(w, a, a + 1)
        if moved is not None:
            _accumulate(out, (moved, u), c)
        moved = tuple_move(u, a + 1, a)
        if moved is not None:
            _accumulate(out, (w, moved), c)
    return out


def wedge_apply_f(a: int, vec: Vector, window: Window) -> Vector:
    """Dual factors move a+1 -> a, plain factors a -> a+1; no signs."""
    _check_window(a, window)
    out: Vector = {}
    for (w, u), c in vec.items():
        moved = tuple_move(w, a + 1, a)
        if moved is not None:
            _accumulate(out, (moved, u), c)
        moved = tuple_move(u, a, a + 1)
        if moved is not None:
            _accumulate(out, (w, moved), c)
    return out


def _accumulate(out: Vector, key, c):
    s = out.get(key, Fraction(0)) + c
    if s:
        out[key] = s
    else:
        del out[key]


def contraction(m: int, n: int, vec: Vector) -> Vector:
    """One contraction step down to (m-1, n-1)-keys, extended linearly."""
    if m < 1 or n < 1:
        raise DegreeError(f"cannot contract degrees ({m},{n})")
    out: Vector = {}
    for (w, u), c in vec.items():
        for k in range(1, m + 1):
            for l in range(1, n + 1):
                if w[k - 1] == u[l - 1]:
                    sign = -1 if ((m - k) + (l - 1) + u[l - 1]) % 2 else 1
                    _accumulate(out, (w[: k - 1] + w[k:], u[: l - 1] + u[l:]), sign * c)
    return out


def _iterated_contraction(m: int, n: int, key: WedgeKey, times: int) -> Vector:
    vec: Vector = {key: Fraction(1)}
    for step in range(times):
        vec = contraction(m - step, n - step, vec)
    return vec


@dataclass
class Layer:
    dim: int
    character: dict[Weight, int]

    def to_json(self) -> dict:
        return {
            "dim": self.dim,
            "character": {w.to_str(): mult for w, mult in sorted(self.character.items())},
        }


def kernel_chain(m: int, n: int, window: Window) -> list[Layer]:
    """Layers ker c^r / ker c^{r-1} for r = 1 .. min(m,n)+1, with characters.

    The top power contracts one side to nothing, so its kernel is the whole
    space.  Computed weight space by weight space; characters come out of
    the per-weight dimensions directly.
    """
    keys = all_keys(m, n, window)
    by_weight: dict[Weight, list[WedgeKey]] = {}
    for key in keys:
        by_weight.setdefault(wedge_weight(key), []).append(key)
    depth = min(m, n)
    layers = [Layer(0, {}) for _ in range(depth + 1)]
    for weight in sorted(by_weight):
        domain = by_weight[weight]
        previous = 0
        for r in range(1, depth + 2):
            if r == depth + 1:
                nullity = len(domain)
            else:
                op = {key: _iterated_contraction(m, n, key, r) for key in domain}
                nullity = kernel(op, domain).dim
            gain = nullity - previous
            if gain:
                layers[r - 1].dim += gain
                layers[r - 1].character[weight] = gain
            previous = nullity
    return layers


def kernel_multiplicity(m: int, n: int, window: Window, weight: Weight) -> int:
    """Multiplicity of the weight in ker c_{m,n} on the window.

    Degenerate degrees (m = 0 or n = 0) have no contraction; the kernel is
    the whole space there.
    """
    domain = keys_of_weight(m, n, window, weight)
    if not domain:
        return 0
    if m == 0 or n == 0:
        return len(domain)
    op = {key: contraction(m, n, {key: Fraction(1)}) for key in domain}
    return kernel(op, domain).dim


def character_of(space: Subspace) -> dict[Weight, int]:
    """Character of a subspace spanned by weight vectors (echelon rows of a
    weight-stable space are weight-homogeneous, so pivots suffice)."""
    out: dict[Weight, int] = {}
    for pivot, row in zip(space.pivots, space.rows):
        weight = wedge_weight(pivot)
        assert all(wedge_weight(k) == weight for k in row), "row is not weight-homogeneous"
        out[weight] = out.get(weight, 0) + 1
    return out


def socle_json(m: int, n: int, window: Window) -> dict:
    layers = kernel_chain(m, n, window)
    return {
        "m": m,
        "n": n,
        "window": [window[0], window[1]],
        "layers": [layer.to_json() for layer in layers],
    }
