"""
Young diagrams inside a k x (n-k) box and their frames.

The frame of a diagram records the up steps of its border, read from the
bottom-left corner of the box to the top-right one; it is a sorted k-subset of
{1..n}.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, product
from typing import Iterator, List, Sequence, Tuple

from kpuzzle.base_types import Frame


@dataclass(frozen=True)
class BoxContext:
    """The k x (n-k) rectangle, i.e. the Grassmannian Gr(k, n)."""

    k: int
    n: int

    def __post_init__(self) -> None:
        if not 0 <= self.k <= self.n:
            raise ValueError(f"Invalid box k={self.k}, n={self.n}")

    @property
    def width(self) -> int:
        return self.n - self.k

    @property
    def area(self) -> int:
        return self.k * (self.n - self.k)

    def __str__(self) -> str:
        return f"Gr({self.k},{self.n})"


@dataclass(frozen=True)
class YoungDiagram:
    """
    A partition fitting the box of ``context``.

    :param rows: weakly decreasing row lengths, trailing zeros are dropped
    :param context: the enclosing box
    """

    rows: Tuple[int, ...]
    context: BoxContext

    def __post_init__(self) -> None:
        rows = tuple(self.rows)
        while rows and rows[-1] == 0:
            rows = rows[:-1]
        object.__setattr__(self, "rows", rows)
        if any(r < 0 for r in rows) or any(a < b for a, b in zip(rows, rows[1:])):
            raise ValueError(f"Invalid partition {rows}")
        if len(rows) > self.context.k or (rows and rows[0] > self.context.width):
            raise ValueError(
                f"Invalid partition {rows}, it does not fit {self.context}"
            )

    @classmethod
    def empty(cls, context: BoxContext) -> YoungDiagram:
        return cls((), context)

    @classmethod
    def full(cls, context: BoxContext) -> YoungDiagram:
        return cls((context.width,) * context.k, context)

    @property
    def size(self) -> int:
        return sum(self.rows)

    @property
    def width(self) -> int:
        return self.rows[0] if self.rows else 0

    @property
    def height(self) -> int:
        return len(self.rows)

    @property
    def frame(self) -> Frame:
        return frame_of(self)

    def padded(self) -> Tuple[int, ...]:
        return self.rows + (0,) * (self.context.k - len(self.rows))

    def slug(self) -> str:
        """Partition literal usable in file names."""
        return "-".join(map(str, self.rows)) if self.rows else "0"

    def __str__(self) -> str:
        return ",".join(map(str, self.rows)) if self.rows else "∅"


def frame_of(lam: YoungDiagram) -> Frame:
    """``{l_1 < ... < l_k}`` with ``lam_{k-j+1} = l_j - j``."""
    rows = lam.padded()
    k = lam.context.k
    return tuple(j + rows[k - j] for j in range(1, k + 1))


def diagram_of_frame(frame: Sequence[int], context: BoxContext) -> YoungDiagram:
    frame = tuple(frame)
    if (
        len(frame) != context.k
        or any(a >= b for a, b in zip(frame, frame[1:]))
        or (frame and (frame[0] < 1 or frame[-1] > context.n))
    ):
        raise ValueError(f"Invalid frame {frame} for {context}")
    k = context.k
    return YoungDiagram(
        tuple(frame[k - i] - (k - i + 1) for i in range(1, k + 1)), context
    )


def dual(lam: YoungDiagram) -> YoungDiagram:
    """The complement of ``lam`` in the box, rotated by 180 degrees."""
    n = lam.context.n
    return diagram_of_frame(sorted(n + 1 - l for l in lam.frame), lam.context)


def _check_same_box(lam: YoungDiagram, mu: YoungDiagram) -> None:
    if lam.context != mu.context:
        raise ValueError(f"Invalid comparison of {lam.context} and {mu.context}")


def strip_rel(lam: YoungDiagram, mu: YoungDiagram) -> bool:
    """
    ``lam ▷ mu``: ``lam - mu`` is both a horizontal and a vertical strip.

    On frames this reads ``m_i <= l_i <= m_i + 1`` and ``l_i < m_{i+1}``.
    """
    _check_same_box(lam, mu)
    ell, m = lam.frame, mu.frame
    if any(not 0 <= a - b <= 1 for a, b in zip(ell, m)):
        return False
    return all(ell[i] < m[i + 1] for i in range(len(ell) - 1))


def stats(lam: YoungDiagram) -> Tuple[int, int, int]:
    """``(|lam|, w(lam), h(lam))``."""
    return lam.size, lam.width, lam.height


def contains(lam: YoungDiagram, mu: YoungDiagram) -> bool:
    """True if ``mu`` is contained in ``lam``."""
    _check_same_box(lam, mu)
    return all(a >= b for a, b in zip(lam.padded(), mu.padded()))


def conjugate(lam: YoungDiagram) -> Tuple[int, ...]:
    return tuple(sum(1 for r in lam.rows if r > c) for c in range(lam.width))


def parse_partition(text: str, context: BoxContext) -> YoungDiagram:
    """
    Parse a partition literal such as ``"3,1"``. The empty string, ``"0"``,
    ``"-"`` and ``"∅"`` denote the empty diagram.
    """
    text = text.strip()
    if text in ("", "0", "-", "∅"):
        return YoungDiagram.empty(context)
    try:
        rows = tuple(int(part) for part in text.split(","))
    except ValueError as err:
        raise ValueError(f"Invalid partition literal {text!r}") from err
    return YoungDiagram(rows, context)


def all_frames(context: BoxContext) -> Iterator[Frame]:
    return combinations(range(1, context.n + 1), context.k)


def all_diagrams(context: BoxContext) -> List[YoungDiagram]:
    """Every diagram of the box, ordered lexicographically by frame."""
    return [diagram_of_frame(f, context) for f in all_frames(context)]


def strip_neighbours(mu: YoungDiagram) -> List[YoungDiagram]:
    """Every ``nu`` with ``nu ▷ mu``, ordered by frame."""
    n = mu.context.n
    found = []
    for shifts in product((0, 1), repeat=mu.context.k):
        frame = tuple(m + s for m, s in zip(mu.frame, shifts))
        if frame and frame[-1] > n:
            continue
        if any(a >= b for a, b in zip(frame, frame[1:])):
            continue
        nu = diagram_of_frame(frame, mu.context)
        if strip_rel(nu, mu):
            found.append(nu)
    return sorted(found, key=frame_of)

