from typing import Dict, Mapping

from kpuzzle.algebra import RationalFunction, parse_rational
from kpuzzle.young import BoxContext, YoungDiagram, parse_partition


def rf(text: str) -> RationalFunction:
    return parse_rational(text)


def diagram(text: str, k: int, n: int) -> YoungDiagram:
    return parse_partition(text, BoxContext(k, n))


def same_expansion(
    left: Mapping[YoungDiagram, RationalFunction],
    right: Mapping[YoungDiagram, RationalFunction],
) -> bool:
    return set(left) == set(right) and all(left[nu] == right[nu] for nu in left)


def expansion(
    context: BoxContext, **coefficients: str
) -> Dict[YoungDiagram, RationalFunction]:
    """``expansion(ctx, p2_1="1")`` keys ``p2_1`` as the diagram ``(2,1)``."""
    return {
        parse_partition(name[1:].replace("_", ","), context): rf(text)
        for name, text in coefficients.items()
    }
