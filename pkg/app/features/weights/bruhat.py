"""
Bruhat order on rho-shifted weights.

Covers are the three sign-raising moves and, inside WT_k, the shift along
a sign family: towards index 0 when the first sign is '-', away from 0
when it is '+'. A degenerate position 'o' is read with both signs.
Every cover strictly raises (x, then y + z), which bounds the search.
"""

from collections import deque
from itertools import product

from app.features.weights.schema import Parameter, Weight
from app.features.weights.service import _index_candidates, decode


def _readings(signs: str) -> list[str]:
    choices = [("+", "-") if ch == "o" else (ch,) for ch in signs]
    return ["".join(chars) for chars in product(*choices)]


def covers(param: Parameter, f: Weight) -> set[Weight]:
    """All weights g with f < g by a single generating relation."""
    result = set()
    for i, value in enumerate(f):
        if value < 0:
            raised = list(f)
            raised[i] = -value
            result.add(Weight(*raised))

    candidates = _index_candidates(param, f)
    if not candidates:
        return result

    k, n = candidates[0]
    signs = "".join("o" if c == 0 else ("+" if c > 0 else "-") for c in f)

    # the index carries the sign information of x; |x| = |n|
    for reading in _readings(signs):
        if reading[0] == "-":
            if n == 0:
                continue
            steps = [n - 1 if n > 0 else n + 1]
        elif n == 0:
            steps = [1, -1]
        else:
            steps = [n + 1 if n > 0 else n - 1]
        for m in steps:
            if k == 0 and m < 0:
                m = -m
            result.add(decode(param, k, m, reading))
    result.discard(f)
    return result


def _may_reach(node: Weight, target: Weight) -> bool:
    if node.x > target.x:
        return False
    if node.x < target.x:
        return True
    # only sign raises on y, z remain
    for a, b in ((node.y, target.y), (node.z, target.z)):
        if a != b and not (a == -b and b > 0):
            return False
    return True


def bruhat_leq(param: Parameter, f: Weight, g: Weight) -> bool:
    """
    f <= g in the Bruhat order, by breadth-first search over covers.

    Args:
        param: Parameter zeta
        f: Lower candidate
        g: Upper candidate

    Returns:
        bool: True iff g is reachable from f by upward covers
    """
    if f == g:
        return True

    seen = {f}
    frontier = deque([f])
    while frontier:
        node = frontier.popleft()
        for nxt in covers(param, node):
            if nxt == g:
                return True
            if nxt in seen or not _may_reach(nxt, g):
                continue
            seen.add(nxt)
            frontier.append(nxt)
    return False
