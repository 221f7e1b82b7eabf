"""Small helpers for permutations given in one-line notation on 0..n-1."""

from __future__ import annotations

from .errors import BadPermutation

Perm = tuple[int, ...]


def check_permutation(values, n=None) -> Perm:
    """Validate one-line notation and return it as a tuple.

    Raises :class:`BadPermutation` if ``values`` is not a bijection on
    ``0..n-1`` (``n`` defaults to ``len(values)``).
    """
    p = tuple(values)
    if n is None:
        n = len(p)
    if len(p) != n:
        raise BadPermutation(f"expected length {n}, got {len(p)}")
    seen = [False] * n
    for x in p:
        if not isinstance(x, int) or isinstance(x, bool) or not 0 <= x < n or seen[x]:
            raise BadPermutation(f"{list(p)} is not a permutation of 0..{n - 1}")
        seen[x] = True
    return p


def identity(n: int) -> Perm:
    return tuple(range(n))


def inverse(p: Perm) -> Perm:
    inv = [0] * len(p)
    for i, x in enumerate(p):
        inv[x] = i
    return tuple(inv)


def compose(p: Perm, q: Perm) -> Perm:
    """Return the permutation mapping x to p[q[x]] (q acts first)."""
    return tuple(p[q[x]] for x in range(len(q)))


def compose_chain(perms, n: int) -> Perm:
    """Compose a sequence of permutations, the last one acting first.

    ``compose_chain([p, q, r], n)`` maps x to ``p[q[r[x]]]``.
    """
    result = identity(n)
    for p in perms:
        result = compose(result, tuple(p))
    return result


def cycles(p: Perm) -> tuple[tuple[int, ...], ...]:
    """Cycle decomposition, every cycle starting at and sorted by its minimum."""
    seen = [False] * len(p)
    out = []
    for start in range(len(p)):
        if seen[start]:
            continue
        cyc = [start]
        seen[start] = True
        x = p[start]
        while x != start:
            seen[x] = True
            cyc.append(x)
            x = p[x]
        out.append(tuple(cyc))
    return tuple(out)


def cycle_type(p: Perm) -> tuple[int, ...]:
    """Cycle lengths sorted in decreasing order (fixed points included)."""
    return tuple(sorted((len(c) for c in cycles(p)), reverse=True))


def is_transitive(perms, n: int) -> bool:
    """Whether the group generated by ``perms`` acts transitively on 0..n-1."""
    if n == 0:
        return True
    seen = [False] * n
    seen[0] = True
    stack = [0]
    count = 1
    while stack:
        x = stack.pop()
        for p in perms:
            y = p[x]
            if not seen[y]:
                seen[y] = True
                count += 1
                stack.append(y)
    return count == n
