"""Unpruned reference enumeration over every pair of step strings.

Deliberately shares no code with the package: paths are plain strings,
vertices are recomputed here, and nothing is pruned.
"""

from itertools import product


def vertices(steps):
    x = y = 0
    pts = [(0, 0)]
    for s in steps:
        if s == "E":
            x += 1
        else:
            y += 1
        pts.append((x, y))
    return pts


def all_paths(length):
    return ["".join(p) for p in product("EN", repeat=length)]


def blocks_ok(k, steps):
    if not steps:
        return True
    if steps[0] != "E" or len(steps) % (k - 1):
        return False
    # run-length form: every maximal N-run after an E has length = k-2 mod k-1
    runs = steps.split("E")[1:]
    return all(len(r) % (k - 1) == (k - 2) % (k - 1) for r in runs)


def dominated(upper, lower):
    # lower never strictly above upper in any column upper reaches
    top = {}
    for x, y in vertices(upper):
        top[x] = max(top.get(x, y), y)
    x_end = vertices(upper)[-1][0]
    return all(y <= top[x] for x, y in vertices(lower) if x <= x_end)


def shared(upper, lower):
    return len((set(vertices(upper)) & set(vertices(lower))) - {(0, 0)})


def pairs(k, n, epsilon, weak=False):
    lo_len = (k - 1) * n
    up_len = lo_len - epsilon
    if up_len < 0:
        return []
    out = []
    for lo in all_paths(lo_len):
        if not blocks_ok(k, lo):
            continue
        for up in all_paths(up_len):
            if up and up[0] != "N":
                continue
            if weak:
                if not dominated(up, lo):
                    continue
            elif shared(up, lo):
                continue
            delta = vertices(lo)[-1][0] - vertices(up)[-1][0]
            out.append((up, lo, delta, shared(up, lo)))
    return out


def strict_count(k, n, delta, epsilon):
    return sum(1 for p in pairs(k, n, epsilon) if p[2] == delta)


def weak_distribution(k, n, delta=0, epsilon=0):
    dist = {}
    for up, lo, d, m in pairs(k, n, epsilon, weak=True):
        if d == delta:
            dist[m] = dist.get(m, 0) + 1
    return dist
