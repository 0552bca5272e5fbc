"""Brute-force oracle: every sphere map with triangle and quadrilateral faces, at
least one quadrilateral and at most N vertices, that is simple, has degrees <= 6,
has every 3-circuit bounding a face and every 4-circuit with at most one vertex on
some side.

Faces are glued dart by dart: the least unused dart whose reverse is used gets a new
face through it, with unseen vertices labelled in order of appearance. Maps are
deduplicated by a breadth-first rotation code over all roots and both orientations.

    python3 tests/oracle/maps_oracle.py 9 > tests/oracle/maps_n9.txt
"""
import sys

N = int(sys.argv[1]) if len(sys.argv) > 1 else 9


def rotation(faces, n):
    pred = {}
    for f in faces:
        k = len(f)
        for i in range(k):
            pred[(f[i], f[(i + 1) % k])] = f[i - 1]
    nbrs = [sorted({w for (u, w) in pred if u == v}) for v in range(n)]
    rot = []
    for v in range(n):
        if not nbrs[v]:
            rot.append([])
            continue
        cyc = [nbrs[v][0]]
        while True:
            nxt = pred[(v, cyc[-1])]
            if nxt == cyc[0]:
                break
            cyc.append(nxt)
        rot.append(cyc)
    return nbrs, rot


def code(rot, u, w):
    n = len(rot)
    num = [0] * n
    first = [None] * n
    num[u] = 1
    first[u] = w
    queue = [u]
    nxt = 2
    out = []
    qi = 0
    while qi < len(queue):
        v = queue[qi]
        qi += 1
        r = rot[v]
        s = r.index(first[v])
        for k in range(len(r)):
            x = r[(s + k) % len(r)]
            if num[x] == 0:
                num[x] = nxt
                nxt += 1
                first[x] = v
                queue.append(x)
            out.append(num[x])
        out.append(0)
    return out


def canonical(faces, n):
    _, rot = rotation(faces, n)
    rev = [list(reversed(r)) for r in rot]
    best = None
    for rr in (rot, rev):
        for u in range(n):
            for w in rr[u]:
                c = code(rr, u, w)
                if best is None or c < best:
                    best = c
    return "%d:%s" % (n, ",".join(map(str, best)))


def sides(faces, cycle):
    """Vertex sets strictly on the two sides of a simple cycle."""
    k = len(cycle)
    darts = {}
    for fi, f in enumerate(faces):
        for i in range(len(f)):
            darts[(f[i], f[(i + 1) % len(f)])] = fi
    cyc = {frozenset((cycle[i], cycle[(i + 1) % k])) for i in range(k)}
    label = [None] * len(faces)
    todo = []
    for i in range(k):
        a, b = cycle[i], cycle[(i + 1) % k]
        for fi, s in ((darts[(a, b)], 0), (darts[(b, a)], 1)):
            if label[fi] is None:
                label[fi] = s
                todo.append(fi)
            elif label[fi] != s:
                return None
    while todo:
        fi = todo.pop()
        f = faces[fi]
        for i in range(len(f)):
            a, b = f[i], f[(i + 1) % len(f)]
            if frozenset((a, b)) in cyc:
                continue
            g = darts[(b, a)]
            if label[g] is None:
                label[g] = label[fi]
                todo.append(g)
    on = set(cycle)
    out = (set(), set())
    for fi, f in enumerate(faces):
        for v in f:
            if v not in on:
                out[label[fi]].add(v)
    return out


def admissible(faces, n):
    darts = set()
    for f in faces:
        for i in range(len(f)):
            darts.add((f[i], f[(i + 1) % len(f)]))
    e = len(darts) // 2
    if n - e + len(faces) != 2:
        return False
    nbrs, rot = rotation(faces, n)
    for v in range(n):
        if len(rot[v]) != len(nbrs[v]) or len(nbrs[v]) > 6:
            return False
    adj = [set(x) for x in nbrs]
    tri = {frozenset(f) for f in faces if len(f) == 3}
    for a in range(n):
        for b in adj[a]:
            for c in adj[b]:
                if a < b < c and a in adj[c] and frozenset((a, b, c)) not in tri:
                    return False
    for a in range(n):
        for b in adj[a]:
            for c in adj[b]:
                for d in adj[c]:
                    if len({a, b, c, d}) == 4 and a in adj[d]:
                        s = sides(faces, [a, b, c, d])
                        if s is None or (len(s[0]) >= 2 and len(s[1]) >= 2):
                            return False
    return True


found = {}


def search(faces, used, n):
    open_darts = [(w, u) for (u, w) in used if (w, u) not in used]
    if not open_darts:
        if any(len(f) == 4 for f in faces) and admissible(faces, n):
            key = canonical(faces, n)
            found.setdefault(key, [list(f) for f in faces])
        return
    u, w = min(open_darts)
    pool = list(range(n))
    for size in (3, 4):
        for rest in candidates(size - 2, pool, n, {u, w}):
            face = (u, w) + rest
            fd = [(face[i], face[(i + 1) % size]) for i in range(size)]
            if any(d in used for d in fd):
                continue
            m = max(max(face) + 1, n)
            if m > N:
                continue
            new_used = used | set(fd)
            deg = {}
            for (a, b) in new_used:
                deg.setdefault(a, set()).add(b)
                deg.setdefault(b, set()).add(a)
            if any(len(deg[x]) > 6 for x in face):
                continue
            search(faces + [face], new_used, m)


def candidates(k, pool, n, taken):
    """k further corners: existing vertices not yet in the face, or new labels in order."""
    if k == 0:
        yield ()
        return
    for x in pool + [n]:
        if x in taken:
            continue
        nn = n + 1 if x == n else n
        for tail in candidates(k - 1, pool, nn, taken | {x}):
            yield (x,) + tail


search([(0, 1, 2, 3)], {(0, 1), (1, 2), (2, 3), (3, 0)}, 4)
print("# maps %d" % len(found))
for i, key in enumerate(sorted(found)):
    print("# form %s" % key)
    print("map o%d" % (i + 1))
    for f in found[key]:
        print("face " + " ".join(map(str, f)))
    print("end")
