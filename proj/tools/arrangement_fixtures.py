#!/usr/bin/env python3
"""Incidence data for local diagrams made of graph surfaces.

Each surface is z = f(x, y) over a square box, with a fourth-coordinate
height (larger is higher) and a normal orientation (+1: upward normal).
Sheets, double curves (split where a surface higher than the under-sheet
crosses) and triple points are found on a grid.  Features are matched
between a before/after pair by their trace on the box boundary, so labels
of features that survive the move agree on both sides.

    python3 tools/arrangement_fixtures.py --out fixtures --context fixtures/context.skd
"""

import argparse
import itertools
import math
import os
import sys

import numpy as np
from scipy import ndimage, optimize


class Surface:
    def __init__(self, name, f, height, orient=1):
        self.name, self.f, self.height, self.orient = name, f, height, orient


def grad(f, x, y, h=1e-6):
    return np.array([(f(x + h, y) - f(x - h, y)) / (2 * h), (f(x, y + h) - f(x, y - h)) / (2 * h)])


class Layout:
    def __init__(self, surfaces, half=3.0, n=601):
        self.s = surfaces
        self.half, self.n = half, n
        self.xs = np.linspace(-half, half, n)
        self.step = self.xs[1] - self.xs[0]
        self.X, self.Y = np.meshgrid(self.xs, self.xs, indexing="xy")
        self.F = [np.asarray(s.f(self.X, self.Y), dtype=float) for s in surfaces]
        self._sheets()
        self._curves()
        self._triples()

    def node(self, x, y):
        c = int(round((x + self.half) / self.step))
        r = int(round((y + self.half) / self.step))
        return min(max(r, 0), self.n - 1), min(max(c, 0), self.n - 1)

    def higher(self, i):
        return [j for j in range(len(self.s)) if self.s[j].height > self.s[i].height]

    # sheets: connected regions of a surface with a constant side pattern
    # against every higher surface
    def _sheets(self):
        self.sheet_map = []
        self.sheets = []  # (surface, boundary node set, area, centroid)
        for i in range(len(self.s)):
            code = np.zeros(self.X.shape, dtype=np.int64)
            for b, j in enumerate(self.higher(i)):
                code |= (self.F[i] > self.F[j]).astype(np.int64) << b
            lab = np.full(self.X.shape, -1, dtype=np.int64)
            for v in np.unique(code):
                comp, k = ndimage.label(code == v)
                for c in range(1, k + 1):
                    mask = comp == c
                    if mask.sum() < 40:
                        raise RuntimeError("sliver sheet on %s; refine the grid" % self.s[i].name)
                    idx = len(self.sheets)
                    lab[mask] = idx
                    edge = np.zeros_like(mask)
                    edge[0, :] = edge[-1, :] = edge[:, 0] = edge[:, -1] = True
                    bnodes = frozenset(zip(*np.nonzero(mask & edge)))
                    ys, xs = np.nonzero(mask)
                    self.sheets.append(dict(surface=i, boundary=bnodes, area=int(mask.sum()),
                                            centroid=(float(self.xs[xs].mean()), float(self.xs[ys].mean()))))
            self.sheet_map.append(lab)

    # double curves
    def _curves(self):
        self.curves = []  # dict(over, under, over_sheet, uplus, uminus, points, ends)
        for i, j in itertools.permutations(range(len(self.s)), 2):
            if self.s[j].height <= self.s[i].height:
                continue
            D = self.F[i] - self.F[j]
            pos = D > 0
            splitters = [k for k in self.higher(i) if k != j]
            pts = {}
            hx = np.nonzero(pos[:, :-1] != pos[:, 1:])
            for r, c in zip(*hx):
                t = D[r, c] / (D[r, c] - D[r, c + 1])
                pts[("h", r, c)] = (self.xs[c] + t * self.step, self.xs[r])
            vy = np.nonzero(pos[:-1, :] != pos[1:, :])
            for r, c in zip(*vy):
                t = D[r, c] / (D[r, c] - D[r + 1, c])
                pts[("v", r, c)] = (self.xs[c], self.xs[r] + t * self.step)
            if not pts:
                continue
            keys = list(pts)
            index = {k: a for a, k in enumerate(keys)}
            sig = {}
            for k, (x, y) in pts.items():
                sig[k] = tuple(bool(self.s[m].f(x, y) > self.s[i].f(x, y)) for m in splitters)
            parent = list(range(len(keys)))

            def find(a):
                while parent[a] != a:
                    parent[a] = parent[parent[a]]
                    a = parent[a]
                return a

            cells = {}
            for k in keys:
                kind, r, c = k
                if kind == "h":
                    for cell in ((r - 1, c), (r, c)):
                        cells.setdefault(cell, []).append(k)
                else:
                    for cell in ((r, c - 1), (r, c)):
                        cells.setdefault(cell, []).append(k)
            for cell, ks in cells.items():
                if len(ks) == 2:
                    a, b = ks
                    if sig[a] == sig[b]:
                        parent[find(index[a])] = find(index[b])
                elif len(ks) == 4:
                    raise RuntimeError("saddle cell on curve %s/%s" % (self.s[j].name, self.s[i].name))
            groups = {}
            for k in keys:
                groups.setdefault(find(index[k]), []).append(k)
            for ks in groups.values():
                if len(ks) < 3:
                    continue
                votes = {}
                for k in ks:
                    kind, r, c = k
                    a = (r, c)
                    b = (r, c + 1) if kind == "h" else (r + 1, c)
                    if not pos[a]:
                        a, b = b, a  # a: under-surface above the over-surface
                    over = self.sheet_map[j][a], self.sheet_map[j][b]
                    if over[0] != over[1]:
                        continue
                    up, down = self.sheet_map[i][a], self.sheet_map[i][b]
                    if self.s[j].orient < 0:
                        up, down = down, up
                    key = (over[0], up, down)
                    votes[key] = votes.get(key, 0) + 1
                best = max(votes, key=votes.get)
                if votes[best] < 0.8 * sum(votes.values()):
                    raise RuntimeError("ambiguous curve incidence")
                ends = [pts[k] for k in ks if self._on_edge(k)]
                cid = len(self.curves)
                self.curves.append(dict(over=j, under=i, over_sheet=best[0], uplus=best[1],
                                        uminus=best[2], points=[pts[k] for k in ks], ends=ends))

    def _on_edge(self, k):
        kind, r, c = k
        m = self.n - 1
        return r in (0, m) or c in (0, m) or (kind == "h" and c + 1 == m) or (kind == "v" and r + 1 == m)

    def _nearest_curve(self, over, under, p, side=None):
        best, bd = None, 1e9
        for cid, cv in enumerate(self.curves):
            if cv["over"] != over or cv["under"] != under:
                continue
            for q in cv["points"]:
                d = math.hypot(q[0] - p[0], q[1] - p[1])
                if d < bd and d < 12 * self.step and (side is None or side(q)):
                    best, bd = cid, d
        if best is None:
            raise RuntimeError("no curve near triple point")
        return best

    def _sheet_at(self, surface, p):
        return int(self.sheet_map[surface][self.node(*p)])

    def _triples(self):
        self.triples = []
        S = self.s
        for trip in itertools.combinations(range(len(S)), 3):
            bot, mid, top = sorted(trip, key=lambda a: S[a].height)
            g = lambda v: [S[mid].f(*v) - S[top].f(*v), S[bot].f(*v) - S[top].f(*v)]
            found = []
            for cv in self.curves:
                if cv["over"] != top or cv["under"] != mid:
                    continue
                # seeds: points where the bottom surface is close to the top along the curve
                dist = [abs(S[bot].f(*q) - S[top].f(*q)) for q in cv["points"]]
                order = np.argsort(dist)
                for a in order[:50]:
                    if dist[a] > 4 * self.step * 10:
                        break
                    sol, info, ok, _ = optimize.fsolve(g, cv["points"][a], full_output=True, xtol=1e-12)
                    if ok != 1 or max(abs(np.array(g(sol)))) > 1e-9:
                        continue
                    if max(abs(sol)) > self.half - 5 * self.step:
                        continue
                    if all(math.hypot(sol[0] - f[0], sol[1] - f[1]) > 1e-6 for f in found):
                        found.append(tuple(sol))
            for P in found:
                self.triples.append(self._triple_at(top, mid, bot, P))

    def _triple_at(self, top, mid, bot, P):
        S = self.s
        d = 4 * self.step
        ot, om = S[top].orient, S[mid].orient
        g_mt = grad(lambda x, y: S[mid].f(x, y) - S[top].f(x, y), *P)
        g_bt = grad(lambda x, y: S[bot].f(x, y) - S[top].f(x, y), *P)
        g_bm = grad(lambda x, y: S[bot].f(x, y) - S[mid].f(x, y), *P)
        m = {}
        for a in (1, -1):
            v = a * ot * g_mt / np.linalg.norm(g_mt)
            m[a] = self._sheet_at(mid, (P[0] + d * v[0], P[1] + d * v[1]))
        b = {}
        A = np.array([g_bt, g_bm])
        for a in (1, -1):
            for be in (1, -1):
                dv = np.linalg.solve(A, np.array([a * ot, be * om]))
                dv = dv / np.linalg.norm(dv) * d
                b[(a, be)] = self._sheet_at(bot, (P[0] + dv[0], P[1] + dv[1]))
        side_top = lambda a: (lambda q: np.sign(ot * (S[mid].f(*q) - S[top].f(*q))) == a)
        side_mid = lambda be: (lambda q: np.sign(om * (S[bot].f(*q) - S[mid].f(*q))) == be)
        return dict(point=P, surfaces=(top, mid, bot), t=self._sheet_at(top, P),
                    mplus=m[1], mminus=m[-1], b=b,
                    tm=self._nearest_curve(top, mid, P),
                    mbplus=self._nearest_curve(mid, bot, P, side_top(1)),
                    mbminus=self._nearest_curve(mid, bot, P, side_top(-1)),
                    tbplus=self._nearest_curve(top, bot, P, side_mid(1)),
                    tbminus=self._nearest_curve(top, bot, P, side_mid(-1)))


def match(before, after):
    """Pairs persistent features of `before` and `after`.  When a feature of
    `before` meets several of `after` on the box boundary, the one with the
    largest overlap keeps its label."""

    def best_pairs(cands):
        out = {}
        for b, a, score in sorted(cands, key=lambda t: -t[2]):
            if b not in out and a not in out.values():
                out[b] = a
        return {a: b for b, a in out.items()}

    cands = []
    for a, sa in enumerate(after.sheets):
        for b, sb in enumerate(before.sheets):
            if sb["surface"] == sa["surface"] and sa["boundary"]:
                ov = len(sa["boundary"] & sb["boundary"])
                if ov > 0.9 * min(len(sa["boundary"]), len(sb["boundary"])):
                    cands.append((b, a, ov))
    sheets = best_pairs(cands)
    cands = []
    for a, ca in enumerate(after.curves):
        for b, cb in enumerate(before.curves):
            if (cb["over"], cb["under"]) == (ca["over"], ca["under"]) and ca["ends"] and cb["ends"]:
                ov = sum(1 for p in ca["ends"] if min(math.hypot(p[0] - q[0], p[1] - q[1])
                                                     for q in cb["ends"]) < 0.6)
                if ov == len(ca["ends"]):
                    cands.append((b, a, ov))
    curves = best_pairs(cands)
    cands = []
    for a, ta in enumerate(after.triples):
        for b, tb in enumerate(before.triples):
            d = math.hypot(ta["point"][0] - tb["point"][0], ta["point"][1] - tb["point"][1])
            if ta["surfaces"] == tb["surfaces"] and d < 0.05:
                cands.append((b, a, -d))
    triples = best_pairs(cands)
    return sheets, curves, triples


def numbering(count, persistent_order, offset=0):
    """Label for each feature index: persistent ones first (in the given
    order), the rest afterwards in index order, all shifted by `offset`."""
    label = {}
    nxt = offset + 1
    for f in persistent_order:
        label[f] = nxt
        nxt += 1
    for f in range(count):
        if f not in label:
            label[f] = nxt
            nxt += 1
    return label


class Context:
    """Features copied verbatim ahead of the generated ones (a diagram file
    whose labels come first)."""

    def __init__(self, path=None):
        self.sheets, self.lines = 0, []
        self.counts = {"curve": 0, "triple": 0, "branch": 0}
        if path is None:
            return
        with open(path) as fh:
            for raw in fh:
                line = raw.split("#")[0].strip()
                if not line:
                    continue
                word = line.split()[0]
                if word == "sheets":
                    self.sheets = int(line.split()[1])
                elif word in self.counts:
                    self.counts[word] += 1
                    self.lines.append(line)


def emit(name, lay, sl, cl, tl, context):
    out = ["# generated by tools/arrangement_fixtures.py"]
    out.append("diagram " + name)
    out.append("sheets %d" % (len(lay.sheets) + context.sheets))
    sheet_notes = ["#   s%d: %s%s at (%.2f, %.2f)" % (
        sl[k], lay.s[sh["surface"]].name, "" if sh["boundary"] else " (bounded)", *sh["centroid"])
        for k, sh in enumerate(lay.sheets)]
    if context.lines:
        out.append("# context:")
        out += context.lines
    out += ["# sheets:"] + sorted(sheet_notes, key=lambda s: int(s.split(":")[0].split("s")[-1]))
    lines = []
    for cid, cv in enumerate(lay.curves):
        lines.append((cl[cid], "curve c%d over=s%d uplus=s%d uminus=s%d  # %s over %s" % (
            cl[cid], sl[cv["over_sheet"]], sl[cv["uplus"]], sl[cv["uminus"]],
            lay.s[cv["over"]].name, lay.s[cv["under"]].name)))
    for tid, tp in enumerate(lay.triples):
        b = tp["b"]
        lines.append((10 ** 6 + tl[tid], "triple t%d t=s%d mplus=s%d mminus=s%d bpp=s%d bpm=s%d bmp=s%d bmm=s%d "
                      "tm=c%d mbplus=c%d mbminus=c%d tbplus=c%d tbminus=c%d  # %s" % (
                          tl[tid], sl[tp["t"]], sl[tp["mplus"]], sl[tp["mminus"]],
                          sl[b[(1, 1)]], sl[b[(1, -1)]], sl[b[(-1, 1)]], sl[b[(-1, -1)]],
                          cl[tp["tm"]], cl[tp["mbplus"]], cl[tp["mbminus"]], cl[tp["tbplus"]],
                          cl[tp["tbminus"]], "/".join(lay.s[a].name for a in tp["surfaces"]))))
    out += [l for _, l in sorted(lines)]
    return "\n".join(out) + "\n"


def pair(name, surfaces_before, surfaces_after, context):
    before, after = Layout(surfaces_before), Layout(surfaces_after)
    sm, cm, tm = match(before, after)
    es, ec, et = context.sheets, context.counts["curve"], context.counts["triple"]
    # persistent features keep their label on both sides
    bsl = numbering(len(before.sheets), sorted(set(sm.values())), es)
    bcl = numbering(len(before.curves), sorted(set(cm.values())), ec)
    btl = numbering(len(before.triples), sorted(set(tm.values())), et)
    inv = lambda m: {v: k for k, v in m.items()}
    asl = numbering(len(after.sheets), [inv(sm)[v] for v in sorted(set(sm.values()))], es)
    acl = numbering(len(after.curves), [inv(cm)[v] for v in sorted(set(cm.values()))], ec)
    atl = numbering(len(after.triples), [inv(tm)[v] for v in sorted(set(tm.values()))], et)
    return (emit(name + "_a", before, bsl, bcl, btl, context),
            emit(name + "_b", after, asl, acl, atl, context))


def planes_vii(c, orient):
    o = orient
    return [Surface("top", lambda x, y: x, 4, o[0]),
            Surface("upper", lambda x, y: y, 3, o[1]),
            Surface("lower", lambda x, y: -x - y, 2, o[2]),
            Surface("bottom", lambda x, y: c + 0.1 * x - 0.05 * y, 1, 1)]


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--out", default="fixtures")
    ap.add_argument("--only")
    ap.add_argument("--context", help="diagram file whose features are placed first")
    args = ap.parse_args()
    context = Context(args.context)
    os.makedirs(args.out, exist_ok=True)
    jobs = {
        "roseman_V": ([Surface("top", lambda x, y: -0.3 - x * x + 0 * y, 3),
                       Surface("middle", lambda x, y: y, 2),
                       Surface("bottom", lambda x, y: -y, 1)],
                      [Surface("top", lambda x, y: 0.3 - x * x + 0 * y, 3),
                       Surface("middle", lambda x, y: y, 2),
                       Surface("bottom", lambda x, y: -y, 1)]),
        "roseman_VII": (planes_vii(-0.25, (1, 1, 1)), planes_vii(0.25, (1, 1, 1))),
    }
    for name, (sb, sa) in jobs.items():
        if args.only and args.only != name:
            continue
        a, b = pair(name, sb, sa, context)
        for suffix, text in (("_a", a), ("_b", b)):
            with open(os.path.join(args.out, name + suffix + ".skd"), "w") as fh:
                fh.write(text)
        print("wrote", name)


if __name__ == "__main__":
    main()
