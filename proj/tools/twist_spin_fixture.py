#!/usr/bin/env python3
"""Incidence data for twist-spun long knots, computed from their movie.

A long trefoil core lies in R^3 with both ends on the x-axis.  Spinning the
half-plane picture once around while rotating the core n times about the
x-axis sweeps out the n-twist spun knot.  Every spin angle gives a planar
diagram (projection to the (x, z) plane, height y); crossings are tracked
between angles and the movie events become surface features:

    Reidemeister II   -> extremum of a double curve
    Reidemeister I    -> branch point
    Reidemeister III  -> triple point

Sheets are the connected pieces of (spin angle, arc) after cutting every
slice at its under-crossings.

    python3 tools/twist_spin_fixture.py --twist 0 --name spun_trefoil --out fixtures/d0_23.skd
    python3 tools/twist_spin_fixture.py --twist 2 --name twist2_spun_trefoil --out fixtures/d2_23.skd
"""

import argparse
import math
import sys

import numpy as np
from scipy.interpolate import CubicSpline


def trefoil_core(samples_per_unit=40):
    """Polyline of a long trefoil running from (-5, 0, 0) to (5, 0, 0)."""
    t = np.linspace(0, 2 * math.pi, 4001)
    x = np.sin(t) + 2 * np.sin(2 * t)
    t0 = t[np.argmax(x)]

    def loop(u):
        return np.array([math.sin(u) + 2 * math.sin(2 * u), -math.sin(3 * u), math.cos(u) - 2 * math.cos(2 * u)])

    eps = 0.25
    pts = [(-5, 0, 0), (-4.4, 0, 1.2), (-3.2, 0, 3.0), (0.0, 0, 4.0), (2.6, 0, 3.6), (3.6, 0, 2.2)]
    for u in np.linspace(t0 + eps, t0 + 2 * math.pi - eps, 31):
        pts.append(tuple(loop(u)))
    pts += [(4.2, 0, -0.4), (5, 0, 0)]
    pts = np.array(pts, dtype=float)
    chord = np.concatenate([[0], np.cumsum(np.linalg.norm(np.diff(pts, axis=0), axis=1))])
    spline = CubicSpline(chord, pts)
    n = int(chord[-1] * samples_per_unit / 4)
    return spline(np.linspace(0, chord[-1], n + 1))


class Slice:
    """Crossings of the projected core at one rotation angle."""

    def __init__(self, core, phi, mirror):
        c, s = math.cos(phi), math.sin(phi)
        x, y, z = core[:, 0], core[:, 1], core[:, 2]
        P = np.stack([x, y * s + z * c], axis=1)
        H = y * c - z * s
        if mirror:
            H = -H
        d = P[1:] - P[:-1]
        n = len(d)
        I, J = np.triu_indices(n, 2)
        di, dj = d[I], d[J]
        w = P[J] - P[I]
        den = di[:, 0] * dj[:, 1] - di[:, 1] * dj[:, 0]
        with np.errstate(divide="ignore", invalid="ignore"):
            u = (w[:, 0] * dj[:, 1] - w[:, 1] * dj[:, 0]) / den
            v = (w[:, 0] * di[:, 1] - w[:, 1] * di[:, 0]) / den
        ok = (den != 0) & (u >= 0) & (u < 1) & (v >= 0) & (v < 1)
        I, J, u, v = I[ok], J[ok], u[ok], v[ok]
        self.sa = I + u
        self.sb = J + v
        ha = H[I] + u * (H[I + 1] - H[I])
        hb = H[J] + v * (H[J + 1] - H[J])
        self.a_over = ha > hb
        ta = d[I] / np.linalg.norm(d[I], axis=1)[:, None]
        tb = d[J] / np.linalg.norm(d[J], axis=1)[:, None]
        self.s_over = np.where(self.a_over, self.sa, self.sb)
        self.s_under = np.where(self.a_over, self.sb, self.sa)
        self.t_over = np.where(self.a_over[:, None], ta, tb)
        self.t_under = np.where(self.a_over[:, None], tb, ta)
        self.phi = phi

    def __len__(self):
        return len(self.sa)

    def under_order(self):
        return sorted(range(len(self)), key=lambda c: self.s_under[c])

    def arc_of(self, s):
        """Index of the arc containing parameter s (arcs split at under-points)."""
        return int(np.sum(self.s_under < s))


def normal(t, flip):
    n = np.array([t[1], -t[0]])
    return -n if flip else n


class StepError(Exception):
    pass


def match(A, B, thr=1.5):
    if len(A) == 0 or len(B) == 0:
        return {}, list(range(len(B))), list(range(len(A)))
    da = np.abs(A.sa[:, None] - B.sa[None, :])
    db = np.abs(A.sb[:, None] - B.sb[None, :])
    dist = np.maximum(da, db)
    fwd = {}
    for a in range(len(A)):
        b = int(np.argmin(dist[a]))
        if dist[a, b] < thr and int(np.argmin(dist[:, b])) == a:
            if A.a_over[a] != B.a_over[b]:
                raise StepError("crossing changed over/under")
            fwd[a] = b
    used = set(fwd.values())
    births = [b for b in range(len(B)) if b not in used]
    deaths = [a for a in range(len(A)) if a not in fwd]
    return fwd, births, deaths


def pair_up(S, items, thr=3.0):
    """Group newborn (or dying) crossings into R-II pairs and R-I singles."""
    items = list(items)
    pairs, singles = [], []
    while items:
        c = items.pop()
        best = None
        for o in items:
            if abs(S.sa[c] - S.sa[o]) < thr and abs(S.sb[c] - S.sb[o]) < thr:
                best = o
        if best is not None:
            items.remove(best)
            if abs(S.s_over[c] - S.s_over[best]) > thr:
                raise StepError("R-II pair with different over strands")
            pairs.append((c, best))
        else:
            if S.sb[c] - S.sa[c] > 4.0:
                raise StepError("unpaired crossing far from a kink")
            singles.append(c)
    return pairs, singles


def swaps(A, B, fwd):
    """Adjacent transpositions of crossing points between two slices."""
    ka = sorted([(A.s_over[a], a, "o") for a in fwd] + [(A.s_under[a], a, "u") for a in fwd])
    inv = {b: a for a, b in fwd.items()}
    kb = sorted([(B.s_over[b], inv[b], "o") for b in inv] + [(B.s_under[b], inv[b], "u") for b in inv])
    la = [k[1:] for k in ka]
    lb = [k[1:] for k in kb]
    out, i = [], 0
    while i < len(la):
        if la[i] == lb[i]:
            i += 1
        elif i + 1 < len(la) and la[i] == lb[i + 1] and la[i + 1] == lb[i]:
            out.append((la[i], la[i + 1]))
            i += 2
        else:
            raise StepError("crossing points reordered beyond adjacent swaps")
    return out


class Step:
    def __init__(self, A, B):
        self.fwd, births, deaths = match(A, B)
        self.r2_births, self.r1_births = pair_up(B, births)
        self.r2_deaths, self.r1_deaths = pair_up(A, deaths)
        self.swaps = swaps(A, B, self.fwd)
        if len(self.swaps) not in (0, 3):
            raise StepError("swaps do not form a single R-III")
        events = len(self.r2_births) + len(self.r1_births) + len(self.r2_deaths) + len(self.r1_deaths)
        events += 1 if self.swaps else 0
        if events > 1:
            raise StepError("several events in one step")


def movie(core, mirror, steps=720, max_depth=30):
    """Slices over one full rotation with single-event steps between them."""
    phis = list(np.linspace(0, 2 * math.pi, steps + 1))
    slices = [Slice(core, p, mirror) for p in phis]
    out_s, out_t = [slices[0]], []

    def resolve(A, B, depth):
        try:
            return [(Step(A, B), B)]
        except StepError:
            if depth >= max_depth:
                raise
            M = Slice(core, 0.5 * (A.phi + B.phi), mirror)
            return resolve(A, M, depth + 1) + resolve(M, B, depth + 1)

    for A, B in zip(slices[:-1], slices[1:]):
        for step, S in resolve(A, B, 0):
            out_t.append(step)
            out_s.append(S)
    out_s.pop()  # the last slice repeats the first one
    return out_s, out_t


class UnionFind:
    def __init__(self):
        self.parent = {}

    def find(self, x):
        self.parent.setdefault(x, x)
        while self.parent[x] != x:
            self.parent[x] = self.parent[self.parent[x]]
            x = self.parent[x]
        return x

    def union(self, a, b):
        self.parent[self.find(a)] = self.find(b)


def build(core, twist, mirror=False, flip_normal=False, flip_branch=False, reverse=False, steps=720):
    if twist == 0:
        S = Slice(core, 0.0, mirror)
        slices, steps = [S], [Step(S, S)]
    else:
        base_s, base_t = movie(core, mirror, steps)
        if reverse:
            base_s = base_s[::-1]
            base_t = []
            for k in range(len(base_s)):
                base_t.append(Step(base_s[k], base_s[(k + 1) % len(base_s)]))
        slices = base_s * twist
        steps = base_t * twist
    L = len(slices)
    sheets, curves = UnionFind(), UnionFind()
    for k, S in enumerate(slices):
        for r in range(len(S) + 1):
            sheets.find((k, r))
        for c in range(len(S)):
            curves.find((k, c))

    triples, branches = [], []
    for k in range(L):
        A, B, st = slices[k], slices[(k + 1) % L], steps[k]
        k1 = (k + 1) % L
        dying = {c for pr in st.r2_deaths for c in pr} | set(st.r1_deaths)
        newborn = {c for pr in st.r2_births for c in pr} | set(st.r1_births)
        inv = {b: a for a, b in st.fwd.items()}

        # arcs: reduce both slices to persistent under-points
        def reduced(S, keep, pairs):
            order = S.under_order()
            keys, idx, enclosed = [], [], set()
            for c in order:
                if c in keep:
                    keys.append(c)
            pos = 0
            full = [c for c in order]
            for r in range(len(full) + 1):
                left = full[r - 1] if r > 0 else None
                right = full[r] if r < len(full) else None
                if any({left, right} == set(p) for p in pairs):
                    enclosed.add(r)
                idx.append(pos)
                if right is not None and right in keep:
                    pos += 1
            return keys, idx, enclosed

        ka, ia, ea = reduced(A, set(st.fwd), st.r2_deaths)
        kb, ib, eb = reduced(B, set(inv), st.r2_births)
        kb_old = [inv[c] for c in kb]
        middles = set()
        for i in range(len(ka) - 1):
            if ka[i] != kb_old[i] and ka[i] == kb_old[i + 1] and ka[i + 1] == kb_old[i]:
                middles.add(i + 1)
        by_index = {}
        for r, i in enumerate(ia):
            if r not in ea and i not in middles:
                by_index.setdefault(i, []).append((k, r))
        for r, i in enumerate(ib):
            if r not in eb and i not in middles:
                for node in by_index.get(i, []):
                    sheets.union(node, (k1, r))
        if twist == 0:
            continue

        # double curves
        split = set()
        for (c1, r1), (c2, r2) in st.swaps:
            if r2 == "u":
                split.add(c1)
            if r1 == "u":
                split.add(c2)
        for a, b in st.fwd.items():
            if a not in split:
                curves.union((k, a), (k1, b))
        for b1, b2 in st.r2_births:
            curves.union((k1, b1), (k1, b2))
        for a1, a2 in st.r2_deaths:
            curves.union((k, a1), (k, a2))
        for b in st.r1_births:
            branches.append((k1, b, +1))
        for a in st.r1_deaths:
            branches.append((k, a, -1))
        if st.swaps:
            triples.append((k, st))

    def arc_node(k, s):
        return sheets.find((k, slices[k].arc_of(s)))

    def incidence(k, c):
        S = slices[k]
        su = S.s_under[c]
        r = S.arc_of(su)
        side = float(np.dot(normal(S.t_over[c], flip_normal), S.t_under[c]))
        plus, minus = (r + 1, r) if side > 0 else (r, r + 1)
        return arc_node(k, S.s_over[c]), sheets.find((k, plus)), sheets.find((k, minus))

    sheet_ids, curve_ids = {}, {}

    def sheet_label(root):
        return sheet_ids.setdefault(root, len(sheet_ids) + 1)

    for k, S in enumerate(slices):
        for r in range(len(S) + 1):
            sheet_label(sheets.find((k, r)))
    curve_data = {}
    for k, S in enumerate(slices):
        for c in range(len(S)):
            root = curves.find((k, c))
            inc = tuple(sheet_label(x) for x in incidence(k, c))
            if root in curve_data and curve_data[root] != inc:
                raise StepError(f"curve incidence changes along a curve at slice {k}")
            curve_data[root] = inc
            curve_ids.setdefault(root, len(curve_ids) + 1)

    lines = [f"sheets {len(sheet_ids)}"]
    for root, cid in sorted(curve_ids.items(), key=lambda kv: kv[1]):
        o, up, um = curve_data[root]
        lines.append(f"curve c{cid} over=s{o} uplus=s{up} uminus=s{um}")

    for n, (k, st) in enumerate(triples, 1):
        A, B = slices[k], slices[(k + 1) % L]
        k1 = (k + 1) % L
        uu = [sw for sw in st.swaps if sw[0][1] == "u" and sw[1][1] == "u"]
        ou = [sw for sw in st.swaps if {sw[0][1], sw[1][1]} == {"o", "u"}]
        if len(uu) != 1 or len(ou) != 1:
            raise StepError("unexpected R-III shape")
        o_pt = ou[0][0] if ou[0][0][1] == "o" else ou[0][1]
        u_pt = ou[0][1] if o_pt is ou[0][0] else ou[0][0]
        mb, tm = o_pt[0], u_pt[0]
        tb = uu[0][0][0] if uu[0][0][0] != mb else uu[0][1][0]
        t_top = A.t_over[tm]
        t_mid = A.t_under[tm]
        t_bot = A.t_under[tb]
        n_top, n_mid = normal(t_top, flip_normal), normal(t_mid, flip_normal)
        sgn = lambda x: 1 if x > 0 else -1
        top_side = sgn(np.dot(n_top, t_bot))
        mid_side = sgn(np.dot(n_mid, t_bot))
        mid_top_side = sgn(np.dot(n_top, t_mid))

        def bottom_label(S, kk, c_tb, c_mb, r):
            order = S.under_order()
            mid_s = 0.5 * ((S.s_under[order[r - 1]]) + (S.s_under[order[r]])) if 0 < r < len(order) else None
            if mid_s is None:
                mid_s = S.s_under[order[r - 1]] + 0.5 if r > 0 else S.s_under[order[0]] - 0.5
            a = top_side * sgn(mid_s - S.s_under[c_tb])
            b = mid_side * sgn(mid_s - S.s_under[c_mb])
            return (a, b), sheet_label(sheets.find((kk, r)))

        bot = {}
        for S, kk, c_tb, c_mb in ((A, k, tb, mb), (B, k1, st.fwd[tb], st.fwd[mb])):
            r_tb, r_mb = S.arc_of(S.s_under[c_tb]), S.arc_of(S.s_under[c_mb])
            for r in {r_tb, r_tb + 1, r_mb, r_mb + 1}:
                key, lab = bottom_label(S, kk, c_tb, c_mb, r)
                if key in bot and bot[key] != lab:
                    raise StepError("bottom sheet mismatch at a triple point")
                bot[key] = lab
        if len(bot) != 4:
            raise StepError("triple point without four bottom quadrants")
        t_sheet = sheet_label(arc_node(k, A.s_over[tm]))
        r_tm = A.arc_of(A.s_under[tm])
        mplus, mminus = (r_tm + 1, r_tm) if mid_top_side > 0 else (r_tm, r_tm + 1)
        mp, mm = sheet_label(sheets.find((k, mplus))), sheet_label(sheets.find((k, mminus)))
        c_tm = curve_ids[curves.find((k, tm))]
        mb_side = mid_top_side * sgn(A.s_over[mb] - A.s_under[tm])
        mb_a, mb_b = curve_ids[curves.find((k, mb))], curve_ids[curves.find((k1, st.fwd[mb]))]
        mbp, mbm = (mb_a, mb_b) if mb_side > 0 else (mb_b, mb_a)
        tb_side = mid_side * sgn(A.s_under[tb] - A.s_under[mb])
        tb_a, tb_b = curve_ids[curves.find((k, tb))], curve_ids[curves.find((k1, st.fwd[tb]))]
        tbp, tbm = (tb_a, tb_b) if tb_side > 0 else (tb_b, tb_a)
        lines.append(
            f"triple t{n} t=s{t_sheet} mplus=s{mp} mminus=s{mm} bpp=s{bot[(1, 1)]} bpm=s{bot[(1, -1)]} "
            f"bmp=s{bot[(-1, 1)]} bmm=s{bot[(-1, -1)]} tm=c{c_tm} mbplus=c{mbp} mbminus=c{mbm} "
            f"tbplus=c{tbp} tbminus=c{tbm}")

    for n, (k, c, birth) in enumerate(branches, 1):
        S = slices[k]
        t_o, t_u = S.t_over[c], S.t_under[c]
        writhe = 1 if t_o[0] * t_u[1] - t_o[1] * t_u[0] > 0 else -1
        sign = writhe * birth * (-1 if flip_branch else 1)
        o, up, um = curve_data[curves.find((k, c))]
        if not o == up == um:
            raise StepError("branch point on a curve with distinct sheets")
        lines.append(f"branch b{n} sign={'+' if sign > 0 else '-'} curve=c{curve_ids[curves.find((k, c))]} sheet=s{o}")
    return lines


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--twist", type=int, default=2)
    ap.add_argument("--name", default="twist_spun_trefoil")
    ap.add_argument("--out", default="-")
    ap.add_argument("--mirror", action="store_true", help="reverse the height direction")
    ap.add_argument("--flip-normal", action="store_true", help="reverse the surface orientation")
    ap.add_argument("--flip-branch", action="store_true", help="reverse the branch point sign rule")
    ap.add_argument("--reverse", action="store_true", help="rotate the core the other way")
    ap.add_argument("--samples", type=int, default=40, help="polyline points per 10 units of core length")
    ap.add_argument("--steps", type=int, default=720, help="initial angle steps per rotation")
    args = ap.parse_args()
    body = build(trefoil_core(args.samples), args.twist, args.mirror, args.flip_normal, args.flip_branch,
                 args.reverse, args.steps)
    text = "\n".join([f"# {args.twist}-twist spun long trefoil, generated by tools/twist_spin_fixture.py",
                      f"diagram {args.name}"] + body) + "\n"
    if args.out == "-":
        sys.stdout.write(text)
    else:
        with open(args.out, "w") as f:
            f.write(text)


if __name__ == "__main__":
    main()
