#!/usr/bin/env python3
"""Writes the golden round-trip corpus: NAME.in is a noisy but valid file,
NAME.out its canonical form, computed here without the C++ code.

Rerun after editing the case list:  python3 tests/data/make_golden.py
"""
import itertools
import pathlib
import random

OUT = pathlib.Path(__file__).resolve().parent / "golden"


def canonical_graph(n, edges, ell=None, z=None, px=None, py=None, w=None, prob=None):
    es = sorted({(min(u, v), max(u, v)) for u, v in edges})
    lines = [f"p edge {n} {len(es)}"]
    lines += [f"e {u} {v}" for u, v in es]
    if ell is not None:
        lines.append(f"l {ell}")
    if z is not None:
        lines.append(" ".join(["z"] + [str(v) for v in sorted(z)]))
    if px is not None:
        lines.append(" ".join(["px"] + [str(v) for v in px]))
    if py is not None:
        lines.append(" ".join(["py"] + [str(v) for v in py]))
    if w is not None:
        lines += [f"w {v} {w[v - 1]}" for v in range(1, n + 1)]
    if prob is not None:
        lines.append(f"prob {prob}")
    return "".join(line + "\n" for line in lines)


def noisy_graph(rng, n, edges, ell=None, z=None, px=None, py=None, w=None, prob=None):
    def spaced(tokens):
        out = ""
        for i, tok in enumerate(tokens):
            out += (rng.choice([" ", "  ", "\t"]) if i else "") + str(tok)
        return out + rng.choice(["", "", " ", "\t"])

    body = []
    for u, v in edges:
        a, b = (u, v) if rng.random() < 0.5 else (v, u)
        body.append(spaced(["e", a, b]))
    if ell is not None:
        body.append(spaced(["l", ell]))
    if z is not None:
        zs = list(z)
        rng.shuffle(zs)
        body.append(spaced(["z"] + zs))
    if px is not None:
        body.append(spaced(["px"] + list(px)))
    if py is not None:
        body.append(spaced(["py"] + list(py)))
    if w is not None:
        body += [spaced(["w", v, w[v - 1]]) for v in range(1, n + 1)]
    if prob is not None:
        body.append(spaced(["prob", prob]))
    rng.shuffle(body)
    for _ in range(rng.randint(0, 3)):
        body.insert(rng.randint(0, len(body)), rng.choice(["c noise", "c", "", "   "]))
    lines = ["c generated corpus file"] * rng.randint(0, 2) + [spaced(["p", "edge", n, len(edges)])] + body
    eol = "\r\n" if rng.random() < 0.25 else "\n"
    text = eol.join(lines)
    if rng.random() < 0.8:
        text += eol
    return text


def canonical_cnf(nvars, clauses):
    lines = [f"p cnf {nvars} {len(clauses)}"]
    for clause in clauses:
        lits = sorted(set(clause), key=lambda x: (abs(x), -x))
        lines.append(" ".join(str(x) for x in lits + [0]))
    return "".join(line + "\n" for line in lines)


def noisy_cnf(rng, nvars, clauses):
    tokens = []
    for clause in clauses:
        lits = list(clause)
        rng.shuffle(lits)
        tokens += lits + [0]
    lines = ["c formula"] if rng.random() < 0.5 else []
    lines.append(f"p cnf {nvars} {len(clauses)}")
    i = 0
    while i < len(tokens):
        step = rng.randint(1, 5)
        lines.append(" ".join(str(t) for t in tokens[i:i + step]))
        if rng.random() < 0.2:
            lines.append("c mid")
        i += step
    if rng.random() < 0.5:
        lines += ["%", "0", ""]
    return "\n".join(lines) + "\n"


def cycle(k, offset=0):
    return [(offset + i + 1, offset + (i + 1) % k + 1) for i in range(k)]


def complete(k, offset=0):
    return [(offset + a, offset + b) for a, b in itertools.combinations(range(1, k + 1), 2)]


def subdivide3(n, edges):
    # Each edge u-v becomes u-a-b-c-v; fresh ids follow in sorted edge order.
    out, nxt = [], n + 1
    for u, v in sorted((min(e), max(e)) for e in edges):
        a, b, c = nxt, nxt + 1, nxt + 2
        nxt += 3
        out += [(u, a), (a, b), (b, c), (c, v)]
    return nxt - 1, out


def two_colour(n, edges):
    adj = {v: [] for v in range(1, n + 1)}
    for u, v in edges:
        adj[u].append(v)
        adj[v].append(u)
    side = {}
    for s in range(1, n + 1):
        if s in side:
            continue
        side[s] = 0
        stack = [s]
        while stack:
            u = stack.pop()
            for v in adj[u]:
                if v not in side:
                    side[v] = 1 - side[u]
                    stack.append(v)
    return [v for v in range(1, n + 1) if side[v] == 0], [v for v in range(1, n + 1) if side[v] == 1]


def tsd_of(n, edges):
    # Independent set X = 1..n, one triangle per edge; u-a, v-b, v-c.
    out, py, nxt = [], [], n + 1
    for u, v in sorted((min(e), max(e)) for e in edges):
        a, b, c = nxt, nxt + 1, nxt + 2
        nxt += 3
        out += [(u, a), (v, b), (v, c), (a, b), (a, c), (b, c)]
        py += [a, b, c]
    return nxt - 1, out, list(range(1, n + 1)), py


def cases(rng):
    petersen = cycle(5) + cycle(5, 5) + [(i, i + 5) for i in range(1, 6)]
    wheel5 = cycle(5, 1) + [(1, v) for v in range(2, 7)]
    rand12 = [e for e in itertools.combinations(range(1, 13), 2) if rng.random() < 0.3]
    rand8 = [e for e in itertools.combinations(range(1, 9), 2) if rng.random() < 0.5]

    yield "bare_empty", dict(n=0, edges=[])
    yield "bare_isolated", dict(n=5, edges=[(2, 4), (1, 5)])
    yield "bare_k3", dict(n=3, edges=complete(3))
    yield "bare_c4_with_z", dict(n=4, edges=cycle(4), z=[3, 1])
    yield "bare_random12", dict(n=12, edges=rand12)
    yield "3col_c5", dict(n=5, edges=cycle(5), prob="3col")
    yield "3col_wheel5", dict(n=6, edges=wheel5, prob="3col")
    yield "clique_k3", dict(n=3, edges=complete(3), ell=3, prob="clique")
    yield "clique_p3", dict(n=3, edges=[(1, 2), (2, 3)], ell=2, prob="clique")
    yield "clique_budget_above_n", dict(n=3, edges=complete(3), ell=5, prob="clique")
    yield "clique_random8", dict(n=8, edges=rand8, ell=4, prob="clique")
    yield "is_c5", dict(n=5, edges=cycle(5), ell=2, prob="is")
    yield "is_edgeless", dict(n=4, edges=[], ell=4, prob="is")
    yield "vc_c5", dict(n=5, edges=cycle(5), ell=3, prob="vc")
    yield "vc_with_cover", dict(n=5, edges=cycle(5), ell=3, z=[5, 1, 3], prob="vc")
    yield "fvs_k4", dict(n=4, edges=complete(4), ell=2, prob="fvs")
    yield "fvs_petersen", dict(n=10, edges=petersen, ell=3, prob="fvs")
    yield "fvs_zero_budget", dict(n=4, edges=[(1, 2), (2, 3), (3, 4)], ell=0, prob="fvs")
    for name, (n, es) in {"edgeless": (3, []), "k2": (2, [(1, 2)]), "p3": (3, [(1, 2), (2, 3)]),
                          "k3": (3, complete(3))}.items():
        total, tes, px, py = tsd_of(n, es)
        yield f"tsd_{name}", dict(n=total, edges=tes, px=px, py=py, prob="3col-tsd")
    total, tes, px, py = tsd_of(2, [(1, 2)])
    yield "tsd_px_order_kept", dict(n=total, edges=tes, px=list(reversed(px)), py=py[1:] + py[:1],
                                    prob="3col-tsd")
    for name, (n, es, ell) in {"c3": (3, complete(3), 1), "path": (3, [(1, 2), (2, 3)], 0),
                               "k4": (4, complete(4), 2)}.items():
        total, ses = subdivide3(n, es)
        x, y = two_colour(total, ses)
        yield f"bg6_{name}", dict(n=total, edges=ses, ell=ell, px=x, py=y, prob="fvs-bg6")
    yield "bip_c4", dict(n=4, edges=cycle(4), ell=1, px=[1, 3], py=[2, 4], prob="fvs-bip")
    k33 = [(a, b) for a in (1, 2, 3) for b in (4, 5, 6)]
    yield "bip_k33", dict(n=6, edges=k33, ell=2, px=[3, 1, 2], py=[6, 5, 4], prob="fvs-bip")
    yield "clique_vc_constant_no", dict(n=1, edges=[], ell=2, z=[], prob="clique-vc")
    yield "clique_vc_star", dict(n=5, edges=[(1, v) for v in range(2, 6)], ell=2, z=[1], prob="clique-vc")
    yield "chrom_vc_k2", dict(n=2, edges=[(1, 2)], ell=1, z=[1], prob="chrom-vc")
    yield "chrom_vc_c4", dict(n=4, edges=cycle(4), ell=2, z=[2, 4], prob="chrom-vc")
    yield "fvs_dc_c3", dict(n=3, edges=complete(3), ell=0, z=[1, 2, 3], prob="fvs-dc")
    yield "fvs_dc_two_triangles", dict(n=7, edges=complete(3) + complete(3, 3) + [(7, 1), (7, 4)], ell=2,
                                       z=[7], prob="fvs-dc")
    yield "fvs_dcc_c4", dict(n=4, edges=cycle(4), ell=1, z=[], prob="fvs-dcc")
    yield "fvs_dcc_k33_plus", dict(n=7, edges=k33 + [(7, 1)], ell=2, z=[7], prob="fvs-dcc")
    yield "wfvs_vc_c4", dict(n=4, edges=cycle(4), ell=1, z=[1, 3], w=[1, 5, 2, 7], prob="wfvs-vc")
    yield "wfvs_vc_c3_unit", dict(n=3, edges=complete(3), ell=0, z=[1, 2, 3], w=[1, 1, 1], prob="wfvs-vc")


def cnf_cases():
    yield "cnf_empty", (0, [])
    yield "cnf_empty_clause", (2, [[]])
    yield "cnf_contradiction", (1, [[1], [-1]])
    yield "cnf_repeats", (3, [[3, 1, 3, -2], [2, -2, 1], [-3, -3]])
    yield "cnf_three_sat", (4, [[1, -2, 4], [-1, 3, -4], [2, 3, 4], [-3, -2, 1]])
    yield "cnf_unsorted_wide", (5, [[5, -4, 3, -2, 1], [-5], [4, 2]])


def main():
    rng = random.Random(20240601)
    OUT.mkdir(parents=True, exist_ok=True)
    for old in OUT.glob("*"):
        old.unlink()
    count = 0
    for name, fields in cases(rng):
        fields = dict(fields)
        n, edges = fields.pop("n"), fields.pop("edges")
        (OUT / f"{name}.in").write_bytes(noisy_graph(rng, n, edges, **fields).encode())
        (OUT / f"{name}.out").write_bytes(canonical_graph(n, edges, **fields).encode())
        count += 1
    for name, (nvars, clauses) in cnf_cases():
        (OUT / f"{name}.in").write_bytes(noisy_cnf(rng, nvars, clauses).encode())
        (OUT / f"{name}.out").write_bytes(canonical_cnf(nvars, clauses).encode())
        count += 1
    print(f"{count} cases in {OUT}")


if __name__ == "__main__":
    main()
