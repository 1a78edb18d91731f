"""Pure-Python versions of the numeric kernels.

Loop order and arithmetic mirror ``_kernels.pyx`` exactly so the two
backends agree to the last bit on IEEE doubles.
"""

import math


def tri(a, b, c, x):
    if x < a or x > c:
        return 0.0
    left = 1.0 if a == b else (x - a) / (b - a)
    right = 1.0 if b == c else (c - x) / (c - b)
    v = left if left < right else right
    return v if v > 0.0 else 0.0


def _as_list(arr):
    return arr.tolist() if hasattr(arr, "tolist") else arr


def fire_rules(degrees, antecedents, weights, consequents, n_out):
    """Max-aggregated firing strength per output term.

    ``degrees[v][t]`` is the membership of input ``v`` in term ``t``;
    ``antecedents[r][v]`` is a term index or -1 for don't-care.
    """
    degrees = _as_list(degrees)
    antecedents = _as_list(antecedents)
    weights = _as_list(weights)
    consequents = _as_list(consequents)
    act = [0.0] * n_out
    for r, row in enumerate(antecedents):
        s = 1.0
        for v, t in enumerate(row):
            if t >= 0:
                d = degrees[v][t]
                if d < s:
                    s = d
        s = weights[r] * s
        k = consequents[r]
        if s > act[k]:
            act[k] = s
    return act


def centroid(activations, out_params, lo, hi, resolution, fallback):
    activations = _as_list(activations)
    out_params = _as_list(out_params)
    num = 0.0
    den = 0.0
    step = (hi - lo) / (resolution - 1)
    for i in range(resolution):
        y = lo + i * step
        mu = 0.0
        for k, (a, b, c) in enumerate(out_params):
            m = tri(a, b, c, y)
            if activations[k] < m:
                m = activations[k]
            if m > mu:
                mu = m
        num += y * mu
        den += mu
    if den == 0.0:
        return fallback
    return num / den


def fuzzify_all(x, in_params, n_terms):
    """Membership degrees of each input value in each of its terms."""
    x = _as_list(x)
    in_params = _as_list(in_params)
    n_terms = _as_list(n_terms)
    out = []
    for v, xv in enumerate(x):
        row = []
        for t in range(n_terms[v]):
            a, b, c = in_params[v][t]
            row.append(tri(a, b, c, xv))
        out.append(row)
    return out


def evaluate_batch(inputs, in_params, n_terms, antecedents, weights, consequents,
                   out_params, lo, hi, resolution, fallback):
    antecedents = _as_list(antecedents)
    weights = _as_list(weights)
    consequents = _as_list(consequents)
    out_params = _as_list(out_params)
    in_params = _as_list(in_params)
    n_terms = _as_list(n_terms)
    n_out = len(out_params)
    scores = []
    for row in _as_list(inputs):
        deg = fuzzify_all(row, in_params, n_terms)
        act = fire_rules(deg, antecedents, weights, consequents, n_out)
        scores.append(centroid(act, out_params, lo, hi, resolution, fallback))
    return scores


def cosine(u, v):
    u = _as_list(u)
    v = _as_list(v)
    dot = 0.0
    nu = 0.0
    nv = 0.0
    for a, b in zip(u, v):
        dot += a * b
        nu += a * a
        nv += b * b
    if nu == 0.0 or nv == 0.0:
        return 0.0
    sim = dot / (math.sqrt(nu) * math.sqrt(nv))
    return 1.0 if sim > 1.0 else sim


def similarity_sums(vectors):
    """For each row i, the sum of cosine(i, j) over all j != i (j ascending)."""
    vectors = _as_list(vectors)
    n = len(vectors)
    sim = [[0.0] * n for _ in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            s = cosine(vectors[i], vectors[j])
            sim[i][j] = s
            sim[j][i] = s
    sums = []
    for i in range(n):
        total = 0.0
        for j in range(n):
            if j != i:
                total += sim[i][j]
        sums.append(total)
    return sums
