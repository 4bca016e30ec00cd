"""Independent brute-force oracles used to pin expected values.

These deliberately avoid the library's word machinery: they work on plain
(name, sign) tuples read off the presentation structure, so they can
disagree with the implementation if either is wrong.
"""


def _arrow_maps(p):
    by_source = {}
    by_target = {}
    for a in p.arrows:
        by_source.setdefault(a.source, []).append(a)
        by_target.setdefault(a.target, []).append(a)
    return by_source, by_target


def raw_string_classes(p, max_len):
    """All strings of length <= max_len as rho-classes of (name, sign) tuples."""
    by_source, by_target = _arrow_maps(p)
    relations = [tuple(a.name for a in rel) for rel in p.relations]
    inverse_relations = [tuple(reversed(r)) for r in relations]

    def ok(seq):
        for (n1, s1), (n2, s2) in zip(seq, seq[1:]):
            if n1 == n2 and s1 == -s2:
                return False
        for length in {len(r) for r in relations}:
            for i in range(len(seq) - length + 1):
                window = seq[i:i + length]
                names = tuple(n for n, _ in window)
                if all(s > 0 for _, s in window) and names in relations:
                    return False
                if all(s < 0 for _, s in window) and names in inverse_relations:
                    return False
        return True

    def endpoint(letter):
        # source vertex of the letter (walk continues there)
        name, sign = letter
        arrow = next(a for a in p.arrows if a.name == name)
        return arrow.source if sign > 0 else arrow.target

    classes = {("triv", u) for u in p.vertices}
    frontier = [((), u) for u in p.vertices]
    for _ in range(max_len):
        nxt = []
        for seq, at in frontier:
            options = [(a.name, 1) for a in by_target.get(at, [])]
            options += [(a.name, -1) for a in by_source.get(at, [])]
            for letter in options:
                cand = seq + (letter,)
                if not ok(cand):
                    continue
                inv = tuple((n, -s) for n, s in reversed(cand))
                key = min(cand, inv)
                nxt.append((cand, endpoint(letter)))
                classes.add(key)
        frontier = nxt
    return classes


def raw_string_class_count(p, max_len):
    return len(raw_string_classes(p, max_len))


def path_basis_dims(p, i):
    """Dimension vector of P_i: count paths from i avoiding relation factors."""
    by_source, _ = _arrow_maps(p)
    relations = [tuple(a.name for a in rel) for rel in p.relations]

    def extendable(steps, a):
        cand = steps + (a.name,)
        for length in {len(r) for r in relations}:
            if len(cand) >= length and tuple(reversed(cand[-length:])) in relations:
                return False
        return True

    counts = [0] * p.n
    frontier = [((), i)]
    counts[i - 1] += 1
    while frontier:
        nxt = []
        for steps, at in frontier:
            for a in by_source.get(at, []):
                if extendable(steps, a):
                    counts[a.target - 1] += 1
                    nxt.append((steps + (a.name,), a.target))
        frontier = nxt
    return tuple(counts)


def reflection_closure_alt(cd, bound, reflect, delta_vec):
    """Positive-root set by a depth-first traversal in reversed generator
    order (an independent application order for the closure)."""
    simple = [tuple(1 if j == i else 0 for j in range(cd.n)) for i in range(cd.n)]
    found = set()
    stack = [x for x in simple if sum(x) <= bound]
    found.update(stack)
    while stack:
        x = stack.pop()
        for i in range(cd.n, 0, -1):
            y = reflect(cd, i, x)
            if y not in found and all(v >= 0 for v in y) and 0 < sum(y) <= bound:
                found.add(y)
                stack.append(y)
    m = 1
    while m * sum(delta_vec) <= bound:
        found.add(tuple(m * v for v in delta_vec))
        m += 1
    return found
