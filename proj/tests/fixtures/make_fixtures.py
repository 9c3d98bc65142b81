"""Writes the imported Cayley-table fixtures used by the scans and tests."""
from itertools import permutations, product


def perm_group(gens):
    n = len(gens[0])
    ident = tuple(range(n))
    elems = [ident]
    seen = {ident}
    frontier = [ident]
    while frontier:
        nxt = []
        for x in frontier:
            for g in gens:
                y = tuple(g[x[i]] for i in range(n))
                if y not in seen:
                    seen.add(y)
                    elems.append(y)
                    nxt.append(y)
        frontier = nxt
    return sorted(elems), lambda a, b: tuple(a[b[i]] for i in range(len(a)))


def sl23():
    mats = [m for m in product(range(3), repeat=4) if (m[0] * m[3] - m[1] * m[2]) % 3 == 1]

    def mul(a, b):
        return ((a[0] * b[0] + a[1] * b[2]) % 3, (a[0] * b[1] + a[1] * b[3]) % 3,
                (a[2] * b[0] + a[3] * b[2]) % 3, (a[2] * b[1] + a[3] * b[3]) % 3)
    return sorted(mats), mul


def write(path, elems, mul, name):
    index = {e: i for i, e in enumerate(elems)}
    with open(path, "w") as f:
        f.write(f"cayley {len(elems)}\n")
        f.write("names " + " ".join(name(e) for e in elems) + "\n")
        for a in elems:
            f.write(" ".join(str(index[mul(a, b)]) for b in elems) + "\n")


def pname(p):
    return "p" + "".join(str(x) for x in p)


def main():
    s4 = list(permutations(range(4)))
    mul = lambda a, b: tuple(a[b[i]] for i in range(len(a)))
    write("S4.cay", sorted(s4), mul, pname)
    a4, m = perm_group([(1, 2, 0, 3), (0, 2, 3, 1)])
    write("A4.cay", a4, m, pname)
    a5, m = perm_group([(1, 2, 3, 4, 0), (1, 2, 0, 3, 4)])
    write("A5.cay", a5, m, pname)
    sl, m = sl23()
    write("SL2_3.cay", sl, m, lambda e: "m" + "".join(map(str, e)))
    # S3 listed with the identity last, so loading has to relabel.
    s3 = sorted(permutations(range(3)), reverse=True)
    write("S3_shuffled.cay", s3, mul, pname)


if __name__ == "__main__":
    main()
