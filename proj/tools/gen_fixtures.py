#!/usr/bin/env python3
"""Regenerates the surface fixtures in data/ by brute-force point counting."""

import json
import sys
from pathlib import Path


def primes_upto(n):
    return [p for p in range(2, n + 1) if all(p % d for d in range(2, int(p ** 0.5) + 1))]


def sqrt_counts(p):
    """cnt[v] = number of y in F_p with y^2 = v."""
    cnt = [0] * p
    for y in range(p):
        cnt[y * y % p] += 1
    return cnt


def count_fp(f, p):
    cnt = sqrt_counts(p)
    return sum(cnt[f(x, p) % p] for x in range(p)) + 1  # one point at infinity


class Fp2:
    """F_{p^2} = F_p[i]/(i^2 - n) for a fixed non-residue n."""

    def __init__(self, p):
        self.p = p
        self.n = next(a for a in range(2, p) if pow(a, (p - 1) // 2, p) == p - 1) if p > 2 else None

    def mul(self, a, b):
        p, n = self.p, self.n
        return ((a[0] * b[0] + n * a[1] * b[1]) % p, (a[0] * b[1] + a[1] * b[0]) % p)


def count_fp2(coeffs, p):
    """Points of y^2 = sum coeffs[k] x^k over F_{p^2}, p odd."""
    F = Fp2(p)
    q = p * p
    squares = {}
    for a in range(p):
        for b in range(p):
            s = F.mul((a, b), (a, b))
            squares[s] = squares.get(s, 0) + 1
    total = 0
    for a in range(p):
        for b in range(p):
            x = (a, b)
            acc = (0, 0)
            for c in reversed(coeffs):
                acc = F.mul(acc, x)
                acc = ((acc[0] + c) % p, acc[1])
            total += squares.get(acc, 0)
    assert sum(squares.values()) == q
    return total + 1


def genus2_numerator(p, coeffs):
    f = lambda x, m: sum(c * pow(x, k, m) for k, c in enumerate(coeffs))
    n1 = count_fp(f, p)
    n2 = count_fp2(coeffs, p)
    s1 = p + 1 - n1
    s2 = p * p + 1 - n2
    c1 = -s1
    assert (s1 * s1 - s2) % 2 == 0
    c2 = (s1 * s1 - s2) // 2
    return [1, c1, c2, p * c1, p * p]


def elliptic_numerator(p, coeffs):
    f = lambda x, m: sum(c * pow(x, k, m) for k, c in enumerate(coeffs))
    a = p + 1 - count_fp(f, p)
    return [1, -a, p]


def rational_base():
    return {"label": "Q", "degree": 1, "r1": 1, "r2": 0, "abs_disc": 1, "dedekind": "rational", "D": 1}


def good(p, g, P, family="generic"):
    return {"p": p, "good": True, "nodes": [], "components": [{"q": p, "genus": g, "P": P, "family": family}]}


def genus2_model(p_max=200):
    quintic = [1, 1, 0, 0, 0, 1]  # x^5 + x + 1, discriminant 3 * 7^2 * 23
    cubic = [1, 1, 0, 1]          # x^3 + x + 1
    bad = {2, 3, 7, 23}
    fibres = []
    for p in primes_upto(p_max):
        if p == 11:
            fibres.append({"p": 11, "good": False, "nodes": [1],
                           "components": [{"q": 11, "genus": 1, "P": elliptic_numerator(11, cubic),
                                           "family": "elliptic"}]})
        elif p in bad:
            fibres.append(good(p, 2, [1, 0, 2 * p, 0, p * p]))
        else:
            fibres.append(good(p, 2, genus2_numerator(p, quintic)))
    return {"genus": 2, "base": rational_base(), "fibres": fibres, "horizontals": [rational_base()],
            "p_max": p_max, "zeta_source": "euler"}


def elliptic_model(p_max=100):
    cubic = [1, 1, 0, 1]  # y^2 = x^3 + x + 1, discriminant -16 * 31
    fibres = []
    for p in primes_upto(p_max):
        if p == 2:
            fibres.append(good(2, 1, [1, 0, 2], "elliptic"))
        elif p == 31:
            fibres.append({"p": 31, "good": False, "nodes": [1],
                           "components": [{"q": 31, "genus": 0, "P": [1], "family": "projective_line"}]})
        else:
            fibres.append(good(p, 1, elliptic_numerator(p, cubic), "elliptic"))
    return {"genus": 1, "base": rational_base(), "fibres": fibres, "horizontals": [rational_base()],
            "p_max": p_max, "zeta_source": "euler"}


def p1_model(p_max=50):
    fibres = [good(p, 0, [1], "projective_line") for p in primes_upto(p_max)]
    return {"genus": 0, "base": rational_base(), "fibres": fibres, "horizontals": [],
            "p_max": p_max, "zeta_source": "p1_closed_form"}


def main():
    out = Path(sys.argv[1]) if len(sys.argv) > 1 else Path(__file__).resolve().parent.parent / "data"
    out.mkdir(parents=True, exist_ok=True)
    for name, model in [("genus2_synthetic.json", genus2_model()),
                        ("elliptic_synthetic.json", elliptic_model()),
                        ("p1_over_q.json", p1_model())]:
        (out / name).write_text(json.dumps(model, indent=2, sort_keys=True) + "\n")
        print("wrote", out / name)


if __name__ == "__main__":
    main()
