import math
import random

import pytest

from weiersem import (am_sequence, normalize_degree, parametrize, parse_field,
                      parse_poly, parse_rational, semigroup_at_infinity,
                      triangulate)

GOLDEN_BASIS_LINES = [
    "Y+Y^7 / X+Y^3",
    "Y+Y^7 / X*Y^2+X*Y+X+Y^5+Y^4+Y^3",
    "X^2+Y^6 / Y^2+Y+1",
    "Y^7+Y^6+Y^5+Y^4+Y^3+Y^2 / X+Y^3",
]


@pytest.fixture(scope="session")
def gf2():
    return parse_field("GF(2)")


@pytest.fixture(scope="session")
def golden_model(gf2):
    return normalize_degree(parse_poly("Y^8+Y^2+X^3", gf2))


@pytest.fixture(scope="session")
def golden_seq(golden_model):
    return am_sequence(golden_model)


@pytest.fixture(scope="session")
def golden_param(golden_model):
    return parametrize(golden_model)


@pytest.fixture(scope="session")
def golden_basis(gf2):
    return [parse_rational(line, gf2) for line in GOLDEN_BASIS_LINES]


@pytest.fixture(scope="session")
def golden_report(golden_seq, golden_basis, golden_param):
    s_inf = semigroup_at_infinity(golden_seq)
    return triangulate(s_inf, golden_seq.roots, golden_basis, golden_param)


def random_semigroup_gens(rng, max_mult=12, max_genus=25):
    """Deterministic rejection sampling of generator lists."""
    while True:
        e0 = rng.randint(2, max_mult)
        gens = [e0] + [rng.randint(e0 + 1, e0 + 25)
                       for _ in range(rng.randint(1, 4))]
        g = 0
        for x in gens:
            g = math.gcd(g, x)
        if g != 1:
            continue
        from weiersem import NumericalSemigroup
        S = NumericalSemigroup.from_generators(gens)
        if S.genus <= max_genus:
            return gens, S


def random_telescopic(rng):
    """Random telescopic generator sequence (delta_0, ..., delta_h)."""
    from weiersem import NumericalSemigroup, TelescopicStructure
    while True:
        h = rng.randint(1, 3)
        ns = [rng.choice([2, 2, 3]) for _ in range(h)]
        d = [1]
        for n in reversed(ns):
            d.insert(0, d[0] * n)
        delta0 = d[0]
        gens = [delta0]
        ok = True
        for i in range(1, h + 1):
            g = 0
            for x in gens:
                g = math.gcd(g, x)
            scaled = NumericalSemigroup.from_generators([x // g for x in gens])
            target = None
            for _ in range(40):
                cand = d[i] * rng.randint(2, 12)
                if math.gcd(cand, d[i - 1]) != d[i]:
                    continue
                if (ns[i - 1] * cand) % g == 0 and \
                        (ns[i - 1] * cand // g) in scaled:
                    target = cand
                    break
            if target is None:
                ok = False
                break
            gens.append(target)
        if not ok:
            continue
        try:
            TelescopicStructure(gens)
        except Exception:
            continue
        return gens
