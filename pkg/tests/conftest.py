import itertools

import pytest

from effalg import (
    boolean_algebra,
    direct_product,
    horizontal_sum,
    mv_chain,
    bundled_fixture,
)


def chain_corpus():
    return [(f"chain-{n}", mv_chain(n)) for n in range(1, 9)]


def boolean_corpus():
    return [(f"boolean-{k}", boolean_algebra(k)) for k in range(1, 5)]


def hsum_corpus():
    out = []
    for size in (2, 3):
        for combo in itertools.combinations_with_replacement((2, 3, 4), size):
            name = "hsum-" + "-".join(str(c) for c in combo)
            out.append((name, horizontal_sum([mv_chain(c) for c in combo])))
    return out


def product_corpus():
    factors = [
        ("b1", boolean_algebra(1)),
        ("b2", boolean_algebra(2)),
        ("c2", mv_chain(2)),
        ("c3", mv_chain(3)),
    ]
    out = []
    for (n1, f1), (n2, f2) in itertools.product(factors, repeat=2):
        out.append((f"product-{n1}-{n2}", direct_product(f1, f2)))
    return out


def full_corpus():
    return chain_corpus() + boolean_corpus() + hsum_corpus() + product_corpus()


@pytest.fixture(scope="session")
def corpus():
    return full_corpus()


@pytest.fixture(scope="session")
def example_25():
    return bundled_fixture("example-2.5")


@pytest.fixture(scope="session")
def example_37():
    return bundled_fixture("example-3.7")


@pytest.fixture(scope="session")
def example_44():
    return bundled_fixture("example-4.4")
