from __future__ import annotations

import json

import numpy as np
import pytest

from tgrs import TwistedSpec, field_new, fixture_path


def load_spec(name: str) -> TwistedSpec:
    return TwistedSpec.from_json(json.loads(fixture_path(name).read_text()))


def elems(F, text: str) -> np.ndarray:
    """Whitespace-separated element list, e.g. ``"w^3 1 0"``."""
    return np.asarray([F.code(t) for t in text.split()], dtype=np.int64)


def mat(F, rows: list[str]) -> np.ndarray:
    return np.vstack([elems(F, r) for r in rows])


@pytest.fixture(scope="session")
def gf11():
    return field_new(11)


@pytest.fixture(scope="session")
def gf13():
    return field_new(13)


@pytest.fixture(scope="session")
def gf16():
    return field_new(2, 4)


@pytest.fixture(scope="session")
def grs_like():
    return load_spec("gf11_tgrs_grs_equivalent")


@pytest.fixture(scope="session")
def non_grs():
    return load_spec("gf13_tgrs_non_grs")


@pytest.fixture(scope="session")
def non_grs_ext():
    return load_spec("gf11_etgrs_non_grs")


@pytest.fixture(scope="session")
def ex42():
    return load_spec("ex42")


@pytest.fixture(scope="session")
def ex43():
    return load_spec("ex43")


@pytest.fixture
def rng():
    return np.random.default_rng(20240917)


def random_spec(
    F, rng: np.random.Generator, n: int | None = None, k: int | None = None, extended: bool = False,
    parity: str | None = None, v: str = "random",
) -> TwistedSpec:
    """Random admissible spec; ``parity`` ("odd"/"even") constrains n - k."""
    while True:
        nn = n if n is not None else int(rng.integers(5, F.q + 1))
        kk = k if k is not None else int(rng.integers(3, nn - 1))
        if not 3 <= kk <= nn - 2:
            continue
        if parity is not None and ((nn - kk) % 2 == 1) != (parity == "odd"):
            if n is not None and k is not None:
                raise ValueError("parity incompatible with fixed n and k")
            continue
        break
    S = rng.choice(F.q, nn, replace=False)
    vv = F.random(rng, nn, nonzero=True) if v == "random" else np.ones(nn, dtype=np.int64)
    eta = int(F.random(rng, nonzero=True))
    return TwistedSpec(F, tuple(int(a) for a in S), tuple(int(a) for a in vv), eta, kk, extended)
