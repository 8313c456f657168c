import pytest

from golay486 import codes, constructions


@pytest.fixture(scope="session")
def golay():
    return codes.golay_code()


@pytest.fixture(scope="session")
def gamma():
    return constructions.build_gamma()


@pytest.fixture(scope="session")
def bundled_action():
    return constructions.bundled_action()


@pytest.fixture(scope="session")
def decomp():
    return constructions.bundled_orbitals()


@pytest.fixture(scope="session")
def orbital_models():
    return {w: constructions.build_from_orbitals(w) for w in constructions.ORBITAL_MODELS}
