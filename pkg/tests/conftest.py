import pytest

from foxhom import datasets


@pytest.fixture(scope="session")
def n_final():
    return datasets.load_presentation("n-final")


@pytest.fixture(scope="session")
def free_abelian_map(n_final):
    return datasets.load_map("map-free-abelian", source=n_final.generators)


@pytest.fixture(scope="session")
def infinite_cyclic_map(n_final):
    return datasets.load_map("map-infinite-cyclic", source=n_final.generators)


@pytest.fixture(scope="session")
def reference():
    return datasets.load_reference()


@pytest.fixture(scope="session")
def cover_job():
    return datasets.standard_cover_job()
