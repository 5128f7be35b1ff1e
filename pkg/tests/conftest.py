import pytest

from nanoshell.elasticity import ElasticModuli
from nanoshell.geometry import ChiralIndices, LatticeGeometry
from nanoshell.torsion import TorsionProblem

E1, E2, G = 784.0, 832.0, 424.0
NU12, NU21 = 0.242, 0.260
EPS = 0.194
SLENDERNESS = 0.25
LOAD = 0.1


@pytest.fixture
def moduli():
    return ElasticModuli(E1=E1, E2=E2, G=G, nu12=NU12, nu21=NU21)


@pytest.fixture
def lattice():
    return LatticeGeometry(0.142)


@pytest.fixture
def make_problem(moduli, lattice):
    def factory(n=6, m=3, t=LOAD, mod=None, eps=EPS, slenderness=SLENDERNESS):
        return TorsionProblem.build(ChiralIndices(n, m), mod or moduli, lattice, eps, slenderness, t)

    return factory


@pytest.fixture
def isolated_logs(tmp_path, monkeypatch):
    from nanoshell import config

    monkeypatch.setattr(config, "LOG_DIR", str(tmp_path / "logs"))
    monkeypatch.setattr(config, "LOG_FILE", str(tmp_path / "logs" / "nanoshell.log"))
    return tmp_path
