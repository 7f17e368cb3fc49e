"""
conftest.py

Objetivo del script:
Pytest fixtures for cubegrowth tests.

This module provides reusable test fixtures including:
- The finite CAT(0) corpus loaded from the sample files in data/
- Negative controls (unfilled 4-cycle, hollow ring, disconnected pair)
- Nerves and product graphs for the group verbs
- A clean environment for CLI runs

Copyright 2026 Henry Academy.
Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
"""

import random
from pathlib import Path

import pytest

from cubegrowth.cubical import CubeComplex, make_cube_complex, product
from cubegrowth.generators import ProductGraph
from cubegrowth.io_utils import read_cubes, read_facets, read_graph
from cubegrowth.simplicial import SimplicialComplex

DATA_DIR = Path(__file__).resolve().parent.parent / "data"

FINITE_NAMES = ["segment", "square", "lshape", "cube3", "grid2x3", "tree"]
NERVE_NAMES = ["two_points", "c4", "c5", "octahedron", "triangle_boundary", "empty"]
ENV_VARS = [
    "CUBEGROWTH_LOG_LEVEL",
    "CUBEGROWTH_RADIUS",
    "CUBEGROWTH_DEGREE",
    "CUBEGROWTH_FORMAT",
    "CUBEGROWTH_MEDIAN_LIMIT",
]


def random_tree(size: int, seed: int) -> CubeComplex:
    """Tree on ``size`` integer vertices; vertex i hangs below a random earlier vertex."""
    rng = random.Random(seed)
    return make_cube_complex((rng.randrange(i), i) for i in range(1, size))


@pytest.fixture
def data_dir() -> Path:
    """Directory holding the sample .cubes, .facets and .graph files."""
    return DATA_DIR


@pytest.fixture
def segment() -> CubeComplex:
    return read_cubes(DATA_DIR / "segment.cubes")


@pytest.fixture
def square() -> CubeComplex:
    return read_cubes(DATA_DIR / "square.cubes")


@pytest.fixture
def lshape() -> CubeComplex:
    """Two squares glued along the edge c-d."""
    return read_cubes(DATA_DIR / "lshape.cubes")


@pytest.fixture
def cube3() -> CubeComplex:
    return read_cubes(DATA_DIR / "cube3.cubes")


@pytest.fixture
def tree() -> CubeComplex:
    return read_cubes(DATA_DIR / "tree.cubes")


@pytest.fixture
def unfilled_c4() -> CubeComplex:
    return read_cubes(DATA_DIR / "unfilled_c4.cubes")


@pytest.fixture
def hollow_ring() -> CubeComplex:
    return read_cubes(DATA_DIR / "hollow_ring.cubes")


@pytest.fixture
def disconnected() -> CubeComplex:
    return make_cube_complex([("a", "b"), ("c", "d")])


@pytest.fixture
def corpus() -> dict[str, CubeComplex]:
    """Finite CAT(0) complexes: the sample files, a segment x L-shape product and random trees.

    Examples:
        >>> def test_something(corpus):
        ...     for name, complex_ in corpus.items():
        ...         assert complex_.is_connected(), name
    """
    complexes = {name: read_cubes(DATA_DIR / f"{name}.cubes") for name in FINITE_NAMES}
    complexes["segment_x_lshape"] = product(complexes["segment"], complexes["lshape"])
    for seed in range(5):
        complexes[f"random_tree_{seed}"] = random_tree(15, seed)
    return complexes


@pytest.fixture
def nerves() -> dict[str, SimplicialComplex]:
    return {name: read_facets(DATA_DIR / f"{name}.facets") for name in NERVE_NAMES}


@pytest.fixture
def zxz() -> ProductGraph:
    """Single edge with infinite orders: the free abelian group of rank two."""
    return read_graph(DATA_DIR / "zxz.graph")


@pytest.fixture
def free2() -> ProductGraph:
    return read_graph(DATA_DIR / "free2.graph")


@pytest.fixture
def racg_c4() -> ProductGraph:
    return read_graph(DATA_DIR / "racg_c4.graph")


@pytest.fixture
def clean_env(monkeypatch: pytest.MonkeyPatch) -> pytest.MonkeyPatch:
    """Removes every CUBEGROWTH_* variable and keeps CLI logs at WARNING."""
    for name in ENV_VARS:
        monkeypatch.delenv(name, raising=False)
    monkeypatch.setenv("CUBEGROWTH_LOG_LEVEL", "WARNING")
    return monkeypatch
