"""
test_cubical.py

Objetivo del script:
Tests for cubes, cube complexes, links, the CAT(0) checks, products, star
decompositions and labeled ball windows.

Copyright 2026 Henry Academy.
Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
"""

import pytest

from cubegrowth.cubical import (
    Cube,
    cat0_witness,
    cube_link,
    euler_char_cc,
    is_cat0,
    is_eulerian_manifold_cc,
    is_npc,
    make_cube_complex,
    npc_witness,
    product,
    spanned_cube,
    star,
    star_edge_decomposition,
    vertex_link,
)
from cubegrowth.exactalg import Polynomial
from cubegrowth.exceptions import (
    DisconnectedError,
    PreconditionError,
    StarIncompleteError,
    StructuralError,
    UnknownCellError,
)
from cubegrowth.generators import finite_as_labeled, torus_ball, torus_complex
from cubegrowth.simplicial import SimplicialComplex, f_polynomial

HOLLOW_CORNER = [
    ("p0", "p1", "p2", "p3"),
    ("p0", "p1", "p4", "p5"),
    ("p0", "p2", "p4", "p6"),
]


class TestCube:
    """Tests for the cube cell type."""

    @pytest.mark.unit
    def test_corner_count_must_be_power_of_two(self):
        with pytest.raises(PreconditionError):
            Cube(("a", "b", "c"))

    @pytest.mark.unit
    def test_corners_must_be_distinct(self):
        with pytest.raises(PreconditionError):
            Cube(("a", "a"))

    @pytest.mark.unit
    def test_equality_by_vertex_set(self):
        assert Cube(("a", "b")) == Cube(("b", "a"))
        assert Cube(("a", "b", "c", "d")).dim == 2

    @pytest.mark.unit
    def test_face_counts(self):
        square = Cube(("a", "b", "c", "d"))
        cube = Cube(tuple(f"p{i}" for i in range(8)))

        assert len(list(square.faces())) == 9
        assert len(list(cube.faces())) == 27
        assert square.edge_set() == frozenset(
            {frozenset("ab"), frozenset("ac"), frozenset("bd"), frozenset("cd")}
        )

    @pytest.mark.unit
    def test_neighbours_follow_axes(self):
        square = Cube(("a", "b", "c", "d"))

        assert square.neighbours_of("a") == ["b", "c"]
        assert square.neighbours_of("d") == ["c", "b"]


class TestCubeComplex:
    """Tests for construction, counting and distances."""

    @pytest.mark.unit
    def test_cell_counts(self, lshape, cube3, corpus):
        assert lshape.cell_counts() == [6, 7, 2]
        assert cube3.cell_counts() == [8, 12, 6, 1]
        assert corpus["grid2x3"].cell_counts() == [12, 17, 6]

    @pytest.mark.unit
    def test_inconsistent_gluing(self):
        with pytest.raises(StructuralError):
            make_cube_complex([("a", "b", "c", "d"), ("a", "b", "d", "c")])

    @pytest.mark.unit
    def test_intersection_outside_a_face(self):
        with pytest.raises(StructuralError):
            make_cube_complex([("a", "b", "c", "d"), ("a", "d")])

    @pytest.mark.unit
    def test_maximal_cubes(self, lshape, tree):
        assert len(lshape.maximal_cubes()) == 2
        assert len(tree.maximal_cubes()) == 6

    @pytest.mark.unit
    def test_distances(self, lshape):
        assert lshape.distance("a", "e") == 2
        assert lshape.distance("a", "f") == 3
        assert lshape.distance("c", "c") == 0

    @pytest.mark.unit
    def test_distance_across_components(self, disconnected):
        with pytest.raises(DisconnectedError):
            disconnected.distance("a", "c")

    @pytest.mark.unit
    def test_unknown_vertex(self, lshape):
        with pytest.raises(UnknownCellError):
            lshape.distance("a", "zz")
        with pytest.raises(UnknownCellError):
            lshape.cell(["a", "f"])

    @pytest.mark.unit
    def test_restrict(self, lshape):
        assert lshape.restrict("abcd").cell_counts() == [4, 4, 1]


class TestLinks:
    """Tests for stars, vertex links and cube links."""

    @pytest.mark.unit
    def test_star_of_centre_is_everything(self, lshape):
        assert star(lshape, "c").cell_keys() == lshape.cell_keys()
        assert len(star(lshape, "a").vertices) == 4

    @pytest.mark.unit
    def test_vertex_link_of_centre_is_a_path(self, lshape):
        assert vertex_link(lshape, "c") == SimplicialComplex.from_facets(
            [["a", "d"], ["d", "e"]]
        )

    @pytest.mark.unit
    def test_link_of_shared_edge(self, lshape):
        assert cube_link(lshape, ["c", "d"]) == SimplicialComplex.from_facets([["a"], ["e"]])

    @pytest.mark.unit
    def test_link_of_a_square_is_empty(self, lshape):
        assert f_polynomial(cube_link(lshape, ["a", "b", "c", "d"])) == Polynomial((1,))

    @pytest.mark.unit
    def test_cube_corner_links_are_triangles(self, cube3):
        assert f_polynomial(vertex_link(cube3, "p0")) == Polynomial((1, 3, 3, 1))

    @pytest.mark.unit
    def test_spanned_cube(self, lshape):
        assert spanned_cube(lshape, "a", "d").vertex_set == frozenset("abcd")
        assert spanned_cube(lshape, "c", "d").vertex_set == frozenset("cd")
        assert spanned_cube(lshape, "c", "c").vertex_set == frozenset("c")
        assert spanned_cube(lshape, "a", "e") is None


class TestCat0:
    """Tests for the CAT(0) and nonpositive curvature checks."""

    @pytest.mark.unit
    def test_corpus_is_cat0(self, corpus):
        for name, complex_ in corpus.items():
            assert is_cat0(complex_), name
            assert is_npc(complex_), name

    @pytest.mark.unit
    def test_unfilled_square(self, unfilled_c4):
        witness = cat0_witness(unfilled_c4)

        assert witness.kind == "unfilled_square"
        assert witness.vertices == ("b", "a", "c", "d")

    @pytest.mark.unit
    def test_hollow_ring_has_no_median(self, hollow_ring):
        witness = cat0_witness(hollow_ring)

        assert witness.kind == "median"
        assert witness.vertices == ("a", "c", "e")
        assert str(witness) == "median: a c e (0 medians)"

    @pytest.mark.unit
    def test_median_limit_skips_the_scan(self, hollow_ring):
        assert cat0_witness(hollow_ring, median_limit=3) is None

    @pytest.mark.unit
    def test_disconnected(self, disconnected):
        assert cat0_witness(disconnected).kind == "disconnected"

    @pytest.mark.unit
    def test_non_flag_link(self):
        witness = npc_witness(make_cube_complex(HOLLOW_CORNER))

        assert witness.kind == "non_flag_link"
        assert witness.vertices == ("p0",)
        assert witness.detail == "empty simplex on p1 p2 p4"


class TestProductAndEuler:
    """Tests for products, Euler characteristics and Eulerian manifolds."""

    @pytest.mark.unit
    def test_product_counts(self, segment, lshape):
        assert product(segment, lshape).cell_counts() == [12, 20, 11, 2]

    @pytest.mark.unit
    def test_product_distance_adds(self, segment, lshape):
        prod = product(segment, lshape)

        for x in lshape.sorted_vertices():
            for y in lshape.sorted_vertices():
                assert prod.distance(("a", x), ("b", y)) == 1 + lshape.distance(x, y)

    @pytest.mark.unit
    def test_product_of_segments_is_a_square(self, segment):
        assert is_cat0(product(segment, segment))
        assert product(segment, segment).cell_counts() == [4, 4, 1]

    @pytest.mark.unit
    def test_euler_char(self, lshape, cube3, unfilled_c4, hollow_ring):
        assert euler_char_cc(lshape) == 1
        assert euler_char_cc(cube3) == 1
        assert euler_char_cc(unfilled_c4) == 0
        assert euler_char_cc(hollow_ring) == 0

    @pytest.mark.unit
    def test_eulerian_manifold(self, lshape):
        assert not is_eulerian_manifold_cc(lshape, 2)
        assert is_eulerian_manifold_cc(torus_complex(2, 3), 2)


class TestStarEdgeDecomposition:
    """Tests for splitting a star along an edge."""

    @pytest.mark.unit
    def test_square_split(self, square):
        part_a, part_b, part_c = star_edge_decomposition(square, "a", "b")

        assert part_a.cell_keys() == square.cell_keys()
        assert part_b.cell_keys() == frozenset(
            {frozenset("a"), frozenset("c"), frozenset("ac")}
        )
        assert part_c.cell_keys() == part_b.cell_keys()

    @pytest.mark.unit
    def test_union_and_intersection(self, lshape):
        part_a, part_b, part_c = star_edge_decomposition(lshape, "c", "d")

        assert part_a.cell_keys() | part_b.cell_keys() == lshape.cell_keys()
        assert part_c.cell_keys() == part_a.cell_keys() & part_b.cell_keys()
        assert part_b.cell_keys() == frozenset(
            {frozenset("c"), frozenset("a"), frozenset("e"), frozenset("ac"), frozenset("ce")}
        )

    @pytest.mark.unit
    def test_requires_an_edge(self, square):
        with pytest.raises(PreconditionError):
            star_edge_decomposition(square, "a", "d")

    @pytest.mark.unit
    def test_requires_a_star(self, lshape):
        with pytest.raises(PreconditionError):
            star_edge_decomposition(lshape, "a", "b")


class TestLabeledBall:
    """Tests for labeled windows: lifts, depths and star completeness."""

    @pytest.mark.unit
    def test_finite_window_is_complete(self, lshape):
        ball = finite_as_labeled(lshape)

        assert ball.complete
        assert ball.orbit_ids == ["a", "b", "c", "d", "e", "f"]
        assert ball.safe_degree("f") is None
        assert ball.quotient_euler == 1
        assert ball.radius == 3

    @pytest.mark.unit
    def test_finite_window_requires_cat0(self, unfilled_c4):
        with pytest.raises(StructuralError):
            finite_as_labeled(unfilled_c4)

    @pytest.mark.unit
    def test_torus_lifts(self):
        ball = torus_ball(2, 3, 4)

        assert ball.lift[(1, 1)] == (1, 1)
        assert ball.lift[(2, 2)] == (-1, -1)
        assert ball.safe_degree((2, 2)) == 2
        assert ball.is_star_complete((-1, -1))
        assert ball.members((0, 0))[0] == (-3, 0)

    @pytest.mark.unit
    def test_star_incomplete_vertex(self):
        ball = torus_ball(2, 3, 4)

        with pytest.raises(StarIncompleteError):
            ball.require_star_complete((3, 1))
