"""
io_utils.py

Objetivo del script:
Readers and writers for the three text formats:

  *.cubes   one maximal cube per line: ``cube v0 v1 ... v_{2^k-1}``
  *.facets  one facet per line: ``facet v1 ... vk`` (no lines: the complex {∅})
  *.graph   ``gen a order=2|inf`` and ``edge a b``

Blank lines and ``#`` comments are ignored. Every error names the file, the
line and the violated rule.

Copyright 2026 Henry Academy.
Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
"""

from __future__ import annotations

from collections.abc import Hashable, Iterator
from pathlib import Path

from cubegrowth.cubical import Cube, CubeComplex, make_cube_complex
from cubegrowth.exceptions import ParseError, PreconditionError, StructuralError
from cubegrowth.generators import GENERATOR_NAME, GeneratorOrder, ProductGraph
from cubegrowth.simplicial import SimplicialComplex


def _records(text: str) -> Iterator[tuple[int, list[str]]]:
    for number, raw_line in enumerate(text.splitlines(), start=1):
        line = raw_line.split("#", 1)[0].strip()
        if line:
            yield number, line.split()


def _read_text(path: Path) -> str:
    if not path.exists():
        raise FileNotFoundError(f"Input file does not exist: {path}")
    return path.read_text(encoding="utf-8")


def parse_cubes(text: str, path: Path | str | None = None) -> CubeComplex:
    cubes: list[Cube] = []
    for number, tokens in _records(text):
        if tokens[0] != "cube":
            raise ParseError(
                f"unknown keyword '{tokens[0]}'", path, number, "lines start with 'cube'"
            )
        try:
            cubes.append(Cube(tuple(tokens[1:])))
        except PreconditionError as exc:
            raise ParseError(exc.message, path, number, "2^k distinct corners") from exc
    try:
        return make_cube_complex(cubes)
    except StructuralError as exc:
        raise ParseError(
            f"{exc.message}: {exc.witness}", path, None, "cubes meet in a common face"
        ) from exc


def read_cubes(path: Path) -> CubeComplex:
    return parse_cubes(_read_text(path), path)


def parse_facets(text: str, path: Path | str | None = None) -> SimplicialComplex:
    facets: list[list[str]] = []
    for number, tokens in _records(text):
        if tokens[0] != "facet":
            raise ParseError(
                f"unknown keyword '{tokens[0]}'", path, number, "lines start with 'facet'"
            )
        if len(tokens) == 1:
            raise ParseError("facet without vertices", path, number, "facets are nonempty")
        if len(set(tokens[1:])) != len(tokens) - 1:
            raise ParseError("repeated vertex in facet", path, number, "distinct facet vertices")
        facets.append(tokens[1:])
    return SimplicialComplex.from_facets(facets)


def read_facets(path: Path) -> SimplicialComplex:
    return parse_facets(_read_text(path), path)


def parse_graph(text: str, path: Path | str | None = None) -> ProductGraph:
    generators: dict[str, GeneratorOrder] = {}
    edges: list[tuple[str, str]] = []
    for number, tokens in _records(text):
        keyword = tokens[0]
        if keyword == "gen":
            if len(tokens) != 3 or not tokens[2].startswith("order="):
                raise ParseError("expected 'gen NAME order=2|inf'", path, number, "gen syntax")
            name, order = tokens[1], tokens[2].removeprefix("order=")
            if not GENERATOR_NAME.match(name):
                raise ParseError(f"invalid generator name '{name}'", path, number, "identifier")
            if name in generators:
                raise ParseError(f"duplicate generator '{name}'", path, number, "unique names")
            try:
                generators[name] = GeneratorOrder(order)
            except ValueError as exc:
                raise ParseError(
                    f"unsupported order '{order}'", path, number, "order is 2 or inf"
                ) from exc
        elif keyword == "edge":
            if len(tokens) != 3:
                raise ParseError("expected 'edge A B'", path, number, "edge syntax")
            a, b = tokens[1], tokens[2]
            if a == b:
                raise ParseError("self-loop", path, number, "no self-loops")
            for name in (a, b):
                if name not in generators:
                    raise ParseError(
                        f"edge uses undeclared generator '{name}'",
                        path,
                        number,
                        "declare gen before edge",
                    )
            edges.append((a, b))
        else:
            raise ParseError(
                f"unknown keyword '{keyword}'", path, number, "lines start with 'gen' or 'edge'"
            )
    return ProductGraph.build(generators, edges)


def read_graph(path: Path) -> ProductGraph:
    return parse_graph(_read_text(path), path)


def vertex_token(vertex: Hashable) -> str:
    """Whitespace-free rendering of a vertex identifier."""
    if isinstance(vertex, tuple):
        return "(" + ",".join(vertex_token(part) for part in vertex) + ")"
    return str(vertex).replace(" ", "")


def format_cubes(complex_: CubeComplex) -> str:
    lines = [
        "cube " + " ".join(vertex_token(v) for v in cube.corners)
        for cube in complex_.maximal_cubes()
    ]
    return "\n".join(lines) + "\n"


def format_facets(complex_: SimplicialComplex) -> str:
    lines = ["facet " + " ".join(vertex_token(v) for v in row) for row in complex_.sorted_facets()]
    return "\n".join(lines) + ("\n" if lines else "")


def format_graph(graph: ProductGraph) -> str:
    lines = [f"gen {name} order={graph.order(name).value}" for name in graph.generators]
    lines += [f"edge {a} {b}" for a, b in sorted(tuple(sorted(e)) for e in graph.graph.edges)]
    return "\n".join(lines) + "\n"


def write_text(path: Path, text: str) -> None:
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(text, encoding="utf-8")
