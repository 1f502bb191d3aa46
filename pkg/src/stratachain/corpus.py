"""Built-in complexes and parametric families used in tests and benchmarks."""

from __future__ import annotations

from .errors import ComplexError
from .simplicial import SimplicialComplex

#: 8-vertex Klein bottle: closed surface, chi = 0, non-orientable.
_KLEIN8_FACETS = [
    (0, 1, 2), (0, 1, 3), (0, 2, 4), (0, 3, 4), (1, 2, 5), (1, 3, 6),
    (1, 4, 5), (1, 4, 6), (2, 3, 5), (2, 3, 7), (2, 4, 6), (2, 6, 7),
    (3, 4, 7), (3, 5, 6), (4, 5, 7), (5, 6, 7),
]

#: 6-vertex real projective plane (antipodal icosahedron quotient).
_RP2_FACETS = [
    (0, 1, 2), (0, 1, 3), (0, 2, 4), (0, 3, 5), (0, 4, 5),
    (1, 2, 5), (1, 3, 4), (1, 4, 5), (2, 3, 4), (2, 3, 5),
]


def sphere2() -> SimplicialComplex:
    """Boundary of the 3-simplex: the smallest triangulated 2-sphere."""
    return SimplicialComplex(
        [(0, 1, 2), (0, 1, 3), (0, 2, 3), (1, 2, 3)], name="sphere2")


def torus7() -> SimplicialComplex:
    """7-vertex torus: triangles {i, i+1, i+3} and {i, i+2, i+3} mod 7."""
    tris = set()
    for i in range(7):
        tris.add(tuple(sorted((i, (i + 1) % 7, (i + 3) % 7))))
        tris.add(tuple(sorted((i, (i + 2) % 7, (i + 3) % 7))))
    return SimplicialComplex(sorted(tris), name="torus7")


def klein8() -> SimplicialComplex:
    """8-vertex Klein bottle."""
    return SimplicialComplex(_KLEIN8_FACETS, name="klein8")


def rp2_6() -> SimplicialComplex:
    """6-vertex projective plane."""
    return SimplicialComplex(_RP2_FACETS, name="rp2_6")


def disk() -> SimplicialComplex:
    """A single triangle with its faces."""
    return SimplicialComplex([(0, 1, 2)], name="disk")


def moebius() -> SimplicialComplex:
    """5-vertex Moebius band: cyclic strip of five triangles."""
    tris = [tuple(sorted((i, (i + 1) % 5, (i + 2) % 5))) for i in range(5)]
    return SimplicialComplex(tris, name="moebius")


def book3() -> SimplicialComplex:
    """Three triangular pages sharing the spine edge (0, 1)."""
    return SimplicialComplex([(0, 1, 2), (0, 1, 3), (0, 1, 4)], name="book3")


def circle() -> SimplicialComplex:
    """A 3-cycle."""
    return SimplicialComplex([(0, 1), (1, 2), (0, 2)], name="circle")


def wedge2spheres() -> SimplicialComplex:
    """Two tetrahedron boundaries sharing the vertex 0."""
    tris = [(0, 1, 2), (0, 1, 3), (0, 2, 3), (1, 2, 3),
            (0, 4, 5), (0, 4, 6), (0, 5, 6), (4, 5, 6)]
    return SimplicialComplex(tris, name="wedge2spheres")


def theta() -> SimplicialComplex:
    """Theta graph: vertices 0 and 1 joined by three two-edge arcs."""
    edges = [(0, 2), (1, 2), (0, 3), (1, 3), (0, 4), (1, 4)]
    return SimplicialComplex(edges, name="theta")


_BUILTINS = {
    "sphere2": sphere2,
    "torus7": torus7,
    "klein8": klein8,
    "rp2_6": rp2_6,
    "disk": disk,
    "moebius": moebius,
    "book3": book3,
    "circle": circle,
    "wedge2spheres": wedge2spheres,
    "theta": theta,
}

BUILTIN_NAMES = tuple(sorted(_BUILTINS))


def builtin_complex(name) -> SimplicialComplex:
    """Fetch a named corpus complex; unknown names raise ComplexError."""
    try:
        factory = _BUILTINS[name]
    except KeyError:
        raise ComplexError("unknown builtin %r (choose from %s)"
                           % (name, ", ".join(BUILTIN_NAMES))) from None
    return factory()


# -- parametric families (not part of the named corpus) -------------------

def grid_torus(m, n, name=None) -> SimplicialComplex:
    """Torus from an m x n vertex grid, each square split into two triangles.

    Needs m, n >= 3 to stay simplicial.  2*m*n triangles.
    """
    if m < 3 or n < 3:
        raise ComplexError("grid torus needs m, n >= 3")

    def vid(i, j):
        return (i % m) * n + (j % n)

    tris = []
    for i in range(m):
        for j in range(n):
            tris.append((vid(i, j), vid(i + 1, j), vid(i + 1, j + 1)))
            tris.append((vid(i, j), vid(i, j + 1), vid(i + 1, j + 1)))
    return SimplicialComplex(tris, name=name or ("grid_torus_%dx%d" % (m, n)))


def torus9() -> SimplicialComplex:
    """9-vertex torus on a 3 x 3 grid, combinatorially unrelated to torus7."""
    return grid_torus(3, 3, name="torus9")


def annulus() -> SimplicialComplex:
    """Triangulated cylinder between two 3-cycles."""
    tris = [(0, 1, 4), (0, 3, 4), (1, 2, 5), (1, 4, 5), (0, 2, 3), (2, 3, 5)]
    return SimplicialComplex(tris, name="annulus")


def pinched_sphere() -> SimplicialComplex:
    """Icosahedron sphere with its two poles identified to one vertex.

    The poles of the icosahedron share no neighbor, so the quotient is still
    simplicial: 11 vertices, chi = 1, one non-manifold pinch vertex.
    """
    pole = 0
    upper = [1, 2, 3, 4, 5]
    lower = [6, 7, 8, 9, 10]
    tris = []
    for k in range(5):
        u, un = upper[k], upper[(k + 1) % 5]
        l, ln = lower[k], lower[(k + 1) % 5]
        tris.append(tuple(sorted((pole, u, un))))
        tris.append(tuple(sorted((pole, l, ln))))
        tris.append(tuple(sorted((u, l, un))))
        tris.append(tuple(sorted((l, ln, un))))
    return SimplicialComplex(tris, name="pinched_sphere")


def folded_book() -> SimplicialComplex:
    """Three pages on spine (0, 1) with pages 2 and 3 joined by a flap.

    The flap (0, 2, 3) makes the big 2-stratum's boundary run along the
    spine and immediately back: the standard non-taut example.
    """
    return SimplicialComplex(
        [(0, 1, 2), (0, 1, 3), (0, 1, 4), (0, 2, 3)], name="folded_book")


def solid_tetrahedron() -> SimplicialComplex:
    """The full 3-simplex; the smallest 3-dimensional test case."""
    return SimplicialComplex([(0, 1, 2, 3)], name="solid_tetrahedron")
