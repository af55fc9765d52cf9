#pragma once

// Pinned fixtures shared by the unit and acceptance tests.

#include "arboreal/complex.hpp"
#include "arboreal/graphs.hpp"
#include "arboreal/lcc.hpp"
#include "arboreal/perm.hpp"
#include "arboreal/quotient.hpp"

#include <cstdint>
#include <vector>

namespace fixtures {

using namespace arboreal;

// Twenty transitive reps with d <= 3, k <= 4, n <= 30.
inline std::vector<PermRep> mixedReps()
{
    std::vector<PermRep> out;
    for (int t = 0; t < 20; ++t) {
        Params p{1 + t % 3, 2 + (t / 3) % 3};
        int n = 6 + (3 * t) % 25;
        out.push_back(randomTransitiveRep(p, n, 4000 + static_cast<std::uint64_t>(t)));
    }
    return out;
}

// Fifty small transitive reps; small n makes both simplicial and non-simplicial quotients common.
inline std::vector<PermRep> smallReps()
{
    std::vector<PermRep> out;
    for (int t = 0; t < 50; ++t) {
        Params p{1 + t % 2, 2 + t % 3};
        int n = 3 + t % 10;
        out.push_back(randomTransitiveRep(p, n, 5000 + static_cast<std::uint64_t>(t)));
    }
    return out;
}

// d = 2, k = 2 on two points with every generator swapping them: two triangles over one vertex
// triple, so every cell of dimension at least 1 has multiplicity 2.
inline PermRep doubledTriangleRep()
{
    PermRep r;
    r.params = {2, 2};
    r.n = 2;
    r.betas = {{1, 0}, {1, 0}, {1, 0}};
    return r;
}

// d = 2, k = 2: beta_0 = (1 2), the others fixed. The quotient is two triangles sharing an edge.
inline PermRep sharedEdgeRep()
{
    PermRep r;
    r.params = {2, 2};
    r.n = 2;
    r.betas = {{1, 0}, {0, 1}, {0, 1}};
    return r;
}

// d = 2, k = 2 on four points, beta_0 = (1 2)(3 4), beta_1 = (2 3), beta_2 = id. The color-0
// vertex {1} and the color-1 vertex {3,4} span no edge.
inline PermRep incompleteSkeletonRep()
{
    PermRep r;
    r.params = {2, 2};
    r.n = 4;
    r.betas = {{1, 0, 3, 2}, {0, 2, 1, 3}, {0, 1, 2, 3}};
    return r;
}

// Two triangles glued at a single vertex: colors 0,1,2 at vertices 0,1,2 and 0,3,4.
inline MComplex wedgeOfTriangles()
{
    SimplicialBuilder b(Params{2, 2}, {0, 1, 2, 1, 2});
    b.addTop({0, 1, 2});
    b.addTop({0, 3, 4});
    return b.build(0);
}

struct IdentifiedFixture {
    MComplex original;
    MComplex merged;
    int v1 = 0;
    int v2 = 0;
};

// Quotients with two vertices of one color identified; d = 2 so that vertex links are graphs.
inline std::vector<IdentifiedFixture> identifiedFixtures(int count)
{
    std::vector<IdentifiedFixture> out;
    for (std::uint64_t seed = 7000; static_cast<int>(out.size()) < count; ++seed) {
        Params p{2, 2 + static_cast<int>(seed % 2)};
        int n = 4 + static_cast<int>(seed % 9);
        MComplex X = buildQuotient(randomTransitiveRep(p, n, seed)).complex;
        for (int color = 0; color < X.colors(); ++color) {
            std::vector<int> vs;
            for (int v = 0; v < X.vertexCount(); ++v)
                if (X.vertexColor(v) == color)
                    vs.push_back(v);
            if (vs.size() >= 2) {
                int a = vs[0], b = vs[vs.size() - 1];
                out.push_back({X, identifyVertices(X, a, b), a, b});
                break;
            }
        }
    }
    return out;
}

// K_{3,3} as a plain multigraph.
inline Multigraph completeBipartite33()
{
    Multigraph g;
    g.n = 6;
    for (int a = 0; a < 3; ++a)
        for (int b = 3; b < 6; ++b)
            g.add(a, b);
    return g;
}

// K_5, a connected 4-regular simple graph.
inline Multigraph completeGraph5()
{
    Multigraph g;
    g.n = 5;
    for (int a = 0; a < 5; ++a)
        for (int b = a + 1; b < 5; ++b)
            g.add(a, b);
    return g;
}

// A 4-regular multigraph with parallel edges and loops: a doubled 5-cycle on vertices 1..5 and
// two loops at vertex 0. Each loop counts twice in a 2-factor class.
inline Multigraph loopedFourRegular()
{
    Multigraph g;
    g.n = 6;
    for (int t = 0; t < 5; ++t) {
        g.add(1 + t, 1 + (t + 1) % 5);
        g.add(1 + t, 1 + (t + 1) % 5);
    }
    g.add(0, 0);
    g.add(0, 0);
    return g;
}

} // namespace fixtures
