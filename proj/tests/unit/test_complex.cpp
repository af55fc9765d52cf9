#include "doctest.h"

#include "../fixtures.hpp"
#include "../oracles.hpp"

#include "arboreal/complex.hpp"
#include "arboreal/gallery.hpp"
#include "arboreal/lcc.hpp"
#include "arboreal/quotient.hpp"
#include "arboreal/universal.hpp"

#include <set>

using namespace arboreal;

namespace {

MComplex simplex(int d, int k = 2)
{
    std::vector<int> colors(d + 1), top(d + 1);
    for (int c = 0; c <= d; ++c)
        colors[c] = top[c] = c;
    SimplicialBuilder b(Params{d, k}, colors);
    b.addTop(top);
    return b.build(0);
}

std::vector<MComplex> sampleQuotients()
{
    std::vector<MComplex> out;
    for (const PermRep& r : fixtures::mixedReps())
        out.push_back(buildQuotient(r).complex);
    return out;
}

// Two tetrahedron faces through the edge {0,1} glue different copies of it.
MComplex mismatchedTetrahedron()
{
    MComplex X = simplex(3);
    const ColorMask edge01 = 0b0011, tri012 = 0b0111;
    X.cells[edge01].push_back(X.cells[edge01][0]);
    X.cells[tri012][0].facets[2] = 1;
    X.finalize();
    return X;
}

} // namespace

TEST_CASE("single simplex structure")
{
    for (int d = 1; d <= 4; ++d) {
        MComplex X = simplex(d);
        CHECK(audit(X).ok());
        CHECK(X.vertexCount() == d + 1);
        for (int j = -1; j <= d; ++j) {
            long long binom = 1;
            for (int t = 0; t < j + 1; ++t)
                binom = binom * (d + 1 - t) / (t + 1);
            CHECK(X.countDim(j) == binom);
        }
        CHECK(isSimplicialComplex(X));
    }
}

TEST_CASE("checkConsistency examples")
{
    for (int d = 1; d <= 4; ++d)
        CHECK(checkConsistency(simplex(d)).ok());
    for (const MComplex& X : sampleQuotients())
        CHECK(checkConsistency(X).ok());
    // Dimension two with real multiplicities: merged quotients and the doubled triangle.
    for (const auto& f : fixtures::identifiedFixtures(6))
        CHECK(checkConsistency(f.merged).ok());
    CHECK(checkConsistency(buildQuotient(fixtures::doubledTriangleRep()).complex).ok());
    MComplex bad = mismatchedTetrahedron();
    CHECK(audit(bad).ok());
    CHECK_FALSE(checkConsistency(bad).ok());
}

TEST_CASE("finalize rejects dangling gluings")
{
    MComplex X = simplex(2);
    X.cells[0b111][0].facets[0] = 5;
    CHECK_THROWS_AS(X.finalize(), DomainError);
}

TEST_CASE("degree examples")
{
    for (int d = 1; d <= 3; ++d) {
        MComplex X = simplex(d);
        for (const MultiId& a : X.cellsOfDim(d - 1))
            CHECK(degree(X, a) == 1);
    }
    MComplex M = buildQuotient(mSubgroupRep({2, 3})).complex;
    for (const MultiId& a : M.cellsOfDim(1))
        CHECK(degree(M, a) == 3);
    Ball b = buildBall({2, 2}, 1);
    int inner = 0, outer = 0;
    for (const MultiId& a : b.complex.cellsOfDim(1)) {
        int deg = degree(b.complex, a);
        CHECK((deg == 1 || deg == 2));
        (deg == 2 ? inner : outer)++;
    }
    CHECK(inner == 3);
    CHECK(outer == 6);
}

TEST_CASE("degree never exceeds k and walls of quotients have degree equal to the orbit size")
{
    for (const PermRep& r : fixtures::mixedReps()) {
        QuotientObject q = buildQuotient(r);
        const MComplex& X = q.complex;
        for (int i = 0; i < X.colors(); ++i)
            for (int b = 0; b < X.count(X.wall(i)); ++b) {
                int deg = degree(X, {X.wall(i), b});
                CHECK(deg <= r.params.k);
                CHECK(r.params.k % deg == 0);
                std::set<int> orbit = oracle::orbitOf(r, {i}, q.multicellOrbits[X.wall(i)].reps[b]);
                CHECK(deg == static_cast<int>(orbit.size()));
            }
    }
}

TEST_CASE("faces of a multicell biject with subsets of its vertices")
{
    std::vector<MComplex> cases = sampleQuotients();
    cases.push_back(buildBall({3, 2}, 2).complex);
    cases.push_back(mismatchedTetrahedron());
    for (const MComplex& X : cases) {
        CHECK(audit(X).ok());
        for (const MultiId& a : X.allCells()) {
            const auto& verts = X.cell(a).vertices;
            REQUIRE(static_cast<int>(verts.size()) == maskSize(a.mask));
            std::set<std::vector<int>> seen;
            auto colors = maskColors(a.mask);
            for (std::size_t t = 0; t < colors.size(); ++t)
                CHECK(X.vertexColor(verts[t]) == colors[t]);
            for (ColorMask sub = a.mask;; sub = (sub - 1) & a.mask) {
                MultiId f{sub, X.face(a, sub)};
                CHECK(X.contains(f, a));
                std::vector<int> expected;
                for (std::size_t t = 0; t < colors.size(); ++t)
                    if (hasColor(sub, colors[t]))
                        expected.push_back(verts[t]);
                CHECK(X.cell(f).vertices == expected);
                seen.insert(expected);
                if (sub == 0)
                    break;
            }
            CHECK(seen.size() == (std::size_t(1) << colors.size()));
        }
    }
}

TEST_CASE("link examples")
{
    MComplex M = buildQuotient(mSubgroupRep({2, 3})).complex;
    LinkResult whole = link(M, {0, 0});
    CHECK(oracle::sameStructure(whole.complex, M));
    for (int d = 1; d <= 4; ++d) {
        MComplex X = simplex(d);
        for (int v = 0; v < X.vertexCount(); ++v) {
            LinkResult l = link(X, X.vertexCell(v));
            CHECK(l.complex.params.d == d - 1);
            CHECK(l.complex.topCount() == 1);
            CHECK(l.complex.vertexCount() == d);
        }
    }
}

TEST_CASE("vertex links in balls of T(d,k) are balls of T(d-1,k)")
{
    for (Params p : {Params{2, 2}, Params{2, 3}, Params{3, 2}}) {
        for (int n = 0; n <= 3; ++n) {
            Ball b = buildBall(p, n);
            const MComplex& X = b.complex;
            const Multicell& root = X.cell(X.rootId());
            for (int v : root.vertices) {
                LinkResult l = link(X, X.vertexCell(v));
                Ball small = buildBall({p.d - 1, p.k}, n);
                CHECK(l.complex.topCount() == small.complex.topCount());
                CHECK(isomorphic(l.complex, small.complex, oracle::lowDegreeWalls(l.complex), small.boundary));
            }
        }
    }
}

TEST_CASE("link of a link is the link of the union")
{
    std::vector<MComplex> cases;
    cases.push_back(buildBall({3, 2}, 2).complex);
    cases.push_back(buildQuotient(randomTransitiveRep({3, 3}, 12, 71)).complex);
    cases.push_back(fixtures::identifiedFixtures(1)[0].merged);
    for (const MComplex& X : cases) {
        for (int j = -1; j <= X.params.d - 2; ++j)
            for (const MultiId& a : X.cellsOfDim(j)) {
                LinkResult la = link(X, a);
                for (const MultiId& b : la.complex.cellsOfDim(0)) {
                    const MultiId ab = la.origin[b.mask][b.index];
                    if (ab.dim() > X.params.d - 1)
                        continue;
                    LinkResult twice = link(la.complex, b);
                    LinkResult once = link(X, ab);
                    CHECK(oracle::sameStructure(twice.complex, once.complex, false));
                }
            }
    }
}

TEST_CASE("isLinkConnected examples")
{
    for (int d = 1; d <= 4; ++d)
        CHECK(isLinkConnected(simplex(d)));
    CHECK_FALSE(isLinkConnected(fixtures::wedgeOfTriangles()));
    for (const MComplex& X : sampleQuotients())
        CHECK(isLinkConnected(X));
}

TEST_CASE("isLowerPathConnected examples")
{
    for (int d = 1; d <= 4; ++d)
        CHECK(isLowerPathConnected(simplex(d), d));
    SimplicialBuilder two(Params{2, 2}, {0, 1, 2, 0, 1, 2});
    two.addTop({0, 1, 2});
    two.addTop({3, 4, 5});
    MComplex X = two.build(0);
    CHECK_FALSE(isLowerPathConnected(X, 2));
    CHECK_FALSE(isLowerPathConnected(X, 1));
    CHECK(isLowerPathConnected(fixtures::wedgeOfTriangles(), 1));
    CHECK_FALSE(isLowerPathConnected(fixtures::wedgeOfTriangles(), 2));
}

TEST_CASE("link-connected iff every link is lower path connected in its top dimension")
{
    std::vector<MComplex> cases = sampleQuotients();
    for (const auto& f : fixtures::identifiedFixtures(8))
        cases.push_back(f.merged);
    cases.push_back(fixtures::wedgeOfTriangles());
    int disconnected = 0;
    for (const MComplex& X : cases) {
        bool allLinks = true;
        for (int j = -1; j <= X.params.d - 2; ++j)
            for (const MultiId& a : X.cellsOfDim(j)) {
                LinkResult l = link(X, a);
                allLinks = allLinks && isLowerPathConnected(l.complex, l.complex.params.d);
            }
        CHECK(isLinkConnected(X) == allLinks);
        disconnected += !allLinks;
    }
    CHECK(disconnected == 9);
}

TEST_CASE("nerve examples")
{
    SimplexSet disjoint = nerve({{1, 2}, {3}, {4, 5}});
    CHECK(disjoint == SimplexSet{{}, {0}, {1}, {2}});
    SimplexSet full = nerve({{7, 8}, {7, 8}, {7, 8}});
    CHECK(full.size() == 8);
    CHECK(full.count({0, 1, 2}) == 1);
    CHECK_THROWS_AS(nerve({{1}, {}}), DomainError);
    for (const PermRep& r : fixtures::mixedReps()) {
        SetFamily family = cosetFamily(r);
        SimplexSet base = baseComplex(buildQuotient(r).complex);
        CHECK(nerve(family) == base);
        CHECK(oracle::spanningSets(family, r.params.colors()) == base);
    }
}

TEST_CASE("checkMorphism examples")
{
    MComplex X = buildQuotient(randomTransitiveRep({2, 3}, 9, 72)).complex;
    CHECK(checkMorphism(identityMap(X), X, X).ok());
    MComplex W = fixtures::wedgeOfTriangles();
    CoverResult c = linkConnectedCover(W);
    CHECK(checkMorphism(c.projection, c.complex, W).ok());
    MComplex S = simplex(2);
    MorphismMap swap = identityMap(S);
    std::swap(swap.image[0b001][0], swap.image[0b010][0]);
    Diagnostics d = checkMorphism(swap, S, S);
    CHECK_FALSE(d.ok());
}

TEST_CASE("checkMorphism detects a wrong root and a broken ordering")
{
    PermRep r = mSubgroupRep({1, 3});
    MComplex X = buildQuotient(r).complex;
    Propagation p = propagateMorphism(X, X);
    CHECK(p.ok());
    MorphismMap moved = p.map;
    moved.image[X.full()][X.root] = {X.full(), (X.root + 1) % X.topCount()};
    CHECK_FALSE(checkMorphism(moved, X, X).ok());
    MComplex Y = X;
    std::swap(Y.ordering[0][0][1], Y.ordering[0][0][2]);
    Y.finalize();
    CHECK_FALSE(checkMorphism(identityMap(X), X, Y).ok());
    CHECK_FALSE(isomorphic(X, Y));
}

TEST_CASE("builder orderings and rootComponent")
{
    MComplex W = fixtures::wedgeOfTriangles();
    CHECK(audit(W).ok());
    CoverResult c = linkConnectedCover(W);
    std::vector<std::vector<int>> origin;
    MComplex R = rootComponent(c.complex, &origin);
    CHECK(R.topCount() == 1);
    CHECK(R.vertexCount() == 3);
    CHECK(origin[R.full()][0] == c.complex.root);
}

TEST_CASE("multiplicities and simplicial detection")
{
    MComplex D = buildQuotient(fixtures::doubledTriangleRep()).complex;
    auto tops = multiplicities(D, D.full());
    REQUIRE(tops.size() == 1);
    CHECK(tops.begin()->second == 2);
    CHECK_FALSE(isSimplicialComplex(D));
    CHECK(isSimplicialComplex(simplex(3)));
}
