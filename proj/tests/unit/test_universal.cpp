#include "doctest.h"

#include "../oracles.hpp"

#include "arboreal/universal.hpp"

#include <set>

using namespace arboreal;

namespace {

long long powll(long long b, int e)
{
    long long r = 1;
    while (e-- > 0)
        r *= b;
    return r;
}

} // namespace

TEST_CASE("buildBall examples")
{
    Ball b0 = buildBall({2, 2}, 0);
    CHECK(b0.complex.topCount() == 1);
    CHECK(b0.complex.vertexCount() == 3);
    Ball b1 = buildBall({2, 2}, 1);
    CHECK(b1.complex.topCount() == 4);
    CHECK(b1.complex.vertexCount() == 6);
    CHECK_THROWS_AS(buildBall({2, 2}, -1), DomainError);
}

TEST_CASE("balls of the 3-regular tree have 2 * sum (k-1)^m vertices")
{
    for (int n = 0; n <= 6; ++n) {
        Ball b = buildBall({1, 3}, n);
        long long expected = 0;
        for (int m = 0; m <= n; ++m)
            expected += 2 * powll(2, m);
        CHECK(b.complex.vertexCount() == expected);
        CHECK(b.complex.topCount() == expected - 1);
    }
}

TEST_CASE("ballFromCosets examples")
{
    for (int d = 1; d <= 3; ++d) {
        Ball b = ballFromCosets({d, 3}, 0);
        CHECK(b.complex.topCount() == 1);
        CHECK(b.complex.vertexCount() == d + 1);
    }
    CHECK(ballFromCosets({2, 2}, 2).complex.topCount() == 10);
}

TEST_CASE("attachment and coset balls agree")
{
    for (int d = 1; d <= 3; ++d)
        for (int k = 2; k <= 3; ++k)
            for (int n = 0; n <= 3; ++n) {
                Params p{d, k};
                Ball a = buildBall(p, n), c = ballFromCosets(p, n);
                CHECK(a.complex.topCount() == oracle::ballTopCount(d, k, n));
                CHECK(c.complex.topCount() == oracle::ballTopCount(d, k, n));
                CHECK(audit(a.complex).ok());
                CHECK(audit(c.complex).ok());
                CHECK(isomorphic(a.complex, c.complex, a.boundary, c.boundary));
            }
}

TEST_CASE("cell words form a bijection with reduced words of bounded length")
{
    for (Params p : {Params{1, 3}, Params{2, 2}, Params{2, 3}, Params{3, 2}}) {
        const int n = 3;
        Ball b = buildBall(p, n);
        std::set<Word> words(b.cellWords.begin(), b.cellWords.end());
        std::vector<Word> all = enumerateReducedWords(p, n);
        CHECK(words.size() == b.cellWords.size());
        CHECK(words == std::set<Word>(all.begin(), all.end()));
        std::vector<int> dist = dualDistances(b.complex, b.complex.root);
        for (int t = 0; t < b.complex.topCount(); ++t) {
            CHECK(cellOfWord(b, b.cellWords[t]) == t);
            CHECK(dist[t] == wordLength(b.cellWords[t], p));
        }
        CHECK(cellOfWord(b, Word{{{0, 1}, {1, 1}, {0, 1}, {1, 1}}}) == -1);
    }
}

TEST_CASE("adjacent cells differ by one generator power")
{
    // The line graph of the ball embeds in the Cayley graph for S = {alpha_i^l}.
    for (Params p : {Params{2, 3}, Params{3, 2}}) {
        Ball b = buildBall(p, 3);
        const MComplex& X = b.complex;
        for (int i = 0; i < X.colors(); ++i)
            for (const auto& cyc : X.ordering[i])
                for (std::size_t s = 0; s < cyc.size(); ++s)
                    for (std::size_t t = 0; t < cyc.size(); ++t) {
                        if (s == t)
                            continue;
                        Word step = multiply(b.cellWords[cyc[t]], inverse(b.cellWords[cyc[s]], p), p);
                        Word right = multiply(inverse(b.cellWords[cyc[s]], p), b.cellWords[cyc[t]], p);
                        bool single = (step.size() == 1 && step.letters[0].index == i) ||
                                      (right.size() == 1 && right.letters[0].index == i);
                        CHECK(single);
                    }
    }
}

TEST_CASE("every top cell carries each color once and walls have degree k or 1")
{
    for (Params p : {Params{1, 4}, Params{2, 3}, Params{3, 3}}) {
        Ball b = buildBall(p, 2);
        const MComplex& X = b.complex;
        for (int t = 0; t < X.topCount(); ++t) {
            const auto& vs = X.cells[X.full()][t].vertices;
            for (int c = 0; c < X.colors(); ++c)
                CHECK(X.vertexColor(vs[c]) == c);
        }
        for (int i = 0; i < X.colors(); ++i)
            for (int w = 0; w < X.count(X.wall(i)); ++w) {
                int deg = degree(X, {X.wall(i), w});
                CHECK((deg == p.k || deg == 1));
                CHECK(static_cast<bool>(b.boundary[i][w]) == (deg < p.k));
            }
    }
}

TEST_CASE("degrees of lower cells grow with the radius")
{
    for (Params p : {Params{2, 2}, Params{2, 3}, Params{3, 2}}) {
        std::vector<int> previous;
        for (int n = 0; n <= 3; ++n) {
            Ball b = buildBall(p, n);
            const MComplex& X = b.complex;
            // Cells of the root keep their ids as the ball grows: they are built first.
            std::vector<int> degs;
            for (int j = 0; j < p.d - 1; ++j)
                for (const MultiId& a : X.cellsOfDim(j))
                    if (X.contains(a, X.rootId()))
                        degs.push_back(degree(X, a));
            if (!previous.empty()) {
                REQUIRE(degs.size() == previous.size());
                for (std::size_t t = 0; t < degs.size(); ++t)
                    CHECK(degs[t] > previous[t]);
            }
            previous = degs;
        }
    }
}

TEST_CASE("uniqueNonBacktracking examples")
{
    Params p{2, 2};
    Ball b = buildBall(p, 3);
    const int root = b.complex.root;
    CHECK(uniqueNonBacktracking(b, root, root).empty());
    std::vector<int> dist = dualDistances(b.complex, root);
    int checked = 0;
    for (int t = 0; t < b.complex.topCount(); ++t) {
        if (dist[t] != 2)
            continue;
        std::vector<int> path = uniqueNonBacktracking(b, root, t);
        REQUIRE(path.size() == 2);
        CHECK(dist[path[0]] == 1);
        CHECK(path[1] == t);
        // The radius 1 neighbor on the way is the only one adjacent to t.
        std::vector<int> fromT = dualDistances(b.complex, t);
        int via = 0;
        for (int s = 0; s < b.complex.topCount(); ++s)
            via += dist[s] == 1 && fromT[s] == 1;
        CHECK(via == 1);
        ++checked;
    }
    CHECK(checked == 6);
}

TEST_CASE("good paths are geodesics whose steps multiply up to the target word")
{
    for (Params p : {Params{2, 2}, Params{2, 3}, Params{1, 3}}) {
        Ball b = buildBall(p, 3);
        const int N = b.complex.topCount();
        for (int from = 0; from < N; from += 3) {
            std::vector<int> dist = dualDistances(b.complex, from);
            for (int to = 0; to < N; to += 2) {
                std::vector<int> path = uniqueNonBacktracking(b, from, to);
                CHECK(static_cast<int>(path.size()) == dist[to]);
                int prev = from;
                for (int cell : path) {
                    CHECK(dualDistances(b.complex, prev)[cell] == 1);
                    prev = cell;
                }
                if (!path.empty())
                    CHECK(path.back() == to);
                if (from == b.complex.root) {
                    // From the base cell the words grow by one letter per step.
                    for (std::size_t s = 0; s < path.size(); ++s)
                        CHECK(wordLength(b.cellWords[path[s]], p) == static_cast<int>(s) + 1);
                }
            }
        }
    }
    CHECK_THROWS_AS(uniqueNonBacktracking(buildBall({2, 2}, 1), 0, 99), DomainError);
}
