#include "doctest.h"

#include "../oracles.hpp"

#include "arboreal/gallery.hpp"
#include "arboreal/perm.hpp"

#include <map>
#include <random>
#include <set>

using namespace arboreal;

namespace {

PermRep makeRep(Params p, std::vector<Perm> betas, int root = 0)
{
    PermRep r;
    r.params = p;
    r.n = static_cast<int>(betas[0].size());
    r.betas = std::move(betas);
    r.root = root;
    return r;
}

} // namespace

TEST_CASE("validate examples")
{
    CHECK(validate(trivialRep({3, 4})).ok());
    PermRep path = makeRep({1, 2}, {{1, 0, 2}, {0, 2, 1}});
    CHECK(validate(path).ok());
    PermRep split = makeRep({1, 2}, {{1, 0, 2, 3}, {0, 1, 3, 2}});
    RepDiagnostics d = validate(split);
    CHECK_FALSE(d.ok());
    CHECK_FALSE(d.transitive);
    CHECK(d.orbitCount == 2);
}

TEST_CASE("validate reports generators whose order does not divide k")
{
    PermRep r = makeRep({1, 2}, {{1, 2, 0}, {0, 2, 1}});
    RepDiagnostics d = validate(r);
    CHECK_FALSE(d.ok());
    CHECK_FALSE(d.orderDivides[0]);
    CHECK(d.orderDivides[1]);
    CHECK(d.transitive);
}

TEST_CASE("validate throws on non-bijections and bad roots")
{
    CHECK_THROWS_AS(validate(makeRep({1, 2}, {{0, 0}, {1, 0}})), DomainError);
    CHECK_THROWS_AS(validate(makeRep({1, 2}, {{0, 2}, {1, 0}})), DomainError);
    CHECK_THROWS_AS(validate(makeRep({1, 2}, {{1, 0}, {1, 0}}, 2)), DomainError);
}

TEST_CASE("evaluate examples")
{
    PermRep path = makeRep({1, 2}, {{1, 0, 2}, {0, 2, 1}});
    for (int x = 0; x < 3; ++x) {
        CHECK(evaluate(Word{}, x, path) == x);
        CHECK(evaluate(letter(0), x, path) == path.betas[0][x]);
        CHECK(evaluate(letter(1, 3), x, path) == path.betas[1][x]);
    }
    // M(1,2): point c0 + 2 c1 for (c0, c1) in (Z/2)^2.
    PermRep m = mSubgroupRep({1, 2});
    Word x = parseWord("a1^1 a0^1");
    CHECK(evaluate(x, 0, m) == 1 + 2 * 1);
    CHECK_THROWS_AS(evaluate(x, 4, m), DomainError);
}

TEST_CASE("evaluate is a left action")
{
    Params p{2, 3};
    std::mt19937_64 rng(31);
    for (std::uint64_t seed = 40; seed < 45; ++seed) {
        PermRep rep = randomTransitiveRep(p, 17, seed);
        for (int t = 0; t < 60; ++t) {
            Word u = randomWord(p, 5, rng), v = randomWord(p, 5, rng);
            int pt = static_cast<int>(rng() % rep.n);
            CHECK(evaluate(multiply(u, v, p), pt, rep) == evaluate(u, evaluate(v, pt, rep), rep));
        }
    }
}

TEST_CASE("orbits examples")
{
    PermRep r = randomTransitiveRep({2, 3}, 11, 32);
    OrbitPartition all = orbits(r, fullMask(3));
    CHECK(all.count() == 11);
    PermRep m = mSubgroupRep({2, 2});
    OrbitPartition o = orbits(m, 0b001);
    REQUIRE(o.count() == 2);
    for (int pt = 0; pt < 8; ++pt)
        CHECK(o.classIds[pt] == pt % 2);
    CHECK(o.reps == std::vector<int>{0, 1});
    PermRep one = trivialRep({3, 2});
    for (ColorMask J = 0; J < 16; ++J)
        CHECK(orbits(one, J).count() == 1);
}

TEST_CASE("orbits agree with closure and refine along inclusion")
{
    for (const PermRep& rep : {randomTransitiveRep({3, 2}, 14, 33), randomTransitiveRep({2, 4}, 19, 34)}) {
        const int C = rep.params.colors();
        std::vector<OrbitPartition> parts;
        for (ColorMask J = 0; J < (ColorMask(1) << C); ++J) {
            OrbitPartition o = orbits(rep, J);
            auto gens = oracle::generatorsOutside(C, J);
            for (int pt = 0; pt < rep.n; ++pt) {
                auto orb = oracle::orbitOf(rep, gens, pt);
                CHECK(o.reps[o.classIds[pt]] == *orb.begin());
                for (int y : orb)
                    CHECK(o.classIds[y] == o.classIds[pt]);
            }
            parts.push_back(o);
        }
        for (ColorMask J = 0; J < parts.size(); ++J)
            for (ColorMask J2 = 0; J2 < parts.size(); ++J2) {
                if ((J & J2) != J)
                    continue;
                for (int a = 0; a < rep.n; ++a)
                    for (int b = 0; b < rep.n; ++b)
                        if (parts[J2].classIds[a] == parts[J2].classIds[b]) {
                            CHECK(parts[J].classIds[a] == parts[J].classIds[b]);
                        }
            }
    }
}

TEST_CASE("stabilizerContains examples")
{
    PermRep path = makeRep({1, 2}, {{1, 0, 2}, {0, 2, 1}});
    CHECK(stabilizerContains(Word{}, path));
    CHECK_FALSE(stabilizerContains(letter(0), path));
    CHECK(stabilizerContains(letter(1), path));
}

TEST_CASE("stabilizer is closed under products and inverses")
{
    Params p{1, 3};
    PermRep rep = randomTransitiveRep(p, 9, 35);
    std::mt19937_64 rng(36);
    std::vector<Word> members;
    while (members.size() < 30) {
        Word x = reduce(randomWord(p, 6, rng), p);
        if (stabilizerContains(x, rep))
            members.push_back(x);
    }
    for (const Word& a : members) {
        CHECK(stabilizerContains(inverse(a, p), rep));
        for (const Word& b : members)
            CHECK(stabilizerContains(multiply(a, b, p), rep));
    }
}

TEST_CASE("order dividing counts match brute force for n <= 7")
{
    for (int k = 1; k <= 6; ++k)
        for (int n = 0; n <= 7; ++n)
            CHECK(countOrderDividing(n, k) == oracle::orderDividingBruteForce(n, k).size());
    CHECK(countOrderDividing(4, 2) == 10);
    CHECK_THROWS_AS(countOrderDividing(200, 2), DomainError);
}

TEST_CASE("sampler support for n = 4, k = 2 is the full set of ten")
{
    auto expected = oracle::orderDividingBruteForce(4, 2);
    REQUIRE(expected.size() == 10);
    std::mt19937_64 rng(37);
    std::map<Perm, int> seen;
    for (int t = 0; t < 10000; ++t)
        ++seen[sampleOrderDividing(4, 2, rng)];
    std::set<Perm> support;
    for (auto& [perm, count] : seen) {
        support.insert(perm);
        // Uniform with 1000 expected draws each; 800 is more than six standard deviations away.
        CHECK(count > 800);
    }
    CHECK(support == expected);
}

TEST_CASE("k = 1 forces the identity")
{
    std::mt19937_64 rng(38);
    for (int n = 1; n <= 5; ++n) {
        CHECK(countOrderDividing(n, 1) == 1);
        Perm id(n);
        for (int x = 0; x < n; ++x)
            id[x] = x;
        CHECK(sampleOrderDividing(n, 1, rng) == id);
    }
}

TEST_CASE("randomRep output passes the order check and is deterministic")
{
    Params p{2, 3};
    int transitive = 0;
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        std::mt19937_64 rng(seed);
        PermRep raw = randomTuple(p, 30, rng);
        RepDiagnostics d = validate(raw);
        for (bool b : d.orderDivides)
            CHECK(b);
        auto r = randomRep(p, 30, seed);
        CHECK(r.has_value() == d.transitive);
        if (r) {
            CHECK(validate(*r).ok());
            CHECK(*r == *randomRep(p, 30, seed));
            ++transitive;
        }
    }
    CHECK(transitive >= 90);
    PermRep fixed = randomTransitiveRep(p, 30, 7);
    CHECK(validate(fixed).ok());
    CHECK(fixed == randomTransitiveRep(p, 30, 7));
}

TEST_CASE("randomTransitiveRep gives up after the attempt limit")
{
    // With k = 2, d = 1 and n = 2 the draw is intransitive only when both generators are the
    // identity, so a single attempt succeeds or visibly fails.
    int used = 0;
    bool sawFailure = false;
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
        try {
            randomTransitiveRep({1, 2}, 2, seed, 1, &used);
            CHECK(used == 1);
        } catch (const DomainError&) {
            sawFailure = true;
        }
    }
    CHECK(sawFailure);
}

TEST_CASE("intersectReps examples")
{
    Params p{2, 3};
    PermRep r = randomTransitiveRep(p, 12, 39);
    CHECK(equalUpToRelabel(intersectReps(r, trivialRep(p)).rep, r));
    CHECK(equalUpToRelabel(intersectReps(r, r).rep, r));
    PermRep a = makeRep({1, 2}, {{1, 0}, {0, 1}});
    PermRep b = makeRep({1, 2}, {{0, 1}, {1, 0}});
    CommonCover c = intersectReps(a, b);
    CHECK(c.rep.n == 4);
    CHECK(validate(c.rep).ok());
    std::set<std::pair<int, int>> pairs;
    for (int x = 0; x < 4; ++x)
        pairs.insert({c.toFirst[x], c.toSecond[x]});
    CHECK(pairs.size() == 4);
}

TEST_CASE("intersectReps maps commute with the generators")
{
    for (std::uint64_t seed = 50; seed < 60; ++seed) {
        Params p{1 + static_cast<int>(seed % 3), 2 + static_cast<int>(seed % 2)};
        PermRep r1 = randomTransitiveRep(p, 4 + static_cast<int>(seed % 5), seed);
        PermRep r2 = randomTransitiveRep(p, 3 + static_cast<int>(seed % 4), seed + 100);
        CommonCover c = intersectReps(r1, r2);
        CHECK(validate(c.rep).ok());
        CHECK(c.rep.n <= r1.n * r2.n);
        CHECK(c.toFirst[c.rep.root] == r1.root);
        CHECK(c.toSecond[c.rep.root] == r2.root);
        for (int i = 0; i < p.colors(); ++i)
            for (int x = 0; x < c.rep.n; ++x) {
                CHECK(c.toFirst[c.rep.betas[i][x]] == r1.betas[i][c.toFirst[x]]);
                CHECK(c.toSecond[c.rep.betas[i][x]] == r2.betas[i][c.toSecond[x]]);
            }
        std::mt19937_64 rng(seed);
        for (int t = 0; t < 40; ++t) {
            Word x = randomWord(p, 6, rng);
            CHECK(stabilizerContains(x, c.rep) == (stabilizerContains(x, r1) && stabilizerContains(x, r2)));
        }
    }
}

TEST_CASE("canonical relabeling agrees with the bijection oracle")
{
    PermRep r = randomTransitiveRep({2, 3}, 15, 61);
    // Conjugate by a permutation fixing nothing but moving the root as well.
    Perm sigma(r.n);
    for (int x = 0; x < r.n; ++x)
        sigma[x] = (x * 7 + 3) % r.n;
    PermRep s = r;
    s.root = sigma[r.root];
    for (int i = 0; i < 3; ++i)
        for (int x = 0; x < r.n; ++x)
            s.betas[i][sigma[x]] = sigma[r.betas[i][x]];
    CHECK(equalUpToRelabel(r, s));
    CHECK(oracle::sameUpToRelabel(r, s));
    PermRep moved = r;
    moved.root = (r.root + 1) % r.n;
    CHECK(equalUpToRelabel(r, moved) == oracle::sameUpToRelabel(r, moved));
}

TEST_CASE("rep text format")
{
    PermRep r = randomTransitiveRep({2, 4}, 9, 62);
    CHECK(parseRep(formatRep(r)) == r);
    PermRep c = parseRep("1 2 3 2\n(1 2)\n(2 3)\n");
    CHECK(c.n == 3);
    CHECK(c.root == 1);
    CHECK(c.betas[0] == Perm{1, 0, 2});
    CHECK(c.betas[1] == Perm{0, 2, 1});
    CHECK(formatRep(c) == "1 2 3 2\n2 1 3\n1 3 2\n");
    CHECK(parsePerm("(1 3)(2 4)", 4) == Perm{2, 3, 0, 1});
    CHECK(parsePerm("2 1 4 3", 4) == Perm{1, 0, 3, 2});
    CHECK(parsePerm("()", 2) == Perm{0, 1});
    CHECK_THROWS_AS(parseRep("1 2 3 1\n1 2\n1 2 3\n"), ParseError);
    CHECK_THROWS_AS(parseRep("1 2 3 1\n1 1 2\n1 2 3\n"), DomainError);
    CHECK_THROWS_AS(parsePerm("(1 4)", 3), DomainError);
}

TEST_CASE("cycles lists each cycle from its minimum")
{
    auto cs = cycles(Perm{2, 0, 1, 4, 3, 5});
    REQUIRE(cs.size() == 3);
    CHECK(cs[0] == std::vector<int>{0, 2, 1});
    CHECK(cs[1] == std::vector<int>{3, 4});
    CHECK(cs[2] == std::vector<int>{5});
}
