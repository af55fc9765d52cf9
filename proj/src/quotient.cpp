#include "arboreal/quotient.hpp"
#include "arboreal/error.hpp"

#include <algorithm>
#include <set>

namespace arboreal {

QuotientObject buildQuotient(const PermRep& rep)
{
    requireValid(rep);
    const Params& p = rep.params;
    QuotientObject q;
    q.sourceRep = rep;
    MComplex X(p);
    const ColorMask F = X.full();
    for (ColorMask m = 0; m <= F; ++m)
        q.multicellOrbits.push_back(orbits(rep, m));
    for (ColorMask m = 0; m <= F; ++m) {
        const OrbitPartition& P = q.multicellOrbits[m];
        X.cells[m].resize(P.count());
        for (int c = 0; c < P.count(); ++c)
            for (int color : maskColors(m)) {
                const OrbitPartition& below = q.multicellOrbits[m & ~(ColorMask(1) << color)];
                X.cells[m][c].facets.push_back(below.classIds[P.reps[c]]);
            }
    }
    for (int i = 0; i <= p.d; ++i) {
        const OrbitPartition& W = q.multicellOrbits[X.wall(i)];
        X.ordering[i].resize(W.count());
        for (int b = 0; b < W.count(); ++b) {
            int start = W.reps[b];
            std::vector<int> cyc{start};
            for (int x = rep.betas[i][start]; x != start; x = rep.betas[i][x])
                cyc.push_back(x);
            X.ordering[i][b] = std::move(cyc);
        }
    }
    X.root = rep.root;
    X.finalize();
    q.complex = std::move(X);
    return q;
}

Multigraph lineGraph(const MComplex& X)
{
    const Params& p = X.params;
    Multigraph g;
    g.n = X.topCount();
    nameSchreierClasses(g, p);
    for (int i = 0; i <= p.d; ++i)
        for (const auto& cyc : X.ordering[i]) {
            const int L = static_cast<int>(cyc.size());
            for (int l = 1; 2 * l <= p.k; ++l) {
                int c = schreierClass(p, i, l);
                bool involutive = 2 * l == p.k;
                int r = l % L;
                for (int x = 0; x < L; ++x) {
                    int a = cyc[x];
                    int sa = cyc[(x + r) % L];
                    int sinv = cyc[(x - r + L) % L];
                    if (sa == a)
                        g.add(a, a, c);
                    else if (involutive) {
                        if (a < sa)
                            g.add(a, sa, c);
                    } else if (sa == sinv) {
                        if (a < sa) {
                            g.add(a, sa, c);
                            g.add(a, sa, c);
                        }
                    } else {
                        g.add(a, sa, c);
                    }
                }
            }
        }
    return g;
}

Multigraph lineGraph(const QuotientObject& q) { return lineGraph(q.complex); }

bool isSimplicial(const QuotientObject& q) { return isSimplicialComplex(q.complex); }

namespace {

struct OrbitTables {
    std::vector<OrbitPartition> parts;   // by mask
    std::vector<std::vector<int>> sizes; // by mask, orbit id -> size
};

OrbitTables orbitTables(const PermRep& rep)
{
    OrbitTables t;
    const ColorMask F = fullMask(rep.params.colors());
    for (ColorMask m = 0; m <= F; ++m) {
        t.parts.push_back(orbits(rep, m));
        std::vector<int> sz(t.parts.back().count(), 0);
        for (int x = 0; x < rep.n; ++x)
            ++sz[t.parts.back().classIds[x]];
        t.sizes.push_back(std::move(sz));
    }
    return t;
}

bool intersectionAt(const PermRep& rep, const OrbitTables& t, int point)
{
    const ColorMask F = fullMask(rep.params.colors());
    for (ColorMask J = 1; J <= F; ++J) {
        if (maskSize(J) < 2)
            continue;
        auto colors = maskColors(J);
        int common = 0;
        for (int x = 0; x < rep.n; ++x) {
            bool all = true;
            for (int i : colors) {
                const OrbitPartition& V = t.parts[ColorMask(1) << i];
                if (V.classIds[x] != V.classIds[point]) {
                    all = false;
                    break;
                }
            }
            common += all;
        }
        if (common != t.sizes[J][t.parts[J].classIds[point]])
            return false;
    }
    return true;
}

} // namespace

bool intersectionPropertyAt(const PermRep& rep, int point)
{
    requireValid(rep);
    if (point < 0 || point >= rep.n)
        throw DomainError("point out of range");
    return intersectionAt(rep, orbitTables(rep), point);
}

bool intersectionProperty(const PermRep& rep)
{
    requireValid(rep);
    OrbitTables t = orbitTables(rep);
    for (int x = 0; x < rep.n; ++x)
        if (!intersectionAt(rep, t, x))
            return false;
    return true;
}

bool isUpperRegular(const PermRep& rep)
{
    requireValid(rep);
    for (const Perm& b : rep.betas)
        for (const auto& cyc : cycles(b))
            if (static_cast<int>(cyc.size()) != rep.params.k)
                return false;
    return true;
}

bool isUpperRegular(const MComplex& X)
{
    for (int i = 0; i < X.colors(); ++i)
        for (const auto& cyc : X.ordering[i])
            if (static_cast<int>(cyc.size()) != X.params.k)
                return false;
    return true;
}

bool hasCompleteSkeleton(const MComplex& X)
{
    std::vector<long long> perColor(X.colors(), 0);
    for (int v = 0; v < X.vertexCount(); ++v)
        ++perColor[X.vertexColor(v)];
    for (ColorMask J = 1; J <= X.full(); ++J) {
        if (maskSize(J) > X.params.d)
            continue;
        long long expected = 1;
        for (int c : maskColors(J))
            expected *= perColor[c];
        std::set<std::vector<int>> tuples;
        for (const auto& cell : X.cells[J])
            tuples.insert(cell.vertices);
        if (static_cast<long long>(tuples.size()) != expected)
            return false;
    }
    return true;
}

bool hasCompleteSkeleton(const QuotientObject& q) { return hasCompleteSkeleton(q.complex); }

QuotientMapResult quotientMap(const Ball& b, const QuotientObject& q)
{
    QuotientMapResult out;
    const MComplex& X = b.complex;
    const MComplex& Y = q.complex;
    if (!(X.params == Y.params))
        throw DomainError("ball and quotient have different parameters");
    const ColorMask F = X.full();
    out.map.image.resize(X.cells.size());
    std::vector<std::vector<char>> set(X.cells.size());
    for (ColorMask m = 0; m <= F; ++m) {
        out.map.image[m].assign(X.count(m), MultiId{m, 0});
        set[m].assign(X.count(m), 0);
    }
    for (int t = 0; t < X.topCount(); ++t) {
        int point = evaluate(b.cellWords[t], q.sourceRep.root, q.sourceRep);
        for (ColorMask m = 0; m <= F; ++m) {
            int src = X.face({F, t}, m);
            MultiId img{m, Y.face({F, point}, m)};
            if (set[m][src] && !(out.map.image[m][src] == img))
                out.diag.fail("faces of " + describe({m, src}) + " disagree under the quotient map");
            out.map.image[m][src] = img;
            set[m][src] = 1;
        }
    }
    out.diag.merge(checkMorphism(out.map, X, Y, b.boundary));
    out.surjective = isSurjective(out.map, X, Y);
    return out;
}

PermRep subgroupRep(const MComplex& X)
{
    const int n = X.topCount();
    std::vector<char> seen(n, 0);
    std::vector<int> queue{X.root};
    seen[X.root] = 1;
    for (std::size_t t = 0; t < queue.size(); ++t)
        for (int i = 0; i < X.colors(); ++i) {
            int a = X.next(queue[t], i);
            if (!seen[a]) {
                seen[a] = 1;
                queue.push_back(a);
            }
        }
    std::vector<int> label(n, -1), tops;
    for (int a = 0; a < n; ++a)
        if (seen[a]) {
            label[a] = static_cast<int>(tops.size());
            tops.push_back(a);
        }
    PermRep rep;
    rep.params = X.params;
    rep.n = static_cast<int>(tops.size());
    rep.root = label[X.root];
    rep.betas.assign(X.colors(), Perm(rep.n));
    for (int i = 0; i < X.colors(); ++i)
        for (int x = 0; x < rep.n; ++x)
            rep.betas[i][x] = label[X.next(tops[x], i)];
    requireValid(rep);
    return rep;
}

PermRep associatedSubgroupRoundTrip(const QuotientObject& q) { return subgroupRep(q.complex); }

SetFamily cosetFamily(const PermRep& rep)
{
    requireValid(rep);
    SetFamily family;
    for (int i = 0; i <= rep.params.d; ++i) {
        OrbitPartition V = orbits(rep, ColorMask(1) << i);
        std::vector<std::vector<int>> sets(V.count());
        for (int x = 0; x < rep.n; ++x)
            sets[V.classIds[x]].push_back(x);
        for (auto& s : sets)
            family.push_back(std::move(s));
    }
    return family;
}

} // namespace arboreal
