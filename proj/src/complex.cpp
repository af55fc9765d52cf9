#include "arboreal/complex.hpp"
#include "arboreal/unionfind.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace arboreal {

std::string describe(const MultiId& id)
{
    std::ostringstream os;
    os << '{';
    bool first = true;
    for (int c : maskColors(id.mask)) {
        os << (first ? "" : ",") << c;
        first = false;
    }
    os << "}#" << id.index;
    return os.str();
}

MComplex::MComplex(const Params& p) : params(p)
{
    cells.assign(std::size_t(1) << p.colors(), {});
    ordering.assign(p.colors(), {});
}

int MComplex::countDim(int j) const
{
    int total = 0;
    for (ColorMask m = 0; m < cells.size(); ++m)
        if (maskSize(m) == j + 1)
            total += count(m);
    return total;
}

int MComplex::facet(const MultiId& a, int color) const
{
    int pos = maskSize(a.mask & ((ColorMask(1) << color) - 1));
    return cells[a.mask][a.index].facets[pos];
}

int MComplex::face(const MultiId& a, ColorMask sub) const
{
    MultiId cur = a;
    for (int c : maskColors(a.mask & ~sub)) {
        cur.index = facet(cur, c);
        cur.mask &= ~(ColorMask(1) << c);
    }
    return cur.index;
}

bool MComplex::contains(const MultiId& small, const MultiId& big) const
{
    if ((small.mask & big.mask) != small.mask)
        return false;
    return face(big, small.mask) == small.index;
}

MultiId MComplex::vertexCell(int v) const
{
    int c = vertexColor_[v];
    return {ColorMask(1) << c, v - vertexOffset_[c]};
}

std::vector<MultiId> MComplex::cellsOfDim(int j) const
{
    std::vector<MultiId> out;
    for (ColorMask m = 0; m < cells.size(); ++m)
        if (maskSize(m) == j + 1)
            for (int t = 0; t < count(m); ++t)
                out.push_back({m, t});
    return out;
}

std::vector<MultiId> MComplex::allCells() const
{
    std::vector<MultiId> out;
    for (int j = -1; j <= params.d; ++j) {
        auto part = cellsOfDim(j);
        out.insert(out.end(), part.begin(), part.end());
    }
    return out;
}

void MComplex::finalize()
{
    const int C = colors();
    if (params.d < 0)
        throw DomainError("complex dimension must be at least 0");
    if (cells.size() != (std::size_t(1) << C))
        throw DomainError("cell table does not match the number of colors");
    for (ColorMask m = 0; m < cells.size(); ++m) {
        auto cs = maskColors(m);
        for (int t = 0; t < count(m); ++t) {
            const Multicell& a = cells[m][t];
            if (a.facets.size() != cs.size())
                throw DomainError("multicell " + describe({m, t}) + " has the wrong number of facets");
            for (std::size_t s = 0; s < cs.size(); ++s) {
                ColorMask fm = m & ~(ColorMask(1) << cs[s]);
                if (a.facets[s] < 0 || a.facets[s] >= count(fm))
                    throw DomainError("dangling gluing reference from " + describe({m, t}));
            }
        }
    }
    vertexOffset_.assign(C + 1, 0);
    vertexColor_.clear();
    for (int c = 0; c < C; ++c) {
        vertexOffset_[c + 1] = vertexOffset_[c] + count(ColorMask(1) << c);
        vertexColor_.insert(vertexColor_.end(), count(ColorMask(1) << c), c);
    }
    cofaces_.assign(cells.size(), {});
    for (ColorMask m = 0; m < cells.size(); ++m)
        cofaces_[m].assign(count(m), {});
    for (ColorMask m = 0; m < cells.size(); ++m) {
        auto cs = maskColors(m);
        for (int t = 0; t < count(m); ++t) {
            Multicell& a = cells[m][t];
            a.vertices.clear();
            for (int c : cs)
                a.vertices.push_back(vertexId(c, face({m, t}, ColorMask(1) << c)));
            for (std::size_t s = 0; s < cs.size(); ++s)
                cofaces_[m & ~(ColorMask(1) << cs[s])][a.facets[s]].push_back({cs[s], t});
        }
    }
    if (static_cast<int>(ordering.size()) != C)
        throw DomainError("ordering table must have one entry per color");
    next_.assign(C, std::vector<int>(topCount(), -1));
    for (int i = 0; i < C; ++i) {
        if (static_cast<int>(ordering[i].size()) != count(wall(i)))
            throw DomainError("ordering for color " + std::to_string(i) + " does not list every wall");
        for (const auto& cyc : ordering[i])
            for (std::size_t t = 0; t < cyc.size(); ++t) {
                if (cyc[t] < 0 || cyc[t] >= topCount())
                    throw DomainError("ordering cycle references a missing d-cell");
                next_[i][cyc[t]] = cyc[(t + 1) % cyc.size()];
            }
    }
    if (topCount() > 0 && (root < 0 || root >= topCount()))
        throw DomainError("root d-cell out of range");
}

Diagnostics audit(const MComplex& X)
{
    Diagnostics d;
    if (X.params.k < 1)
        d.fail("k must be positive");
    if (X.topCount() == 0) {
        d.fail("no top-dimensional multicells");
        return d;
    }
    if (X.count(0) == 0)
        d.fail("missing the empty multicell");
    for (ColorMask m = 0; m < X.cells.size(); ++m) {
        if (m == X.full())
            continue;
        for (int t = 0; t < X.count(m); ++t)
            if (X.cofaces({m, t}).empty())
                d.fail("multicell " + describe({m, t}) + " lies under no top cell (impure)");
    }
    for (int i = 0; i < X.colors(); ++i) {
        for (int b = 0; b < X.count(X.wall(i)); ++b) {
            const auto& cyc = X.ordering[i][b];
            std::vector<int> expect;
            for (auto [c, idx] : X.cofaces({X.wall(i), b}))
                expect.push_back(idx);
            std::vector<int> got = cyc;
            std::sort(expect.begin(), expect.end());
            std::sort(got.begin(), got.end());
            if (got != expect)
                d.fail("ordering of " + describe({X.wall(i), b}) + " does not visit each coface exactly once");
            if (cyc.empty() || X.params.k % static_cast<int>(cyc.size()) != 0)
                d.fail("degree of " + describe({X.wall(i), b}) + " does not divide k");
        }
    }
    if (X.root < 0 || X.root >= X.topCount())
        d.fail("root missing");
    return d;
}

Diagnostics checkConsistency(const MComplex& X)
{
    Diagnostics d;
    for (ColorMask m = 0; m < X.cells.size(); ++m) {
        auto cs = maskColors(m);
        for (int t = 0; t < X.count(m); ++t) {
            MultiId a{m, t};
            const auto& va = X.cell(a).vertices;
            for (std::size_t s = 0; s < cs.size(); ++s) {
                MultiId f{m & ~(ColorMask(1) << cs[s]), X.facet(a, cs[s])};
                std::vector<int> expect = va;
                expect.erase(expect.begin() + static_cast<long>(s));
                if (X.cell(f).vertices != expect)
                    d.fail("facet of " + describe(a) + " dropping color " + std::to_string(cs[s]) +
                           " has a mismatched vertex set");
            }
            for (std::size_t s1 = 0; s1 < cs.size(); ++s1)
                for (std::size_t s2 = s1 + 1; s2 < cs.size(); ++s2) {
                    int c1 = cs[s1], c2 = cs[s2];
                    MultiId f1{m & ~(ColorMask(1) << c1), X.facet(a, c1)};
                    MultiId f2{m & ~(ColorMask(1) << c2), X.facet(a, c2)};
                    int g12 = X.facet(f1, c2);
                    int g21 = X.facet(f2, c1);
                    if (g12 != g21)
                        d.fail("inconsistent gluing of the common face of " + describe(f1) + " and " +
                               describe(f2) + " inside " + describe(a));
                }
        }
    }
    return d;
}

int degree(const MComplex& X, const MultiId& a) { return static_cast<int>(X.cofaces(a).size()); }

std::map<std::vector<int>, int> multiplicities(const MComplex& X, ColorMask mask)
{
    std::map<std::vector<int>, int> out;
    for (const auto& c : X.cells[mask])
        ++out[c.vertices];
    return out;
}

bool isSimplicialComplex(const MComplex& X)
{
    for (ColorMask m = 0; m < X.cells.size(); ++m)
        for (const auto& [verts, mult] : multiplicities(X, m))
            if (mult != 1)
                return false;
    return true;
}

LinkResult link(const MComplex& X, const MultiId& a)
{
    if (a.dim() > X.params.d - 1)
        throw DomainError("link needs a multicell of dimension at most d-1");
    LinkResult out;
    for (int c = 0; c < X.colors(); ++c)
        if (!hasColor(a.mask, c))
            out.colorMap.push_back(c);
    const int C = static_cast<int>(out.colorMap.size());
    Params lp{C - 1, X.params.k};
    MComplex L(lp);
    out.origin.assign(std::size_t(1) << C, {});
    auto expand = [&](ColorMask lm) {
        ColorMask m = a.mask;
        for (int t = 0; t < C; ++t)
            if (hasColor(lm, t))
                m |= ColorMask(1) << out.colorMap[t];
        return m;
    };
    std::vector<std::vector<int>> localIndex(X.cells.size());
    for (ColorMask lm = 0; lm < (ColorMask(1) << C); ++lm) {
        ColorMask m = expand(lm);
        localIndex[m].assign(X.count(m), -1);
        for (int t = 0; t < X.count(m); ++t)
            if (X.contains(a, {m, t})) {
                localIndex[m][t] = static_cast<int>(out.origin[lm].size());
                out.origin[lm].push_back({m, t});
            }
    }
    for (ColorMask lm = 0; lm < (ColorMask(1) << C); ++lm) {
        for (const MultiId& b : out.origin[lm]) {
            Multicell mc;
            for (int t : maskColors(lm)) {
                int c = out.colorMap[t];
                mc.facets.push_back(localIndex[b.mask & ~(ColorMask(1) << c)][X.facet(b, c)]);
            }
            L.cells[lm].push_back(std::move(mc));
        }
    }
    const ColorMask lfull = fullMask(C);
    for (int t = 0; t < C; ++t) {
        ColorMask lw = lfull & ~(ColorMask(1) << t);
        for (const MultiId& b : out.origin[lw]) {
            std::vector<int> cyc;
            for (int x : X.ordering[out.colorMap[t]][b.index])
                cyc.push_back(localIndex[X.full()][x]);
            L.ordering[t].push_back(std::move(cyc));
        }
    }
    L.root = 0;
    if (localIndex[X.full()][X.root] >= 0)
        L.root = localIndex[X.full()][X.root];
    L.finalize();
    out.complex = std::move(L);
    return out;
}

std::pair<std::vector<int>, int> linkComponents(const MComplex& X, const MultiId& a)
{
    const auto& vs = X.cofaces(a);
    std::map<std::pair<int, int>, int> pos;
    for (std::size_t t = 0; t < vs.size(); ++t)
        pos[vs[t]] = static_cast<int>(t);
    UnionFind uf(static_cast<int>(vs.size()));
    for (std::size_t t = 0; t < vs.size(); ++t) {
        auto [c1, i1] = vs[t];
        MultiId v{a.mask | (ColorMask(1) << c1), i1};
        for (auto [c2, e] : X.cofaces(v)) {
            MultiId edge{v.mask | (ColorMask(1) << c2), e};
            int other = X.facet(edge, c1);
            uf.unite(static_cast<int>(t), pos.at({c2, other}));
        }
    }
    std::vector<int> comp(vs.size());
    std::map<int, int> ids;
    for (std::size_t t = 0; t < vs.size(); ++t) {
        int r = uf.find(static_cast<int>(t));
        auto it = ids.find(r);
        if (it == ids.end())
            it = ids.emplace(r, static_cast<int>(ids.size())).first;
        comp[t] = it->second;
    }
    return {comp, static_cast<int>(ids.size())};
}

bool isLinkConnected(const MComplex& X)
{
    for (int j = -1; j <= X.params.d - 2; ++j)
        for (const MultiId& a : X.cellsOfDim(j))
            if (linkComponents(X, a).second != 1)
                return false;
    return true;
}

bool isLowerPathConnected(const MComplex& X, int j)
{
    auto cs = X.cellsOfDim(j);
    if (cs.empty())
        return true;
    std::map<MultiId, int> at;
    for (std::size_t t = 0; t < cs.size(); ++t)
        at[cs[t]] = static_cast<int>(t);
    UnionFind uf(static_cast<int>(cs.size()));
    for (const MultiId& f : X.cellsOfDim(j - 1)) {
        const auto& up = X.cofaces(f);
        for (std::size_t t = 1; t < up.size(); ++t)
            uf.unite(at.at({f.mask | (ColorMask(1) << up[0].first), up[0].second}),
                     at.at({f.mask | (ColorMask(1) << up[t].first), up[t].second}));
    }
    return uf.components() == 1;
}

SimplexSet nerve(const SetFamily& family)
{
    std::map<int, std::vector<int>> containing;
    for (std::size_t i = 0; i < family.size(); ++i) {
        if (family[i].empty())
            throw DomainError("nerve needs nonempty sets");
        std::set<int> uniq(family[i].begin(), family[i].end());
        for (int x : uniq)
            containing[x].push_back(static_cast<int>(i));
    }
    SimplexSet out;
    out.insert(std::vector<int>{});
    for (const auto& [x, idx] : containing) {
        if (idx.size() > 24)
            throw DomainError("nerve: a point lies in too many sets to enumerate faces");
        const std::uint32_t subsets = std::uint32_t(1) << idx.size();
        for (std::uint32_t s = 1; s < subsets; ++s) {
            std::vector<int> sigma;
            for (std::size_t t = 0; t < idx.size(); ++t)
                if ((s >> t) & 1u)
                    sigma.push_back(idx[t]);
            out.insert(std::move(sigma));
        }
    }
    return out;
}

SimplexSet baseComplex(const MComplex& X)
{
    SimplexSet out;
    for (const auto& bucket : X.cells)
        for (const auto& c : bucket) {
            std::vector<int> v = c.vertices;
            std::sort(v.begin(), v.end());
            out.insert(v);
        }
    return out;
}

MorphismMap identityMap(const MComplex& X)
{
    MorphismMap f;
    f.image.resize(X.cells.size());
    for (ColorMask m = 0; m < X.cells.size(); ++m)
        for (int t = 0; t < X.count(m); ++t)
            f.image[m].push_back({m, t});
    return f;
}

Diagnostics checkMorphism(const MorphismMap& f, const MComplex& X, const MComplex& Y, const Exemptions& exemptX)
{
    Diagnostics d;
    if (X.params.d != Y.params.d || X.params.k != Y.params.k) {
        d.fail("parameters differ");
        return d;
    }
    if (f.image.size() != X.cells.size()) {
        d.fail("map is not total");
        return d;
    }
    for (ColorMask m = 0; m < X.cells.size(); ++m) {
        if (static_cast<int>(f.image[m].size()) != X.count(m)) {
            d.fail("map is not total on color set " + describe({m, 0}));
            return d;
        }
        for (int t = 0; t < X.count(m); ++t) {
            const MultiId& y = f.image[m][t];
            if (y.mask != m) {
                d.fail("coloring not preserved at " + describe({m, t}));
                continue;
            }
            if (y.index < 0 || y.index >= Y.count(m))
                d.fail("image of " + describe({m, t}) + " does not exist");
        }
    }
    if (!d.ok())
        return d;
    for (ColorMask m = 0; m < X.cells.size(); ++m)
        for (int t = 0; t < X.count(m); ++t)
            for (int c : maskColors(m)) {
                ColorMask fm = m & ~(ColorMask(1) << c);
                MultiId fx{fm, X.facet({m, t}, c)};
                if (f(fx).index != Y.facet(f.image[m][t], c))
                    d.fail("gluing not preserved at " + describe({m, t}) + " dropping color " + std::to_string(c));
            }
    if (f(X.rootId()) != Y.rootId())
        d.fail("root not preserved");
    for (int i = 0; i < X.colors(); ++i)
        for (int a = 0; a < X.topCount(); ++a) {
            int b = X.facet({X.full(), a}, i);
            if (!exemptX.empty() && exemptX[i][b])
                continue;
            int lhs = f.image[X.full()][X.next(a, i)].index;
            int rhs = Y.next(f.image[X.full()][a].index, i);
            if (lhs != rhs)
                d.fail("ordering not preserved at top cell " + std::to_string(a) + " color " + std::to_string(i));
        }
    return d;
}

bool isSurjective(const MorphismMap& f, const MComplex& X, const MComplex& Y)
{
    for (ColorMask m = 0; m < X.cells.size(); ++m) {
        std::vector<char> hit(Y.count(m), 0);
        for (const MultiId& y : f.image[m])
            if (y.mask == m && y.index >= 0 && y.index < Y.count(m))
                hit[y.index] = 1;
        if (std::find(hit.begin(), hit.end(), 0) != hit.end())
            return false;
    }
    return true;
}

Propagation propagateMorphism(const MComplex& X, const MComplex& Y, const Exemptions& exemptX)
{
    Propagation out;
    if (X.params.d != Y.params.d) {
        out.diag.fail("dimensions differ");
        return out;
    }
    if (X.topCount() == 0 || Y.topCount() == 0) {
        out.diag.fail("empty complex");
        return out;
    }
    const ColorMask F = X.full();
    std::vector<int> top(X.topCount(), -1);
    top[X.root] = Y.root;
    std::vector<int> queue{X.root};
    for (std::size_t q = 0; q < queue.size() && out.diag.ok(); ++q) {
        int a = queue[q];
        for (int i = 0; i < X.colors(); ++i) {
            if (!exemptX.empty() && exemptX[i][X.facet({F, a}, i)])
                continue;
            int a2 = X.next(a, i);
            int b2 = Y.next(top[a], i);
            if (a2 < 0 || b2 < 0) {
                out.diag.fail("ordering undefined near top cell " + std::to_string(a));
                return out;
            }
            if (top[a2] < 0) {
                top[a2] = b2;
                queue.push_back(a2);
            } else if (top[a2] != b2) {
                out.diag.fail("ordering conflict: top cell " + std::to_string(a2) + " would map to both " +
                              std::to_string(top[a2]) + " and " + std::to_string(b2));
                return out;
            }
        }
    }
    for (int a = 0; a < X.topCount(); ++a)
        if (top[a] < 0) {
            out.diag.fail("top cell " + std::to_string(a) + " is not reached from the root");
            return out;
        }
    out.map.image.assign(X.cells.size(), {});
    for (ColorMask m = 0; m < X.cells.size(); ++m)
        out.map.image[m].assign(X.count(m), MultiId{m, -1});
    for (int a = 0; a < X.topCount(); ++a)
        for (ColorMask sub = 0; sub <= F; ++sub) {
            int xa = X.face({F, a}, sub);
            int ya = Y.face({F, top[a]}, sub);
            MultiId& slot = out.map.image[sub][xa];
            if (slot.index < 0)
                slot.index = ya;
            else if (slot.index != ya) {
                out.diag.fail("gluing conflict at " + describe({sub, xa}));
                return out;
            }
        }
    for (ColorMask m = 0; m < X.cells.size(); ++m)
        for (int t = 0; t < X.count(m); ++t)
            if (out.map.image[m][t].index < 0)
                out.diag.fail("multicell " + describe({m, t}) + " lies under no top cell");
    return out;
}

bool isomorphic(const MComplex& X, const MComplex& Y, const Exemptions& exemptX, const Exemptions& exemptY)
{
    if (X.params.d != Y.params.d || X.params.k != Y.params.k)
        return false;
    for (ColorMask m = 0; m < X.cells.size(); ++m)
        if (X.count(m) != Y.count(m))
            return false;
    Propagation f = propagateMorphism(X, Y, exemptX);
    Propagation g = propagateMorphism(Y, X, exemptY);
    if (!f.ok() || !g.ok())
        return false;
    for (ColorMask m = 0; m < X.cells.size(); ++m)
        for (int t = 0; t < X.count(m); ++t)
            if (g.map(f.map.image[m][t]) != MultiId{m, t})
                return false;
    return checkMorphism(f.map, X, Y, exemptX).ok() && checkMorphism(g.map, Y, X, exemptY).ok();
}

SimplicialBuilder::SimplicialBuilder(const Params& p, std::vector<int> vertexColors)
    : params_(p), colorOf_(std::move(vertexColors))
{
    std::vector<int> perColor(p.colors(), 0);
    for (int c : colorOf_) {
        if (c < 0 || c > p.d)
            throw DomainError("vertex color out of range");
        indexInColor_.push_back(perColor[c]++);
    }
}

int SimplicialBuilder::addTop(const std::vector<int>& verts)
{
    if (static_cast<int>(verts.size()) != params_.colors())
        throw DomainError("a top cell needs one vertex per color");
    std::vector<int> byColor(params_.colors(), -1);
    for (int v : verts) {
        if (v < 0 || v >= static_cast<int>(colorOf_.size()))
            throw DomainError("vertex id out of range");
        if (byColor[colorOf_[v]] >= 0)
            throw DomainError("a top cell repeats a color");
        byColor[colorOf_[v]] = v;
    }
    auto [it, fresh] = topIndex_.emplace(byColor, static_cast<int>(tops_.size()));
    if (!fresh)
        throw DomainError("duplicate top cell in simplicial input");
    tops_.push_back(byColor);
    return it->second;
}

MComplex SimplicialBuilder::build(int rootTop) const
{
    MComplex X(params_);
    built_.clear();
    const ColorMask F = X.full();
    std::vector<char> used(colorOf_.size(), 0);
    for (const auto& t : tops_)
        for (int v : t)
            used[v] = 1;
    for (std::size_t v = 0; v < colorOf_.size(); ++v) {
        if (!used[v])
            throw DomainError("vertex " + std::to_string(v) + " lies in no top cell");
        built_[{ColorMask(1) << colorOf_[v], {static_cast<int>(v)}}] = indexInColor_[v];
    }
    for (int c = 0; c < params_.colors(); ++c)
        X.cells[ColorMask(1) << c].resize(std::count(colorOf_.begin(), colorOf_.end(), c));
    auto subsetOf = [&](const std::vector<int>& top, ColorMask sub) {
        std::vector<int> s;
        for (int c : maskColors(sub))
            s.push_back(top[c]);
        return s;
    };
    for (const auto& top : tops_)
        for (ColorMask sub = 0; sub <= F; ++sub) {
            if (maskSize(sub) == 1)
                continue;
            auto key = std::make_pair(sub, subsetOf(top, sub));
            if (!built_.count(key)) {
                built_[key] = X.count(sub);
                X.cells[sub].push_back({});
            }
        }
    for (const auto& [key, idx] : built_) {
        const auto& [mask, verts] = key;
        auto cs = maskColors(mask);
        Multicell& mc = X.cells[mask][idx];
        mc.facets.clear();
        for (std::size_t s = 0; s < cs.size(); ++s) {
            std::vector<int> sub = verts;
            sub.erase(sub.begin() + static_cast<long>(s));
            mc.facets.push_back(built_.at({mask & ~(ColorMask(1) << cs[s]), sub}));
        }
    }
    for (int i = 0; i < X.colors(); ++i) {
        X.ordering[i].assign(X.count(X.wall(i)), {});
        for (int a = 0; a < X.topCount(); ++a) {
            std::vector<int> sub = tops_[a];
            sub.erase(sub.begin() + i);
            X.ordering[i][built_.at({X.wall(i), sub})].push_back(a);
        }
    }
    X.root = rootTop;
    X.finalize();
    return X;
}

std::optional<MultiId> SimplicialBuilder::find(const std::vector<int>& verts) const
{
    std::vector<std::pair<int, int>> cv;
    for (int v : verts)
        cv.push_back({colorOf_.at(v), v});
    std::sort(cv.begin(), cv.end());
    ColorMask m = 0;
    std::vector<int> key;
    for (auto [c, v] : cv) {
        m |= ColorMask(1) << c;
        key.push_back(v);
    }
    auto it = built_.find({m, key});
    if (it == built_.end())
        return std::nullopt;
    return MultiId{m, it->second};
}

MComplex rootComponent(const MComplex& X, std::vector<std::vector<int>>* originIndex)
{
    const ColorMask F = X.full();
    std::vector<char> keepTop(X.topCount(), 0);
    std::vector<int> queue{X.root};
    keepTop[X.root] = 1;
    for (std::size_t q = 0; q < queue.size(); ++q)
        for (int i = 0; i < X.colors(); ++i) {
            int b = X.facet({F, queue[q]}, i);
            for (auto [c, a2] : X.cofaces({X.wall(i), b}))
                if (!keepTop[a2]) {
                    keepTop[a2] = 1;
                    queue.push_back(a2);
                }
        }
    std::vector<std::vector<int>> newIndex(X.cells.size());
    for (ColorMask m = 0; m < X.cells.size(); ++m)
        newIndex[m].assign(X.count(m), -1);
    MComplex Y(X.params);
    std::vector<std::vector<int>> origin(X.cells.size());
    for (ColorMask m = 0; m < X.cells.size(); ++m) {
        for (int a = 0; a < X.topCount(); ++a)
            if (keepTop[a]) {
                int t = X.face({F, a}, m);
                if (newIndex[m][t] < 0) {
                    newIndex[m][t] = 0;
                }
            }
        for (int t = 0; t < X.count(m); ++t)
            if (newIndex[m][t] >= 0) {
                newIndex[m][t] = static_cast<int>(origin[m].size());
                origin[m].push_back(t);
            }
    }
    for (ColorMask m = 0; m < X.cells.size(); ++m)
        for (int t : origin[m]) {
            Multicell mc;
            for (int c : maskColors(m))
                mc.facets.push_back(newIndex[m & ~(ColorMask(1) << c)][X.facet({m, t}, c)]);
            Y.cells[m].push_back(std::move(mc));
        }
    for (int i = 0; i < X.colors(); ++i)
        for (int b : origin[X.wall(i)]) {
            std::vector<int> cyc;
            for (int a : X.ordering[i][b])
                cyc.push_back(newIndex[F][a]);
            Y.ordering[i].push_back(std::move(cyc));
        }
    Y.root = newIndex[F][X.root];
    Y.finalize();
    if (originIndex)
        *originIndex = std::move(origin);
    return Y;
}

} // namespace arboreal
