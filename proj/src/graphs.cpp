#include "arboreal/graphs.hpp"
#include "arboreal/error.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <sstream>

#include "arboreal/rng.hpp"
#include "arboreal/unionfind.hpp"

namespace arboreal {

std::vector<std::tuple<int, int, int>> labeledEdges(const Multigraph& g, bool withColors)
{
    std::vector<std::tuple<int, int, int>> out;
    for (const Edge& e : g.edges)
        out.emplace_back(std::min(e.u, e.v), std::max(e.u, e.v), withColors ? e.color : -1);
    std::sort(out.begin(), out.end());
    return out;
}

int appendixDegree(const Multigraph& g, int v)
{
    int deg = 0;
    for (const Edge& e : g.edges) {
        if (e.isLoop()) {
            if (e.u != v)
                continue;
            bool twoFactor = e.color >= 0 && e.color < static_cast<int>(g.classKinds.size()) &&
                             g.classKinds[e.color] == ClassKind::TwoFactor;
            deg += twoFactor ? 2 : 1;
        } else {
            deg += (e.u == v) + (e.v == v);
        }
    }
    return deg;
}

namespace {

std::vector<std::pair<int, int>> loopAndEndCounts(const Multigraph& g)
{
    std::vector<std::pair<int, int>> out(g.n, {0, 0}); // (non-loop ends, loops)
    for (const Edge& e : g.edges) {
        if (e.isLoop())
            ++out[e.u].second;
        else {
            ++out[e.u].first;
            ++out[e.v].first;
        }
    }
    return out;
}

std::vector<std::vector<int>> incidence(const Multigraph& g)
{
    std::vector<std::vector<int>> inc(g.n);
    for (std::size_t t = 0; t < g.edges.size(); ++t) {
        inc[g.edges[t].u].push_back(static_cast<int>(t));
        if (!g.edges[t].isLoop())
            inc[g.edges[t].v].push_back(static_cast<int>(t));
    }
    return inc;
}

int otherEnd(const Edge& e, int v) { return e.u == v ? e.v : e.u; }

} // namespace

bool isConnected(const Multigraph& g)
{
    if (g.n == 0)
        return true;
    auto inc = incidence(g);
    std::vector<char> seen(g.n, 0);
    std::vector<int> st{0};
    seen[0] = 1;
    int reached = 1;
    while (!st.empty()) {
        int v = st.back();
        st.pop_back();
        for (int e : inc[v]) {
            int u = otherEnd(g.edges[e], v);
            if (!seen[u]) {
                seen[u] = 1;
                ++reached;
                st.push_back(u);
            }
        }
    }
    return reached == g.n;
}

bool isBipartite(const Multigraph& g)
{
    auto inc = incidence(g);
    std::vector<int> side(g.n, -1);
    for (int s = 0; s < g.n; ++s) {
        if (side[s] >= 0)
            continue;
        side[s] = 0;
        std::vector<int> st{s};
        while (!st.empty()) {
            int v = st.back();
            st.pop_back();
            for (int e : inc[v]) {
                int u = otherEnd(g.edges[e], v);
                if (side[u] < 0) {
                    side[u] = 1 - side[v];
                    st.push_back(u);
                } else if (side[u] == side[v]) {
                    return false;
                }
            }
        }
    }
    return true;
}

bool admitsRegularity(const Multigraph& g, int k)
{
    for (auto [a, l] : loopAndEndCounts(g))
        if (a + l > k || a + 2 * l < k)
            return false;
    return true;
}

int schreierClassCount(const Params& p) { return p.colors() * (p.k / 2); }

int schreierClass(const Params& p, int i, int l) { return i * (p.k / 2) + (l - 1); }

void nameSchreierClasses(Multigraph& g, const Params& p)
{
    g.classKinds.assign(schreierClassCount(p), ClassKind::TwoFactor);
    g.classNames.assign(schreierClassCount(p), "");
    for (int i = 0; i <= p.d; ++i)
        for (int l = 1; 2 * l <= p.k; ++l) {
            int c = schreierClass(p, i, l);
            g.classKinds[c] = 2 * l == p.k ? ClassKind::PerfectMatching : ClassKind::TwoFactor;
            g.classNames[c] = "a" + std::to_string(i) + "^" + std::to_string(l);
        }
}

Multigraph schreierMultigraph(const PermRep& rep)
{
    const Params& p = rep.params;
    Multigraph g;
    g.n = rep.n;
    nameSchreierClasses(g, p);
    for (int i = 0; i <= p.d; ++i)
        for (int l = 1; 2 * l <= p.k; ++l) {
            int c = schreierClass(p, i, l);
            bool involutive = 2 * l == p.k;
            for (int x = 0; x < rep.n; ++x) {
                int sx = applyPower(rep, i, l, x);
                int sinv = applyPower(rep, i, -l, x);
                if (sx == x)
                    g.add(x, x, c);
                else if (involutive) {
                    if (x < sx)
                        g.add(x, sx, c);
                } else if (sx == sinv) {
                    if (x < sx) {
                        g.add(x, sx, c);
                        g.add(x, sx, c);
                    }
                } else {
                    g.add(x, sx, c);
                }
            }
        }
    return g;
}

Diagnostics validateDecomposition(const Multigraph& g, const std::vector<EdgeClass>& classes)
{
    Diagnostics d;
    std::vector<int> uses(g.edges.size(), 0);
    for (std::size_t c = 0; c < classes.size(); ++c) {
        std::vector<int> ends(g.n, 0), loops(g.n, 0);
        for (int e : classes[c].edges) {
            if (e < 0 || e >= static_cast<int>(g.edges.size())) {
                d.fail("class " + std::to_string(c) + " references a missing edge");
                return d;
            }
            ++uses[e];
            const Edge& ed = g.edges[e];
            if (ed.isLoop())
                ++loops[ed.u];
            else {
                ++ends[ed.u];
                ++ends[ed.v];
            }
        }
        for (int v = 0; v < g.n; ++v) {
            bool okv = classes[c].kind == ClassKind::PerfectMatching
                           ? ends[v] + loops[v] == 1
                           : (loops[v] == 1 && ends[v] == 0) || (loops[v] == 0 && ends[v] == 2);
            if (!okv) {
                d.fail("class " + std::to_string(c) + " is not a " +
                       (classes[c].kind == ClassKind::PerfectMatching ? "perfect matching" : "2-factor") +
                       " at vertex " + std::to_string(v));
                break;
            }
        }
    }
    for (std::size_t e = 0; e < uses.size(); ++e)
        if (uses[e] != 1) {
            d.fail("edge " + std::to_string(e) + " is used " + std::to_string(uses[e]) + " times");
            break;
        }
    return d;
}

std::vector<EdgeClass> colorClasses(const Multigraph& g)
{
    int maxColor = -1;
    for (const Edge& e : g.edges)
        maxColor = std::max(maxColor, e.color);
    std::vector<EdgeClass> out(maxColor + 1);
    for (int c = 0; c <= maxColor; ++c)
        out[c].kind = c < static_cast<int>(g.classKinds.size()) ? g.classKinds[c] : ClassKind::PerfectMatching;
    for (std::size_t t = 0; t < g.edges.size(); ++t) {
        if (g.edges[t].color < 0)
            throw DomainError("edge without a color class");
        out[g.edges[t].color].edges.push_back(static_cast<int>(t));
    }
    return out;
}

namespace {

// Repeatedly extracts perfect matchings from a regular bipartite multigraph by augmenting paths.
// Edges are (left, right, id). Returns false if some round has no perfect matching.
bool bipartiteRounds(int nLeft, const std::vector<std::tuple<int, int, int>>& edges, int rounds,
                     std::vector<std::vector<int>>& out)
{
    std::vector<char> removed(edges.size(), 0);
    std::vector<std::vector<int>> adj(nLeft);
    for (std::size_t t = 0; t < edges.size(); ++t)
        adj[std::get<0>(edges[t])].push_back(static_cast<int>(t));
    for (int r = 0; r < rounds; ++r) {
        std::vector<int> matchRight(nLeft, -1); // right vertex -> edge index
        std::vector<int> matchLeft(nLeft, -1);
        for (int s = 0; s < nLeft; ++s) {
            std::vector<char> visited(nLeft, 0);
            std::function<bool(int)> augment = [&](int v) -> bool {
                for (int t : adj[v]) {
                    if (removed[t])
                        continue;
                    int w = std::get<1>(edges[t]);
                    if (visited[w])
                        continue;
                    visited[w] = 1;
                    if (matchRight[w] < 0 || augment(std::get<0>(edges[matchRight[w]]))) {
                        matchRight[w] = t;
                        matchLeft[v] = t;
                        return true;
                    }
                }
                return false;
            };
            if (!augment(s))
                return false;
        }
        std::vector<int> ids;
        for (int w = 0; w < nLeft; ++w) {
            removed[matchRight[w]] = 1;
            ids.push_back(std::get<2>(edges[matchRight[w]]));
        }
        std::sort(ids.begin(), ids.end());
        out.push_back(std::move(ids));
    }
    return true;
}

bool bipartiteMethod(const Multigraph& g, int k, Decomposition& res)
{
    std::vector<int> side(g.n, -1);
    auto inc = incidence(g);
    for (int s = 0; s < g.n; ++s) {
        if (side[s] >= 0)
            continue;
        side[s] = 0;
        std::vector<int> st{s};
        while (!st.empty()) {
            int v = st.back();
            st.pop_back();
            for (int e : inc[v]) {
                int u = otherEnd(g.edges[e], v);
                if (side[u] < 0) {
                    side[u] = 1 - side[v];
                    st.push_back(u);
                }
            }
        }
    }
    std::vector<int> leftIdx(g.n, -1), rightIdx(g.n, -1);
    int nl = 0, nr = 0;
    for (int v = 0; v < g.n; ++v)
        (side[v] == 0 ? leftIdx[v] = nl++ : rightIdx[v] = nr++);
    if (nl != nr)
        return false;
    std::vector<std::tuple<int, int, int>> be;
    for (std::size_t t = 0; t < g.edges.size(); ++t) {
        int u = g.edges[t].u, v = g.edges[t].v;
        if (side[u] != 0)
            std::swap(u, v);
        be.emplace_back(leftIdx[u], rightIdx[v], static_cast<int>(t));
    }
    std::vector<std::vector<int>> rounds;
    if (!bipartiteRounds(nl, be, k, rounds))
        return false;
    for (auto& r : rounds)
        res.classes.push_back({ClassKind::PerfectMatching, std::move(r)});
    res.status = SearchStatus::Found;
    res.method = "bipartite matchings";
    return true;
}

bool petersenMethod(const Multigraph& g, int k, Decomposition& res)
{
    auto inc = incidence(g);
    std::vector<char> used(g.edges.size(), 0);
    std::vector<std::pair<int, int>> oriented(g.edges.size());
    std::vector<std::size_t> ptr(g.n, 0);
    for (int s = 0; s < g.n; ++s) {
        // Hierholzer: walk unused edges; every vertex has even degree with loops counted twice.
        std::vector<int> st{s};
        while (!st.empty()) {
            int v = st.back();
            while (ptr[v] < inc[v].size() && used[inc[v][ptr[v]]])
                ++ptr[v];
            if (ptr[v] == inc[v].size()) {
                st.pop_back();
                continue;
            }
            int e = inc[v][ptr[v]];
            used[e] = 1;
            int u = otherEnd(g.edges[e], v);
            oriented[e] = {v, u};
            st.push_back(u);
        }
    }
    std::vector<std::tuple<int, int, int>> be;
    for (std::size_t t = 0; t < g.edges.size(); ++t)
        be.emplace_back(oriented[t].first, oriented[t].second, static_cast<int>(t));
    std::vector<std::vector<int>> rounds;
    if (!bipartiteRounds(g.n, be, k / 2, rounds))
        return false;
    for (auto& r : rounds)
        res.classes.push_back({ClassKind::TwoFactor, std::move(r)});
    res.status = SearchStatus::Found;
    res.method = "Euler orientation and bipartite matchings";
    return true;
}

class ExactSearch {
public:
    ExactSearch(const Multigraph& g, long long budget)
        : g_(g), inc_(incidence(g)), used_(g.edges.size(), 0), inClass_(g.edges.size(), 0), budget_(budget)
    {
    }

    bool run(int r) { return solve(r); }
    bool exhausted() const { return exhausted_; }
    long long nodes() const { return nodes_; }
    std::vector<EdgeClass> classes;

private:
    const Multigraph& g_;
    std::vector<std::vector<int>> inc_;
    std::vector<char> used_;
    std::vector<char> inClass_;
    long long budget_;
    long long nodes_ = 0;
    bool exhausted_ = false;

    bool tick()
    {
        if (++nodes_ > budget_)
            exhausted_ = true;
        return !exhausted_;
    }

    bool feasible(int r) const
    {
        std::vector<int> a(g_.n, 0), l(g_.n, 0);
        for (std::size_t t = 0; t < g_.edges.size(); ++t) {
            if (used_[t])
                continue;
            const Edge& e = g_.edges[t];
            if (e.isLoop())
                ++l[e.u];
            else {
                ++a[e.u];
                ++a[e.v];
            }
        }
        for (int v = 0; v < g_.n; ++v)
            if (a[v] + l[v] > r || a[v] + 2 * l[v] < r)
                return false;
        return true;
    }

    bool free(int e) const { return !used_[e] && !inClass_[e]; }

    // Candidate edges at v, lowest free index per neighbor so parallel copies are not revisited.
    std::vector<int> candidates(int v) const
    {
        std::vector<int> out;
        std::vector<int> seenNeighbor;
        for (int e : inc_[v]) {
            if (!free(e))
                continue;
            int u = otherEnd(g_.edges[e], v);
            if (std::find(seenNeighbor.begin(), seenNeighbor.end(), u) != seenNeighbor.end())
                continue;
            seenNeighbor.push_back(u);
            out.push_back(e);
        }
        return out;
    }

    bool commit(ClassKind kind, int r)
    {
        EdgeClass c{kind, {}};
        for (std::size_t t = 0; t < inClass_.size(); ++t)
            if (inClass_[t]) {
                c.edges.push_back(static_cast<int>(t));
            }
        for (int e : c.edges) {
            inClass_[e] = 0;
            used_[e] = 1;
        }
        classes.push_back(c);
        bool ok = solve(r);
        if (!ok) {
            classes.pop_back();
            for (int e : c.edges) {
                used_[e] = 0;
                inClass_[e] = 1;
            }
        }
        return ok;
    }

    bool matching(std::vector<char>& covered, int r)
    {
        if (!tick())
            return false;
        int v = 0;
        while (v < g_.n && covered[v])
            ++v;
        if (v == g_.n)
            return commit(ClassKind::PerfectMatching, r - 1);
        for (int e : candidates(v)) {
            int u = otherEnd(g_.edges[e], v);
            if (covered[u])
                continue;
            inClass_[e] = 1;
            covered[v] = covered[u] = 1;
            if (matching(covered, r))
                return true;
            covered[v] = covered[u] = 0;
            inClass_[e] = 0;
            if (exhausted_)
                return false;
        }
        return false;
    }

    // slots[v]: edge ends used in the class; 3 marks a vertex closed by a loop.
    bool twoFactor(std::vector<int>& slots, int r)
    {
        if (!tick())
            return false;
        int v = 0;
        while (v < g_.n && slots[v] >= 2)
            ++v;
        if (v == g_.n)
            return commit(ClassKind::TwoFactor, r - 2);
        for (int e : candidates(v)) {
            const Edge& ed = g_.edges[e];
            if (ed.isLoop()) {
                if (slots[v] != 0)
                    continue;
                inClass_[e] = 1;
                slots[v] = 3;
                if (twoFactor(slots, r))
                    return true;
                slots[v] = 0;
                inClass_[e] = 0;
            } else {
                int u = otherEnd(ed, v);
                if (slots[u] >= 2)
                    continue;
                inClass_[e] = 1;
                ++slots[v];
                ++slots[u];
                if (twoFactor(slots, r))
                    return true;
                --slots[v];
                --slots[u];
                inClass_[e] = 0;
            }
            if (exhausted_)
                return false;
        }
        return false;
    }

    bool solve(int r)
    {
        if (!tick())
            return false;
        int e0 = -1;
        for (std::size_t t = 0; t < used_.size(); ++t)
            if (!used_[t]) {
                e0 = static_cast<int>(t);
                break;
            }
        if (e0 < 0)
            return r == 0;
        if (r <= 0 || !feasible(r))
            return false;
        // The class containing the lowest unused edge is chosen next; this fixes the class order.
        const Edge& ed = g_.edges[e0];
        if (r >= 1) {
            std::vector<char> covered(g_.n, 0);
            covered[ed.u] = covered[ed.v] = 1;
            inClass_[e0] = 1;
            if (matching(covered, r))
                return true;
            inClass_[e0] = 0;
            if (exhausted_)
                return false;
        }
        if (r >= 2) {
            std::vector<int> slots(g_.n, 0);
            if (ed.isLoop())
                slots[ed.u] = 3;
            else {
                slots[ed.u] = 1;
                slots[ed.v] = 1;
            }
            inClass_[e0] = 1;
            if (twoFactor(slots, r))
                return true;
            inClass_[e0] = 0;
        }
        return false;
    }
};

// Every decomposition uses at vertex v loops in exactly t_v = a_v + 2 l_v - k of its matching
// classes. Removing m such matchings leaves an even remainder, which always splits into 2-factors,
// so searching over the matchings alone is complete.
class MatchingSearch {
public:
    MatchingSearch(const Multigraph& g, int m, std::vector<int> loopDemand, long long budget)
        : g_(g), inc_(incidence(g)), m_(m), demand_(std::move(loopDemand)), used_(g.edges.size(), 0),
          budget_(budget)
    {
    }

    bool run()
    {
        std::vector<char> covered(g_.n, 0);
        return matching(0, covered);
    }
    bool exhausted() const { return exhausted_; }
    long long nodes() const { return nodes_; }
    const std::vector<char>& used() const { return used_; }
    std::vector<std::vector<int>> matchings;

private:
    const Multigraph& g_;
    std::vector<std::vector<int>> inc_;
    int m_;
    std::vector<int> demand_;
    std::vector<char> used_;
    long long budget_;
    long long nodes_ = 0;
    bool exhausted_ = false;
    std::vector<int> current_;

    bool tick()
    {
        if (++nodes_ > budget_)
            exhausted_ = true;
        return !exhausted_;
    }

    // Matching j must close v with a loop when its remaining loop demand equals the matchings left.
    bool forced(int v, int j) const { return demand_[v] == m_ - j; }

    bool place(int j, std::vector<char>& covered, int e, int v, int u)
    {
        used_[e] = 1;
        covered[v] = covered[u] = 1;
        current_.push_back(e);
        bool looped = v == u;
        if (looped)
            --demand_[v];
        if (matching(j, covered))
            return true;
        if (looped)
            ++demand_[v];
        current_.pop_back();
        covered[v] = covered[u] = 0;
        used_[e] = 0;
        return false;
    }

    bool matching(int j, std::vector<char>& covered)
    {
        if (!tick())
            return false;
        if (j == m_)
            return true;
        int v = 0;
        while (v < g_.n && covered[v])
            ++v;
        if (v == g_.n) {
            matchings.push_back(current_);
            std::vector<int> saved;
            saved.swap(current_);
            std::vector<char> fresh(g_.n, 0);
            if (matching(j + 1, fresh))
                return true;
            current_.swap(saved);
            matchings.pop_back();
            return false;
        }
        std::vector<int> seenNeighbor;
        bool loopTried = false;
        for (int e : inc_[v]) {
            if (used_[e])
                continue;
            const Edge& ed = g_.edges[e];
            if (ed.isLoop()) {
                if (loopTried || demand_[v] == 0)
                    continue;
                loopTried = true;
                if (place(j, covered, e, v, v))
                    return true;
            } else {
                int u = otherEnd(ed, v);
                if (covered[u] || forced(v, j) || forced(u, j))
                    continue;
                if (std::find(seenNeighbor.begin(), seenNeighbor.end(), u) != seenNeighbor.end())
                    continue;
                seenNeighbor.push_back(u);
                if (place(j, covered, e, v, u))
                    return true;
            }
            if (exhausted_)
                return false;
        }
        return false;
    }
};

// Tutte barrier with at most one vertex. A loop covers its vertex in a matching class, so only
// loop-free odd components count. A hit proves that no perfect matching exists.
bool smallTutteBarrier(const Multigraph& g)
{
    std::vector<char> hasLoop(g.n, 0);
    for (const Edge& e : g.edges)
        if (e.isLoop())
            hasLoop[e.u] = 1;
    for (int removed = -1; removed < g.n; ++removed) {
        UnionFind uf(g.n);
        for (const Edge& e : g.edges)
            if (e.u != removed && e.v != removed)
                uf.unite(e.u, e.v);
        std::vector<int> size(g.n, 0);
        std::vector<char> loopy(g.n, 0);
        for (int v = 0; v < g.n; ++v)
            if (v != removed) {
                ++size[uf.find(v)];
                loopy[uf.find(v)] |= hasLoop[v];
            }
        int odd = 0;
        for (int v = 0; v < g.n; ++v)
            odd += size[v] % 2 == 1 && !loopy[v];
        if (odd > (removed < 0 ? 0 : 1))
            return true;
    }
    return false;
}

bool matchingsThenPetersen(const Multigraph& g, int k, long long budget, Decomposition& res)
{
    auto counts = loopAndEndCounts(g);
    std::vector<int> demand(g.n);
    int m0 = k % 2;
    for (int v = 0; v < g.n; ++v) {
        demand[v] = counts[v].first + 2 * counts[v].second - k;
        m0 = std::max(m0, demand[v]);
    }
    if ((m0 - k) % 2 != 0)
        ++m0;
    bool exhausted = false;
    if (m0 > 0 && g.n > 0 && smallTutteBarrier(g)) {
        res.status = SearchStatus::None;
        res.method = "perfect matchings, then Euler orientation";
        return false;
    }
    for (int m = m0; m <= k; m += 2) {
        MatchingSearch search(g, m, demand, budget - res.nodes);
        bool found = search.run();
        res.nodes += search.nodes();
        if (search.exhausted()) {
            exhausted = true;
            break;
        }
        if (!found)
            continue;
        Multigraph rest;
        rest.n = g.n;
        std::vector<int> origin;
        for (std::size_t t = 0; t < g.edges.size(); ++t)
            if (!search.used()[t]) {
                rest.add(g.edges[t].u, g.edges[t].v);
                origin.push_back(static_cast<int>(t));
            }
        Decomposition tail;
        if (!petersenMethod(rest, k - m, tail))
            throw std::logic_error("even remainder did not split into 2-factors");
        for (auto& mt : search.matchings)
            res.classes.push_back({ClassKind::PerfectMatching, mt});
        for (auto& cl : tail.classes) {
            for (int& e : cl.edges)
                e = origin[e];
            res.classes.push_back(std::move(cl));
        }
        res.status = SearchStatus::Found;
        res.method = m == 0 ? tail.method : "perfect matchings, then Euler orientation";
        return true;
    }
    res.status = exhausted ? SearchStatus::Unknown : SearchStatus::None;
    res.method = "perfect matchings, then Euler orientation";
    return false;
}

} // namespace

Decomposition exactDecomposition(const Multigraph& g, int k, long long nodeBudget)
{
    Decomposition res;
    res.method = "exact backtracking";
    if (g.n > kExactSearchBound) {
        res.status = SearchStatus::Unknown;
        return res;
    }
    ExactSearch search(g, nodeBudget);
    bool found = search.run(k);
    res.nodes = search.nodes();
    if (found) {
        res.status = SearchStatus::Found;
        res.classes = search.classes;
    } else {
        res.status = search.exhausted() ? SearchStatus::Unknown : SearchStatus::None;
    }
    return res;
}

Decomposition decomposeRegular(const Multigraph& g, int k, long long nodeBudget)
{
    if (k < 1)
        throw DomainError("regularity degree must be positive");
    if (!admitsRegularity(g, k))
        throw DomainError("graph is not " + std::to_string(k) + "-regular under the loop convention");
    Decomposition res;
    auto counts = loopAndEndCounts(g);
    bool loopless = std::all_of(counts.begin(), counts.end(), [](auto c) { return c.second == 0; });
    if (loopless && isBipartite(g) && bipartiteMethod(g, k, res))
        return res;
    res = Decomposition{};
    matchingsThenPetersen(g, k, nodeBudget, res);
    return res;
}

SearchStatus isSchreier(const Multigraph& g, int k, long long nodeBudget)
{
    if (!isConnected(g))
        throw DomainError("isSchreier expects a connected multigraph");
    if (!admitsRegularity(g, k))
        return SearchStatus::None;
    return decomposeRegular(g, k, nodeBudget).status;
}

Multigraph counterexampleGraph(int k)
{
    if (k < 3 || k % 2 == 0)
        throw DomainError("counterexampleGraph needs an odd k >= 3");
    Multigraph g;
    int next = 1; // vertex 0 is the root
    for (int i = 0; i < k; ++i) {
        int x = next++;
        g.add(0, x);
        std::vector<int> leaves;
        for (int a = 0; a < k - 1; ++a) {
            int y = next++;
            g.add(x, y);
            for (int b = 0; b < k - 1; ++b) {
                int z = next++;
                g.add(y, z);
                leaves.push_back(z);
            }
        }
        const int L = static_cast<int>(leaves.size());
        for (int t = 0; t < L; ++t)
            for (int off = 1; off <= (k - 1) / 2; ++off)
                g.add(leaves[t], leaves[(t + off) % L]);
    }
    g.n = next;
    return g;
}

Multigraph randomRegularGraph(int n, int k, std::uint64_t seed)
{
    if (n < 1 || k < 0 || (static_cast<long long>(n) * k) % 2 != 0 || k >= n)
        throw DomainError("no simple k-regular graph with these parameters");
    std::mt19937_64 rng(seed);
    for (int attempt = 0; attempt < 10000; ++attempt) {
        std::vector<int> points;
        for (int v = 0; v < n; ++v)
            for (int t = 0; t < k; ++t)
                points.push_back(v);
        for (std::size_t t = points.size(); t > 1; --t)
            std::swap(points[t - 1], points[uniformBelow(rng, t)]);
        Multigraph g;
        g.n = n;
        bool simple = true;
        std::set<std::pair<int, int>> seen;
        for (std::size_t t = 0; t + 1 < points.size(); t += 2) {
            int u = std::min(points[t], points[t + 1]), v = std::max(points[t], points[t + 1]);
            if (u == v || !seen.insert({u, v}).second) {
                simple = false;
                break;
            }
            g.add(u, v);
        }
        if (simple)
            return g;
    }
    throw DomainError("pairing model did not produce a simple graph");
}

std::string formatMultigraph(const Multigraph& g)
{
    std::map<std::tuple<int, int, int>, int> mult;
    for (const Edge& e : g.edges)
        ++mult[{std::min(e.u, e.v), std::max(e.u, e.v), e.color}];
    std::ostringstream os;
    os << g.n << '\n';
    for (const auto& [key, m] : mult) {
        auto [u, v, c] = key;
        os << u + 1 << ' ' << v + 1 << ' ' << m;
        if (c >= 0)
            os << " c" << c;
        os << '\n';
    }
    return os.str();
}

Multigraph parseMultigraph(const std::string& text)
{
    std::istringstream is(text);
    std::string line;
    Multigraph g;
    bool haveN = false;
    while (std::getline(is, line)) {
        std::size_t hash = line.find('#');
        if (hash != std::string::npos)
            line.erase(hash);
        std::istringstream ls(line);
        std::vector<std::string> tok;
        std::string t;
        while (ls >> t)
            tok.push_back(t);
        if (tok.empty())
            continue;
        try {
            if (!haveN) {
                if (tok.size() != 1)
                    throw ParseError("first line must hold the vertex count");
                g.n = std::stoi(tok[0]);
                if (g.n < 0)
                    throw ParseError("negative vertex count");
                haveN = true;
                continue;
            }
            if (tok.size() < 2 || tok.size() > 4)
                throw ParseError("edge line must be `u v [multiplicity] [c<color>]`");
            int u = std::stoi(tok[0]) - 1, v = std::stoi(tok[1]) - 1;
            int m = 1, c = -1;
            for (std::size_t s = 2; s < tok.size(); ++s) {
                if (tok[s][0] == 'c')
                    c = std::stoi(tok[s].substr(1));
                else
                    m = std::stoi(tok[s]);
            }
            if (u < 0 || v < 0 || u >= g.n || v >= g.n || m < 1)
                throw ParseError("edge endpoint or multiplicity out of range: " + line);
            for (int r = 0; r < m; ++r)
                g.add(u, v, c);
        } catch (const std::logic_error&) {
            throw ParseError("bad multigraph line: " + line);
        }
    }
    if (!haveN)
        throw ParseError("empty multigraph file");
    return g;
}

std::string toDot(const Multigraph& g, const std::vector<std::string>& vertexLabels)
{
    static const char* palette[] = {"black", "red", "blue", "darkgreen", "orange", "purple", "brown", "cyan"};
    std::ostringstream os;
    os << "graph G {\n";
    for (int v = 0; v < g.n; ++v) {
        os << "  " << v + 1;
        if (v < static_cast<int>(vertexLabels.size()))
            os << " [label=\"" << vertexLabels[v] << "\"]";
        os << ";\n";
    }
    for (const Edge& e : g.edges) {
        os << "  " << e.u + 1 << " -- " << e.v + 1;
        if (e.color >= 0) {
            os << " [color=" << palette[e.color % 8];
            if (e.color < static_cast<int>(g.classNames.size()))
                os << ", label=\"" << g.classNames[e.color] << "\"";
            os << "]";
        }
        os << ";\n";
    }
    os << "}\n";
    return os.str();
}

std::string statusName(SearchStatus s)
{
    switch (s) {
    case SearchStatus::Found:
        return "yes";
    case SearchStatus::None:
        return "no";
    default:
        return "unknown";
    }
}

} // namespace arboreal
