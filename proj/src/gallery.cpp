#include "arboreal/gallery.hpp"
#include "arboreal/error.hpp"
#include "arboreal/quotient.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

namespace arboreal {

PermRep mSubgroupRep(const Params& p)
{
    validateParams(p);
    long long n = 1;
    for (int i = 0; i <= p.d; ++i) {
        n *= p.k;
        if (n > 1'000'000)
            throw DomainError("k^(d+1) exceeds the desk-scale cap of 10^6 points");
    }
    PermRep rep;
    rep.params = p;
    rep.n = static_cast<int>(n);
    rep.root = 0;
    rep.betas.assign(p.colors(), Perm(rep.n));
    long long place = 1;
    for (int i = 0; i <= p.d; ++i) {
        for (int x = 0; x < rep.n; ++x) {
            int digit = static_cast<int>((x / place) % p.k);
            int moved = digit + 1 == p.k ? x - static_cast<int>(place) * digit : x + static_cast<int>(place);
            rep.betas[i][x] = moved;
        }
        place *= p.k;
    }
    return rep;
}

namespace {

Perm composePerm(const Perm& s, const Perm& w)
{
    Perm out(w.size());
    for (std::size_t x = 0; x < w.size(); ++x)
        out[x] = s[w[x]];
    return out;
}

bool isBijection(const Perm& p)
{
    std::vector<char> hit(p.size(), 0);
    for (int x : p) {
        if (x < 0 || x >= static_cast<int>(p.size()) || hit[x])
            return false;
        hit[x] = 1;
    }
    return true;
}

// Closure of {identity} under left multiplication by the chosen generators, as element ids.
std::vector<int> subgroupIds(const std::vector<int>& chosen, const std::vector<std::vector<int>>& leftMul)
{
    std::vector<char> seen(leftMul.empty() ? 0 : leftMul[0].size(), 0);
    std::vector<int> out{0};
    seen[0] = 1;
    for (std::size_t t = 0; t < out.size(); ++t)
        for (int s : chosen) {
            int u = leftMul[s][out[t]];
            if (!seen[u]) {
                seen[u] = 1;
                out.push_back(u);
            }
        }
    return out;
}

} // namespace

std::vector<Perm> symmetricGroupGenerators(int n)
{
    if (n < 2)
        throw DomainError("S_n needs n >= 2");
    std::vector<Perm> gens;
    for (int t = 0; t + 1 < n; ++t) {
        Perm p(n);
        std::iota(p.begin(), p.end(), 0);
        std::swap(p[t], p[t + 1]);
        gens.push_back(p);
    }
    return gens;
}

std::vector<Perm> parseGenerators(const std::string& text)
{
    std::istringstream is(text);
    std::string line;
    std::vector<std::string> lines;
    while (std::getline(is, line)) {
        std::size_t hash = line.find('#');
        if (hash != std::string::npos)
            line.erase(hash);
        if (line.find_first_not_of(" \t\r") != std::string::npos)
            lines.push_back(line);
    }
    if (lines.empty())
        throw ParseError("generator file is empty");
    int m = 0;
    std::istringstream head(lines[0]);
    if (!(head >> m) || m < 1)
        throw ParseError("generator file must start with the degree of the permutations");
    std::vector<Perm> gens;
    for (std::size_t t = 1; t < lines.size(); ++t)
        gens.push_back(parsePerm(lines[t], m));
    return gens;
}

CoxeterResult coxeterComplex(const std::vector<Perm>& gens)
{
    if (gens.size() < 2)
        throw DomainError("a Coxeter system here needs at least two generators");
    const std::size_t m = gens[0].size();
    Perm id(m);
    std::iota(id.begin(), id.end(), 0);
    for (const Perm& s : gens) {
        if (s.size() != m || !isBijection(s))
            throw DomainError("generators must be permutations of one common degree");
        if (s == id || composePerm(s, s) != id)
            throw DomainError("every generator must be an involution different from the identity");
    }
    CoxeterResult res;
    std::map<Perm, int> index;
    res.elements.push_back(id);
    index[id] = 0;
    const int S = static_cast<int>(gens.size());
    std::vector<std::vector<int>> leftMul(S);
    for (std::size_t t = 0; t < res.elements.size(); ++t)
        for (int s = 0; s < S; ++s) {
            Perm w = composePerm(gens[s], res.elements[t]);
            auto it = index.find(w);
            if (it == index.end()) {
                if (static_cast<int>(res.elements.size()) >= kCoxeterOrderCap)
                    throw DomainError("group order exceeds the cap of " + std::to_string(kCoxeterOrderCap));
                it = index.emplace(w, static_cast<int>(res.elements.size())).first;
                res.elements.push_back(std::move(w));
            }
            leftMul[s].push_back(it->second);
        }
    res.order = static_cast<int>(res.elements.size());

    Params p{S - 1, 2};
    res.rep.params = p;
    res.rep.n = res.order;
    res.rep.root = 0;
    res.rep.betas = leftMul;
    requireValid(res.rep);
    res.fromKernel = buildQuotient(res.rep).complex;

    // Vertex of color i under chamber w: the coset W_{S minus s_i} w, keyed by its least element id.
    std::vector<std::vector<int>> cosetKey(S, std::vector<int>(res.order));
    std::vector<int> colorOf;
    std::map<std::pair<int, int>, int> vertexOf;
    for (int i = 0; i < S; ++i) {
        std::vector<int> others;
        for (int j = 0; j < S; ++j)
            if (j != i)
                others.push_back(j);
        std::vector<int> sub = subgroupIds(others, leftMul);
        std::vector<Perm> subPerms;
        for (int u : sub)
            subPerms.push_back(res.elements[u]);
        for (int w = 0; w < res.order; ++w) {
            int key = res.order;
            for (const Perm& u : subPerms)
                key = std::min(key, index.at(composePerm(u, res.elements[w])));
            cosetKey[i][w] = key;
            if (!vertexOf.count({i, key})) {
                vertexOf[{i, key}] = static_cast<int>(colorOf.size());
                colorOf.push_back(i);
            }
        }
    }
    SimplicialBuilder builder(p, colorOf);
    for (int w = 0; w < res.order; ++w) {
        std::vector<int> verts;
        for (int i = 0; i < S; ++i)
            verts.push_back(vertexOf.at({i, cosetKey[i][w]}));
        builder.addTop(verts);
    }
    res.direct = builder.build(0);
    res.simplicial = isSimplicialComplex(res.fromKernel) && isSimplicialComplex(res.direct);
    res.isomorphic = isomorphic(res.fromKernel, res.direct);
    return res;
}

bool isPrime(int q)
{
    if (q < 2)
        return false;
    for (int t = 2; t * t <= q; ++t)
        if (q % t == 0)
            return false;
    return true;
}

FlagComplex flagComplex(int dim, int q)
{
    if (dim < 3)
        throw DomainError("flag complexes need an ambient dimension of at least 3");
    if (!isPrime(q))
        throw DomainError("only prime field sizes are supported");
    long long size = 1;
    for (int t = 0; t < dim; ++t) {
        size *= q;
        if (size > kFlagVectorCap)
            throw DomainError("q^dim exceeds the cap of " + std::to_string(kFlagVectorCap) + " vectors");
    }
    const int N = static_cast<int>(size);
    std::vector<int> place(dim, 1);
    for (int t = 1; t < dim; ++t)
        place[t] = place[t - 1] * q;
    auto combine = [&](int u, int c, int v) { // u + c v
        int out = 0;
        for (int t = 0; t < dim; ++t) {
            int a = (u / place[t]) % q, b = (v / place[t]) % q;
            out += ((a + c * b) % q) * place[t];
        }
        return out;
    };

    FlagComplex F;
    F.dim = dim;
    F.q = q;
    std::map<std::vector<int>, int> idOf;
    std::vector<std::set<int>> above;
    std::vector<int> level;
    auto intern = [&](std::vector<int> members, int sdim) {
        std::sort(members.begin(), members.end());
        members.erase(std::unique(members.begin(), members.end()), members.end());
        auto it = idOf.find(members);
        if (it != idOf.end())
            return it->second;
        if (static_cast<int>(F.subspaces.size()) >= kFlagSubspaceCap)
            throw DomainError("subspace count exceeds the cap of " + std::to_string(kFlagSubspaceCap));
        int id = static_cast<int>(F.subspaces.size());
        idOf.emplace(members, id);
        F.subspaces.push_back(std::move(members));
        F.subspaceDim.push_back(sdim);
        above.emplace_back();
        return id;
    };
    for (int v = 1; v < N; ++v) {
        std::vector<int> line;
        for (int c = 0; c < q; ++c)
            line.push_back(combine(0, c, v));
        level.push_back(intern(line, 1));
    }
    std::sort(level.begin(), level.end());
    level.erase(std::unique(level.begin(), level.end()), level.end());
    for (int r = 1; r + 1 < dim; ++r) {
        std::vector<int> nextLevel;
        for (int s : level) {
            const std::vector<int> base = F.subspaces[s];
            for (int v = 1; v < N; ++v) {
                if (std::binary_search(base.begin(), base.end(), v))
                    continue;
                std::vector<int> span;
                for (int u : base)
                    for (int c = 0; c < q; ++c)
                        span.push_back(combine(u, c, v));
                int t = intern(span, r + 1);
                above[s].insert(t);
                nextLevel.push_back(t);
            }
        }
        std::sort(nextLevel.begin(), nextLevel.end());
        nextLevel.erase(std::unique(nextLevel.begin(), nextLevel.end()), nextLevel.end());
        level = std::move(nextLevel);
    }

    std::vector<int> colors;
    for (int sdim : F.subspaceDim)
        colors.push_back(sdim - 1);
    Params p{dim - 2, q + 1};
    SimplicialBuilder builder(p, colors);
    std::vector<int> chain;
    long long flags = 0;
    auto extend = [&](auto&& self, int s) -> void {
        chain.push_back(s);
        if (F.subspaceDim[s] == dim - 1) {
            if (++flags > 200000)
                throw DomainError("flag count exceeds the cap of 200000");
            builder.addTop(chain);
        } else {
            for (int t : above[s])
                self(self, t);
        }
        chain.pop_back();
    };
    for (int s = 0; s < static_cast<int>(F.subspaces.size()); ++s)
        if (F.subspaceDim[s] == 1)
            extend(extend, s);
    F.complex = builder.build(0);
    return F;
}

} // namespace arboreal
