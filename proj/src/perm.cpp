#include "arboreal/perm.hpp"
#include "arboreal/rng.hpp"
#include "arboreal/unionfind.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>
#include <numeric>
#include <queue>
#include <sstream>

namespace arboreal {

PermRep trivialRep(const Params& p)
{
    PermRep r;
    r.params = p;
    r.n = 1;
    r.betas.assign(p.colors(), Perm{0});
    r.root = 0;
    return r;
}

RepDiagnostics validate(const PermRep& rep)
{
    validateParams(rep.params);
    if (rep.n < 1)
        throw DomainError("a permutation representation needs n >= 1");
    if (static_cast<int>(rep.betas.size()) != rep.params.colors())
        throw DomainError("expected " + std::to_string(rep.params.colors()) + " generators, got " +
                          std::to_string(rep.betas.size()));
    if (rep.root < 0 || rep.root >= rep.n)
        throw DomainError("root point out of range");
    for (std::size_t i = 0; i < rep.betas.size(); ++i) {
        const Perm& b = rep.betas[i];
        if (static_cast<int>(b.size()) != rep.n)
            throw DomainError("beta_" + std::to_string(i) + " has wrong length");
        std::vector<char> seen(rep.n, 0);
        for (int x : b) {
            if (x < 0 || x >= rep.n || seen[x])
                throw DomainError("beta_" + std::to_string(i) + " is not a bijection of [n]");
            seen[x] = 1;
        }
    }

    RepDiagnostics out;
    for (std::size_t i = 0; i < rep.betas.size(); ++i) {
        bool divides = true;
        for (const auto& c : cycles(rep.betas[i]))
            if (rep.params.k % static_cast<int>(c.size()) != 0)
                divides = false;
        out.orderDivides.push_back(divides);
        if (!divides)
            out.diag.fail("beta_" + std::to_string(i) + " has a cycle whose length does not divide k");
    }
    OrbitPartition all = orbits(rep, 0);
    out.orbitCount = all.count();
    out.transitive = out.orbitCount == 1;
    if (!out.transitive)
        out.diag.fail("action is intransitive (" + std::to_string(out.orbitCount) + " orbits)");
    return out;
}

void requireValid(const PermRep& rep)
{
    RepDiagnostics d = validate(rep);
    if (!d.ok())
        throw DomainError("invalid permutation representation: " + d.diag.summary());
}

int applyPower(const PermRep& rep, int i, long long exp, int point)
{
    const Perm& b = rep.betas.at(i);
    long long e = normalizeExp(exp, rep.params.k);
    for (long long t = 0; t < e; ++t)
        point = b[point];
    return point;
}

int evaluate(const Word& w, int point, const PermRep& rep)
{
    if (point < 0 || point >= rep.n)
        throw DomainError("point " + std::to_string(point + 1) + " out of range");
    for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it) {
        if (it->index < 0 || it->index > rep.params.d)
            throw DomainError("generator index out of range in word");
        point = applyPower(rep, it->index, it->exp, point);
    }
    return point;
}

bool stabilizerContains(const Word& w, const PermRep& rep) { return evaluate(w, rep.root, rep) == rep.root; }

OrbitPartition orbits(const PermRep& rep, ColorMask J)
{
    UnionFind uf(rep.n);
    for (int j = 0; j <= rep.params.d; ++j) {
        if (hasColor(J, j))
            continue;
        for (int x = 0; x < rep.n; ++x)
            uf.unite(x, rep.betas[j][x]);
    }
    OrbitPartition out;
    out.colorSet = J;
    out.classIds.assign(rep.n, -1);
    std::vector<int> idOfRoot(rep.n, -1);
    for (int x = 0; x < rep.n; ++x) {
        int r = uf.find(x);
        if (idOfRoot[r] < 0) {
            idOfRoot[r] = out.count();
            out.reps.push_back(x);
        }
        out.classIds[x] = idOfRoot[r];
    }
    return out;
}

std::vector<std::vector<int>> cycles(const Perm& perm)
{
    std::vector<std::vector<int>> out;
    std::vector<char> seen(perm.size(), 0);
    for (std::size_t x = 0; x < perm.size(); ++x) {
        if (seen[x])
            continue;
        std::vector<int> c;
        for (int y = static_cast<int>(x); !seen[y]; y = perm[y]) {
            seen[y] = 1;
            c.push_back(y);
        }
        out.push_back(std::move(c));
    }
    return out;
}

std::uint64_t countOrderDividing(int n, int k)
{
    if (n < 0 || k < 1)
        throw DomainError("countOrderDividing needs n >= 0 and k >= 1");
    using u128 = unsigned __int128;
    const u128 cap = std::numeric_limits<std::uint64_t>::max();
    std::vector<u128> a(n + 1, 0);
    a[0] = 1;
    for (int m = 1; m <= n; ++m) {
        u128 total = 0;
        for (int len = 1; len <= std::min(m, k); ++len) {
            if (k % len != 0)
                continue;
            // C(m-1, len-1) * (len-1)! = (m-1)! / (m-len)!
            u128 ways = 1;
            for (int t = m - len + 1; t <= m - 1; ++t) {
                ways *= static_cast<u128>(t);
                if (ways > cap)
                    throw DomainError("permutation count overflows 64 bits");
            }
            u128 term = ways * a[m - len];
            if (a[m - len] != 0 && term / a[m - len] != ways)
                throw DomainError("permutation count overflows 64 bits");
            total += term;
            if (total > cap)
                throw DomainError("permutation count overflows 64 bits");
        }
        a[m] = total;
    }
    return static_cast<std::uint64_t>(a[n]);
}

namespace {

// log(a(m)/m!) for m = 0..n. Then the cycle through the least remaining point has
// length len with probability exp(logb[m-len] - logb[m]) / m.
std::vector<double> logScaledCounts(int n, const std::vector<int>& lens)
{
    std::vector<double> logb(n + 1, -std::numeric_limits<double>::infinity());
    logb[0] = 0.0;
    for (int m = 1; m <= n; ++m) {
        double best = -std::numeric_limits<double>::infinity();
        for (int len : lens)
            if (len <= m)
                best = std::max(best, logb[m - len]);
        if (!std::isfinite(best))
            continue;
        double s = 0.0;
        for (int len : lens)
            if (len <= m && std::isfinite(logb[m - len]))
                s += std::exp(logb[m - len] - best);
        logb[m] = best + std::log(s) - std::log(static_cast<double>(m));
    }
    return logb;
}

} // namespace

Perm sampleOrderDividing(int n, int k, std::mt19937_64& rng)
{
    if (n < 0 || k < 1)
        throw DomainError("sampleOrderDividing needs n >= 0 and k >= 1");
    std::vector<int> lens;
    for (int len = 1; len <= k; ++len)
        if (k % len == 0)
            lens.push_back(len);
    std::vector<double> logb = logScaledCounts(n, lens);

    Perm perm(n, -1);
    std::vector<int> remaining(n);
    std::iota(remaining.begin(), remaining.end(), 0);
    while (!remaining.empty()) {
        int m = static_cast<int>(remaining.size());
        double u = uniformUnit(rng);
        double acc = 0.0;
        int chosen = 1;
        for (int len : lens) {
            if (len > m || !std::isfinite(logb[m - len]))
                continue;
            chosen = len;
            acc += std::exp(logb[m - len] - logb[m]) / m;
            if (u < acc)
                break;
        }
        // remaining[0] is the least point; pick chosen-1 companions and a random cyclic order.
        std::vector<int> cyc{remaining[0]};
        std::vector<int> rest(remaining.begin() + 1, remaining.end());
        for (int t = 0; t < chosen - 1; ++t) {
            std::size_t j = t + uniformBelow(rng, rest.size() - t);
            std::swap(rest[t], rest[j]);
            cyc.push_back(rest[t]);
        }
        for (std::size_t t = 0; t < cyc.size(); ++t)
            perm[cyc[t]] = cyc[(t + 1) % cyc.size()];
        std::sort(rest.begin() + (chosen - 1), rest.end());
        remaining.assign(rest.begin() + (chosen - 1), rest.end());
    }
    return perm;
}

PermRep randomTuple(const Params& p, int n, std::mt19937_64& rng)
{
    validateParams(p);
    if (n < 1)
        throw DomainError("random representation needs n >= 1");
    PermRep r;
    r.params = p;
    r.n = n;
    r.root = 0;
    for (int i = 0; i <= p.d; ++i)
        r.betas.push_back(sampleOrderDividing(n, p.k, rng));
    return r;
}

std::optional<PermRep> randomRep(const Params& p, int n, std::uint64_t seed)
{
    std::mt19937_64 rng(seed);
    PermRep r = randomTuple(p, n, rng);
    if (orbits(r, 0).count() != 1)
        return std::nullopt;
    return r;
}

PermRep randomTransitiveRep(const Params& p, int n, std::uint64_t seed, int maxAttempts, int* attemptsUsed)
{
    std::mt19937_64 rng(seed);
    for (int attempt = 1; attempt <= maxAttempts; ++attempt) {
        PermRep r = randomTuple(p, n, rng);
        if (orbits(r, 0).count() == 1) {
            if (attemptsUsed)
                *attemptsUsed = attempt;
            return r;
        }
    }
    throw DomainError("no transitive draw in " + std::to_string(maxAttempts) + " attempts");
}

CommonCover intersectReps(const PermRep& r1, const PermRep& r2)
{
    if (!(r1.params == r2.params))
        throw DomainError("intersectReps needs equal (d,k)");
    const Params& p = r1.params;
    auto key = [&](int a, int b) { return static_cast<long long>(a) * r2.n + b; };
    std::vector<int> index(static_cast<std::size_t>(r1.n) * r2.n, -1);
    CommonCover out;
    std::vector<std::pair<int, int>> pts;
    index[key(r1.root, r2.root)] = 0;
    pts.push_back({r1.root, r2.root});
    for (std::size_t t = 0; t < pts.size(); ++t) {
        for (int i = 0; i <= p.d; ++i) {
            int a = r1.betas[i][pts[t].first];
            int b = r2.betas[i][pts[t].second];
            if (index[key(a, b)] < 0) {
                index[key(a, b)] = static_cast<int>(pts.size());
                pts.push_back({a, b});
            }
        }
    }
    out.rep.params = p;
    out.rep.n = static_cast<int>(pts.size());
    out.rep.root = 0;
    out.rep.betas.assign(p.colors(), Perm(pts.size()));
    for (std::size_t t = 0; t < pts.size(); ++t) {
        out.toFirst.push_back(pts[t].first);
        out.toSecond.push_back(pts[t].second);
        for (int i = 0; i <= p.d; ++i)
            out.rep.betas[i][t] = index[key(r1.betas[i][pts[t].first], r2.betas[i][pts[t].second])];
    }
    return out;
}

PermRep canonicalRelabel(const PermRep& rep)
{
    std::vector<int> label(rep.n, -1);
    std::vector<int> order{rep.root};
    label[rep.root] = 0;
    for (std::size_t t = 0; t < order.size(); ++t)
        for (int i = 0; i <= rep.params.d; ++i) {
            int y = rep.betas[i][order[t]];
            if (label[y] < 0) {
                label[y] = static_cast<int>(order.size());
                order.push_back(y);
            }
        }
    if (static_cast<int>(order.size()) != rep.n)
        throw DomainError("canonical relabeling needs a transitive action");
    PermRep out;
    out.params = rep.params;
    out.n = rep.n;
    out.root = 0;
    out.betas.assign(rep.params.colors(), Perm(rep.n));
    for (int i = 0; i <= rep.params.d; ++i)
        for (int x = 0; x < rep.n; ++x)
            out.betas[i][label[x]] = label[rep.betas[i][x]];
    return out;
}

bool equalUpToRelabel(const PermRep& a, const PermRep& b)
{
    if (!(a.params == b.params) || a.n != b.n)
        return false;
    return canonicalRelabel(a) == canonicalRelabel(b);
}

std::string formatRep(const PermRep& rep)
{
    std::ostringstream os;
    os << rep.params.d << ' ' << rep.params.k << ' ' << rep.n << ' ' << rep.root + 1 << '\n';
    for (const Perm& b : rep.betas) {
        for (int x = 0; x < rep.n; ++x)
            os << (x ? " " : "") << b[x] + 1;
        os << '\n';
    }
    return os.str();
}

Perm parsePerm(const std::string& line, int n)
{
    Perm perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    if (line.find('(') != std::string::npos) {
        std::string s = line;
        for (char& c : s)
            if (c == ',')
                c = ' ';
        std::size_t pos = 0;
        while ((pos = s.find('(', pos)) != std::string::npos) {
            std::size_t close = s.find(')', pos);
            if (close == std::string::npos)
                throw ParseError("unbalanced parenthesis in cycle notation");
            std::istringstream is(s.substr(pos + 1, close - pos - 1));
            std::vector<int> c;
            long long x;
            while (is >> x) {
                if (x < 1 || x > n)
                    throw ParseError("cycle entry " + std::to_string(x) + " outside [1," + std::to_string(n) + "]");
                c.push_back(static_cast<int>(x - 1));
            }
            if (!is.eof())
                throw ParseError("bad token in cycle notation");
            for (std::size_t t = 0; t < c.size(); ++t)
                perm[c[t]] = c[(t + 1) % c.size()];
            pos = close + 1;
        }
        return perm;
    }
    std::istringstream is(line);
    long long x;
    int t = 0;
    while (is >> x) {
        if (t >= n)
            throw ParseError("too many entries in one-line notation");
        if (x < 1 || x > n)
            throw ParseError("image " + std::to_string(x) + " outside [1," + std::to_string(n) + "]");
        perm[t++] = static_cast<int>(x - 1);
    }
    if (!is.eof())
        throw ParseError("bad token in one-line notation");
    if (t != n)
        throw ParseError("expected " + std::to_string(n) + " entries, got " + std::to_string(t));
    return perm;
}

PermRep parseRep(const std::string& text)
{
    std::istringstream is(text);
    std::string line;
    std::vector<std::string> lines;
    while (std::getline(is, line)) {
        std::size_t hash = line.find('#');
        if (hash != std::string::npos)
            line.erase(hash);
        if (line.find_first_not_of(" \t\r") == std::string::npos)
            continue;
        lines.push_back(line);
    }
    if (lines.empty())
        throw ParseError("empty permutation representation");
    std::istringstream head(lines[0]);
    PermRep rep;
    int root1 = 1;
    if (!(head >> rep.params.d >> rep.params.k >> rep.n))
        throw ParseError("header must be `d k n root`");
    if (!(head >> root1))
        root1 = 1;
    rep.root = root1 - 1;
    validateParams(rep.params);
    if (rep.n < 1)
        throw ParseError("n must be at least 1");
    if (static_cast<int>(lines.size()) != rep.params.colors() + 1)
        throw ParseError("expected " + std::to_string(rep.params.colors()) + " generator lines, got " +
                         std::to_string(lines.size() - 1));
    for (int i = 0; i <= rep.params.d; ++i)
        rep.betas.push_back(parsePerm(lines[i + 1], rep.n));
    validate(rep);
    return rep;
}

PermRep readRepFile(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw DomainError("cannot open " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return parseRep(ss.str());
}

} // namespace arboreal
