#include "arboreal/universal.hpp"
#include "arboreal/error.hpp"

#include <map>

namespace arboreal {

namespace {

Exemptions boundaryFlags(const MComplex& X)
{
    Exemptions ex(X.colors());
    for (int i = 0; i < X.colors(); ++i) {
        ex[i].assign(X.count(X.wall(i)), 0);
        for (int b = 0; b < X.count(X.wall(i)); ++b)
            ex[i][b] = static_cast<int>(X.ordering[i][b].size()) < X.params.k ? 1 : 0;
    }
    return ex;
}

void checkRadius(const Params& p, int radius)
{
    validateParams(p);
    if (radius < 0)
        throw DomainError("ball radius must be nonnegative");
    double cells = 1, layer = 1;
    for (int r = 1; r <= radius; ++r) {
        layer *= (r == 1 ? p.colors() : p.d) * double(p.k - 1);
        cells += layer;
    }
    if (cells > 2e5)
        throw DomainError("ball too large for desk-scale construction");
}

// Removes the longest leading block of letters whose index lies outside `keep`.
Word stripLeading(const Word& w, ColorMask keep)
{
    std::size_t t = 0;
    while (t < w.size() && !hasColor(keep, w.letters[t].index))
        ++t;
    Word out;
    out.letters.assign(w.letters.begin() + static_cast<long>(t), w.letters.end());
    return out;
}

} // namespace

Ball buildBall(const Params& p, int radius)
{
    checkRadius(p, radius);
    const int C = p.colors();
    std::vector<int> colorOf;
    std::vector<std::vector<int>> tops;
    std::vector<Word> words;
    std::vector<int> base;
    for (int c = 0; c < C; ++c) {
        colorOf.push_back(c);
        base.push_back(c);
    }
    tops.push_back(base);
    words.push_back(Word{});

    // (top cell, color of the vertex opposite the free wall)
    std::vector<std::pair<int, int>> frontier;
    for (int i = 0; i < C; ++i)
        frontier.push_back({0, i});
    std::map<std::pair<int, int>, std::vector<int>> children;
    for (int step = 1; step <= radius; ++step) {
        std::vector<std::pair<int, int>> next;
        for (auto [t, i] : frontier) {
            auto& kids = children[{t, i}];
            for (int l = 1; l < p.k; ++l) {
                int v = static_cast<int>(colorOf.size());
                colorOf.push_back(i);
                std::vector<int> cell = tops[t];
                cell[i] = v;
                int id = static_cast<int>(tops.size());
                tops.push_back(cell);
                Word w = words[t];
                w.letters.insert(w.letters.begin(), Letter{i, l});
                words.push_back(std::move(w));
                kids.push_back(id);
                for (int j = 0; j < C; ++j)
                    if (j != i)
                        next.push_back({id, j});
            }
        }
        frontier = std::move(next);
    }

    SimplicialBuilder builder(p, colorOf);
    for (const auto& t : tops)
        builder.addTop(t);
    Ball b;
    b.complex = builder.build(0);
    b.radius = radius;
    MComplex& X = b.complex;
    for (int t = 0; t < static_cast<int>(tops.size()); ++t)
        for (int i = 0; i < C; ++i) {
            int wall = X.facet({X.full(), t}, i);
            auto it = children.find({t, i});
            if (it != children.end()) {
                std::vector<int> cyc{t};
                cyc.insert(cyc.end(), it->second.begin(), it->second.end());
                X.ordering[i][wall] = cyc;
            }
        }
    X.finalize();
    b.cellWords = std::move(words);
    b.boundary = boundaryFlags(X);
    return b;
}

Ball ballFromCosets(const Params& p, int radius)
{
    checkRadius(p, radius);
    const int C = p.colors();
    Ball b;
    b.radius = radius;
    b.cellWords = enumerateReducedWords(p, radius);
    MComplex X(p);
    const ColorMask F = X.full();
    std::vector<std::map<Word, int>> index(X.cells.size());
    for (ColorMask m = 0; m <= F; ++m)
        for (const Word& g : b.cellWords) {
            Word key = stripLeading(g, m);
            if (!index[m].count(key)) {
                int id = static_cast<int>(index[m].size());
                index[m][key] = id;
            }
        }
    for (ColorMask m = 0; m <= F; ++m) {
        X.cells[m].resize(index[m].size());
        for (const auto& [key, id] : index[m])
            for (int c : maskColors(m)) {
                ColorMask fm = m & ~(ColorMask(1) << c);
                X.cells[m][id].facets.push_back(index[fm].at(stripLeading(key, fm)));
            }
    }
    for (int i = 0; i < C; ++i) {
        ColorMask w = X.wall(i);
        X.ordering[i].assign(X.count(w), {});
        for (const auto& [key, id] : index[w]) {
            std::vector<int> cyc{index[F].at(key)};
            for (int l = 1; l < p.k; ++l) {
                Word g = key;
                g.letters.insert(g.letters.begin(), Letter{i, l});
                auto it = index[F].find(g);
                if (it != index[F].end())
                    cyc.push_back(it->second);
            }
            X.ordering[i][id] = cyc;
        }
    }
    X.root = index[F].at(Word{});
    X.finalize();
    b.complex = std::move(X);
    b.boundary = boundaryFlags(b.complex);
    return b;
}

std::vector<int> dualDistances(const MComplex& X, int source)
{
    std::vector<int> dist(X.topCount(), -1);
    std::vector<int> queue{source};
    dist[source] = 0;
    for (std::size_t q = 0; q < queue.size(); ++q) {
        int a = queue[q];
        for (int i = 0; i < X.colors(); ++i) {
            int w = X.facet({X.full(), a}, i);
            for (auto [c, a2] : X.cofaces({X.wall(i), w}))
                if (dist[a2] < 0) {
                    dist[a2] = dist[a] + 1;
                    queue.push_back(a2);
                }
        }
    }
    return dist;
}

int cellOfWord(const Ball& b, const Word& w)
{
    for (std::size_t t = 0; t < b.cellWords.size(); ++t)
        if (b.cellWords[t] == w)
            return static_cast<int>(t);
    return -1;
}

std::vector<int> uniqueNonBacktracking(const Ball& b, int from, int to)
{
    const Params& p = b.complex.params;
    const int n = b.complex.topCount();
    if (from < 0 || from >= n || to < 0 || to >= n)
        throw DomainError("path endpoints must be top cells of the ball");
    std::map<Word, int> lookup;
    for (int t = 0; t < n; ++t)
        lookup[b.cellWords[t]] = t;
    // to = u.from with u = w(to) w(from)^{-1}; the path applies the letters of u right to left.
    Word u = multiply(b.cellWords[to], inverse(b.cellWords[from], p), p);
    std::vector<int> path;
    Word cur = b.cellWords[from];
    for (auto it = u.letters.rbegin(); it != u.letters.rend(); ++it) {
        cur = multiply(letter(it->index, it->exp), cur, p);
        auto found = lookup.find(cur);
        if (found == lookup.end())
            throw DomainError("non-backtracking path exits the ball of radius " + std::to_string(b.radius));
        path.push_back(found->second);
    }
    return path;
}

} // namespace arboreal
