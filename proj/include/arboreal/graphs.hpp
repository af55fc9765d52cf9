#pragma once

#include "arboreal/perm.hpp"

#include <cstdint>
#include <string>
#include <tuple>
#include <vector>

namespace arboreal {

enum class ClassKind { PerfectMatching, TwoFactor };

struct Edge {
    int u = 0;
    int v = 0;
    int color = -1;

    bool isLoop() const { return u == v; }
};

// Vertices 0..n-1, an edge multiset with loops, optional color classes.
struct Multigraph {
    int n = 0;
    std::vector<Edge> edges;
    std::vector<ClassKind> classKinds;  // indexed by color
    std::vector<std::string> classNames;

    void add(int u, int v, int color = -1) { edges.push_back({u, v, color}); }
};

// Sorted (min endpoint, max endpoint, color) triples; equal iff the labeled multigraphs agree.
std::vector<std::tuple<int, int, int>> labeledEdges(const Multigraph& g, bool withColors = true);

// Loops count 1 in a matching class or an uncolored graph and 2 in a 2-factor class; the two
// definitions cover a vertex once through a loop.
int appendixDegree(const Multigraph& g, int v);
bool isConnected(const Multigraph& g);
bool isBipartite(const Multigraph& g);
// Flexible regularity for uncolored input: each loop may count 1 or 2.
bool admitsRegularity(const Multigraph& g, int k);

// Color classes follow the inverse pairing {alpha_i^l, alpha_i^(k-l)}, l = 1..floor(k/2).
int schreierClassCount(const Params& p);
int schreierClass(const Params& p, int i, int l);
Multigraph schreierMultigraph(const PermRep& rep);
void nameSchreierClasses(Multigraph& g, const Params& p);

struct EdgeClass {
    ClassKind kind = ClassKind::PerfectMatching;
    std::vector<int> edges; // indices into Multigraph::edges
};

enum class SearchStatus { Found, None, Unknown };

struct Decomposition {
    SearchStatus status = SearchStatus::Unknown;
    std::vector<EdgeClass> classes;
    std::string method;
    long long nodes = 0;
};

constexpr int kExactSearchBound = 32;

Diagnostics validateDecomposition(const Multigraph& g, const std::vector<EdgeClass>& classes);
// Reads the classes off the edge colors.
std::vector<EdgeClass> colorClasses(const Multigraph& g);
Decomposition decomposeRegular(const Multigraph& g, int k, long long nodeBudget = 20'000'000);
// Exact backtracking only (used by decomposeRegular as the general fallback).
Decomposition exactDecomposition(const Multigraph& g, int k, long long nodeBudget = 20'000'000);
SearchStatus isSchreier(const Multigraph& g, int k, long long nodeBudget = 20'000'000);

// Depth-3 balanced k-regular tree with a (k-1)-regular circulant on each block of leaves.
Multigraph counterexampleGraph(int k);

// Uniform-ish random k-regular simple graph by the pairing model with restarts.
Multigraph randomRegularGraph(int n, int k, std::uint64_t seed);

std::string formatMultigraph(const Multigraph& g);
Multigraph parseMultigraph(const std::string& text);
std::string toDot(const Multigraph& g, const std::vector<std::string>& vertexLabels = {});
std::string statusName(SearchStatus s);

} // namespace arboreal
