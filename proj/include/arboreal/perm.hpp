#pragma once

#include "arboreal/error.hpp"
#include "arboreal/group.hpp"

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

namespace arboreal {

using Perm = std::vector<int>;

// A finite-index subgroup H of G_{d,k}, given by the action of the generators on the
// cosets G/H = {0..n-1}. Points are 0-based here and 1-based in files.
struct PermRep {
    Params params;
    int n = 1;
    std::vector<Perm> betas;
    int root = 0;

    bool operator==(const PermRep&) const = default;
};

struct RepDiagnostics {
    std::vector<bool> orderDivides; // per generator
    bool transitive = false;
    int orbitCount = 0;
    Diagnostics diag;

    bool ok() const { return diag.ok(); }
};

PermRep trivialRep(const Params& p);

// Throws DomainError when some beta_i is not a bijection of [n] or the root is out of range.
RepDiagnostics validate(const PermRep& rep);
// Throws DomainError unless validate passes.
void requireValid(const PermRep& rep);

int applyPower(const PermRep& rep, int i, long long exp, int point);
int evaluate(const Word& w, int point, const PermRep& rep);
bool stabilizerContains(const Word& w, const PermRep& rep);

// Orbits of <beta_j : j not in J>. Orbit ids are dense and ordered by orbit minimum.
struct OrbitPartition {
    ColorMask colorSet = 0;
    std::vector<int> classIds;
    std::vector<int> reps;

    int count() const { return static_cast<int>(reps.size()); }
};

OrbitPartition orbits(const PermRep& rep, ColorMask J);

// Cycle decomposition of one permutation, each cycle starting at its minimum, sorted by minimum.
std::vector<std::vector<int>> cycles(const Perm& perm);

// Number of permutations of [n] all of whose cycle lengths divide k. Throws on uint64 overflow.
std::uint64_t countOrderDividing(int n, int k);
// Uniform sample from that set.
Perm sampleOrderDividing(int n, int k, std::mt19937_64& rng);

// Draws d+1 independent uniform generators. The draw may be intransitive.
PermRep randomTuple(const Params& p, int n, std::mt19937_64& rng);
// Seeded draw; std::nullopt when the draw is intransitive.
std::optional<PermRep> randomRep(const Params& p, int n, std::uint64_t seed);
// Repeats draws from one seeded stream until a transitive one appears.
PermRep randomTransitiveRep(const Params& p, int n, std::uint64_t seed, int maxAttempts = 1000,
                            int* attemptsUsed = nullptr);

// Diagonal action on the orbit of (root1, root2). Stabilizer is H1 and H2 intersected.
struct CommonCover {
    PermRep rep;
    std::vector<int> toFirst;
    std::vector<int> toSecond;
};
CommonCover intersectReps(const PermRep& r1, const PermRep& r2);

// Relabels points in breadth-first order from the root (generators scanned 0..d).
PermRep canonicalRelabel(const PermRep& rep);
bool equalUpToRelabel(const PermRep& a, const PermRep& b);

std::string formatRep(const PermRep& rep);
// One permutation of [n], 1-based: one-line notation, or cycle notation when '(' occurs.
Perm parsePerm(const std::string& line, int n);
PermRep parseRep(const std::string& text);
PermRep readRepFile(const std::string& path);

} // namespace arboreal
