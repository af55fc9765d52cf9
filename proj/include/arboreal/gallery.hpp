#pragma once

#include "arboreal/complex.hpp"
#include "arboreal/perm.hpp"

#include <string>
#include <vector>

namespace arboreal {

// Points are (Z/k)^{d+1} in mixed radix sum c_i k^i; beta_i adds 1 to coordinate i.
PermRep mSubgroupRep(const Params& p);

struct CoxeterResult {
    int order = 0;
    std::vector<Perm> elements; // element 0 is the identity
    PermRep rep;                // left multiplication by the generators on W
    MComplex fromKernel;        // quotient of T_{|S|-1,2} by the kernel
    MComplex direct;            // chambers w with vertices the cosets W_{S\{s_i}} w
    bool isomorphic = false;
    bool simplicial = false;
};

constexpr int kCoxeterOrderCap = 50000;

CoxeterResult coxeterComplex(const std::vector<Perm>& gens);
// One permutation per non-empty line, in 1-based one-line notation or cycle notation.
std::vector<Perm> parseGenerators(const std::string& text);
// Adjacent transpositions (1 2), ..., (n-1 n) of S_n.
std::vector<Perm> symmetricGroupGenerators(int n);

struct FlagComplex {
    int dim = 0; // of the ambient space F_q^dim
    int q = 0;
    std::vector<std::vector<int>> subspaces; // member vectors as base-q integers
    std::vector<int> subspaceDim;
    MComplex complex;                        // vertex ids follow `subspaces`
};

constexpr int kFlagVectorCap = 4096;
constexpr int kFlagSubspaceCap = 100000;

bool isPrime(int q);
// Proper nonzero subspaces of F_q^dim colored by dimension - 1, top cells the complete flags. The
// ordering is the builder's default, which is arbitrary.
FlagComplex flagComplex(int dim, int q);

} // namespace arboreal
