#pragma once

#include "arboreal/complex.hpp"
#include "arboreal/graphs.hpp"
#include "arboreal/perm.hpp"
#include "arboreal/universal.hpp"

#include <vector>

namespace arboreal {

// The quotient of T_{d,k} by H = Stab(root). Top cell t is point t of the rep; a multicell of
// color set J is an orbit of the generators outside J.
struct QuotientObject {
    MComplex complex;
    PermRep sourceRep;
    std::vector<OrbitPartition> multicellOrbits; // indexed by color mask
};

QuotientObject buildQuotient(const PermRep& rep);

// Dual graph with one color class per generator pair {alpha_i^l, alpha_i^(k-l)}, read off the
// ordering cycles of the walls. Vertices are top cells.
Multigraph lineGraph(const MComplex& X);
Multigraph lineGraph(const QuotientObject& q);

bool isSimplicial(const QuotientObject& q);

// For every color set J, the points sharing all vertex orbits of p for colors in J form exactly
// the J-orbit of p.
bool intersectionPropertyAt(const PermRep& rep, int point);
bool intersectionProperty(const PermRep& rep);

// Every cycle of every beta_i has length k.
bool isUpperRegular(const PermRep& rep);
// Every (d-1)-multicell has degree k.
bool isUpperRegular(const MComplex& X);

// For each color set J with 1 <= |J| <= d, every tuple of vertices with colors J spans a cell.
bool hasCompleteSkeleton(const MComplex& X);
bool hasCompleteSkeleton(const QuotientObject& q);

struct QuotientMapResult {
    MorphismMap map;
    Diagnostics diag;
    bool surjective = false;
};
// The cell g.T of the ball goes to the orbit of evaluate(g, root); lower cells follow as faces.
QuotientMapResult quotientMap(const Ball& b, const QuotientObject& q);

// Action of alpha_i on the top cells reached from the root, via the ordering. Points are the
// reached top cells in ascending index order.
PermRep subgroupRep(const MComplex& X);
PermRep associatedSubgroupRoundTrip(const QuotientObject& q);

// A_v for every vertex v of the quotient, in MComplex vertex-id order: the points of its orbit.
SetFamily cosetFamily(const PermRep& rep);

} // namespace arboreal
