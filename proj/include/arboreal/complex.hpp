#pragma once

#include "arboreal/error.hpp"
#include "arboreal/group.hpp"

#include <compare>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace arboreal {

// A multicell is addressed by its color set and a dense index within that color set.
struct MultiId {
    ColorMask mask = 0;
    int index = 0;

    int dim() const { return maskSize(mask) - 1; }
    auto operator<=>(const MultiId&) const = default;
    bool operator==(const MultiId&) const = default;
};

std::string describe(const MultiId& id);

struct Multicell {
    // facets[t] is the index, within mask minus its t-th smallest color, of the face glued to this cell.
    std::vector<int> facets;
    // Global vertex ids, one per color of the mask, ascending colors. Derived by finalize().
    std::vector<int> vertices;
};

// A colored, ordered, rooted multicomplex. Cells live in cells[mask]; the empty mask holds the
// (-1)-dimensional multicells. The ordering stores, for every (d-1)-multicell of color set
// full\{i}, the cyclic sequence of its d-cofaces; following it realizes the action of alpha_i.
class MComplex {
public:
    Params params;
    std::vector<std::vector<Multicell>> cells;
    std::vector<std::vector<std::vector<int>>> ordering; // [i][(d-1)-cell index] -> d-cell cycle
    int root = 0;

    MComplex() = default;
    // Empty complex with the right number of color-set slots.
    explicit MComplex(const Params& p);

    int colors() const { return params.d + 1; }
    ColorMask full() const { return fullMask(colors()); }
    ColorMask wall(int i) const { return full() & ~(ColorMask(1) << i); }
    int count(ColorMask m) const { return static_cast<int>(cells[m].size()); }
    int topCount() const { return count(full()); }
    int countDim(int j) const;
    const Multicell& cell(const MultiId& id) const { return cells[id.mask][id.index]; }

    // Index of the face obtained by dropping `color` from the cell.
    int facet(const MultiId& a, int color) const;
    // Face with color set `sub` (a subset of a.mask), following facets in ascending color order.
    int face(const MultiId& a, ColorMask sub) const;
    bool contains(const MultiId& small, const MultiId& big) const;

    int vertexCount() const { return static_cast<int>(vertexColor_.size()); }
    int vertexColor(int v) const { return vertexColor_[v]; }
    int vertexId(int color, int index) const { return vertexOffset_[color] + index; }
    MultiId vertexCell(int v) const;

    // The d-cell following a in the cycle of its facet of color full\{i}.
    int next(int a, int i) const { return next_[i][a]; }
    // Cofaces one dimension up: (added color, index) pairs.
    const std::vector<std::pair<int, int>>& cofaces(const MultiId& a) const { return cofaces_[a.mask][a.index]; }

    std::vector<MultiId> cellsOfDim(int j) const;
    std::vector<MultiId> allCells() const;
    MultiId rootId() const { return {full(), root}; }

    // Recomputes derived data. Throws DomainError on dangling references or malformed cycles.
    void finalize();

private:
    std::vector<int> vertexOffset_;
    std::vector<int> vertexColor_;
    std::vector<std::vector<int>> next_;
    std::vector<std::vector<std::vector<std::pair<int, int>>>> cofaces_;
};

// Structural audit: purity, ordering cycles (cover cofaces once, length divides k), root.
Diagnostics audit(const MComplex& X);
// Square condition on every pair of facet drops; implies path independence of faces.
Diagnostics checkConsistency(const MComplex& X);
int degree(const MComplex& X, const MultiId& a);
// Base complex: for each color set, the vertex sets of its multicells, with their multiplicities.
std::map<std::vector<int>, int> multiplicities(const MComplex& X, ColorMask mask);
bool isSimplicialComplex(const MComplex& X);

struct LinkResult {
    MComplex complex;
    std::vector<int> colorMap;                 // link color -> color of X
    std::vector<std::vector<MultiId>> origin;  // link cell -> multicell of X
};
LinkResult link(const MComplex& X, const MultiId& a);

// Components of the 1-skeleton of lk(a). Returns component ids of the cofaces of a (in the order
// of X.cofaces(a)) and the number of components.
std::pair<std::vector<int>, int> linkComponents(const MComplex& X, const MultiId& a);
bool isLinkConnected(const MComplex& X);
bool isLowerPathConnected(const MComplex& X, int j);

using SetFamily = std::vector<std::vector<int>>;
using SimplexSet = std::set<std::vector<int>>;
// Index sets with nonempty common intersection. Includes the empty simplex.
SimplexSet nerve(const SetFamily& family);
// All vertex sets of multicells, including the empty set.
SimplexSet baseComplex(const MComplex& X);

// A multicell map X -> Y: image[mask][index].
struct MorphismMap {
    std::vector<std::vector<MultiId>> image;

    const MultiId& operator()(const MultiId& a) const { return image[a.mask][a.index]; }
};

// exempt[i][b] marks (d-1)-multicells of color set full\{i} where ordering equivariance is not
// required (ball boundaries). Empty means no exemptions.
using Exemptions = std::vector<std::vector<char>>;

MorphismMap identityMap(const MComplex& X);
Diagnostics checkMorphism(const MorphismMap& f, const MComplex& X, const MComplex& Y,
                          const Exemptions& exemptX = {});
bool isSurjective(const MorphismMap& f, const MComplex& X, const MComplex& Y);

struct Propagation {
    MorphismMap map;
    Diagnostics diag;
    bool ok() const { return diag.ok(); }
};
// The unique candidate morphism sending root to root and commuting with the ordering: d-cells are
// reached by following cycles from the root; lower cells are taken as faces.
Propagation propagateMorphism(const MComplex& X, const MComplex& Y, const Exemptions& exemptX = {});
bool isomorphic(const MComplex& X, const MComplex& Y, const Exemptions& exemptX = {},
                const Exemptions& exemptY = {});

// Builds a simplicial colored complex from top-dimensional vertex sets.
class SimplicialBuilder {
public:
    SimplicialBuilder(const Params& p, std::vector<int> vertexColors);
    // Vertex ids refer to the constructor's color table; exactly one vertex per color.
    int addTop(const std::vector<int>& verts);
    // Cycles default to ascending coface index; the caller may overwrite X.ordering then finalize().
    MComplex build(int rootTop = 0) const;
    // Multicell in the built complex with this vertex set (user vertex ids), if present.
    std::optional<MultiId> find(const std::vector<int>& verts) const;
    int topCount() const { return static_cast<int>(tops_.size()); }

private:
    Params params_;
    std::vector<int> colorOf_;
    std::vector<int> indexInColor_;
    std::vector<std::vector<int>> tops_;
    std::map<std::vector<int>, int> topIndex_;
    mutable std::map<std::pair<ColorMask, std::vector<int>>, int> built_;
};

// Sub-multicomplex of cells lying under d-cells lower-path connected to the root.
MComplex rootComponent(const MComplex& X, std::vector<std::vector<int>>* originIndex = nullptr);

} // namespace arboreal
