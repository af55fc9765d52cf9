#include "arboreal/lcc.hpp"
#include "arboreal/error.hpp"

#include <algorithm>

namespace arboreal {

namespace {

int rankOf(ColorMask m, int color) { return maskSize(m & ((ColorMask(1) << color) - 1)); }

} // namespace

CoverResult linkConnectedCover(const MComplex& X)
{
    CoverResult out;
    MComplex Y = X;
    std::vector<std::vector<int>> origin(X.cells.size());
    for (ColorMask m = 0; m < X.cells.size(); ++m) {
        origin[m].resize(X.count(m));
        for (int t = 0; t < X.count(m); ++t)
            origin[m][t] = t;
    }
    for (int j = X.params.d - 2; j >= -1; --j) {
        for (ColorMask m = 0; m < Y.cells.size(); ++m) {
            if (maskSize(m) != j + 1)
                continue;
            const int existing = Y.count(m);
            for (int t = 0; t < existing; ++t) {
                auto [comp, ncomp] = linkComponents(Y, {m, t});
                if (ncomp <= 1)
                    continue;
                ++out.splits;
                const int firstCopy = Y.count(m);
                for (int c = 1; c < ncomp; ++c) {
                    Y.cells[m].push_back(Multicell{Y.cells[m][t].facets, {}});
                    origin[m].push_back(origin[m][t]);
                }
                const auto cof = Y.cofaces({m, t});
                for (std::size_t s = 0; s < cof.size(); ++s) {
                    if (comp[s] == 0)
                        continue;
                    auto [color, idx] = cof[s];
                    ColorMask up = m | (ColorMask(1) << color);
                    Y.cells[up][idx].facets[rankOf(up, color)] = firstCopy + comp[s] - 1;
                }
            }
        }
        Y.finalize();
    }
    out.projection.image.resize(Y.cells.size());
    for (ColorMask m = 0; m < Y.cells.size(); ++m)
        for (int t = 0; t < Y.count(m); ++t)
            out.projection.image[m].push_back({m, origin[m][t]});
    out.complex = std::move(Y);
    return out;
}

MorphismMap compose(const MorphismMap& g, const MorphismMap& f)
{
    MorphismMap h;
    h.image.resize(f.image.size());
    for (std::size_t m = 0; m < f.image.size(); ++m)
        for (const MultiId& a : f.image[m])
            h.image[m].push_back(g(a));
    return h;
}

UniversalityResult verifyUniversality(const MComplex& Z, const MorphismMap& phi, const MComplex& Y,
                                      const MorphismMap& pi, const Exemptions& exemptZ)
{
    UniversalityResult out;
    Propagation prop = propagateMorphism(Z, Y, exemptZ);
    out.psi = prop.map;
    out.diag.merge(prop.diag);
    if (!out.ok())
        return out;
    out.diag.merge(checkMorphism(out.psi, Z, Y, exemptZ));
    if (!out.ok())
        return out;
    MorphismMap composed = compose(pi, out.psi);
    for (ColorMask m = 0; m < Z.cells.size(); ++m)
        for (int t = 0; t < Z.count(m); ++t)
            if (!(composed.image[m][t] == phi.image[m][t])) {
                out.diag.fail("pi o psi differs from phi at " + describe({m, t}));
                return out;
            }
    return out;
}

MComplex identifyVertices(const MComplex& X, int v1, int v2)
{
    if (v1 < 0 || v2 < 0 || v1 >= X.vertexCount() || v2 >= X.vertexCount() || v1 == v2)
        throw DomainError("identifyVertices needs two distinct existing vertices");
    if (X.vertexColor(v1) != X.vertexColor(v2))
        throw DomainError("identified vertices must carry the same color");
    const int color = X.vertexColor(v1);
    const ColorMask vm = ColorMask(1) << color;
    const int keep = X.vertexCell(v1).index, drop = X.vertexCell(v2).index;
    auto renumber = [&](int idx) {
        if (idx == drop)
            idx = keep;
        return idx > drop ? idx - 1 : idx;
    };
    MComplex Y = X;
    for (ColorMask m = 0; m < Y.cells.size(); ++m) {
        if (m == vm || !hasColor(m, color) || maskSize(m) != 2)
            continue;
        int other = maskColors(m & ~vm)[0];
        for (auto& cell : Y.cells[m])
            cell.facets[rankOf(m, other)] = renumber(cell.facets[rankOf(m, other)]);
    }
    Y.cells[vm].erase(Y.cells[vm].begin() + drop);
    Y.finalize();
    return Y;
}

} // namespace arboreal
