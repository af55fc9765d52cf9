#include "arboreal/io.hpp"
#include "arboreal/error.hpp"
#include "arboreal/graphs.hpp"
#include "arboreal/quotient.hpp"
#include "arboreal/spectral.hpp"

#include <cmath>
#include <fstream>
#include <charconv>
#include <iomanip>
#include <limits>
#include <map>
#include <sstream>

#include "json.hpp"

namespace arboreal {

using Json = nlohmann::ordered_json;

std::string writeDocument(const ComplexDocument& doc)
{
    const MComplex& X = doc.complex;
    Json j;
    j["params"] = {{"d", X.params.d}, {"k", X.params.k}};
    j["root"] = X.root;
    Json colors = Json::array();
    for (int v = 0; v < X.vertexCount(); ++v)
        colors.push_back(X.vertexColor(v));
    j["vertexColors"] = colors;
    Json cells = Json::array();
    for (ColorMask m = 0; m < X.cells.size(); ++m) {
        Json entry;
        entry["colors"] = maskColors(m);
        Json list = Json::array();
        for (const auto& c : X.cells[m])
            list.push_back({{"vertices", c.vertices}, {"facets", c.facets}});
        entry["multicells"] = list;
        cells.push_back(entry);
    }
    j["cells"] = cells;
    j["ordering"] = X.ordering;
    if (doc.rep)
        j["rep"] = formatRep(*doc.rep);
    if (!doc.cellWords.empty()) {
        Json words = Json::array();
        for (const Word& w : doc.cellWords)
            words.push_back(formatWord(w));
        j["cellWords"] = words;
    }
    if (!doc.boundary.empty()) {
        Json bd = Json::array();
        for (const auto& flags : doc.boundary) {
            Json walls = Json::array();
            for (std::size_t b = 0; b < flags.size(); ++b)
                if (flags[b])
                    walls.push_back(b);
            bd.push_back(walls);
        }
        j["boundary"] = bd;
    }
    return j.dump(1) + "\n";
}

ComplexDocument readDocument(const std::string& text)
{
    ComplexDocument doc;
    try {
        Json j = Json::parse(text);
        Params p{j.at("params").at("d").get<int>(), j.at("params").at("k").get<int>()};
        validateParams(p);
        MComplex X(p);
        const auto& cells = j.at("cells");
        if (cells.size() != X.cells.size())
            throw ParseError("expected " + std::to_string(X.cells.size()) + " color sets in `cells`");
        for (ColorMask m = 0; m < X.cells.size(); ++m) {
            if (cells[m].at("colors").get<std::vector<int>>() != maskColors(m))
                throw ParseError("color sets must be listed in bitmask order");
            for (const auto& mc : cells[m].at("multicells")) {
                Multicell c;
                c.facets = mc.at("facets").get<std::vector<int>>();
                X.cells[m].push_back(std::move(c));
            }
        }
        X.ordering = j.at("ordering").get<std::vector<std::vector<std::vector<int>>>>();
        X.root = j.at("root").get<int>();
        X.finalize();
        for (ColorMask m = 0; m < X.cells.size(); ++m) {
            const auto& list = cells[m].at("multicells");
            for (std::size_t t = 0; t < list.size(); ++t)
                if (list[t].contains("vertices") &&
                    list[t]["vertices"].get<std::vector<int>>() != X.cells[m][t].vertices)
                    throw ParseError("listed vertices of " + describe({m, static_cast<int>(t)}) +
                                     " disagree with the gluing");
        }
        doc.complex = std::move(X);
        if (j.contains("rep"))
            doc.rep = parseRep(j["rep"].get<std::string>());
        if (j.contains("cellWords"))
            for (const auto& w : j["cellWords"])
                doc.cellWords.push_back(parseWord(w.get<std::string>()));
        if (j.contains("boundary")) {
            const MComplex& Y = doc.complex;
            doc.boundary.resize(Y.colors());
            for (int i = 0; i < Y.colors(); ++i) {
                doc.boundary[i].assign(Y.count(Y.wall(i)), 0);
                for (int b : j["boundary"].at(i).get<std::vector<int>>()) {
                    if (b < 0 || b >= Y.count(Y.wall(i)))
                        throw ParseError("boundary wall out of range");
                    doc.boundary[i][b] = 1;
                }
            }
        }
    } catch (const Json::exception& e) {
        throw ParseError(std::string("malformed complex JSON: ") + e.what());
    }
    return doc;
}

ComplexDocument readDocumentFile(const std::string& path) { return readDocument(readTextFile(path)); }

std::string writeMorphism(const MorphismMap& f)
{
    Json j = Json::array();
    for (std::size_t m = 0; m < f.image.size(); ++m) {
        std::vector<int> idx;
        for (const MultiId& a : f.image[m])
            idx.push_back(a.index);
        j.push_back({{"colors", maskColors(static_cast<ColorMask>(m))}, {"image", idx}});
    }
    Json out;
    out["morphism"] = j;
    return out.dump(1) + "\n";
}

MorphismMap readMorphism(const std::string& text)
{
    MorphismMap f;
    try {
        Json j = Json::parse(text);
        const auto& list = j.at("morphism");
        for (std::size_t m = 0; m < list.size(); ++m) {
            std::vector<MultiId> img;
            for (int idx : list[m].at("image").get<std::vector<int>>())
                img.push_back({static_cast<ColorMask>(m), idx});
            f.image.push_back(std::move(img));
        }
    } catch (const Json::exception& e) {
        throw ParseError(std::string("malformed morphism JSON: ") + e.what());
    }
    return f;
}

std::string readTextFile(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw DomainError("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void writeTextFile(const std::string& path, const std::string& text)
{
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw DomainError("cannot write " + path);
    out << text;
}

std::string formatNumber(double x, int digits)
{
    if (digits <= 0) {
        char buf[64];
        auto res = std::to_chars(buf, buf + sizeof buf, x);
        return std::string(buf, res.ptr);
    }
    std::ostringstream os;
    os << std::setprecision(digits) << x;
    return os.str();
}

namespace {

std::string yesNo(bool b) { return b ? "yes" : "no"; }

} // namespace

std::string analysisReport(const MComplex& X)
{
    std::ostringstream os;
    os << "dimension: " << X.params.d << '\n';
    os << "k: " << X.params.k << '\n';
    os << "top cells: " << X.topCount() << '\n';
    os << "cells per dimension:";
    for (int j = -1; j <= X.params.d; ++j)
        os << ' ' << j << ':' << X.countDim(j);
    os << '\n';
    std::vector<int> perColor(X.colors(), 0);
    for (int v = 0; v < X.vertexCount(); ++v)
        ++perColor[X.vertexColor(v)];
    os << "vertices per color:";
    for (int c : perColor)
        os << ' ' << c;
    os << '\n';
    std::map<int, int> hist;
    for (int i = 0; i < X.colors(); ++i)
        for (const auto& cyc : X.ordering[i])
            ++hist[static_cast<int>(cyc.size())];
    os << "wall degree histogram:";
    for (auto [deg, cnt] : hist)
        os << ' ' << deg << ':' << cnt;
    os << '\n';
    int maxMult = 0;
    for (ColorMask m = 0; m < X.cells.size(); ++m)
        for (const auto& [verts, mult] : multiplicities(X, m))
            maxMult = std::max(maxMult, mult);
    os << "max multiplicity: " << maxMult << '\n';
    Diagnostics structural = audit(X);
    structural.merge(checkConsistency(X));
    os << "consistent: " << yesNo(structural.ok()) << '\n';
    os << "simplicial: " << yesNo(isSimplicialComplex(X)) << '\n';
    os << "upper regular: " << yesNo(isUpperRegular(X)) << '\n';
    os << "link-connected: " << yesNo(isLinkConnected(X)) << '\n';
    os << "skeleton complete: " << yesNo(hasCompleteSkeleton(X)) << '\n';
    os << "lower path connected: " << yesNo(isLowerPathConnected(X, X.params.d)) << '\n';
    os << "line graph connected: " << yesNo(isConnected(lineGraph(X))) << '\n';
    return os.str();
}

std::string spectrumReport(const MComplex& X, bool full, double tol, int digits)
{
    SpectralReport r = spectralGap(X, tol);
    auto grouped = [&](const std::vector<double>& ev) {
        std::ostringstream os;
        std::size_t t = 0;
        bool first = true;
        while (t < ev.size()) {
            std::size_t u = t;
            while (u < ev.size() && std::abs(ev[u] - ev[t]) <= 1e-6)
                ++u;
            double v = ev[t];
            if (std::abs(v) < 5e-4)
                v = 0.0;
            os << (first ? "" : ", ") << std::fixed << std::setprecision(3) << v << " x" << (u - t);
            first = false;
            t = u;
        }
        return os.str();
    };
    std::ostringstream os;
    os << "forms: " << r.formDim << '\n';
    os << "coboundary rank: " << r.coboundaryRank << '\n';
    os << "complement dimension: " << r.complementDim << '\n';
    if (r.lambda) {
        double lam = std::abs(*r.lambda) < tol ? 0.0 : *r.lambda;
        os << "lambda: " << formatNumber(lam, digits) << '\n';
        os << "spectrum on complement: " << grouped(r.spectrum) << '\n';
    } else {
        os << "lambda: undefined (no forms orthogonal to the coboundaries)\n";
    }
    if (full)
        os << "full spectrum: " << grouped(r.fullSpectrum) << '\n';
    return os.str();
}

} // namespace arboreal
