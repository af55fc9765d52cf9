#include "doctest.h"

#include "../fixtures.hpp"

#include "arboreal/gallery.hpp"
#include "arboreal/io.hpp"
#include "arboreal/lcc.hpp"
#include "arboreal/quotient.hpp"
#include "arboreal/universal.hpp"

#include <sstream>

using namespace arboreal;

namespace {

std::vector<std::string> lines(const std::string& text)
{
    std::vector<std::string> out;
    std::istringstream is(text);
    std::string line;
    while (std::getline(is, line))
        out.push_back(line);
    return out;
}

bool hasLine(const std::string& text, const std::string& line)
{
    for (const std::string& l : lines(text))
        if (l == line)
            return true;
    return false;
}

} // namespace

TEST_CASE("complex documents round trip")
{
    std::vector<ComplexDocument> docs;
    for (const PermRep& r : fixtures::mixedReps()) {
        ComplexDocument d;
        QuotientObject q = buildQuotient(r);
        d.complex = q.complex;
        d.rep = q.sourceRep;
        docs.push_back(d);
    }
    Ball b = buildBall({2, 3}, 2);
    ComplexDocument ball;
    ball.complex = b.complex;
    ball.cellWords = b.cellWords;
    ball.boundary = b.boundary;
    docs.push_back(ball);
    ComplexDocument cover;
    cover.complex = linkConnectedCover(fixtures::wedgeOfTriangles()).complex;
    docs.push_back(cover);
    for (const ComplexDocument& d : docs) {
        std::string text = writeDocument(d);
        ComplexDocument back = readDocument(text);
        CHECK(writeDocument(back) == text);
        CHECK(back.complex.topCount() == d.complex.topCount());
        CHECK(back.complex.root == d.complex.root);
        CHECK(back.complex.ordering == d.complex.ordering);
        CHECK(back.rep.has_value() == d.rep.has_value());
        if (d.rep)
            CHECK(*back.rep == *d.rep);
        CHECK(back.cellWords == d.cellWords);
        CHECK(audit(back.complex).ok());
    }
}

TEST_CASE("morphisms round trip")
{
    const auto f = fixtures::identifiedFixtures(2)[1];
    CoverResult c = linkConnectedCover(f.merged);
    std::string text = writeMorphism(c.projection);
    MorphismMap back = readMorphism(text);
    CHECK(writeMorphism(back) == text);
    for (const MultiId& a : c.complex.allCells())
        CHECK(back(a) == c.projection(a));
}

TEST_CASE("malformed input raises ParseError")
{
    CHECK_THROWS_AS(readDocument("{"), ParseError);
    CHECK_THROWS_AS(readDocument("[]"), ParseError);
    CHECK_THROWS_AS(readMorphism("{\"morphism\": 3}"), ParseError);
    ComplexDocument d;
    d.complex = buildQuotient(mSubgroupRep({1, 2})).complex;
    std::string text = writeDocument(d);
    // Corrupt the stored vertex of the first vertex cell.
    std::size_t at = text.find("\"vertices\": [\n      0");
    REQUIRE(at != std::string::npos);
    std::string bad = text;
    bad.replace(at, std::string("\"vertices\": [\n      0").size(), "\"vertices\": [\n      3");
    CHECK_THROWS_AS(readDocument(bad), ParseError);
    CHECK_THROWS_AS(readDocumentFile("/nonexistent/file.json"), DomainError);
}

TEST_CASE("analysis report for M(2,3)")
{
    std::string report = analysisReport(buildQuotient(mSubgroupRep({2, 3})).complex);
    for (const char* line : {"dimension: 2", "k: 3", "top cells: 27", "cells per dimension: -1:1 0:9 1:27 2:27",
                             "vertices per color: 3 3 3", "wall degree histogram: 3:27", "max multiplicity: 1",
                             "simplicial: yes", "upper regular: yes", "link-connected: yes",
                             "skeleton complete: yes", "lower path connected: yes", "line graph connected: yes"})
        CHECK_MESSAGE(hasLine(report, line), line);
    std::string wedge = analysisReport(fixtures::wedgeOfTriangles());
    CHECK(hasLine(wedge, "link-connected: no"));
}

TEST_CASE("spectrum report for K33")
{
    MComplex X = buildQuotient(mSubgroupRep({1, 3})).complex;
    std::string brief = spectrumReport(X, false, 1e-9, 6);
    CHECK(hasLine(brief, "lambda: 3"));
    CHECK(hasLine(brief, "coboundary rank: 1"));
    CHECK_FALSE(hasLine(brief, "full spectrum: 0.000 x1, 3.000 x4, 6.000 x1"));
    std::string full = spectrumReport(X, true, 1e-9, 6);
    CHECK(hasLine(full, "full spectrum: 0.000 x1, 3.000 x4, 6.000 x1"));
    CHECK(hasLine(full, "spectrum on complement: 3.000 x4, 6.000 x1"));
}

TEST_CASE("formatNumber")
{
    CHECK(formatNumber(3.0, 0) == "3");
    CHECK(formatNumber(0.1, 0) == "0.1");
    CHECK(formatNumber(6 - 4 * std::sqrt(2.0), 5) == "0.34315");
    CHECK(formatNumber(-0.5, 3) == "-0.5");
}
