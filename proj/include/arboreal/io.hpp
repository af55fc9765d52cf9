#pragma once

#include "arboreal/complex.hpp"
#include "arboreal/perm.hpp"

#include <optional>
#include <string>
#include <vector>

namespace arboreal {

// A complex together with the optional data some producers attach to it.
struct ComplexDocument {
    MComplex complex;
    std::optional<PermRep> rep;  // quotients record their rep
    std::vector<Word> cellWords; // balls record the word of each top cell
    Exemptions boundary;         // balls record their boundary walls
};

std::string writeDocument(const ComplexDocument& doc);
ComplexDocument readDocument(const std::string& text);
ComplexDocument readDocumentFile(const std::string& path);

std::string writeMorphism(const MorphismMap& f);
MorphismMap readMorphism(const std::string& text);

std::string readTextFile(const std::string& path);
void writeTextFile(const std::string& path, const std::string& text);

// Fixed-significance formatting; digits <= 0 means shortest round-trip precision.
std::string formatNumber(double x, int digits);

// Plain-text structural report with stable line order.
std::string analysisReport(const MComplex& X);

// Eigenvalues grouped within tolerance, printed with three decimals and multiplicities.
std::string spectrumReport(const MComplex& X, bool full, double tol, int digits);

} // namespace arboreal
