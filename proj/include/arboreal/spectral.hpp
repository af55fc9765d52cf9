#pragma once

#include "arboreal/complex.hpp"

#include <optional>
#include <string>
#include <vector>

namespace arboreal {

// Row-major dense matrix.
struct DenseMatrix {
    int rows = 0;
    int cols = 0;
    std::vector<double> data;

    DenseMatrix() = default;
    DenseMatrix(int r, int c) : rows(r), cols(c), data(static_cast<std::size_t>(r) * c, 0.0) {}

    double& operator()(int r, int c) { return data[static_cast<std::size_t>(r) * cols + c]; }
    double operator()(int r, int c) const { return data[static_cast<std::size_t>(r) * cols + c]; }

    DenseMatrix transpose() const;
    DenseMatrix operator*(const DenseMatrix& o) const;
    double maxAbsDiff(const DenseMatrix& o) const;
    bool isSymmetric(double tol) const;
};

// Rows are (j-1)-multicells and columns j-multicells, both in cellsOfDim order.
struct SignedIncidence {
    std::vector<MultiId> rowCells;
    std::vector<MultiId> colCells;
    DenseMatrix matrix;
};

// entry(b, a) = (-1)^(position of the dropped vertex among the ascending vertex ids of a) when
// the facet of a dropping that vertex is b.
SignedIncidence boundaryMatrix(const MComplex& X, int j);

// B_d B_d^T on (d-1)-forms.
DenseMatrix upLaplacian(const MComplex& X);

// Cyclic Jacobi rotations; returns eigenvalues in ascending order.
std::vector<double> symmetricEigenvalues(DenseMatrix A, double threshold = 1e-12, int maxSweeps = 100);

// Modified Gram-Schmidt over the given vectors; vectors whose residual norm is below tol are
// dropped.
std::vector<std::vector<double>> orthonormalize(const std::vector<std::vector<double>>& vectors, double tol);
// Orthonormal basis of the orthogonal complement of an orthonormal family in R^dim.
std::vector<std::vector<double>> orthogonalComplement(const std::vector<std::vector<double>>& basis, int dim,
                                                      double tol);

struct SpectralReport {
    std::optional<double> lambda; // empty when the complement of the coboundaries is zero
    int formDim = 0;
    int coboundaryRank = 0;
    int complementDim = 0;
    std::vector<double> spectrum;     // Laplacian restricted to the complement
    std::vector<double> fullSpectrum; // whole Laplacian
};

// Restricts `laplacian` to the complement of the span of the columns of `coboundary`.
SpectralReport gapFromOperators(const DenseMatrix& laplacian, const DenseMatrix& coboundary, double tol = 1e-9);
SpectralReport spectralGap(const MComplex& X, double tol = 1e-9);

// Closed form for the infinite arboreal complex.
double lambdaArboreal(const Params& p);
// Closed form for the building of PGL_3 over a local field with residue field of size q.
double lambdaBuilding(int q);

struct GapComparison {
    int q = 0;
    double building = 0;
    double arboreal = 0;        // lambdaArboreal({2, q + 1})
    bool buildingExceeds = false;
    bool buildingNonnegative = false;
};
GapComparison compareBuildingTree(int q);

} // namespace arboreal
