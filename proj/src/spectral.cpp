#include "arboreal/spectral.hpp"
#include "arboreal/error.hpp"

#include <algorithm>
#include <cmath>

namespace arboreal {

DenseMatrix DenseMatrix::transpose() const
{
    DenseMatrix t(cols, rows);
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c)
            t(c, r) = (*this)(r, c);
    return t;
}

DenseMatrix DenseMatrix::operator*(const DenseMatrix& o) const
{
    if (cols != o.rows)
        throw DomainError("matrix dimensions do not match");
    DenseMatrix p(rows, o.cols);
    for (int r = 0; r < rows; ++r)
        for (int m = 0; m < cols; ++m) {
            double v = (*this)(r, m);
            if (v == 0.0)
                continue;
            for (int c = 0; c < o.cols; ++c)
                p(r, c) += v * o(m, c);
        }
    return p;
}

double DenseMatrix::maxAbsDiff(const DenseMatrix& o) const
{
    if (rows != o.rows || cols != o.cols)
        return INFINITY;
    double m = 0;
    for (std::size_t t = 0; t < data.size(); ++t)
        m = std::max(m, std::abs(data[t] - o.data[t]));
    return m;
}

bool DenseMatrix::isSymmetric(double tol) const
{
    if (rows != cols)
        return false;
    for (int r = 0; r < rows; ++r)
        for (int c = r + 1; c < cols; ++c)
            if (std::abs((*this)(r, c) - (*this)(c, r)) > tol)
                return false;
    return true;
}

SignedIncidence boundaryMatrix(const MComplex& X, int j)
{
    if (j < 0 || j > X.params.d)
        throw DomainError("boundary dimension out of range");
    SignedIncidence B;
    B.rowCells = X.cellsOfDim(j - 1);
    B.colCells = X.cellsOfDim(j);
    std::map<MultiId, int> rowOf;
    for (std::size_t r = 0; r < B.rowCells.size(); ++r)
        rowOf[B.rowCells[r]] = static_cast<int>(r);
    B.matrix = DenseMatrix(static_cast<int>(B.rowCells.size()), static_cast<int>(B.colCells.size()));
    for (std::size_t c = 0; c < B.colCells.size(); ++c) {
        const MultiId& a = B.colCells[c];
        const auto& verts = X.cell(a).vertices;
        std::vector<int> sorted = verts;
        std::sort(sorted.begin(), sorted.end());
        for (int v : verts) {
            int color = X.vertexColor(v);
            int pos = static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), v) - sorted.begin());
            MultiId b{a.mask & ~(ColorMask(1) << color), X.facet(a, color)};
            B.matrix(rowOf.at(b), static_cast<int>(c)) += pos % 2 == 0 ? 1.0 : -1.0;
        }
    }
    return B;
}

DenseMatrix upLaplacian(const MComplex& X)
{
    DenseMatrix B = boundaryMatrix(X, X.params.d).matrix;
    return B * B.transpose();
}

std::vector<double> symmetricEigenvalues(DenseMatrix A, double threshold, int maxSweeps)
{
    const int n = A.rows;
    if (A.cols != n)
        throw DomainError("eigenvalues need a square matrix");
    double norm = 0;
    for (double v : A.data)
        norm += v * v;
    norm = std::sqrt(norm);
    const double target = threshold * std::max(1.0, norm);
    for (int sweep = 0; sweep < maxSweeps; ++sweep) {
        double off = 0;
        for (int p = 0; p < n; ++p)
            for (int q = p + 1; q < n; ++q)
                off += 2 * A(p, q) * A(p, q);
        if (std::sqrt(off) <= target)
            break;
        for (int p = 0; p < n; ++p)
            for (int q = p + 1; q < n; ++q) {
                double apq = A(p, q);
                if (std::abs(apq) < 1e-300)
                    continue;
                double theta = (A(q, q) - A(p, p)) / (2 * apq);
                double t = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1));
                double c = 1 / std::sqrt(t * t + 1), s = t * c;
                for (int r = 0; r < n; ++r) {
                    double arp = A(r, p), arq = A(r, q);
                    A(r, p) = c * arp - s * arq;
                    A(r, q) = s * arp + c * arq;
                }
                for (int r = 0; r < n; ++r) {
                    double apr = A(p, r), aqr = A(q, r);
                    A(p, r) = c * apr - s * aqr;
                    A(q, r) = s * apr + c * aqr;
                }
            }
    }
    std::vector<double> ev(n);
    for (int t = 0; t < n; ++t)
        ev[t] = A(t, t);
    std::sort(ev.begin(), ev.end());
    return ev;
}

namespace {

double dot(const std::vector<double>& a, const std::vector<double>& b)
{
    double s = 0;
    for (std::size_t t = 0; t < a.size(); ++t)
        s += a[t] * b[t];
    return s;
}

} // namespace

std::vector<std::vector<double>> orthonormalize(const std::vector<std::vector<double>>& vectors, double tol)
{
    std::vector<std::vector<double>> basis;
    for (auto v : vectors) {
        for (const auto& b : basis) {
            double c = dot(v, b);
            for (std::size_t t = 0; t < v.size(); ++t)
                v[t] -= c * b[t];
        }
        double len = std::sqrt(dot(v, v));
        if (len < tol)
            continue;
        for (double& x : v)
            x /= len;
        basis.push_back(std::move(v));
    }
    return basis;
}

std::vector<std::vector<double>> orthogonalComplement(const std::vector<std::vector<double>>& basis, int dim,
                                                      double tol)
{
    std::vector<std::vector<double>> all = basis;
    const std::size_t start = all.size();
    for (int e = 0; e < dim; ++e) {
        std::vector<double> v(dim, 0.0);
        v[e] = 1.0;
        // Two passes of projection keep the complement orthogonal to the given family.
        for (int pass = 0; pass < 2; ++pass)
            for (const auto& b : all) {
                double c = dot(v, b);
                for (int t = 0; t < dim; ++t)
                    v[t] -= c * b[t];
            }
        double len = std::sqrt(dot(v, v));
        if (len < tol)
            continue;
        for (double& x : v)
            x /= len;
        all.push_back(std::move(v));
    }
    return {all.begin() + static_cast<long>(start), all.end()};
}

SpectralReport gapFromOperators(const DenseMatrix& laplacian, const DenseMatrix& coboundary, double tol)
{
    const int N = laplacian.rows;
    if (laplacian.cols != N || coboundary.rows != N)
        throw DomainError("operator dimensions do not match");
    SpectralReport rep;
    rep.formDim = N;
    std::vector<std::vector<double>> cols(coboundary.cols, std::vector<double>(N));
    for (int c = 0; c < coboundary.cols; ++c)
        for (int r = 0; r < N; ++r)
            cols[c][r] = coboundary(r, c);
    auto range = orthonormalize(cols, tol);
    rep.coboundaryRank = static_cast<int>(range.size());
    auto comp = orthogonalComplement(range, N, tol);
    rep.complementDim = static_cast<int>(comp.size());
    rep.fullSpectrum = symmetricEigenvalues(laplacian);
    if (comp.empty())
        return rep;
    const int m = rep.complementDim;
    DenseMatrix Q(m, N);
    for (int r = 0; r < m; ++r)
        for (int c = 0; c < N; ++c)
            Q(r, c) = comp[r][c];
    DenseMatrix compressed = Q * laplacian * Q.transpose();
    for (int r = 0; r < m; ++r)
        for (int c = r + 1; c < m; ++c) {
            double avg = 0.5 * (compressed(r, c) + compressed(c, r));
            compressed(r, c) = compressed(c, r) = avg;
        }
    rep.spectrum = symmetricEigenvalues(compressed);
    rep.lambda = rep.spectrum.front();
    return rep;
}

SpectralReport spectralGap(const MComplex& X, double tol)
{
    DenseMatrix L = upLaplacian(X);
    DenseMatrix cob = boundaryMatrix(X, X.params.d - 1).matrix.transpose();
    return gapFromOperators(L, cob, tol);
}

double lambdaArboreal(const Params& p)
{
    validateParams(p);
    if (p.k <= p.d)
        return 0.0;
    return p.k + p.d - 1 - 2 * std::sqrt(double(p.d) * (p.k - 1));
}

double lambdaBuilding(int q)
{
    if (q < 2)
        throw DomainError("residue field size must be at least 2");
    return q + 1 - 2 * std::sqrt(double(q + 1));
}

GapComparison compareBuildingTree(int q)
{
    GapComparison g;
    g.q = q;
    g.building = lambdaBuilding(q);
    g.arboreal = lambdaArboreal({2, q + 1});
    g.buildingExceeds = g.building > g.arboreal;
    g.buildingNonnegative = g.building >= 0;
    return g;
}

} // namespace arboreal
