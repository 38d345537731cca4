#include "doew/operator_algebra.hpp"

#include <algorithm>
#include <cmath>

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

#include "doew/errors.hpp"

namespace doew {

bool approx_equal(const ComplexMatrix& a, const ComplexMatrix& b, double tol) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
    return a.size() == 0 || (a - b).cwiseAbs().maxCoeff() <= tol;
}

double hermiticity_defect(const ComplexMatrix& m) {
    if (m.rows() != m.cols())
        throw DimensionMismatch("hermiticity_defect: matrix is not square");
    if (m.size() == 0) return 0.0;
    return (m - m.adjoint()).cwiseAbs().maxCoeff();
}

HermitianOperator::HermitianOperator(const ComplexMatrix& m, double tol) {
    if (m.rows() != m.cols())
        throw DimensionMismatch("HermitianOperator: matrix is not square");
    const double defect = hermiticity_defect(m);
    if (!(defect <= tol))
        throw InvalidArgument("HermitianOperator: matrix is not Hermitian (defect " +
                              std::to_string(defect) + ")");
    matrix_ = 0.5 * (m + m.adjoint());
}

HermitianOperator HermitianOperator::identity(std::size_t dim) {
    const auto n = static_cast<Eigen::Index>(dim);
    return HermitianOperator(ComplexMatrix::Identity(n, n));
}

HermitianOperator HermitianOperator::projector(const ComplexVector& v) {
    return HermitianOperator(v * v.adjoint());
}

HermitianOperator HermitianOperator::operator+(const HermitianOperator& o) const {
    if (dim() != o.dim()) throw DimensionMismatch("HermitianOperator: sum of mismatched dims");
    return HermitianOperator(matrix_ + o.matrix_);
}

HermitianOperator HermitianOperator::operator-(const HermitianOperator& o) const {
    if (dim() != o.dim()) throw DimensionMismatch("HermitianOperator: difference of mismatched dims");
    return HermitianOperator(matrix_ - o.matrix_);
}

HermitianOperator HermitianOperator::operator*(double s) const {
    return HermitianOperator(matrix_ * s);
}

Party parse_party(const std::string& s) {
    if (s == "A" || s == "a") return Party::A;
    if (s == "B" || s == "b") return Party::B;
    throw InvalidArgument("party must be A or B, got '" + s + "'");
}

const char* to_string(Party p) { return p == Party::A ? "A" : "B"; }

void BipartiteShape::require(std::size_t dim) const {
    if (dim_a == 0 || dim_b == 0 || dim != total())
        throw DimensionMismatch("operator dimension " + std::to_string(dim) +
                                " does not factor as " + std::to_string(dim_a) + "x" +
                                std::to_string(dim_b));
}

ComplexMatrix tensor_product(const ComplexMatrix& a, const ComplexMatrix& b) {
    ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i)
        for (Eigen::Index j = 0; j < a.cols(); ++j)
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    return out;
}

ComplexVector tensor_product(const ComplexVector& a, const ComplexVector& b) {
    ComplexVector out(a.size() * b.size());
    for (Eigen::Index i = 0; i < a.size(); ++i) out.segment(i * b.size(), b.size()) = a(i) * b;
    return out;
}

HermitianOperator partial_transpose(const HermitianOperator& op, BipartiteShape shape, Party party) {
    shape.require(op.dim());
    const auto da = static_cast<Eigen::Index>(shape.dim_a);
    const auto db = static_cast<Eigen::Index>(shape.dim_b);
    const ComplexMatrix& m = op.matrix();
    ComplexMatrix out(m.rows(), m.cols());
    // m(i*db + j, k*db + l) = <i j| m |k l>
    for (Eigen::Index i = 0; i < da; ++i)
        for (Eigen::Index j = 0; j < db; ++j)
            for (Eigen::Index k = 0; k < da; ++k)
                for (Eigen::Index l = 0; l < db; ++l) {
                    const Complex v = m(i * db + j, k * db + l);
                    if (party == Party::A)
                        out(k * db + j, i * db + l) = v;
                    else
                        out(i * db + l, k * db + j) = v;
                }
    return HermitianOperator(out);
}

HermitianOperator partial_trace(const HermitianOperator& op, BipartiteShape shape, Party party) {
    shape.require(op.dim());
    const auto da = static_cast<Eigen::Index>(shape.dim_a);
    const auto db = static_cast<Eigen::Index>(shape.dim_b);
    const ComplexMatrix& m = op.matrix();
    if (party == Party::B) {
        ComplexMatrix out = ComplexMatrix::Zero(da, da);
        for (Eigen::Index i = 0; i < da; ++i)
            for (Eigen::Index k = 0; k < da; ++k)
                for (Eigen::Index j = 0; j < db; ++j) out(i, k) += m(i * db + j, k * db + j);
        return HermitianOperator(out);
    }
    ComplexMatrix out = ComplexMatrix::Zero(db, db);
    for (Eigen::Index j = 0; j < db; ++j)
        for (Eigen::Index l = 0; l < db; ++l)
            for (Eigen::Index i = 0; i < da; ++i) out(j, l) += m(i * db + j, i * db + l);
    return HermitianOperator(out);
}

Eigensystem hermitian_eigensystem(const HermitianOperator& op) {
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(op.matrix());
    if (solver.info() != Eigen::Success) throw DomainError("hermitian_eigensystem: solver failed");
    // Eigen already returns ascending order.
    return {solver.eigenvalues(), solver.eigenvectors()};
}

RealVector eigenvalues(const HermitianOperator& op) {
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(op.matrix(), Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success) throw DomainError("eigenvalues: solver failed");
    return solver.eigenvalues();
}

HermitianOperator psd_sqrt(const HermitianOperator& op) {
    auto [values, vectors] = hermitian_eigensystem(op);
    for (Eigen::Index k = 0; k < values.size(); ++k) {
        if (values(k) < -kNonPsdThreshold)
            throw DomainError("psd_sqrt: operator has eigenvalue " + std::to_string(values(k)));
        values(k) = std::sqrt(std::max(values(k), 0.0));
    }
    return HermitianOperator(vectors * values.cast<Complex>().asDiagonal() * vectors.adjoint(), 1e-9);
}

Complex hs_inner(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw DimensionMismatch("hs_inner: shapes differ");
    return (a.adjoint() * b).trace();
}

double hs_norm(const ComplexMatrix& m) { return m.norm(); }

double trace_norm_sym(const RealMatrix& m) {
    if (m.size() == 0) return 0.0;
    Eigen::JacobiSVD<RealMatrix> svd(m);
    return svd.singularValues().sum();
}

}  // namespace doew
