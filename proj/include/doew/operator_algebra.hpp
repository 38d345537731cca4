#pragma once

// Dense complex matrix kernel for bipartite operators of dimension <= 16.

#include <complex>
#include <cstddef>
#include <string>

#include <Eigen/Dense>

namespace doew {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;
using RealMatrix = Eigen::MatrixXd;
using RealVector = Eigen::VectorXd;

inline constexpr double kDefaultTolerance = 1e-10;
inline constexpr double kHermiticityTolerance = 1e-12;
// Negative eigenvalues above this are treated as rounding and clamped to zero.
inline constexpr double kPsdClampThreshold = 1e-10;
// Below this an eigenvalue is genuinely negative.
inline constexpr double kNonPsdThreshold = 1e-8;

bool approx_equal(const ComplexMatrix& a, const ComplexMatrix& b, double tol = kDefaultTolerance);

// Largest |a_ij - conj(a_ji)|.
double hermiticity_defect(const ComplexMatrix& m);

/// Square complex matrix equal to its adjoint. The stored matrix is the exact
/// Hermitian part of the input, so downstream algebra never sees the defect.
class HermitianOperator {
public:
    HermitianOperator() = default;
    explicit HermitianOperator(const ComplexMatrix& m, double tol = kHermiticityTolerance);

    static HermitianOperator identity(std::size_t dim);
    static HermitianOperator projector(const ComplexVector& v);

    std::size_t dim() const { return static_cast<std::size_t>(matrix_.rows()); }
    const ComplexMatrix& matrix() const { return matrix_; }
    double trace() const { return matrix_.trace().real(); }

    HermitianOperator operator+(const HermitianOperator& o) const;
    HermitianOperator operator-(const HermitianOperator& o) const;
    HermitianOperator operator*(double s) const;

private:
    ComplexMatrix matrix_;
};

inline HermitianOperator operator*(double s, const HermitianOperator& h) { return h * s; }

enum class Party { A, B };

Party parse_party(const std::string& s);
const char* to_string(Party p);

struct BipartiteShape {
    std::size_t dim_a = 4;
    std::size_t dim_b = 4;

    std::size_t total() const { return dim_a * dim_b; }
    // Throws DimensionMismatch unless dim == dim_a * dim_b.
    void require(std::size_t dim) const;
};

inline constexpr BipartiteShape kTwoParticleShape{4, 4};

ComplexMatrix tensor_product(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexVector tensor_product(const ComplexVector& a, const ComplexVector& b);

HermitianOperator partial_transpose(const HermitianOperator& op, BipartiteShape shape, Party party);

// Traces out `party`; the result lives on the other factor.
HermitianOperator partial_trace(const HermitianOperator& op, BipartiteShape shape, Party party);

struct Eigensystem {
    RealVector values;      // ascending
    ComplexMatrix vectors;  // orthonormal columns, paired with values
};

Eigensystem hermitian_eigensystem(const HermitianOperator& op);
RealVector eigenvalues(const HermitianOperator& op);

// Principal square root of a PSD operator.
HermitianOperator psd_sqrt(const HermitianOperator& op);

Complex hs_inner(const ComplexMatrix& a, const ComplexMatrix& b);  // Tr(a^dagger b)
double hs_norm(const ComplexMatrix& m);

// Sum of singular values of a real square matrix, i.e. Tr sqrt(m^T m).
double trace_norm_sym(const RealMatrix& m);

}  // namespace doew
