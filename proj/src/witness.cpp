#include "doew/witness.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <random>
#include <thread>
#include <tuple>
#include <vector>

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

#include "doew/errors.hpp"

namespace doew {

namespace {

ComplexMatrix unit(int i, int j) {
    ComplexMatrix e = ComplexMatrix::Zero(4, 4);
    e(i - 1, j - 1) = 1.0;
    return e;
}

double sgn(double x) {
    if (std::abs(x) <= kTieThreshold) return 0.0;
    return x > 0.0 ? 1.0 : -1.0;
}

// 2x2 block of rho~ proportional to [[d, o], [o, d]] -> A block entries.
struct BlockSigns {
    double diag, off;
};

BlockSigns polar_block(double d, double o) {
    const double sp = sgn(d + o);
    const double sm = sgn(d - o);
    return {-0.5 * (sp + sm), -0.5 * (sp - sm)};
}

void put_block(RealMatrix& a, int i, int j, BlockSigns s, double sign) {
    a(i - 1, i - 1) = sign * s.diag;
    a(j - 1, j - 1) = sign * s.diag;
    a(i - 1, j - 1) = sign * s.off;
    a(j - 1, i - 1) = sign * s.off;
}

Complex product_expectation(const ComplexMatrix& w, const ComplexVector& a, const ComplexVector& b) {
    const ComplexVector ab = tensor_product(a, b);
    return ab.dot(w * ab);
}

// <a|_A W |a>_A as a 4x4 operator on B, or the B-side analogue.
ComplexMatrix partial_expectation(const ComplexMatrix& w, const ComplexVector& v, Party fixed) {
    ComplexMatrix m = ComplexMatrix::Zero(4, 4);
    for (int i = 0; i < 4; ++i)
        for (int k = 0; k < 4; ++k) {
            const Complex c = std::conj(v(i)) * v(k);
            if (c == Complex(0.0)) continue;
            for (int j = 0; j < 4; ++j)
                for (int l = 0; l < 4; ++l) {
                    if (fixed == Party::A)
                        m(j, l) += c * w(i * 4 + j, k * 4 + l);
                    else
                        m(j, l) += c * w(j * 4 + i, l * 4 + k);
                }
        }
    return m;
}

ComplexVector min_eigenvector(const ComplexMatrix& m) {
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(0.5 * (m + m.adjoint()));
    return solver.eigenvectors().col(0);
}

template <class Rng>
ComplexVector haar_vector(Rng& rng, std::normal_distribution<double>& gauss) {
    ComplexVector v(4);
    for (int k = 0; k < 4; ++k) v(k) = Complex(gauss(rng), gauss(rng));
    return v / v.norm();
}

struct Sample {
    double value;
    ComplexVector a;
    ComplexVector b;
};

}  // namespace

BasisMemberKind OperatorBasis::kind(int i) {
    if (i < 1 || i > 16) throw InvalidArgument("basis index must be in 1..16");
    if (i <= 6) return BasisMemberKind::Symmetric;
    if (i <= 12) return BasisMemberKind::Antisymmetric;
    return BasisMemberKind::Diagonal;
}

const OperatorBasis& build_operator_basis() {
    static const OperatorBasis basis = [] {
        const double r = 1.0 / std::numbers::sqrt2;
        const Complex i(0.0, 1.0);
        OperatorBasis b;
        b.members = {
            r * (unit(1, 2) + unit(2, 1)),     r * (unit(1, 3) + unit(3, 1)),
            r * (unit(1, 4) + unit(4, 1)),     r * (unit(2, 3) + unit(3, 2)),
            r * (unit(2, 4) + unit(4, 2)),     r * (unit(3, 4) + unit(4, 3)),
            i * r * (unit(2, 1) - unit(1, 2)), i * r * (unit(4, 1) - unit(1, 4)),
            i * r * (unit(4, 2) - unit(2, 4)), i * r * (unit(3, 1) - unit(1, 3)),
            i * r * (unit(3, 2) - unit(2, 3)), i * r * (unit(4, 3) - unit(3, 4)),
            unit(1, 1),                        unit(2, 2),
            unit(3, 3),                        unit(4, 4),
        };
        return b;
    }();
    return basis;
}

CorrelationMatrix correlation_matrix(const HermitianOperator& rho, const OperatorBasis& basis) {
    if (rho.dim() != kPairDim) throw DimensionMismatch("correlation_matrix needs a 16x16 operator");
    CorrelationMatrix c;
    c.values.resize(16, 16);
    const ComplexMatrix& m = rho.matrix();
    for (int i = 1; i <= 16; ++i)
        for (int j = 1; j <= 16; ++j) {
            const Complex t = (m * tensor_product(basis[i], basis[j])).trace();
            if (std::abs(t.imag()) > 1e-10)
                throw InvalidArgument("correlation_matrix: complex entry, input is not Hermitian");
            c.values(i - 1, j - 1) = t.real();
        }
    return c;
}

WitnessOperator witness_from_coefficients(const RealMatrix& a, const OperatorBasis& basis) {
    if (a.rows() != 16 || a.cols() != 16) throw DimensionMismatch("coefficient matrix must be 16x16");
    ComplexMatrix w = ComplexMatrix::Identity(16, 16);
    for (int i = 1; i <= 16; ++i)
        for (int j = 1; j <= 16; ++j)
            if (a(i - 1, j - 1) != 0.0) w += a(i - 1, j - 1) * tensor_product(basis[i], basis[j]);
    return {HermitianOperator(w)};
}

KktWitness kkt_witness(const HermitianOperator& rho) {
    const RealMatrix rt = correlation_matrix(rho).values;
    Eigen::JacobiSVD<RealMatrix> svd(rt, Eigen::ComputeFullU | Eigen::ComputeFullV);
    const RealVector& s = svd.singularValues();
    const RealMatrix& v = svd.matrixV();

    // Z = 1/2 (rho~^T rho~)^(1/2) = 1/2 V S V^T; pseudo-inverse on the range.
    RealVector half_s = 0.5 * s;
    RealVector inv_half_s = RealVector::Zero(s.size());
    for (Eigen::Index k = 0; k < s.size(); ++k)
        if (s(k) > kRangeThreshold) inv_half_s(k) = 1.0 / half_s(k);

    KktWitness out;
    out.coefficients.lagrange_z = v * half_s.asDiagonal() * v.transpose();
    const RealMatrix z_pinv = v * inv_half_s.asDiagonal() * v.transpose();
    out.coefficients.a = -0.5 * rt * z_pinv;
    out.coefficients.min_value = 1.0 - s.sum();
    out.witness = witness_from_coefficients(out.coefficients.a);
    out.detecting = out.coefficients.min_value < 0.0;
    return out;
}

BCoefficients b_coefficients(const MixtureWeights& w) {
    const auto q = [&](int i) { return w.q(i); };
    return {
        q(1) + q(3) + q(5) + q(7),  q(9) + q(11) + q(13) + q(15),
        q(1) - q(3) - q(5) + q(7),  q(9) - q(11) + q(13) - q(15),
        q(1) - q(3) + q(5) - q(7),  q(9) - q(11) - q(13) + q(15),
        q(1) + q(3) - q(5) - q(7),  q(9) + q(11) - q(13) - q(15),
    };
}

RealMatrix coefficient_table(const MixtureWeights& weights) {
    if (weights.parity() != Parity::Odd) throw InvalidArgument("coefficient_table needs odd-parity weights");
    const BCoefficients b = b_coefficients(weights);
    // A block of rho~ that vanishes entirely lies in the kernel and gets A = 0.
    // A block with exactly one vanishing eigenvalue d +- o is a tie.
    const std::array<std::tuple<const char*, double, double>, 3> blocks{
        {{"b1,b2", b.b1, b.b2}, {"b5,b6", b.b5, b.b6}, {"b7,b8", b.b7, b.b8}}};
    for (const auto& [name, d, o] : blocks) {
        const bool zero_block = std::abs(d) <= kTieThreshold && std::abs(o) <= kTieThreshold;
        if (!zero_block && (std::abs(d + o) <= kTieThreshold || std::abs(d - o) <= kTieThreshold))
            throw TieError(std::string("coefficient_table: tie in (") + name + ")");
    }

    RealMatrix a = RealMatrix::Zero(16, 16);
    // Diagonal members: A_diag = 1/2 (sgn(b2 - b1) - 1), A_off = 1/2 (sgn(b1 - b2) - 1).
    put_block(a, 13, 14, polar_block(b.b1, b.b2), +1.0);
    put_block(a, 15, 16, polar_block(b.b1, b.b2), +1.0);
    // (Q2, Q5) carry b5/b6, (Q3, Q4) carry b7/b8; antisymmetric partners flip sign.
    put_block(a, 2, 5, polar_block(b.b5, b.b6), +1.0);
    put_block(a, 9, 10, polar_block(b.b5, b.b6), -1.0);
    put_block(a, 3, 4, polar_block(b.b7, b.b8), +1.0);
    put_block(a, 8, 11, polar_block(b.b7, b.b8), -1.0);
    // rho~ is diagonal on Q1, Q6 (b3 + b4) and Q7, Q12 (b4 - b3).
    a(0, 0) = a(5, 5) = -sgn(b.b3 + b.b4);
    a(6, 6) = a(11, 11) = sgn(b.b3 - b.b4);
    return a;
}

RealMatrix to_transposed_convention(const RealMatrix& a) {
    if (a.rows() != 16 || a.cols() != 16) throw DimensionMismatch("coefficient matrix must be 16x16");
    RealMatrix out = a;
    for (int j = 7; j <= 12; ++j) out.col(j - 1) *= -1.0;
    return out;
}

WitnessOperator phi1_witness(double mixing) {
    const ComplexVector v = phi_state(1, mixing).amplitudes();
    return {HermitianOperator(ComplexMatrix::Identity(16, 16) - 4.0 * v * v.adjoint())};
}

double detect(const WitnessOperator& w, const HermitianOperator& rho) {
    if (w.w.dim() != rho.dim()) throw DimensionMismatch("detect: witness and state dimensions differ");
    return (w.w.matrix() * rho.matrix()).trace().real();
}

SeparabilityFloor separability_floor(const WitnessOperator& w, const FloorOptions& options) {
    if (w.w.dim() != kPairDim) throw DimensionMismatch("separability_floor needs a 16x16 witness");
    const std::size_t workers = std::max<std::size_t>(1, options.workers);
    const std::size_t keep = std::max<std::size_t>(1, options.polish_starts);
    const ComplexMatrix& wm = w.w.matrix();

    // Each worker keeps its `keep` lowest samples; merged afterwards.
    std::vector<std::vector<Sample>> best(workers);
    auto run = [&](std::size_t worker) {
        std::seed_seq seq{options.seed, static_cast<std::uint64_t>(worker)};
        std::mt19937_64 rng(seq);
        std::normal_distribution<double> gauss;
        const std::size_t begin = options.samples * worker / workers;
        const std::size_t end = options.samples * (worker + 1) / workers;
        auto& mine = best[worker];
        for (std::size_t n = begin; n < end; ++n) {
            ComplexVector a = haar_vector(rng, gauss);
            ComplexVector b = haar_vector(rng, gauss);
            const double value = product_expectation(wm, a, b).real();
            if (mine.size() < keep || value < mine.back().value) {
                Sample s{value, std::move(a), std::move(b)};
                auto pos = std::upper_bound(mine.begin(), mine.end(), s.value,
                                            [](double v, const Sample& x) { return v < x.value; });
                mine.insert(pos, std::move(s));
                if (mine.size() > keep) mine.pop_back();
            }
        }
    };
    if (workers == 1) {
        run(0);
    } else {
        std::vector<std::thread> threads;
        for (std::size_t k = 0; k < workers; ++k) threads.emplace_back(run, k);
        for (auto& t : threads) t.join();
    }

    std::vector<Sample> merged;
    for (auto& v : best) std::move(v.begin(), v.end(), std::back_inserter(merged));
    std::stable_sort(merged.begin(), merged.end(), [](const Sample& x, const Sample& y) { return x.value < y.value; });
    if (merged.size() > keep) merged.resize(keep);

    SeparabilityFloor out;
    out.samples = options.samples;
    out.guaranteed_bound = std::numeric_limits<double>::quiet_NaN();
    out.sampled_min = merged.empty() ? std::numeric_limits<double>::infinity() : merged.front().value;
    out.refined_min = out.sampled_min;
    for (Sample& s : merged) {
        double value = s.value;
        for (std::size_t it = 0; it < options.polish_iterations; ++it) {
            s.b = min_eigenvector(partial_expectation(wm, s.a, Party::A));
            s.a = min_eigenvector(partial_expectation(wm, s.b, Party::B));
            const double next = product_expectation(wm, s.a, s.b).real();
            const bool stalled = std::abs(value - next) < 1e-15;
            value = std::min(value, next);
            if (stalled) break;
        }
        out.refined_min = std::min(out.refined_min, value);
    }
    return out;
}

SeparabilityFloor separability_floor_check(const RealMatrix& a, const FloorOptions& options) {
    SeparabilityFloor out = separability_floor(witness_from_coefficients(a), options);
    Eigen::JacobiSVD<RealMatrix> svd(a);
    out.guaranteed_bound = 1.0 - svd.singularValues()(0);
    return out;
}

DecomposableSplit decompose(const WitnessOperator& w) {
    const HermitianOperator wt = partial_transpose(w.w, kTwoParticleShape, Party::A);
    auto [values, vectors] = hermitian_eigensystem(wt);
    const RealVector positive = values.cwiseMax(0.0);
    const HermitianOperator q1(vectors * positive.cast<Complex>().asDiagonal() * vectors.adjoint(), 1e-9);
    const HermitianOperator p = w.w - partial_transpose(q1, kTwoParticleShape, Party::A);
    return {p, q1, eigenvalues(p).minCoeff(), eigenvalues(q1).minCoeff()};
}

}  // namespace doew
