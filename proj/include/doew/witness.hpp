#pragma once

// Decomposable entanglement witnesses on H4 (x) H4 of the form
//
//   W = I4 (x) I4 + sum_{i,j=1..16} A_ij Q^i (x) Q^j
//
// built from the correlation matrix rho~_ij = Tr(rho Q^i (x) Q^j) by the
// two-step KKT solution Z = 1/2 (rho~^T rho~)^(1/2), A = -1/2 rho~ Z^+.

#include <array>
#include <cstdint>
#include <cstddef>

#include "doew/operator_algebra.hpp"
#include "doew/states.hpp"

namespace doew {

enum class BasisMemberKind { Symmetric, Antisymmetric, Diagonal };

/// Q^1..Q^6 = (E_ij + E_ji)/sqrt2, Q^7..Q^12 = i(E_ji - E_ij)/sqrt2,
/// Q^13..Q^16 = E_ii. Orthonormal under Tr(Q^a Q^b).
struct OperatorBasis {
    std::array<ComplexMatrix, 16> members;

    // 1-based.
    const ComplexMatrix& operator[](int i) const { return members.at(static_cast<std::size_t>(i - 1)); }
    static BasisMemberKind kind(int i);
};

const OperatorBasis& build_operator_basis();

struct CorrelationMatrix {
    RealMatrix values;  // 16x16, 0-based storage of rho~_{i,j}
};

CorrelationMatrix correlation_matrix(const HermitianOperator& rho, const OperatorBasis& basis = build_operator_basis());

struct WitnessCoefficients {
    RealMatrix a;           // 16x16
    RealMatrix lagrange_z;  // 16x16, PSD
    double min_value = 1.0; // 1 - Tr sqrt(rho~^T rho~)
};

struct WitnessOperator {
    HermitianOperator w;
};

WitnessOperator witness_from_coefficients(const RealMatrix& a, const OperatorBasis& basis = build_operator_basis());

struct KktWitness {
    WitnessCoefficients coefficients;
    WitnessOperator witness;
    bool detecting = false;  // min_value < 0
};

// Singular values at or below this are treated as the kernel of rho~.
inline constexpr double kRangeThreshold = 1e-10;

KktWitness kkt_witness(const HermitianOperator& rho);

struct BCoefficients {
    double b1, b2, b3, b4, b5, b6, b7, b8;
};

// b8 = q9 + q11 - q13 - q15 (the companion of b7 in rho~).
BCoefficients b_coefficients(const MixtureWeights& weights);

inline constexpr double kTieThreshold = 1e-12;

// Closed-form A for odd mixtures in the Q-basis ordering. Each 2x2 block
// [[d, o], [o, d]] of rho~ maps to its negated polar factor. A block that
// vanishes entirely gets A = 0 (kernel of rho~); a block with exactly one of
// d +- o within kTieThreshold of zero throws TieError.
RealMatrix coefficient_table(const MixtureWeights& weights);

// Negates the columns belonging to antisymmetric members, i.e. expresses A
// against Q^i (x) (Q^j)^T on the second party.
RealMatrix to_transposed_convention(const RealMatrix& a);

// I4 (x) I4 - 4 |Phi^1><Phi^1|.
WitnessOperator phi1_witness(double mixing = kBellTheta);

double detect(const WitnessOperator& w, const HermitianOperator& rho);

struct FloorOptions {
    std::size_t samples = 100000;
    std::uint64_t seed = 12345;
    std::size_t workers = 1;
    std::size_t polish_starts = 16;     // best samples handed to the see-saw
    std::size_t polish_iterations = 200;
};

struct SeparabilityFloor {
    double sampled_min = 0.0;       // over Haar-random pure product states
    double refined_min = 0.0;       // after alternating minimization
    double guaranteed_bound = 0.0;  // 1 - sigma_max(A); NaN when built from W only
    std::size_t samples = 0;
};

// Minimum of Tr(W rho_s) over pure product states, estimated by sampling and
// refined by alternating minimization over each factor. Reproducible for a
// fixed seed and worker count.
SeparabilityFloor separability_floor(const WitnessOperator& w, const FloorOptions& options = {});
SeparabilityFloor separability_floor_check(const RealMatrix& a, const FloorOptions& options = {});

struct DecomposableSplit {
    HermitianOperator p;
    HermitianOperator q1;  // W = P + Q1^{T_A}
    double min_eig_p = 0.0;
    double min_eig_q1 = 0.0;
};

// Q1 = positive part of W^{T_A}, P = W - Q1^{T_A}.
DecomposableSplit decompose(const WitnessOperator& w);

}  // namespace doew
