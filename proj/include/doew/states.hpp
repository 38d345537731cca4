#pragma once

// Two-particle momentum (x) spin states: one-particle Bell basis, the
// two-particle Bell combinations and the sixteen orthonormal Phi^i states.
//
// Single-particle basis (momentum-major):
//   0 = |p1,+1/2>, 1 = |p1,-1/2>, 2 = |p2,+1/2>, 3 = |p2,-1/2>
// Two-particle index = 4 * k_A + k_B.

#include <array>
#include <cstddef>
#include <map>
#include <numbers>
#include <string>

#include "doew/operator_algebra.hpp"

namespace doew {

inline constexpr std::size_t kSingleDim = 4;
inline constexpr std::size_t kPairDim = 16;
inline constexpr double kBellTheta = std::numbers::pi / 4.0;

enum class Spin { Up, Down };

// momentum in {1, 2}
std::size_t single_index(int momentum, Spin spin);
std::size_t pair_index(std::size_t k_a, std::size_t k_b);

/// Unit vector in C^16.
class PureState16 {
public:
    explicit PureState16(const ComplexVector& amplitudes, double tol = 1e-12);

    // Rescales a nonzero vector to unit norm.
    static PureState16 normalized(const ComplexVector& v);

    const ComplexVector& amplitudes() const { return amps_; }
    Complex operator[](std::size_t i) const { return amps_(static_cast<Eigen::Index>(i)); }
    HermitianOperator density() const { return HermitianOperator::projector(amps_); }

private:
    ComplexVector amps_;
};

// psi_1..psi_4 over the single-particle basis.
ComplexVector one_particle_bell(int index);

enum class BellKind { PsiPlus, PsiMinus, PhiPlus, PhiMinus };

BellKind parse_bell_kind(const std::string& s);

// pair must be one of (1,2),(3,4),(1,3),(2,4),(1,4),(2,3).
PureState16 two_particle_bell(BellKind kind, int a, int b);

PureState16 phi_state(int i, double theta = kBellTheta);

enum class Parity { Odd, Even, Free };

Parity parse_parity(const std::string& s);
const char* to_string(Parity p);

/// Probability vector q_1..q_16 over the Phi^i states.
class MixtureWeights {
public:
    static constexpr double kTolerance = 1e-12;

    // Validates (nonnegative, sums to 1 within tolerance, parity support)
    // then renormalizes exactly. Indices absent from the map are zero.
    MixtureWeights(const std::map<int, double>& q, Parity parity);
    MixtureWeights(const std::array<double, 16>& q, Parity parity);

    static MixtureWeights pure(int i);

    // q_i with 1-based i.
    double q(int i) const;
    Parity parity() const { return parity_; }
    const std::array<double, 16>& values() const { return q_; }

private:
    void validate_and_normalize();

    std::array<double, 16> q_{};
    Parity parity_;
};

HermitianOperator build_mixture(const MixtureWeights& weights, double theta = kBellTheta);

}  // namespace doew
