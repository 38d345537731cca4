#pragma once

// Partial-transpose spectra of the odd-type mixture rho_1, the feasible
// region of its weights, and the edge-of-PPT reference state.

#include <string>
#include <vector>

#include "doew/operator_algebra.hpp"
#include "doew/states.hpp"

namespace doew {

inline constexpr double kPptTolerance = 1e-10;

RealVector ppt_spectrum(const HermitianOperator& rho, Party party);

// Smallest eigenvalue of the partial transpose over both parties.
double min_ppt_eigenvalue(const HermitianOperator& rho);

// Exact spectrum (ascending) of the partial transpose of the odd mixture
// after the projected boost with Wigner angles theta1, theta2.
// With a = cos^2(theta1/2), b = cos^2(theta2/2), s = a^2 + b^2:
//   a^2/(2s) (1 - 2(q_i + q_j)) and b^2/(2s) (1 - 2(q_i + q_j))
//     for the partner pairs (1,7), (3,5), (9,13), (11,15);
//   +-ab/(2s) L for L in {b5 - b8, b5 + b8, b7 - b6, b7 + b6}.
RealVector ppt_closed_form_spectrum(const MixtureWeights& weights, double theta1 = 0.0, double theta2 = 0.0);

struct ConstraintValue {
    std::string id;
    double value;  // residual for equalities, margin for inequalities
};

struct FeasibleRegionReport {
    std::vector<ConstraintValue> equalities;
    std::vector<ConstraintValue> inequalities;
    bool is_ppt = false;
};

FeasibleRegionReport feasible_region_check(const MixtureWeights& weights);

// Partner index of an odd Phi index in the feasible-region equalities.
int fr_partner(int i);

// q_{i*} = q_partner = 1/4, the remaining six odd weights 1/12 each.
MixtureWeights edge_weights(int i_star = 1);
HermitianOperator edge_state(int i_star = 1, double mixing = kBellTheta);

// One-parameter family on the feasible region through the edge state:
// q1 = q7 = x, other odd weights (1 - 2x)/6. x in [0, 1/2].
MixtureWeights fr_family(double q1);

}  // namespace doew
