#include "doew/ppt.hpp"

#include <algorithm>
#include <array>
#include <cmath>

#include "doew/errors.hpp"
#include "doew/witness.hpp"

namespace doew {

namespace {

constexpr std::array<std::array<int, 2>, 4> kPartnerPairs{{{1, 7}, {3, 5}, {9, 13}, {11, 15}}};

void require_odd(const MixtureWeights& w, const char* who) {
    if (w.parity() != Parity::Odd)
        throw InvalidArgument(std::string(who) + " needs odd-parity weights");
}

}  // namespace

RealVector ppt_spectrum(const HermitianOperator& rho, Party party) {
    if (rho.dim() != kPairDim) throw DimensionMismatch("ppt_spectrum needs a 16x16 operator");
    return eigenvalues(partial_transpose(rho, kTwoParticleShape, party));
}

double min_ppt_eigenvalue(const HermitianOperator& rho) {
    return std::min(ppt_spectrum(rho, Party::A).minCoeff(), ppt_spectrum(rho, Party::B).minCoeff());
}

RealVector ppt_closed_form_spectrum(const MixtureWeights& weights, double theta1, double theta2) {
    require_odd(weights, "ppt_closed_form_spectrum");
    const double c1 = std::cos(0.5 * theta1);
    const double c2 = std::cos(0.5 * theta2);
    const double a = c1 * c1;
    const double b = c2 * c2;
    const double s = a * a + b * b;
    if (!(s > 0.0)) throw DomainError("ppt_closed_form_spectrum: both half-angle cosines vanish");

    RealVector out(16);
    Eigen::Index k = 0;
    for (const auto& [i, j] : kPartnerPairs) {
        const double g = 1.0 - 2.0 * (weights.q(i) + weights.q(j));
        out(k++) = a * a / (2.0 * s) * g;
        out(k++) = b * b / (2.0 * s) * g;
    }
    const BCoefficients bc = b_coefficients(weights);
    const double cross = a * b / (2.0 * s);
    for (double l : {bc.b5 - bc.b8, bc.b5 + bc.b8, bc.b7 - bc.b6, bc.b7 + bc.b6}) {
        out(k++) = cross * l;
        out(k++) = -cross * l;
    }
    std::sort(out.begin(), out.end());
    return out;
}

int fr_partner(int i) {
    for (const auto& [x, y] : kPartnerPairs) {
        if (i == x) return y;
        if (i == y) return x;
    }
    throw InvalidArgument("index " + std::to_string(i) + " is not an odd Phi index");
}

FeasibleRegionReport feasible_region_check(const MixtureWeights& weights) {
    require_odd(weights, "feasible_region_check");
    FeasibleRegionReport r;
    for (const auto& [i, j] : kPartnerPairs)
        r.equalities.push_back({"q" + std::to_string(i) + "=q" + std::to_string(j),
                                std::abs(weights.q(i) - weights.q(j))});
    r.equalities.push_back(
        {"q1+q3+q9+q11=1/2", std::abs(weights.q(1) + weights.q(3) + weights.q(9) + weights.q(11) - 0.5)});
    for (int i = 1; i <= 16; ++i)
        r.inequalities.push_back({"q" + std::to_string(i) + "<=1/4", 0.25 - weights.q(i)});

    r.is_ppt = std::all_of(r.equalities.begin(), r.equalities.end(),
                           [](const ConstraintValue& c) { return c.value <= kPptTolerance; }) &&
               std::all_of(r.inequalities.begin(), r.inequalities.end(),
                           [](const ConstraintValue& c) { return c.value >= -kPptTolerance; });
    return r;
}

MixtureWeights edge_weights(int i_star) {
    const int partner = fr_partner(i_star);
    std::array<double, 16> q{};
    for (int i = 1; i <= 16; i += 2) q[static_cast<std::size_t>(i - 1)] = 1.0 / 12.0;
    q[static_cast<std::size_t>(i_star - 1)] = 0.25;
    q[static_cast<std::size_t>(partner - 1)] = 0.25;
    return MixtureWeights(q, Parity::Odd);
}

HermitianOperator edge_state(int i_star, double mixing) { return build_mixture(edge_weights(i_star), mixing); }

MixtureWeights fr_family(double q1) {
    if (!(q1 >= 0.0 && q1 <= 0.5)) throw InvalidArgument("fr_family: q1 must lie in [0, 1/2]");
    const double rest = (1.0 - 2.0 * q1) / 6.0;
    std::array<double, 16> q{};
    for (int i = 1; i <= 16; i += 2) q[static_cast<std::size_t>(i - 1)] = rest;
    q[0] = q1;
    q[6] = q1;
    return MixtureWeights(q, Parity::Odd);
}

}  // namespace doew
