#include "doew/measures.hpp"

#include <algorithm>
#include <cmath>

#include "doew/errors.hpp"

namespace doew {

namespace {

// Both cos^2(theta_i/2) below this: theta1 = theta2 = pi up to rounding.
constexpr double kDegenerateCosSq = 1e-15;

// cos^2(theta/2) from the half angle; (1 + cos theta)/2 would cancel near pi.
double half_cos_sq(double theta) {
    const double c = std::cos(0.5 * theta);
    return c * c;
}

double sum_of_fourths(double theta1, double theta2, const char* who) {
    const double a = half_cos_sq(theta1);
    const double b = half_cos_sq(theta2);
    const double s = a * a + b * b;
    if (!(std::max(a, b) > kDegenerateCosSq)) throw DomainError(std::string(who) + ": cos(theta1/2) = cos(theta2/2) = 0");
    return s;
}

}  // namespace

double entropy_bits(const RealVector& p) {
    double h = 0.0;
    for (double x : p)
        if (x > kEntropyZero) h -= x * std::log2(x);
    return h;
}

EntropyReport entropy_pure(const PureState16& state) {
    const HermitianOperator reduced = partial_trace(state.density(), kTwoParticleShape, Party::A);
    EntropyReport r;
    r.eigenvalues = eigenvalues(reduced);
    r.entropy_bits = entropy_bits(r.eigenvalues);
    return r;
}

double kappa(double theta1, double theta2) {
    const double s = sum_of_fourths(theta1, theta2, "kappa");
    return half_cos_sq(theta1) * half_cos_sq(theta2) / s;
}

ReducedSpectrum reduced_spectrum_formula(double theta1, double theta2) {
    const double s = sum_of_fourths(theta1, theta2, "reduced_spectrum_formula");
    const double a = half_cos_sq(theta1);
    const double b = half_cos_sq(theta2);
    return {a * a / (2.0 * s), b * b / (2.0 * s)};
}

double entropy_formula(double theta1, double theta2) {
    const ReducedSpectrum l = reduced_spectrum_formula(theta1, theta2);
    double h = 0.0;
    for (double x : {l.lambda1, l.lambda2})
        if (x > kEntropyZero) h -= 2.0 * x * std::log2(x);
    return h;
}

double hs_distance(const HermitianOperator& a, const HermitianOperator& b) {
    if (a.dim() != b.dim()) throw DimensionMismatch("hs_distance: dimensions differ");
    return hs_norm(a.matrix() - b.matrix());
}

EdgeWitness doew_from_edge(const HermitianOperator& rho_ent, const HermitianOperator& rho_edge) {
    if (rho_ent.dim() != rho_edge.dim()) throw DimensionMismatch("doew_from_edge: dimensions differ");
    const ComplexMatrix diff = rho_edge.matrix() - rho_ent.matrix();
    const double norm = hs_norm(diff);
    if (!(norm > 1e-14)) throw DomainError("doew_from_edge: states coincide");
    const double shift = hs_inner(rho_edge.matrix(), diff).real();
    const auto n = static_cast<Eigen::Index>(rho_ent.dim());

    EdgeWitness out;
    out.w = {HermitianOperator((diff - shift * ComplexMatrix::Identity(n, n)) / norm)};
    out.measure = norm;
    out.value_on_ent = detect(out.w, rho_ent);
    out.value_on_edge = detect(out.w, rho_edge);
    return out;
}

double traceless_direction_cosine(const HermitianOperator& a, const HermitianOperator& b) {
    if (a.dim() != b.dim()) throw DimensionMismatch("traceless_direction_cosine: dimensions differ");
    const auto n = static_cast<Eigen::Index>(a.dim());
    const ComplexMatrix id = ComplexMatrix::Identity(n, n);
    const ComplexMatrix ta = a.matrix() - (a.trace() / static_cast<double>(n)) * id;
    const ComplexMatrix tb = b.matrix() - (b.trace() / static_cast<double>(n)) * id;
    const double na = hs_norm(ta);
    const double nb = hs_norm(tb);
    if (na == 0.0 || nb == 0.0) throw DomainError("traceless_direction_cosine: operator proportional to identity");
    return hs_inner(ta, tb).real() / (na * nb);
}

double relativistic_witness_value(const MixtureWeights& weights, double theta1, double theta2) {
    if (weights.parity() != Parity::Odd) throw InvalidArgument("relativistic_witness_value needs odd-parity weights");
    const BCoefficients b = b_coefficients(weights);
    const double rest = 0.5 * (1.0 - std::abs(b.b1 - b.b2) - std::abs(b.b3 - b.b4) - std::abs(b.b3 + b.b4));
    const double moving = std::abs(b.b5 - b.b6) + std::abs(b.b5 + b.b6) + std::abs(b.b7 - b.b8) + std::abs(b.b7 + b.b8);
    return rest - moving * kappa(theta1, theta2);
}

double phi1_witness_value(const MixtureWeights& weights, double theta1, double theta2) {
    const double q1 = weights.q(1);
    const double q7 = weights.q(7);
    return 1.0 - 2.0 * q1 - 2.0 * q7 + 4.0 * (q7 - q1) * kappa(theta1, theta2);
}

Concurrence generalized_concurrence(double theta1, double theta2) {
    const ReducedSpectrum l = reduced_spectrum_formula(theta1, theta2);
    const double root = std::sqrt(l.lambda1 * l.lambda2);
    Concurrence c;
    c.lambda1 = l.lambda1;
    c.lambda2 = l.lambda2;
    c.d = 4.0 * root;
    c.chi = 1.0 + 8.0 * root;
    c.witness_value = -c.chi;
    return c;
}

ReducedSpectrum lambdas_from_concurrence(double d) {
    if (!(d >= 0.0 && d <= 1.0 + 1e-12)) throw DomainError("concurrence must lie in [0, 1]");
    const double spread = 0.5 * std::sqrt(std::max(0.0, 1.0 - d * d));
    return {0.5 * (0.5 + spread), 0.5 * (0.5 - spread)};
}

}  // namespace doew
