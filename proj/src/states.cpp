#include "doew/states.hpp"

#include <cmath>

#include "doew/errors.hpp"

namespace doew {

namespace {

ComplexVector basis_ket(std::size_t k) {
    ComplexVector v = ComplexVector::Zero(kSingleDim);
    v(static_cast<Eigen::Index>(k)) = 1.0;
    return v;
}

ComplexVector bell_vector(BellKind kind, int a, int b) {
    const ComplexVector pa = one_particle_bell(a);
    const ComplexVector pb = one_particle_bell(b);
    const double r = 1.0 / std::numbers::sqrt2;
    switch (kind) {
        case BellKind::PsiPlus: return r * (tensor_product(pa, pa) + tensor_product(pb, pb));
        case BellKind::PsiMinus: return r * (tensor_product(pa, pa) - tensor_product(pb, pb));
        case BellKind::PhiPlus: return r * (tensor_product(pa, pb) + tensor_product(pb, pa));
        case BellKind::PhiMinus: return r * (tensor_product(pa, pb) - tensor_product(pb, pa));
    }
    throw InvalidArgument("unknown Bell kind");
}

struct PhiRecipe {
    BellKind kind;
    std::array<int, 2> cos_pair;
    std::array<int, 2> sin_pair;
    double sin_sign;
};

// Phi^i = cos(theta) |first> + sin_sign * sin(theta) |second>
constexpr std::array<PhiRecipe, 16> kPhiTable{{
    {BellKind::PsiPlus, {1, 2}, {3, 4}, +1.0},
    {BellKind::PsiMinus, {1, 2}, {3, 4}, +1.0},
    {BellKind::PsiPlus, {3, 4}, {1, 2}, -1.0},
    {BellKind::PsiMinus, {3, 4}, {1, 2}, -1.0},
    {BellKind::PhiPlus, {1, 2}, {3, 4}, +1.0},
    {BellKind::PhiMinus, {1, 2}, {3, 4}, +1.0},
    {BellKind::PhiPlus, {3, 4}, {1, 2}, -1.0},
    {BellKind::PhiMinus, {3, 4}, {1, 2}, -1.0},
    {BellKind::PhiPlus, {2, 4}, {1, 3}, -1.0},
    {BellKind::PhiPlus, {1, 3}, {2, 4}, +1.0},
    {BellKind::PhiMinus, {2, 4}, {1, 3}, -1.0},
    {BellKind::PhiMinus, {1, 3}, {2, 4}, +1.0},
    {BellKind::PhiPlus, {2, 3}, {1, 4}, -1.0},
    {BellKind::PhiPlus, {1, 4}, {2, 3}, +1.0},
    {BellKind::PhiMinus, {2, 3}, {1, 4}, -1.0},
    {BellKind::PhiMinus, {1, 4}, {2, 3}, +1.0},
}};

}  // namespace

std::size_t single_index(int momentum, Spin spin) {
    if (momentum != 1 && momentum != 2)
        throw InvalidArgument("momentum label must be 1 or 2");
    return 2 * static_cast<std::size_t>(momentum - 1) + (spin == Spin::Up ? 0 : 1);
}

std::size_t pair_index(std::size_t k_a, std::size_t k_b) {
    if (k_a >= kSingleDim || k_b >= kSingleDim)
        throw InvalidArgument("single-particle index out of range");
    return kSingleDim * k_a + k_b;
}

PureState16::PureState16(const ComplexVector& amplitudes, double tol) : amps_(amplitudes) {
    if (amps_.size() != static_cast<Eigen::Index>(kPairDim))
        throw DimensionMismatch("PureState16 needs 16 amplitudes");
    if (!(std::abs(amps_.norm() - 1.0) <= tol))
        throw InvalidArgument("PureState16 is not normalized (norm " +
                              std::to_string(amps_.norm()) + ")");
}

PureState16 PureState16::normalized(const ComplexVector& v) {
    const double n = v.norm();
    if (!(n > 0.0)) throw DomainError("cannot normalize a zero state");
    return PureState16(v / n);
}

ComplexVector one_particle_bell(int index) {
    const double r = 1.0 / std::numbers::sqrt2;
    const ComplexVector p1_up = basis_ket(single_index(1, Spin::Up));
    const ComplexVector p1_dn = basis_ket(single_index(1, Spin::Down));
    const ComplexVector p2_up = basis_ket(single_index(2, Spin::Up));
    const ComplexVector p2_dn = basis_ket(single_index(2, Spin::Down));
    switch (index) {
        case 1: return r * (p1_up + p2_dn);
        case 2: return r * (p1_up - p2_dn);
        case 3: return r * (p2_up + p1_dn);
        case 4: return r * (p2_up - p1_dn);
        default: throw InvalidArgument("one-particle Bell index must be in 1..4");
    }
}

BellKind parse_bell_kind(const std::string& s) {
    if (s == "psi+") return BellKind::PsiPlus;
    if (s == "psi-") return BellKind::PsiMinus;
    if (s == "phi+") return BellKind::PhiPlus;
    if (s == "phi-") return BellKind::PhiMinus;
    throw InvalidArgument("Bell kind must be psi+, psi-, phi+ or phi-");
}

PureState16 two_particle_bell(BellKind kind, int a, int b) {
    static constexpr std::array<std::array<int, 2>, 6> kPairs{{{1, 2}, {3, 4}, {1, 3}, {2, 4}, {1, 4}, {2, 3}}};
    bool ok = false;
    for (const auto& p : kPairs) ok = ok || (p[0] == a && p[1] == b);
    if (!ok)
        throw InvalidArgument("invalid Bell pair (" + std::to_string(a) + "," + std::to_string(b) + ")");
    return PureState16(bell_vector(kind, a, b));
}

PureState16 phi_state(int i, double theta) {
    if (i < 1 || i > 16) throw InvalidArgument("Phi index must be in 1..16");
    if (!std::isfinite(theta)) throw InvalidArgument("mixing angle must be finite");
    const PhiRecipe& r = kPhiTable[static_cast<std::size_t>(i - 1)];
    const ComplexVector first = bell_vector(r.kind, r.cos_pair[0], r.cos_pair[1]);
    const ComplexVector second = bell_vector(r.kind, r.sin_pair[0], r.sin_pair[1]);
    return PureState16(std::cos(theta) * first + r.sin_sign * std::sin(theta) * second);
}

Parity parse_parity(const std::string& s) {
    if (s == "odd") return Parity::Odd;
    if (s == "even") return Parity::Even;
    if (s == "free") return Parity::Free;
    throw InvalidArgument("parity must be odd, even or free");
}

const char* to_string(Parity p) {
    switch (p) {
        case Parity::Odd: return "odd";
        case Parity::Even: return "even";
        case Parity::Free: return "free";
    }
    return "free";
}

MixtureWeights::MixtureWeights(const std::map<int, double>& q, Parity parity) : parity_(parity) {
    for (const auto& [i, v] : q) {
        if (i < 1 || i > 16) throw InvalidArgument("weight index must be in 1..16");
        q_[static_cast<std::size_t>(i - 1)] = v;
    }
    validate_and_normalize();
}

MixtureWeights::MixtureWeights(const std::array<double, 16>& q, Parity parity) : q_(q), parity_(parity) {
    validate_and_normalize();
}

MixtureWeights MixtureWeights::pure(int i) {
    if (i < 1 || i > 16) throw InvalidArgument("weight index must be in 1..16");
    return MixtureWeights(std::map<int, double>{{i, 1.0}}, i % 2 == 1 ? Parity::Odd : Parity::Even);
}

double MixtureWeights::q(int i) const {
    if (i < 1 || i > 16) throw InvalidArgument("weight index must be in 1..16");
    return q_[static_cast<std::size_t>(i - 1)];
}

void MixtureWeights::validate_and_normalize() {
    double sum = 0.0;
    for (std::size_t k = 0; k < q_.size(); ++k) {
        const double v = q_[k];
        const int i = static_cast<int>(k) + 1;
        if (!std::isfinite(v) || v < 0.0)
            throw InvalidArgument("weight q" + std::to_string(i) + " must be finite and nonnegative");
        if (v != 0.0 && ((parity_ == Parity::Odd && i % 2 == 0) || (parity_ == Parity::Even && i % 2 == 1)))
            throw InvalidArgument("weight q" + std::to_string(i) + " violates " + to_string(parity_) +
                                  " parity");
        sum += v;
    }
    if (!(std::abs(sum - 1.0) <= kTolerance))
        throw InvalidArgument("weights must sum to 1 (got " + std::to_string(sum) + ")");
    for (double& v : q_) v /= sum;
}

HermitianOperator build_mixture(const MixtureWeights& weights, double theta) {
    ComplexMatrix rho = ComplexMatrix::Zero(kPairDim, kPairDim);
    for (int i = 1; i <= 16; ++i) {
        const double qi = weights.q(i);
        if (qi == 0.0) continue;
        const ComplexVector v = phi_state(i, theta).amplitudes();
        rho += qi * (v * v.adjoint());
    }
    return HermitianOperator(rho);
}

}  // namespace doew
