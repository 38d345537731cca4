#include "doew/relativity.hpp"

#include <cmath>
#include <numbers>

#include "doew/errors.hpp"

namespace doew {

namespace {

constexpr double kUnitTolerance = 1e-12;

void require_unit(const Vec3& v, const char* what) {
    if (!v.allFinite() || std::abs(v.norm() - 1.0) > kUnitTolerance)
        throw InvalidArgument(std::string(what) + " must be a unit 3-vector");
}

void require_square(const ComplexMatrix& u, Eigen::Index n, const char* what) {
    if (u.rows() != n || u.cols() != n)
        throw DimensionMismatch(std::string(what) + " must be " + std::to_string(n) + "x" + std::to_string(n));
}

const Matrix2c& pauli_x() {
    static const Matrix2c m = (Matrix2c() << 0, 1, 1, 0).finished();
    return m;
}
const Matrix2c& pauli_y() {
    static const Matrix2c m = (Matrix2c() << 0, Complex(0, -1), Complex(0, 1), 0).finished();
    return m;
}
const Matrix2c& pauli_z() {
    static const Matrix2c m = (Matrix2c() << 1, 0, 0, -1).finished();
    return m;
}

}  // namespace

void BoostParameters::validate() const {
    if (!std::isfinite(alpha) || alpha < 0.0) throw InvalidArgument("boost rapidity must be finite and >= 0");
    require_unit(direction, "boost direction");
}

ParticleKinematics ParticleKinematics::in_yz_plane(double delta, double theta_polar) {
    ParticleKinematics p;
    p.delta = delta;
    p.direction = Vec3(0.0, std::sin(theta_polar), std::cos(theta_polar));
    p.validate();
    return p;
}

void ParticleKinematics::validate() const {
    if (!std::isfinite(delta) || delta < 0.0) throw InvalidArgument("particle rapidity must be finite and >= 0");
    require_unit(direction, "momentum direction");
}

double WignerHalfAngle::omega() const { return 2.0 * std::atan2(sin_half_axis.norm(), cos_half); }

WignerHalfAngle wigner_half_angle(const BoostParameters& boost, const ParticleKinematics& particle) {
    boost.validate();
    particle.validate();
    const double ch_a = std::cosh(0.5 * boost.alpha);
    const double sh_a = std::sinh(0.5 * boost.alpha);
    const double ch_d = std::cosh(0.5 * particle.delta);
    const double sh_d = std::sinh(0.5 * particle.delta);
    const double ep = boost.direction.dot(particle.direction);
    const Vec3 cross = boost.direction.cross(particle.direction);

    const double numerator = ch_a * ch_d + sh_a * sh_d * ep;
    // sqrt(1/2 + 1/2 cosh(a) cosh(d) + 1/2 sinh(a) sinh(d) e.p), rewritten as
    // hypot(numerator, sh_a sh_d |e x p|) using cosh^2 - sinh^2 = 1.
    const double denominator = std::hypot(numerator, sh_a * sh_d * cross.norm());

    WignerHalfAngle h;
    h.cos_half = numerator / denominator;
    h.sin_half_axis = (sh_a * sh_d / denominator) * cross;
    return h;
}

WignerRotation wigner_matrix(double cos_half, const Vec3& sin_half_axis) {
    const double norm2 = cos_half * cos_half + sin_half_axis.squaredNorm();
    if (!std::isfinite(norm2) || std::abs(norm2 - 1.0) > 1e-10)
        throw InvalidArgument("wigner_matrix: cos^2 + |sin n|^2 must equal 1");
    WignerRotation r;
    const double s = sin_half_axis.norm();
    r.omega = 2.0 * std::atan2(s, cos_half);
    r.axis = s > 0.0 ? Vec3(sin_half_axis / s) : Vec3(Vec3::UnitZ());
    const Complex i(0.0, 1.0);
    r.d = cos_half * Matrix2c::Identity() +
          i * (sin_half_axis.x() * pauli_x() + sin_half_axis.y() * pauli_y() + sin_half_axis.z() * pauli_z());
    return r;
}

WignerRotation wigner_matrix(const WignerHalfAngle& h) { return wigner_matrix(h.cos_half, h.sin_half_axis); }

WignerRotation rotation_about(double omega, const Vec3& axis) {
    require_unit(axis, "rotation axis");
    return wigner_matrix(std::cos(0.5 * omega), std::sin(0.5 * omega) * axis);
}

ComplexMatrix single_particle_boost_unitary(const WignerRotation& d1, const WignerRotation& d2) {
    ComplexMatrix u = ComplexMatrix::Zero(4, 4);
    u.block<2, 2>(0, 0) = d1.d;
    u.block<2, 2>(2, 2) = d2.d;
    return u;
}

PureState16 boost_pure(const PureState16& state, const ComplexMatrix& u_a, const ComplexMatrix& u_b) {
    require_square(u_a, 4, "u_a");
    require_square(u_b, 4, "u_b");
    return PureState16::normalized(tensor_product(u_a, u_b) * state.amplitudes());
}

HermitianOperator boost_mixture(const HermitianOperator& rho, const ComplexMatrix& u_a, const ComplexMatrix& u_b) {
    if (rho.dim() != kPairDim) throw DimensionMismatch("boost_mixture needs a 16x16 operator");
    require_square(u_a, 4, "u_a");
    require_square(u_b, 4, "u_b");
    const ComplexMatrix u = tensor_product(u_a, u_b);
    return HermitianOperator(u * rho.matrix() * u.adjoint(), 1e-10);
}

Matrix2c spin_preserving_part(const WignerRotation& d) {
    Matrix2c p = Matrix2c::Zero();
    p(0, 0) = d.d(0, 0);
    p(1, 1) = d.d(1, 1);
    return p;
}

ComplexMatrix projected_boost_operator(const WignerRotation& d1, const WignerRotation& d2) {
    ComplexMatrix k = ComplexMatrix::Zero(4, 4);
    k.block<2, 2>(0, 0) = spin_preserving_part(d1);
    k.block<2, 2>(2, 2) = spin_preserving_part(d2);
    return k;
}

ComplexMatrix angle_filter(double theta1, double theta2) {
    if (!std::isfinite(theta1) || !std::isfinite(theta2)) throw InvalidArgument("angles must be finite");
    const double c1 = std::cos(0.5 * theta1);
    const double c2 = std::cos(0.5 * theta2);
    ComplexMatrix k = ComplexMatrix::Zero(4, 4);
    k(0, 0) = c1;
    k(1, 1) = c1;
    k(2, 2) = c2;
    k(3, 3) = c2;
    return k;
}

PureState16 project_pure(const PureState16& state, const ComplexMatrix& k_a, const ComplexMatrix& k_b) {
    require_square(k_a, 4, "k_a");
    require_square(k_b, 4, "k_b");
    const ComplexVector v = tensor_product(k_a, k_b) * state.amplitudes();
    if (v.norm() < 1e-14) throw DomainError("projected boost annihilates the state");
    return PureState16::normalized(v);
}

HermitianOperator project_mixture(const MixtureWeights& weights, const ComplexMatrix& k_a,
                                  const ComplexMatrix& k_b, double mixing) {
    ComplexMatrix rho = ComplexMatrix::Zero(kPairDim, kPairDim);
    for (int i = 1; i <= 16; ++i) {
        const double qi = weights.q(i);
        if (qi == 0.0) continue;
        const ComplexVector v = project_pure(phi_state(i, mixing), k_a, k_b).amplitudes();
        rho += qi * (v * v.adjoint());
    }
    return HermitianOperator(rho, 1e-10);
}

PureState16 relativistic_pure(int phi_index, double theta1, double theta2, double mixing) {
    const ComplexMatrix k = angle_filter(theta1, theta2);
    return project_pure(phi_state(phi_index, mixing), k, k);
}

HermitianOperator relativistic_mixture(const MixtureWeights& weights, double theta1, double theta2,
                                       double mixing) {
    const ComplexMatrix k = angle_filter(theta1, theta2);
    return project_mixture(weights, k, k, mixing);
}

std::pair<double, double> effective_angles(const BoostParameters& boost, const ParticleKinematics& p1,
                                           const ParticleKinematics& p2) {
    return {wigner_half_angle(boost, p1).omega(), wigner_half_angle(boost, p2).omega()};
}

}  // namespace doew
