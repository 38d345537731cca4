#pragma once

// Wigner rotations of spin-1/2 particles under a Lorentz boost, and the
// induced action on the two-momentum-label states of the states module.
//
// Two boost actions are provided:
//  * the exact one, U = diag(D(W,p1), D(W,p2)) per particle, which is unitary
//    and therefore leaves every local spectrum (and so all entanglement) alone;
//  * the spin-preserving projection, which keeps only the sigma_z-diagonal
//    part <s|D(W,p)|s> of each Wigner rotation and renormalizes. This is the
//    state whose entropy, witness value and partial-transpose spectrum follow
//    the cos^2(theta_i/2) closed forms in the measures and ppt modules, with
//    theta_i the Wigner angle of momentum p_i.

#include <utility>

#include <Eigen/Dense>

#include "doew/operator_algebra.hpp"
#include "doew/states.hpp"

namespace doew {

using Vec3 = Eigen::Vector3d;
using Matrix2c = Eigen::Matrix2cd;

struct BoostParameters {
    double alpha = 0.0;        // observer rapidity, cosh(alpha) = gamma
    Vec3 direction = Vec3::UnitZ();

    void validate() const;
};

struct ParticleKinematics {
    double delta = 0.0;        // particle rapidity, cosh(delta) = E/m
    Vec3 direction = Vec3::UnitZ();

    // Momentum in the yz-plane: p_hat = (0, sin(theta), cos(theta)).
    static ParticleKinematics in_yz_plane(double delta, double theta_polar);
    void validate() const;
};

struct WignerHalfAngle {
    double cos_half = 1.0;                 // cos(Omega/2)
    Vec3 sin_half_axis = Vec3::Zero();     // sin(Omega/2) n_hat, n_hat = e x p / |e x p|

    double omega() const;  // in [0, 2 pi)
};

WignerHalfAngle wigner_half_angle(const BoostParameters& boost, const ParticleKinematics& particle);

struct WignerRotation {
    double omega = 0.0;
    Vec3 axis = Vec3::UnitZ();       // unit; arbitrary when omega == 0
    Matrix2c d = Matrix2c::Identity();
};

// D = cos(Omega/2) I + i sin(Omega/2) (sigma . n_hat).
WignerRotation wigner_matrix(double cos_half, const Vec3& sin_half_axis);
WignerRotation wigner_matrix(const WignerHalfAngle& h);

// Rotation with the given angle about an arbitrary axis.
WignerRotation rotation_about(double omega, const Vec3& axis);

// diag(D1, D2) over the momentum-major single-particle basis.
ComplexMatrix single_particle_boost_unitary(const WignerRotation& d1, const WignerRotation& d2);

PureState16 boost_pure(const PureState16& state, const ComplexMatrix& u_a, const ComplexMatrix& u_b);
HermitianOperator boost_mixture(const HermitianOperator& rho, const ComplexMatrix& u_a, const ComplexMatrix& u_b);

// --- spin-preserving projection ------------------------------------------

// diag(<+|D|+>, <-|D|->).
Matrix2c spin_preserving_part(const WignerRotation& d);

// diag(P(D1), P(D2)) where P is spin_preserving_part.
ComplexMatrix projected_boost_operator(const WignerRotation& d1, const WignerRotation& d2);

// Projected operator for rotations about an axis orthogonal to z with
// Wigner angles theta1 (momentum p1) and theta2 (momentum p2):
// diag(c1, c1, c2, c2), c_i = cos(theta_i / 2).
ComplexMatrix angle_filter(double theta1, double theta2);

// (k_a (x) k_b)|state>, renormalized. Throws DomainError if annihilated.
PureState16 project_pure(const PureState16& state, const ComplexMatrix& k_a, const ComplexMatrix& k_b);

// sum_i q_i |K Phi^i><K Phi^i| with each projected component renormalized.
HermitianOperator project_mixture(const MixtureWeights& weights, const ComplexMatrix& k_a,
                                  const ComplexMatrix& k_b, double mixing = kBellTheta);

PureState16 relativistic_pure(int phi_index, double theta1, double theta2, double mixing = kBellTheta);
HermitianOperator relativistic_mixture(const MixtureWeights& weights, double theta1, double theta2,
                                       double mixing = kBellTheta);

// Wigner angles (Omega_1, Omega_2) of the two momentum labels seen by one observer.
std::pair<double, double> effective_angles(const BoostParameters& boost, const ParticleKinematics& p1,
                                           const ParticleKinematics& p2);

}  // namespace doew
