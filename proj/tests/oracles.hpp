#pragma once

// Independent reference implementations used only by the tests. Nothing here
// calls into the library's algebra: index loops, explicit kets, and 4x4
// Lorentz matrices stand in for the optimized code paths.

#include <Eigen/Dense>

#include <array>
#include <cmath>
#include <complex>
#include <random>

#include "doew/operator_algebra.hpp"
#include "doew/states.hpp"

namespace oracle {

using doew::Complex;
using doew::ComplexMatrix;
using doew::ComplexVector;
using doew::RealMatrix;
using Mat4 = Eigen::Matrix4d;
using Vec3 = Eigen::Vector3d;
using Vec4 = Eigen::Vector4d;

inline ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
    ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i)
        for (Eigen::Index j = 0; j < a.cols(); ++j)
            for (Eigen::Index k = 0; k < b.rows(); ++k)
                for (Eigen::Index l = 0; l < b.cols(); ++l)
                    out(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
    return out;
}

inline ComplexVector kron(const ComplexVector& a, const ComplexVector& b) {
    ComplexVector out(a.size() * b.size());
    for (Eigen::Index i = 0; i < a.size(); ++i)
        for (Eigen::Index k = 0; k < b.size(); ++k) out(i * b.size() + k) = a(i) * b(k);
    return out;
}

// <i j| rho |k l>  ->  <k j| rho |i l>  (party A) or <i l| rho |k j>  (party B).
inline ComplexMatrix partial_transpose(const ComplexMatrix& m, bool party_a, int da = 4, int db = 4) {
    ComplexMatrix out(m.rows(), m.cols());
    for (int i = 0; i < da; ++i)
        for (int j = 0; j < db; ++j)
            for (int k = 0; k < da; ++k)
                for (int l = 0; l < db; ++l) {
                    const int r = i * db + j, c = k * db + l;
                    if (party_a) out(k * db + j, i * db + l) = m(r, c);
                    else out(i * db + l, k * db + j) = m(r, c);
                }
    return out;
}

// Trace over B keeps A and vice versa.
inline ComplexMatrix trace_out_b(const ComplexMatrix& m, int da = 4, int db = 4) {
    ComplexMatrix out = ComplexMatrix::Zero(da, da);
    for (int i = 0; i < da; ++i)
        for (int k = 0; k < da; ++k)
            for (int j = 0; j < db; ++j) out(i, k) += m(i * db + j, k * db + j);
    return out;
}

inline ComplexMatrix trace_out_a(const ComplexMatrix& m, int da = 4, int db = 4) {
    ComplexMatrix out = ComplexMatrix::Zero(db, db);
    for (int j = 0; j < db; ++j)
        for (int l = 0; l < db; ++l)
            for (int i = 0; i < da; ++i) out(j, l) += m(i * db + j, i * db + l);
    return out;
}

inline ComplexVector ket(int k, int dim = 4) {
    ComplexVector v = ComplexVector::Zero(dim);
    v(k) = 1.0;
    return v;
}

inline ComplexVector ket2(int a, int b) { return kron(ket(a), ket(b)); }

inline ComplexMatrix unit(int i, int j, int dim = 4) {
    ComplexMatrix m = ComplexMatrix::Zero(dim, dim);
    m(i, j) = 1.0;
    return m;
}

// Pauli matrices.
inline ComplexMatrix sigma(int which) {
    ComplexMatrix s = ComplexMatrix::Zero(2, 2);
    const Complex i(0.0, 1.0);
    if (which == 1) { s(0, 1) = 1.0; s(1, 0) = 1.0; }
    if (which == 2) { s(0, 1) = -i; s(1, 0) = i; }
    if (which == 3) { s(0, 0) = 1.0; s(1, 1) = -1.0; }
    return s;
}

// Operator basis written from unit matrices, 1-based index.
inline ComplexMatrix q_member(int n) {
    static const std::array<std::pair<int, int>, 6> sym{{{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}};
    static const std::array<std::pair<int, int>, 6> anti{{{0, 1}, {0, 3}, {1, 3}, {0, 2}, {1, 2}, {2, 3}}};
    const double r = 1.0 / std::sqrt(2.0);
    const Complex i(0.0, 1.0);
    if (n <= 6) {
        auto [a, b] = sym[static_cast<std::size_t>(n - 1)];
        return r * (unit(a, b) + unit(b, a));
    }
    if (n <= 12) {
        auto [a, b] = anti[static_cast<std::size_t>(n - 7)];
        return r * i * (unit(b, a) - unit(a, b));
    }
    return unit(n - 13, n - 13);
}

// rho~_ij = Tr(rho Q_i (x) Q_j), by full matrix products.
inline RealMatrix correlation(const ComplexMatrix& rho) {
    RealMatrix out(16, 16);
    for (int i = 1; i <= 16; ++i)
        for (int j = 1; j <= 16; ++j) out(i - 1, j - 1) = (rho * kron(q_member(i), q_member(j))).trace().real();
    return out;
}

// Phi^1 at theta = pi/4 as explicit kets.
inline ComplexVector phi1_bell() {
    return 0.5 * (ket2(0, 0) + ket2(1, 1) + ket2(2, 2) + ket2(3, 3));
}

// I - 4 |Phi^1><Phi^1| from kets.
inline ComplexMatrix phi1_witness() {
    const ComplexVector v = phi1_bell();
    return ComplexMatrix::Identity(16, 16) - 4.0 * v * v.adjoint();
}

inline double kappa_literal(double t1, double t2) {
    const double c1 = std::cos(t1 / 2), c2 = std::cos(t2 / 2);
    return c1 * c1 * c2 * c2 / (std::pow(c1, 4) + std::pow(c2, 4));
}

// ---- Lorentz kinematics ---------------------------------------------------

inline Mat4 pure_boost(double rapidity, const Vec3& n) {
    Mat4 b = Mat4::Identity();
    const double ch = std::cosh(rapidity), sh = std::sinh(rapidity);
    b(0, 0) = ch;
    for (int i = 0; i < 3; ++i) {
        b(0, i + 1) = sh * n(i);
        b(i + 1, 0) = sh * n(i);
        for (int j = 0; j < 3; ++j) b(i + 1, j + 1) += (ch - 1.0) * n(i) * n(j);
    }
    return b;
}

// Standard boost taking (1,0,0,0) to the unit-mass four-momentum p.
inline Mat4 standard_boost(const Vec4& p) {
    const Vec3 sp = p.tail<3>();
    const double norm = sp.norm();
    if (norm == 0.0) return Mat4::Identity();
    return pure_boost(std::asinh(norm), sp / norm);
}

// Spatial block of L^-1(Lambda p) Lambda L(p).
inline Eigen::Matrix3d wigner_rotation(double alpha, const Vec3& e, double delta, const Vec3& p_hat) {
    Vec4 p;
    p << std::cosh(delta), std::sinh(delta) * p_hat;
    const Mat4 lambda = pure_boost(alpha, e);
    const Vec4 lp = lambda * p;
    const Mat4 w = standard_boost(lp).inverse() * lambda * standard_boost(p);
    return w.block<3, 3>(1, 1);
}

struct HalfAngle {
    double cos_half;
    Vec3 axis_vector;  // sin(omega/2) u for rotation by omega about u
};

inline HalfAngle half_angle_of(const Eigen::Matrix3d& r) {
    const double c = std::sqrt(std::max(0.0, (r.trace() + 1.0) / 4.0));
    Vec3 v(r(2, 1) - r(1, 2), r(0, 2) - r(2, 0), r(1, 0) - r(0, 1));
    return {c, v / (4.0 * c)};
}

// The square-root form of the half-angle formulas, evaluated literally.
inline HalfAngle wigner_literal(double a, double d, const Vec3& e, const Vec3& p) {
    const double ep = e.dot(p);
    const double den = std::sqrt(0.5 + 0.5 * std::cosh(a) * std::cosh(d) + 0.5 * std::sinh(a) * std::sinh(d) * ep);
    const double c = (std::cosh(a / 2) * std::cosh(d / 2) + std::sinh(a / 2) * std::sinh(d / 2) * ep) / den;
    const Vec3 v = std::sinh(a / 2) * std::sinh(d / 2) * e.cross(p) / den;
    return {c, v};
}

// ---- random inputs --------------------------------------------------------

inline ComplexVector haar_vector(std::mt19937_64& rng, int dim) {
    std::normal_distribution<double> g;
    ComplexVector v(dim);
    for (int i = 0; i < dim; ++i) v(i) = Complex(g(rng), g(rng));
    return v / v.norm();
}

inline ComplexMatrix random_hermitian(std::mt19937_64& rng, int dim) {
    std::normal_distribution<double> g;
    ComplexMatrix m(dim, dim);
    for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j) m(i, j) = Complex(g(rng), g(rng));
    return 0.5 * (m + m.adjoint());
}

inline ComplexMatrix random_density(std::mt19937_64& rng, int dim) {
    std::normal_distribution<double> g;
    ComplexMatrix m(dim, dim);
    for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j) m(i, j) = Complex(g(rng), g(rng));
    ComplexMatrix rho = m * m.adjoint();
    return rho / rho.trace().real();
}

inline ComplexMatrix random_unitary(std::mt19937_64& rng, int dim) {
    std::normal_distribution<double> g;
    ComplexMatrix m(dim, dim);
    for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j) m(i, j) = Complex(g(rng), g(rng));
    Eigen::HouseholderQR<ComplexMatrix> qr(m);
    return qr.householderQ() * ComplexMatrix::Identity(dim, dim);
}

// Random point of the odd-parity simplex (Dirichlet(1,...,1)).
inline std::array<double, 16> random_odd_weights(std::mt19937_64& rng) {
    std::exponential_distribution<double> e(1.0);
    std::array<double, 16> q{};
    double s = 0.0;
    for (int i = 0; i < 16; i += 2) s += (q[static_cast<std::size_t>(i)] = e(rng));
    for (double& x : q) x /= s;
    return q;
}

// Random odd weights satisfying q1=q7, q3=q5, q9=q13, q11=q15, q_i <= 1/4.
inline std::array<double, 16> random_fr_weights(std::mt19937_64& rng) {
    std::exponential_distribution<double> e(1.0);
    for (;;) {
        std::array<double, 4> x{};
        double s = 0.0;
        for (double& v : x) s += (v = e(rng));
        bool ok = true;
        for (double& v : x) {
            v = v / s / 2.0;
            if (v > 0.25) ok = false;
        }
        if (!ok) continue;
        std::array<double, 16> q{};
        const int pairs[4][2] = {{1, 7}, {3, 5}, {9, 13}, {11, 15}};
        for (int k = 0; k < 4; ++k) {
            q[static_cast<std::size_t>(pairs[k][0] - 1)] = x[static_cast<std::size_t>(k)];
            q[static_cast<std::size_t>(pairs[k][1] - 1)] = x[static_cast<std::size_t>(k)];
        }
        return q;
    }
}

inline double max_abs(const ComplexMatrix& m) { return m.cwiseAbs().maxCoeff(); }

}  // namespace oracle
