#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "doew/errors.hpp"
#include "doew/measures.hpp"
#include "doew/ppt.hpp"
#include "doew/relativity.hpp"
#include "oracles.hpp"

using namespace doew;

namespace {

constexpr double kPi = std::numbers::pi;

// -sum p log2 p over the eigenvalues of the trace over B, by index loops.
double oracle_entropy(const ComplexVector& psi) {
    const ComplexMatrix red = oracle::trace_out_b(psi * psi.adjoint());
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(red);
    double h = 0.0;
    for (double x : es.eigenvalues())
        if (x > 1e-15) h -= x * std::log2(x);
    return h;
}

}  // namespace

TEST_CASE("entropy_pure examples") {
    const EntropyReport product = entropy_pure(PureState16(oracle::ket2(0, 0)));
    CHECK(product.entropy_bits == 0.0);
    const EntropyReport phi = entropy_pure(phi_state(1));
    CHECK(std::abs(phi.entropy_bits - 2.0) <= 1e-10);
    CHECK(phi.eigenvalues.sum() == doctest::Approx(1.0));
    CHECK_THROWS_AS(PureState16(2.0 * oracle::ket2(0, 0)), InvalidArgument);

    std::mt19937_64 rng(51);
    for (int t = 0; t < 30; ++t) {
        const PureState16 s = PureState16::normalized(oracle::haar_vector(rng, 16));
        const EntropyReport r = entropy_pure(s);
        CHECK(r.entropy_bits >= 0.0);
        CHECK(r.entropy_bits <= 2.0 + 1e-12);
        CHECK(r.eigenvalues.sum() == doctest::Approx(1.0));
        CHECK(std::abs(r.entropy_bits - oracle_entropy(s.amplitudes())) <= 1e-10);
    }
}

TEST_CASE("entropy_formula examples") {
    CHECK(entropy_formula(0.0, 0.0) == doctest::Approx(2.0));
    for (double t : {0.5, 1.5, 3.0}) CHECK(std::abs(entropy_formula(t, t) - 2.0) <= 1e-12);
    const double off = entropy_formula(0.0, 2.0);
    CHECK(off < 2.0 - 1e-3);
    CHECK(std::abs(off - entropy_pure(relativistic_pure(1, 0.0, 2.0)).entropy_bits) <= 1e-10);
    CHECK_THROWS_AS(entropy_formula(kPi, kPi), DomainError);
    CHECK_THROWS_AS(generalized_concurrence(kPi, kPi), DomainError);
}

TEST_CASE("entropy_formula agrees with entropy_pure on the angle grid") {
    for (int i = 0; i < 20; ++i)
        for (int j = 0; j < 20; ++j) {
            const double t1 = 3.0 * i / 19, t2 = 3.0 * j / 19;
            for (int phi : {1, 3, 9})
                CHECK(std::abs(entropy_formula(t1, t2) - entropy_pure(relativistic_pure(phi, t1, t2)).entropy_bits) <=
                      1e-10);
        }
}

TEST_CASE("reduced spectrum formula matches the eigensolve") {
    for (auto [t1, t2] : {std::pair{0.3, 2.2}, {1.0, 1.0}, {2.9, 0.1}}) {
        const ReducedSpectrum l = reduced_spectrum_formula(t1, t2);
        CHECK(l.lambda1 + l.lambda2 == doctest::Approx(0.5));
        const RealVector ev = entropy_pure(relativistic_pure(1, t1, t2)).eigenvalues;
        RealVector expected(4);
        expected << l.lambda1, l.lambda1, l.lambda2, l.lambda2;
        std::sort(expected.begin(), expected.end());
        CHECK((ev - expected).cwiseAbs().maxCoeff() < 1e-12);
    }
}

TEST_CASE("entropy is invariant under local unitaries") {
    std::mt19937_64 rng(52);
    const PureState16 s = relativistic_pure(1, 0.2, 2.4);
    const double h = entropy_pure(s).entropy_bits;
    for (int t = 0; t < 100; ++t) {
        const PureState16 b = boost_pure(s, oracle::random_unitary(rng, 4), oracle::random_unitary(rng, 4));
        CHECK(std::abs(entropy_pure(b).entropy_bits - h) <= 1e-10);
    }
}

TEST_CASE("hs_distance") {
    const HermitianOperator phi = phi_state(1).density();
    const HermitianOperator mixed = HermitianOperator::identity(16) * (1.0 / 16);
    CHECK(hs_distance(phi, phi) == 0.0);
    CHECK(hs_distance(mixed, phi) == doctest::Approx(std::sqrt(15.0 / 16)));
    CHECK_THROWS_AS(hs_distance(phi, HermitianOperator::identity(4)), DimensionMismatch);

    std::mt19937_64 rng(53);
    for (int t = 0; t < 100; ++t) {
        const HermitianOperator a(oracle::random_density(rng, 16)), b(oracle::random_density(rng, 16)),
            c(oracle::random_density(rng, 16));
        CHECK(hs_distance(a, c) <= hs_distance(a, b) + hs_distance(b, c) + 1e-15);
        CHECK(hs_distance(a, b) == doctest::Approx(hs_distance(b, a)));
    }
}

TEST_CASE("doew_from_edge on rho1 and the PPT edge") {
    const HermitianOperator ent = build_mixture(MixtureWeights::pure(1));
    const HermitianOperator edge = edge_state(1);
    const EdgeWitness e = doew_from_edge(ent, edge);
    CHECK(std::abs(e.measure - hs_distance(edge, ent)) <= 1e-10);
    CHECK(e.value_on_ent < 0.0);
    CHECK(std::abs(e.value_on_ent + e.measure) <= 1e-10);
    CHECK(std::abs(e.value_on_edge) <= 1e-10);
    CHECK(std::abs(detect(e.w, edge)) <= 1e-10);
    // same detection sign as I - 4|Phi1><Phi1|, and a positively aligned direction
    CHECK(detect(phi1_witness(), ent) < 0.0);
    CHECK(traceless_direction_cosine(e.w.w, phi1_witness().w) > 0.5);

    CHECK_THROWS_AS(doew_from_edge(ent, ent), DomainError);
    CHECK_THROWS_AS(doew_from_edge(ent, HermitianOperator::identity(4)), DimensionMismatch);
}

TEST_CASE("doew_from_edge measure for perturbed edges") {
    std::mt19937_64 rng(54);
    const HermitianOperator edge = edge_state(1);
    for (int t = 0; t < 100; ++t) {
        ComplexMatrix pert = oracle::random_hermitian(rng, 16);
        pert -= (pert.trace() / 16.0) * ComplexMatrix::Identity(16, 16);
        const double eps = 1e-3 * (1 + t % 7);
        const HermitianOperator ent(edge.matrix() + eps * pert);
        const EdgeWitness e = doew_from_edge(ent, edge);
        CHECK(std::abs(e.measure - hs_distance(edge, ent)) <= 1e-10);
        CHECK(std::abs(e.measure - eps * pert.norm()) <= 1e-12);
        CHECK(std::abs(e.value_on_ent + e.measure) <= 1e-10);
        CHECK(std::abs(e.value_on_edge) <= 1e-10);
    }
}

TEST_CASE("kappa") {
    CHECK(kappa(0.0, 0.0) == 0.5);
    std::mt19937_64 rng(55);
    std::uniform_real_distribution<double> u(0.0, 3.1);
    for (int t = 0; t < 100; ++t) {
        const double a = u(rng), b = u(rng);
        CHECK(kappa(a, b) == doctest::Approx(oracle::kappa_literal(a, b)).epsilon(1e-13));
        CHECK(kappa(a, b) <= 0.5 + 1e-15);
        CHECK(kappa(a, a) == doctest::Approx(0.5).epsilon(1e-15));
    }
    CHECK(kappa(0.0, kPi) == doctest::Approx(0.0).epsilon(1e-12));
}

TEST_CASE("relativistic_witness_value") {
    CHECK(relativistic_witness_value(MixtureWeights::pure(1), 0.0, 0.0) == doctest::Approx(-3.0));
    CHECK(kkt_witness(build_mixture(MixtureWeights::pure(1))).coefficients.min_value == doctest::Approx(-3.0));

    std::array<double, 16> uniform{};
    for (int i = 0; i < 16; i += 2) uniform[static_cast<std::size_t>(i)] = 0.125;
    const MixtureWeights u(uniform, Parity::Odd);
    for (auto [t1, t2] : {std::pair{0.0, 0.0}, {0.5, 2.0}, {2.5, 1.0}}) {
        const double closed = relativistic_witness_value(u, t1, t2);
        CHECK(closed >= -1e-12);
        CHECK(std::abs(closed - kkt_witness(relativistic_mixture(u, t1, t2)).coefficients.min_value) <= 1e-9);
    }

    std::mt19937_64 rng(56);
    for (int t = 0; t < 10; ++t) {
        const MixtureWeights w(oracle::random_odd_weights(rng), Parity::Odd);
        const double rest = relativistic_witness_value(w, 0.0, 0.0);
        double previous = -1e300;
        for (int k = 0; k < 30; ++k) {
            const double t2 = 3.1 * k / 29;
            const double v = relativistic_witness_value(w, 0.0, t2);
            CHECK(v >= previous - 1e-15);
            CHECK(v >= rest - 1e-15);
            previous = v;
            CHECK(relativistic_witness_value(w, t2, t2) == doctest::Approx(rest).epsilon(1e-13));
        }
    }
    CHECK_THROWS_AS(relativistic_witness_value(MixtureWeights::pure(2), 0.0, 0.0), InvalidArgument);
}

TEST_CASE("phi1_witness_value") {
    const WitnessOperator w = phi1_witness();
    std::mt19937_64 rng(57);
    for (int t = 0; t < 10; ++t) {
        const MixtureWeights mw(oracle::random_odd_weights(rng), Parity::Odd);
        for (auto [t1, t2] : {std::pair{0.0, 0.0}, {0.5, 2.0}, {2.5, 1.0}})
            CHECK(std::abs(phi1_witness_value(mw, t1, t2) - detect(w, relativistic_mixture(mw, t1, t2))) <= 1e-12);
        CHECK(phi1_witness_value(mw, 0.0, 0.0) == doctest::Approx(1.0 - 4.0 * mw.q(1)));
    }
}

TEST_CASE("generalized_concurrence") {
    const Concurrence c0 = generalized_concurrence(0.0, 0.0);
    CHECK(c0.lambda1 == doctest::Approx(0.25));
    CHECK(c0.lambda2 == doctest::Approx(0.25));
    CHECK(c0.d == doctest::Approx(1.0));
    CHECK(c0.chi == doctest::Approx(3.0));
    CHECK(c0.witness_value == doctest::Approx(-3.0));
    CHECK(detect(phi1_witness(), phi_state(1).density()) == doctest::Approx(-3.0));

    const Concurrence edge = generalized_concurrence(0.0, kPi - 1e-6);
    CHECK(edge.lambda2 < 1e-20);
    CHECK(edge.d < 1e-10);
    CHECK(edge.chi == doctest::Approx(1.0));

    for (auto [t1, t2] : {std::pair{0.3, 2.2}, {1.0, 1.0}, {2.9, 0.1}, {0.0, 3.0}}) {
        const Concurrence c = generalized_concurrence(t1, t2);
        CHECK(c.lambda1 + c.lambda2 == doctest::Approx(0.5));
        CHECK(std::abs(-detect(phi1_witness(), relativistic_pure(1, t1, t2).density()) - c.chi) <= 1e-10);
        CHECK(c.d == doctest::Approx(2.0 * kappa(t1, t2)));
        const ReducedSpectrum back = lambdas_from_concurrence(c.d);
        CHECK(back.lambda1 == doctest::Approx(std::max(c.lambda1, c.lambda2)).epsilon(1e-9));
        CHECK(back.lambda2 == doctest::Approx(std::min(c.lambda1, c.lambda2)).epsilon(1e-6));
    }
    CHECK_THROWS_AS(lambdas_from_concurrence(1.5), DomainError);
}
