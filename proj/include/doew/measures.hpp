#pragma once

// Entanglement quantifiers: von Neumann entropy of pure states, the
// Hilbert-Schmidt distance to the PPT edge and the associated optimal
// witness, closed-form witness values under the projected boost, and the
// generalized concurrence of boosted Phi^1.

#include "doew/operator_algebra.hpp"
#include "doew/states.hpp"
#include "doew/witness.hpp"

namespace doew {

// Eigenvalues below this are exact zeros in 0 log 0.
inline constexpr double kEntropyZero = 1e-14;

struct EntropyReport {
    RealVector eigenvalues;  // of the reduced state, ascending
    double entropy_bits = 0.0;
};

double entropy_bits(const RealVector& probabilities);

// Entropy of the reduced state (trace over particle A).
EntropyReport entropy_pure(const PureState16& state);

// kappa = cos^2(t1/2) cos^2(t2/2) / (cos^4(t1/2) + cos^4(t2/2)); 1/2 iff t1 = t2.
double kappa(double theta1, double theta2);

struct ReducedSpectrum {
    double lambda1;  // multiplicity 2, from cos^4(theta1/2)
    double lambda2;  // multiplicity 2, from cos^4(theta2/2)
};

// Reduced-state eigenvalues of the boosted odd Phi^i; lambda1 + lambda2 = 1/2.
ReducedSpectrum reduced_spectrum_formula(double theta1, double theta2);

double entropy_formula(double theta1, double theta2);

double hs_distance(const HermitianOperator& a, const HermitianOperator& b);

struct EdgeWitness {
    WitnessOperator w;
    double measure = 0.0;        // ||rho_edge - rho_ent||
    double value_on_ent = 0.0;   // Tr(rho_ent W), equals -measure
    double value_on_edge = 0.0;  // Tr(rho_edge W), equals 0
};

// W = (rho_edge - rho_ent - <rho_edge, rho_edge - rho_ent> 1) / ||rho_edge - rho_ent||.
EdgeWitness doew_from_edge(const HermitianOperator& rho_ent, const HermitianOperator& rho_edge);

// Cosine between the traceless parts of two operators.
double traceless_direction_cosine(const HermitianOperator& a, const HermitianOperator& b);

// 1 - Tr sqrt(rho~^T rho~) for the boosted odd mixture, in closed form:
// 1/2(1 - |b1-b2| - |b3-b4| - |b3+b4|) - (|b5-b6|+|b5+b6|+|b7-b8|+|b7+b8|) kappa.
double relativistic_witness_value(const MixtureWeights& weights, double theta1, double theta2);

// Tr[(I - 4|Phi^1><Phi^1|) rho_1] = 1 - 2q1 - 2q7 + 4(q7 - q1) kappa.
double phi1_witness_value(const MixtureWeights& weights, double theta1, double theta2);

struct Concurrence {
    double chi;
    double d;
    double lambda1;
    double lambda2;
    double witness_value;  // Tr[W rho] for boosted Phi^1, equals -chi
};

Concurrence generalized_concurrence(double theta1, double theta2);

// Inverts d = 4 sqrt(l1 l2) with l1 + l2 = 1/2; returns (larger, smaller).
ReducedSpectrum lambdas_from_concurrence(double d);

}  // namespace doew
