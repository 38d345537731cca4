#pragma once

// One-parameter sweeps over boost angles, observer rapidity or the
// feasible-region weight q1, producing one CSV row per grid point.

#include <cstddef>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "doew/relativity.hpp"
#include "doew/states.hpp"

namespace doew::cli {

enum class SweepParameter { Theta1, Theta2, Alpha, Q1 };
enum class SweepOutput { WitnessValue, Entropy, HsMeasure, MinPptEigenvalue };
// Phi1: I - 4|Phi1><Phi1| (closed form vs Tr[W rho]).
// Optimal: relativistic_witness_value vs kkt_witness min_value.
enum class SweepWitness { Phi1, Optimal };

SweepParameter parse_sweep_parameter(const std::string& s);
SweepOutput parse_sweep_output(const std::string& s);
SweepWitness parse_sweep_witness(const std::string& s);
std::string to_string(SweepParameter p);
std::string to_string(SweepOutput o);
std::string to_string(SweepWitness w);

struct SweepSpec {
    SweepParameter parameter = SweepParameter::Theta2;
    double start = 0.0;
    double stop = 3.0;
    std::size_t steps = 31;

    // Fixed values; the swept one is ignored.
    double theta1 = 0.0;
    double theta2 = 0.0;
    // Kinematics for alpha sweeps: boost along e, momenta in the yz-plane.
    Vec3 direction = Vec3::UnitZ();
    double delta1 = 1.0;
    double delta2 = 1.0;
    double polar1 = 0.0;
    double polar2 = 1.5707963267948966;

    std::optional<MixtureWeights> weights;  // default: pure Phi^1; replaced by fr_family(q1) in q1 sweeps
    double mixing = kBellTheta;
    SweepWitness witness = SweepWitness::Phi1;
    std::vector<SweepOutput> outputs{SweepOutput::WitnessValue, SweepOutput::Entropy, SweepOutput::MinPptEigenvalue,
                                     SweepOutput::HsMeasure};

    void validate() const;
    double grid_value(std::size_t k) const;
};

struct SweepRow {
    double parameter = 0.0;
    double theta1 = 0.0;
    double theta2 = 0.0;
    double witness_closed_form = 0.0;
    double witness_numeric = 0.0;
    double entropy_bits = 0.0;
    double min_ppt_eig = 0.0;
    double hs_measure = 0.0;
};

SweepRow evaluate_row(const SweepSpec& spec, double value);

// Rows come back in grid order whatever the number of jobs.
std::vector<SweepRow> run_sweep(const SweepSpec& spec, std::size_t jobs = 1);

std::vector<std::string> csv_columns(const SweepSpec& spec);
std::vector<double> csv_values(const SweepSpec& spec, const SweepRow& row);
void write_csv(std::ostream& out, const SweepSpec& spec, const std::vector<SweepRow>& rows);

// %.17g
std::string format_double(double x);

}  // namespace doew::cli
