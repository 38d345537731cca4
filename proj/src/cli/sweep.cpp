#include "doew/cli/sweep.hpp"

#include <atomic>
#include <cmath>
#include <cstdio>
#include <exception>
#include <mutex>
#include <thread>

#include "doew/errors.hpp"
#include "doew/measures.hpp"
#include "doew/ppt.hpp"
#include "doew/witness.hpp"

namespace doew::cli {

SweepParameter parse_sweep_parameter(const std::string& s) {
    if (s == "theta1") return SweepParameter::Theta1;
    if (s == "theta2") return SweepParameter::Theta2;
    if (s == "alpha") return SweepParameter::Alpha;
    if (s == "q1") return SweepParameter::Q1;
    throw InvalidArgument("unknown sweep parameter '" + s + "'");
}

SweepOutput parse_sweep_output(const std::string& s) {
    if (s == "witness_value") return SweepOutput::WitnessValue;
    if (s == "entropy") return SweepOutput::Entropy;
    if (s == "hs_measure") return SweepOutput::HsMeasure;
    if (s == "min_ppt_eigenvalue") return SweepOutput::MinPptEigenvalue;
    throw InvalidArgument("unknown sweep output '" + s + "'");
}

SweepWitness parse_sweep_witness(const std::string& s) {
    if (s == "phi1") return SweepWitness::Phi1;
    if (s == "optimal") return SweepWitness::Optimal;
    throw InvalidArgument("unknown witness '" + s + "'");
}

std::string to_string(SweepParameter p) {
    switch (p) {
        case SweepParameter::Theta1: return "theta1";
        case SweepParameter::Theta2: return "theta2";
        case SweepParameter::Alpha: return "alpha";
        case SweepParameter::Q1: return "q1";
    }
    return "";
}

std::string to_string(SweepOutput o) {
    switch (o) {
        case SweepOutput::WitnessValue: return "witness_value";
        case SweepOutput::Entropy: return "entropy";
        case SweepOutput::HsMeasure: return "hs_measure";
        case SweepOutput::MinPptEigenvalue: return "min_ppt_eigenvalue";
    }
    return "";
}

std::string to_string(SweepWitness w) { return w == SweepWitness::Phi1 ? "phi1" : "optimal"; }

void SweepSpec::validate() const {
    if (steps < 2) throw InvalidArgument("sweep needs at least 2 steps");
    if (!std::isfinite(start) || !std::isfinite(stop) || !(start < stop))
        throw InvalidArgument("sweep range needs finite start < stop");
    for (double x : {theta1, theta2, delta1, delta2, polar1, polar2, mixing})
        if (!std::isfinite(x)) throw InvalidArgument("sweep values must be finite");
    if (delta1 < 0.0 || delta2 < 0.0) throw InvalidArgument("rapidities must be >= 0");
    if (parameter == SweepParameter::Alpha && start < 0.0) throw InvalidArgument("alpha range must be >= 0");
    if (parameter == SweepParameter::Q1 && (start < 0.0 || stop > 0.5))
        throw InvalidArgument("q1 range must lie in [0, 1/2]");
    if (std::abs(direction.norm() - 1.0) > 1e-12) throw InvalidArgument("boost direction must be a unit vector");
    if (outputs.empty()) throw InvalidArgument("sweep needs at least one output");
    const bool needs_odd = witness == SweepWitness::Optimal && parameter != SweepParameter::Q1;
    if (needs_odd && weights && weights->parity() != Parity::Odd)
        throw InvalidArgument("the optimal witness needs odd-parity weights");
}

double SweepSpec::grid_value(std::size_t k) const {
    if (k + 1 == steps) return stop;
    return start + (stop - start) * static_cast<double>(k) / static_cast<double>(steps - 1);
}

SweepRow evaluate_row(const SweepSpec& spec, double value) {
    SweepRow row;
    row.parameter = value;
    row.theta1 = spec.theta1;
    row.theta2 = spec.theta2;
    MixtureWeights weights = spec.weights.value_or(MixtureWeights::pure(1));
    switch (spec.parameter) {
        case SweepParameter::Theta1: row.theta1 = value; break;
        case SweepParameter::Theta2: row.theta2 = value; break;
        case SweepParameter::Alpha: {
            const auto [o1, o2] = effective_angles({value, spec.direction},
                                                   ParticleKinematics::in_yz_plane(spec.delta1, spec.polar1),
                                                   ParticleKinematics::in_yz_plane(spec.delta2, spec.polar2));
            row.theta1 = o1;
            row.theta2 = o2;
            break;
        }
        case SweepParameter::Q1: weights = fr_family(value); break;
    }

    const HermitianOperator rho = relativistic_mixture(weights, row.theta1, row.theta2, spec.mixing);
    for (SweepOutput o : spec.outputs) {
        switch (o) {
            case SweepOutput::WitnessValue:
                if (spec.witness == SweepWitness::Phi1) {
                    row.witness_closed_form = phi1_witness_value(weights, row.theta1, row.theta2);
                    row.witness_numeric = detect(phi1_witness(spec.mixing), rho);
                } else {
                    row.witness_closed_form = relativistic_witness_value(weights, row.theta1, row.theta2);
                    row.witness_numeric = kkt_witness(rho).coefficients.min_value;
                }
                break;
            case SweepOutput::Entropy:
                row.entropy_bits = entropy_pure(relativistic_pure(1, row.theta1, row.theta2, spec.mixing)).entropy_bits;
                break;
            case SweepOutput::HsMeasure:
                row.hs_measure =
                    hs_distance(rho, relativistic_mixture(edge_weights(1), row.theta1, row.theta2, spec.mixing));
                break;
            case SweepOutput::MinPptEigenvalue: row.min_ppt_eig = min_ppt_eigenvalue(rho); break;
        }
    }
    return row;
}

std::vector<SweepRow> run_sweep(const SweepSpec& spec, std::size_t jobs) {
    spec.validate();
    std::vector<SweepRow> rows(spec.steps);
    jobs = std::max<std::size_t>(1, std::min(jobs, spec.steps));
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    auto work = [&] {
        for (;;) {
            const std::size_t k = next.fetch_add(1);
            if (k >= spec.steps) return;
            try {
                rows[k] = evaluate_row(spec, spec.grid_value(k));
            } catch (...) {
                std::lock_guard lock(failure_mutex);
                if (!failure) failure = std::current_exception();
                next = spec.steps;
            }
        }
    };
    if (jobs == 1) {
        work();
    } else {
        std::vector<std::thread> threads;
        for (std::size_t j = 0; j < jobs; ++j) threads.emplace_back(work);
        for (auto& t : threads) t.join();
    }
    if (failure) std::rethrow_exception(failure);
    return rows;
}

std::vector<std::string> csv_columns(const SweepSpec& spec) {
    std::vector<std::string> cols{to_string(spec.parameter)};
    for (SweepOutput o : spec.outputs) {
        switch (o) {
            case SweepOutput::WitnessValue:
                cols.emplace_back("witness_value_closed_form");
                cols.emplace_back("witness_value_numeric");
                break;
            case SweepOutput::Entropy: cols.emplace_back("entropy_bits"); break;
            case SweepOutput::MinPptEigenvalue: cols.emplace_back("min_ppt_eig"); break;
            case SweepOutput::HsMeasure: cols.emplace_back("hs_measure"); break;
        }
    }
    return cols;
}

std::vector<double> csv_values(const SweepSpec& spec, const SweepRow& row) {
    std::vector<double> values{row.parameter};
    for (SweepOutput o : spec.outputs) {
        switch (o) {
            case SweepOutput::WitnessValue:
                values.push_back(row.witness_closed_form);
                values.push_back(row.witness_numeric);
                break;
            case SweepOutput::Entropy: values.push_back(row.entropy_bits); break;
            case SweepOutput::MinPptEigenvalue: values.push_back(row.min_ppt_eig); break;
            case SweepOutput::HsMeasure: values.push_back(row.hs_measure); break;
        }
    }
    return values;
}

std::string format_double(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

void write_csv(std::ostream& out, const SweepSpec& spec, const std::vector<SweepRow>& rows) {
    const auto cols = csv_columns(spec);
    for (std::size_t i = 0; i < cols.size(); ++i) out << (i ? "," : "") << cols[i];
    out << '\n';
    for (const SweepRow& row : rows) {
        const auto values = csv_values(spec, row);
        for (std::size_t i = 0; i < values.size(); ++i) out << (i ? "," : "") << format_double(values[i]);
        out << '\n';
    }
}

}  // namespace doew::cli
