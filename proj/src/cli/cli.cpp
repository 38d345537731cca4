#include "doew/cli/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <fstream>
#include <memory>
#include <optional>
#include <set>

#include "doew/cli/json_io.hpp"
#include "doew/cli/sweep.hpp"
#include "doew/errors.hpp"
#include "doew/measures.hpp"
#include "doew/ppt.hpp"
#include "doew/relativity.hpp"
#include "doew/witness.hpp"

namespace doew::cli {

namespace {

// Reads --config files written in JSON with the same names as the flags.
// Objects under a subcommand name configure that subcommand; any other
// object value (e.g. inline weights) is handed over as its JSON text.
class JsonConfig : public CLI::Config {
public:
    explicit JsonConfig(std::set<std::string> sections) : sections_(std::move(sections)) {}

    std::string to_config(const CLI::App*, bool, bool, std::string) const override { return "{}"; }

    std::vector<CLI::ConfigItem> from_config(std::istream& in) const override {
        json j;
        try {
            j = json::parse(in);
        } catch (const json::exception& e) {
            throw CLI::ConfigError(std::string("config is not valid JSON: ") + e.what());
        }
        if (!j.is_object()) throw CLI::ConfigError("config must be a JSON object");
        std::vector<CLI::ConfigItem> items;
        flatten(j, {}, items);
        return items;
    }

private:
    static std::string scalar_text(const json& v) {
        if (v.is_string()) return v.get<std::string>();
        return v.dump();
    }

    void flatten(const json& j, const std::vector<std::string>& parents, std::vector<CLI::ConfigItem>& items) const {
        for (const auto& [key, value] : j.items()) {
            if (value.is_null()) continue;
            if (parents.empty() && kRecordOnly.count(key)) continue;
            if (value.is_object() && parents.empty() && sections_.count(key)) {
                flatten(value, {key}, items);
                continue;
            }
            CLI::ConfigItem item;
            item.parents = parents;
            item.name = key;
            if (value.is_array()) {
                for (const json& v : value) item.inputs.push_back(v.is_structured() ? v.dump() : scalar_text(v));
            } else if (value.is_object()) {
                item.inputs.push_back(value.dump());
            } else {
                item.inputs.push_back(scalar_text(value));
            }
            items.push_back(std::move(item));
        }
    }

    // Run-record members and flags that make no sense in a file.
    inline static const std::set<std::string> kRecordOnly{"tool", "version", "command", "args",
                                                          "columns", "rows", "help", "config"};

    std::set<std::string> sections_;
};

struct WeightsInput {
    std::string weights;
    int pure = 0;

    void add_to(CLI::App* app) {
        app->add_option("--weights", weights, "mixture weights: JSON file or inline JSON object");
        app->add_option("--pure", pure, "use the pure state Phi^i")->check(CLI::Range(1, 16));
    }

    bool given() const { return !weights.empty() || pure != 0; }

    MixtureWeights resolve() const {
        if (!weights.empty() && pure != 0) throw InvalidArgument("--weights and --pure are exclusive");
        if (pure != 0) return MixtureWeights::pure(pure);
        if (weights.empty()) throw InvalidArgument("weights required: --weights or --pure");
        return weights_from_json(load_json_argument(weights));
    }
};

struct AngleInput {
    double theta1 = 0.0;
    double theta2 = 0.0;
    double mixing = kBellTheta;

    void add_to(CLI::App* app) {
        app->add_option("--theta1", theta1, "effective Wigner angle for momentum p1 (rad)")->capture_default_str();
        app->add_option("--theta2", theta2, "effective Wigner angle for momentum p2 (rad)")->capture_default_str();
        app->add_option("--theta,--mixing", mixing, "mixing angle of the Phi^i states (rad)")->capture_default_str();
    }
};

struct Options {
    std::uint64_t seed = kDefaultSeed;

    // state
    int phi = 0;
    std::string bell;
    std::vector<int> pair;
    AngleInput state_angles;

    WeightsInput rho_weights, ppt_weights, witness_weights, measure_weights, sweep_weights;
    AngleInput rho_angles, ppt_angles, witness_angles, measure_angles;

    // boost
    double alpha = 0.0;
    std::vector<double> direction{0.0, 0.0, 1.0};
    double delta1 = 1.0, delta2 = 1.0, polar1 = 0.0, polar2 = 1.5707963267948966;
    int boost_phi = 0;
    std::string model = "projected";
    double boost_mixing = kBellTheta;

    // witness
    bool floor = false;
    std::size_t samples = 100000;
    std::size_t witness_jobs = 1;

    // measure
    int edge = 1;

    // sweep
    std::string param;
    double start = 0.0, stop = 3.0;
    std::size_t steps = 31;
    double sweep_theta1 = 0.0, sweep_theta2 = 0.0;
    std::optional<double> sweep_q1;
    std::vector<double> sweep_direction{0.0, 0.0, 1.0};
    double sweep_delta1 = 1.0, sweep_delta2 = 1.0, sweep_polar1 = 0.0, sweep_polar2 = 1.5707963267948966;
    double sweep_mixing = kBellTheta;
    std::string witness_kind = "phi1";
    std::vector<std::string> outputs{"witness_value", "entropy", "min_ppt_eigenvalue", "hs_measure"};
    std::size_t jobs = 1;
    std::string out_path;
    std::string record_path;
};

Vec3 to_vec3(const std::vector<double>& v) {
    if (v.size() != 3) throw InvalidArgument("direction needs three components");
    return Vec3(v[0], v[1], v[2]);
}

json floor_json(const SeparabilityFloor& f) {
    json j{{"samples", f.samples}, {"sampled_min", f.sampled_min}, {"refined_min", f.refined_min}};
    j["guaranteed_bound"] = std::isnan(f.guaranteed_bound) ? json(nullptr) : json(f.guaranteed_bound);
    return j;
}

json cmd_state(const Options& o) {
    if ((o.phi != 0) == !o.bell.empty()) throw InvalidArgument("state needs exactly one of --phi or --bell");
    json j;
    PureState16 s = [&] {
        if (o.phi != 0) {
            j["label"] = "phi" + std::to_string(o.phi);
            return phi_state(o.phi, o.state_angles.mixing);
        }
        if (o.pair.size() != 2) throw InvalidArgument("--bell needs --pair a b");
        j["label"] = o.bell + "(" + std::to_string(o.pair[0]) + "," + std::to_string(o.pair[1]) + ")";
        return two_particle_bell(parse_bell_kind(o.bell), o.pair[0], o.pair[1]);
    }();
    if (o.state_angles.theta1 != 0.0 || o.state_angles.theta2 != 0.0) {
        const ComplexMatrix k = angle_filter(o.state_angles.theta1, o.state_angles.theta2);
        s = project_pure(s, k, k);
        j["theta1"] = o.state_angles.theta1;
        j["theta2"] = o.state_angles.theta2;
    }
    if (o.phi != 0) j["theta"] = o.state_angles.mixing;
    j["amplitudes"] = to_json(s.amplitudes());
    j["norm"] = s.amplitudes().norm();
    return j;
}

json cmd_rho(const Options& o) {
    const MixtureWeights w = o.rho_weights.resolve();
    const AngleInput& a = o.rho_angles;
    const HermitianOperator rho = relativistic_mixture(w, a.theta1, a.theta2, a.mixing);
    return {{"weights", weights_to_json(w)},
            {"theta1", a.theta1},
            {"theta2", a.theta2},
            {"theta", a.mixing},
            {"trace", rho.trace()},
            {"purity", hs_inner(rho.matrix(), rho.matrix()).real()},
            {"eigenvalues", to_json(eigenvalues(rho))},
            {"matrix", to_json(rho.matrix())}};
}

json cmd_boost(const Options& o) {
    const BoostParameters boost{o.alpha, to_vec3(o.direction)};
    const ParticleKinematics p[2] = {ParticleKinematics::in_yz_plane(o.delta1, o.polar1),
                                     ParticleKinematics::in_yz_plane(o.delta2, o.polar2)};
    json j{{"alpha", o.alpha}, {"direction", o.direction}, {"model", o.model}};
    WignerRotation d[2];
    json particles = json::array();
    for (int k = 0; k < 2; ++k) {
        const WignerHalfAngle h = wigner_half_angle(boost, p[k]);
        d[k] = wigner_matrix(h);
        particles.push_back({{"delta", p[k].delta},
                             {"momentum_direction", {p[k].direction.x(), p[k].direction.y(), p[k].direction.z()}},
                             {"cos_half", h.cos_half},
                             {"sin_half_axis", {h.sin_half_axis.x(), h.sin_half_axis.y(), h.sin_half_axis.z()}},
                             {"omega", h.omega()},
                             {"d_matrix", to_json(ComplexMatrix(d[k].d))}});
    }
    j["particles"] = particles;
    j["effective_angles"] = {d[0].omega, d[1].omega};
    j["kappa"] = kappa(d[0].omega, d[1].omega);
    if (o.boost_phi != 0) {
        const PureState16 s = phi_state(o.boost_phi, o.boost_mixing);
        PureState16 b = s;
        if (o.model == "unitary") {
            const ComplexMatrix u = single_particle_boost_unitary(d[0], d[1]);
            b = boost_pure(s, u, u);
        } else {
            const ComplexMatrix k = projected_boost_operator(d[0], d[1]);
            b = project_pure(s, k, k);
        }
        j["state"] = {{"phi", o.boost_phi},
                      {"amplitudes", to_json(b.amplitudes())},
                      {"entropy_bits", entropy_pure(b).entropy_bits},
                      {"witness_value", detect(phi1_witness(o.boost_mixing), b.density())}};
    }
    return j;
}

json cmd_ppt(const Options& o) {
    const MixtureWeights w = o.ppt_weights.resolve();
    const AngleInput& a = o.ppt_angles;
    const HermitianOperator rho = relativistic_mixture(w, a.theta1, a.theta2, a.mixing);
    json j{{"weights", weights_to_json(w)},
           {"theta1", a.theta1},
           {"theta2", a.theta2},
           {"spectrum_a", to_json(ppt_spectrum(rho, Party::A))},
           {"spectrum_b", to_json(ppt_spectrum(rho, Party::B))},
           {"min_eigenvalue", min_ppt_eigenvalue(rho)}};
    j["is_ppt"] = j["min_eigenvalue"].get<double>() >= -kPptTolerance;
    if (w.parity() == Parity::Odd && a.mixing == kBellTheta) {
        const FeasibleRegionReport r = feasible_region_check(w);
        json eq = json::array(), ineq = json::array();
        for (const auto& c : r.equalities) eq.push_back({{"id", c.id}, {"residual", c.value}});
        for (const auto& c : r.inequalities) ineq.push_back({{"id", c.id}, {"margin", c.value}});
        j["feasible_region"] = {{"equalities", eq}, {"inequalities", ineq}, {"is_ppt", r.is_ppt}};
        j["closed_form_spectrum"] = to_json(ppt_closed_form_spectrum(w, a.theta1, a.theta2));
    }
    return j;
}

json cmd_witness(const Options& o) {
    const MixtureWeights w = o.witness_weights.resolve();
    const AngleInput& a = o.witness_angles;
    const HermitianOperator rho = relativistic_mixture(w, a.theta1, a.theta2, a.mixing);
    const KktWitness k = kkt_witness(rho);
    const double min_value = k.coefficients.min_value;
    json j{{"weights", weights_to_json(w)},
           {"theta1", a.theta1},
           {"theta2", a.theta2},
           {"min_value", min_value},
           {"detect", detect(k.witness, rho)},
           {"verdict", min_value < -kDefaultTolerance ? "entangled" : "not detected"},
           {"a_matrix", to_json(k.coefficients.a)},
           {"w_spectrum", to_json(eigenvalues(k.witness.w))}};
    json warnings = json::array();
    if (w.parity() == Parity::Odd && a.mixing == kBellTheta) {
        json closed{{"value", relativistic_witness_value(w, a.theta1, a.theta2)}};
        try {
            const RealMatrix table = coefficient_table(w);
            closed["coefficient_table_max_deviation"] = (table - k.coefficients.a).cwiseAbs().maxCoeff();
        } catch (const TieError& e) {
            warnings.push_back(std::string(e.what()) + "; using the KKT construction");
            closed["coefficient_table_max_deviation"] = nullptr;
        }
        j["closed_form"] = closed;
    }
    j["warnings"] = warnings;
    if (o.floor) {
        FloorOptions f;
        f.samples = o.samples;
        f.seed = o.seed;
        f.workers = o.witness_jobs;
        j["floor"] = floor_json(separability_floor_check(k.coefficients.a, f));
        j["seed"] = o.seed;
    }
    return j;
}

json cmd_measure(const Options& o) {
    const MixtureWeights w = o.measure_weights.resolve();
    const AngleInput& a = o.measure_angles;
    const HermitianOperator rho = relativistic_mixture(w, a.theta1, a.theta2, a.mixing);
    const HermitianOperator edge = relativistic_mixture(edge_weights(o.edge), a.theta1, a.theta2, a.mixing);
    json j{{"weights", weights_to_json(w)}, {"theta1", a.theta1}, {"theta2", a.theta2}, {"edge", o.edge}};

    int support = 0, single = 0;
    for (int i = 1; i <= 16; ++i)
        if (w.q(i) > 0.0) ++support, single = i;
    if (support == 1) {
        const EntropyReport r = entropy_pure(relativistic_pure(single, a.theta1, a.theta2, a.mixing));
        j["entropy"] = {{"eigenvalues", to_json(r.eigenvalues)}, {"entropy_bits", r.entropy_bits}};
    } else {
        j["entropy"] = nullptr;
    }
    j["entropy_formula_bits"] = entropy_formula(a.theta1, a.theta2);
    j["hs_measure"] = hs_distance(rho, edge);
    try {
        const EdgeWitness e = doew_from_edge(rho, edge);
        j["doew"] = {{"measure", e.measure},
                     {"value_on_state", e.value_on_ent},
                     {"value_on_edge", e.value_on_edge},
                     {"direction_cosine_phi1", traceless_direction_cosine(e.w.w, phi1_witness(a.mixing).w)}};
    } catch (const DomainError&) {
        j["doew"] = nullptr;  // the state is the edge itself
    }
    const Concurrence c = generalized_concurrence(a.theta1, a.theta2);
    j["concurrence"] = {{"chi", c.chi},
                        {"d", c.d},
                        {"lambda1", c.lambda1},
                        {"lambda2", c.lambda2},
                        {"witness_value", c.witness_value}};
    return j;
}

SweepSpec sweep_spec(const Options& o) {
    SweepSpec s;
    s.parameter = parse_sweep_parameter(o.param);
    s.start = o.start;
    s.stop = o.stop;
    s.steps = o.steps;
    s.theta1 = o.sweep_theta1;
    s.theta2 = o.sweep_theta2;
    s.direction = to_vec3(o.sweep_direction);
    s.delta1 = o.sweep_delta1;
    s.delta2 = o.sweep_delta2;
    s.polar1 = o.sweep_polar1;
    s.polar2 = o.sweep_polar2;
    s.mixing = o.sweep_mixing;
    s.witness = parse_sweep_witness(o.witness_kind);
    if (o.sweep_q1 && o.sweep_weights.given()) throw InvalidArgument("--q1 and weights are exclusive");
    if (o.sweep_q1) s.weights = fr_family(*o.sweep_q1);
    if (o.sweep_weights.given()) s.weights = o.sweep_weights.resolve();
    s.outputs.clear();
    for (const auto& name : o.outputs) s.outputs.push_back(parse_sweep_output(name));
    return s;
}

// The sweep section of a record, in the same schema as the flags.
json sweep_echo(const Options& o, const SweepSpec& s) {
    json j{{"param", o.param},       {"start", o.start},         {"stop", o.stop},
           {"steps", o.steps},       {"theta1", o.sweep_theta1}, {"theta2", o.sweep_theta2},
           {"direction", o.sweep_direction},
           {"delta1", o.sweep_delta1}, {"delta2", o.sweep_delta2}, {"polar1", o.sweep_polar1},
           {"polar2", o.sweep_polar2}, {"theta", o.sweep_mixing},  {"witness", o.witness_kind},
           {"outputs", o.outputs}};
    if (o.sweep_q1) j["q1"] = *o.sweep_q1;
    else if (s.weights) j["weights"] = weights_to_json(*s.weights);
    return j;
}

int cmd_sweep(const Options& o, const std::vector<std::string>& args, std::ostream& out) {
    const SweepSpec spec = sweep_spec(o);
    const std::vector<SweepRow> rows = run_sweep(spec, o.jobs);
    if (o.out_path.empty()) {
        write_csv(out, spec, rows);
    } else {
        std::ofstream f(o.out_path);
        if (!f) throw InvalidArgument("cannot write '" + o.out_path + "'");
        write_csv(f, spec, rows);
    }
    if (!o.record_path.empty()) {
        json rec{{"tool", kToolName}, {"version", kToolVersion}, {"seed", o.seed}, {"command", "sweep"},
                 {"args", args},      {"sweep", sweep_echo(o, spec)}, {"columns", csv_columns(spec)}};
        json data = json::array();
        for (const SweepRow& r : rows) data.push_back(csv_values(spec, r));
        rec["rows"] = data;
        std::ofstream f(o.record_path);
        if (!f) throw InvalidArgument("cannot write '" + o.record_path + "'");
        f << rec.dump(2) << '\n';
    }
    return kSuccess;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Options o;
    CLI::App app{"Decomposable optimal entanglement witnesses for boosted two-particle spin-momentum states",
                 kToolName};
    app.set_version_flag("--version", kToolVersion);
    app.set_config("--config", "", "JSON file with option values, same names as the flags");
    app.config_formatter(std::make_shared<JsonConfig>(
        std::set<std::string>{"state", "rho", "boost", "ppt", "witness", "measure", "sweep"}));
    app.add_option("--seed", o.seed, "seed for all sampling")->capture_default_str();
    app.require_subcommand(1);

    auto* state = app.add_subcommand("state", "amplitudes of Phi^i or a two-particle Bell state");
    state->add_option("--phi", o.phi, "index of Phi^i")->check(CLI::Range(1, 16));
    state->add_option("--bell", o.bell, "psi+, psi-, phi+ or phi-")
        ->check(CLI::IsMember({"psi+", "psi-", "phi+", "phi-"}));
    state->add_option("--pair", o.pair, "pair of one-particle Bell indices")->expected(2);
    o.state_angles.add_to(state);

    auto* rho = app.add_subcommand("rho", "density matrix of a (boosted) mixture");
    o.rho_weights.add_to(rho);
    o.rho_angles.add_to(rho);

    auto* boost = app.add_subcommand("boost", "Wigner rotations for a boost and two momenta in the yz-plane");
    boost->add_option("--alpha", o.alpha, "observer rapidity")->required()->check(CLI::NonNegativeNumber);
    boost->add_option("--direction", o.direction, "boost direction (unit vector)")->expected(3);
    boost->add_option("--delta1", o.delta1, "rapidity of momentum p1")->check(CLI::NonNegativeNumber);
    boost->add_option("--delta2", o.delta2, "rapidity of momentum p2")->check(CLI::NonNegativeNumber);
    boost->add_option("--polar1", o.polar1, "polar angle of p1 in the yz-plane");
    boost->add_option("--polar2", o.polar2, "polar angle of p2 in the yz-plane");
    boost->add_option("--phi", o.boost_phi, "also boost Phi^i")->check(CLI::Range(1, 16));
    boost->add_option("--model", o.model, "projected or unitary")->check(CLI::IsMember({"projected", "unitary"}));
    boost->add_option("--theta,--mixing", o.boost_mixing, "mixing angle of Phi^i");

    auto* ppt = app.add_subcommand("ppt", "partial-transpose spectra and the feasible-region constraints");
    o.ppt_weights.add_to(ppt);
    o.ppt_angles.add_to(ppt);

    auto* witness = app.add_subcommand("witness", "KKT witness, coefficient table and detection verdict");
    o.witness_weights.add_to(witness);
    o.witness_angles.add_to(witness);
    witness->add_flag("--floor", o.floor, "sample the separability floor of the witness");
    witness->add_option("--samples", o.samples, "product states sampled by --floor")->check(CLI::PositiveNumber);
    witness->add_option("--jobs", o.witness_jobs, "sampling threads")->check(CLI::PositiveNumber);

    auto* measure = app.add_subcommand("measure", "entropy, Hilbert-Schmidt measure and generalized concurrence");
    o.measure_weights.add_to(measure);
    o.measure_angles.add_to(measure);
    measure->add_option("--edge", o.edge, "index saturated by the PPT edge state")
        ->check(CLI::IsMember({1, 3, 5, 7, 9, 11, 13, 15}));

    auto* sweep = app.add_subcommand("sweep", "one-parameter sweep written as CSV");
    sweep->add_option("--param", o.param, "theta1, theta2, alpha or q1")
        ->required()
        ->check(CLI::IsMember({"theta1", "theta2", "alpha", "q1"}));
    sweep->add_option("--start", o.start)->capture_default_str();
    sweep->add_option("--stop", o.stop)->capture_default_str();
    sweep->add_option("--steps", o.steps)->capture_default_str();
    sweep->add_option("--theta1", o.sweep_theta1, "fixed theta1");
    sweep->add_option("--theta2", o.sweep_theta2, "fixed theta2");
    sweep->add_option("--q1", o.sweep_q1, "fixed q1: use the feasible-region family fr_family(q1)");
    sweep->add_option("--direction", o.sweep_direction, "boost direction for alpha sweeps")->expected(3);
    sweep->add_option("--delta1", o.sweep_delta1);
    sweep->add_option("--delta2", o.sweep_delta2);
    sweep->add_option("--polar1", o.sweep_polar1);
    sweep->add_option("--polar2", o.sweep_polar2);
    sweep->add_option("--theta,--mixing", o.sweep_mixing, "mixing angle of the Phi^i states");
    o.sweep_weights.add_to(sweep);
    sweep->add_option("--witness", o.witness_kind, "phi1 or optimal")->check(CLI::IsMember({"phi1", "optimal"}));
    sweep->add_option("--outputs", o.outputs, "witness_value, entropy, min_ppt_eigenvalue, hs_measure")
        ->check(CLI::IsMember({"witness_value", "entropy", "min_ppt_eigenvalue", "hs_measure"}));
    sweep->add_option("--jobs", o.jobs, "worker threads")->check(CLI::PositiveNumber);
    sweep->add_option("--out", o.out_path, "CSV file (default: standard output)");
    sweep->add_option("--record", o.record_path, "JSON run record");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(std::move(reversed));
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kSuccess : kUsageError;
    }

    try {
        if (sweep->parsed()) return cmd_sweep(o, args, out);
        json result;
        if (state->parsed()) result = cmd_state(o);
        if (rho->parsed()) result = cmd_rho(o);
        if (boost->parsed()) result = cmd_boost(o);
        if (ppt->parsed()) result = cmd_ppt(o);
        if (witness->parsed()) result = cmd_witness(o);
        if (measure->parsed()) result = cmd_measure(o);
        out << result.dump(2) << '\n';
        return kSuccess;
    } catch (const json::exception& e) {
        err << "error: malformed JSON: " << e.what() << '\n';
        return kUsageError;
    } catch (const InvalidArgument& e) {
        err << "error: " << e.what() << '\n';
        return kUsageError;
    } catch (const DomainError& e) {
        err << "error: " << e.what() << '\n';
        return kDomainFailure;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kDomainFailure;
    }
}

}  // namespace doew::cli
