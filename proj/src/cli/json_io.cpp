#include "doew/cli/json_io.hpp"

#include <fstream>
#include <sstream>

#include "doew/errors.hpp"

namespace doew::cli {

json to_json(Complex z) { return json::array({z.real(), z.imag()}); }

json to_json(const ComplexVector& v) {
    json out = json::array();
    for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back(to_json(v(i)));
    return out;
}

json to_json(const ComplexMatrix& m) {
    json out = json::array();
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
        json row = json::array();
        for (Eigen::Index c = 0; c < m.cols(); ++c) row.push_back(to_json(m(r, c)));
        out.push_back(std::move(row));
    }
    return out;
}

json to_json(const RealVector& v) { return json(std::vector<double>(v.begin(), v.end())); }

json to_json(const RealMatrix& m) {
    json out = json::array();
    for (Eigen::Index r = 0; r < m.rows(); ++r) out.push_back(to_json(RealVector(m.row(r).transpose())));
    return out;
}

MixtureWeights weights_from_json(const json& j) {
    if (!j.is_object() || !j.contains("q")) throw InvalidArgument("weights JSON needs a \"q\" member");
    const Parity parity = j.contains("parity") ? parse_parity(j.at("parity").get<std::string>()) : Parity::Free;
    const json& q = j.at("q");
    if (q.is_array()) {
        if (q.size() != 16) throw InvalidArgument("weights \"q\" array must have 16 entries");
        std::array<double, 16> values{};
        for (std::size_t i = 0; i < 16; ++i) values[i] = q.at(i).get<double>();
        return MixtureWeights(values, parity);
    }
    if (!q.is_object()) throw InvalidArgument("weights \"q\" must be an object or an array");
    std::map<int, double> values;
    for (const auto& [key, value] : q.items()) {
        std::size_t used = 0;
        int index = 0;
        try {
            index = std::stoi(key, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used != key.size()) throw InvalidArgument("weights key '" + key + "' is not an index");
        values[index] = value.get<double>();
    }
    return MixtureWeights(values, parity);
}

json weights_to_json(const MixtureWeights& w) {
    json q = json::object();
    for (int i = 1; i <= 16; ++i)
        if (w.q(i) != 0.0) q[std::to_string(i)] = w.q(i);
    return {{"q", q}, {"parity", to_string(w.parity())}};
}

json load_json_argument(const std::string& text) {
    const auto first = text.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && text[first] == '{') return json::parse(text);
    std::ifstream in(text);
    if (!in) throw InvalidArgument("cannot open JSON file '" + text + "'");
    return json::parse(in);
}

}  // namespace doew::cli
