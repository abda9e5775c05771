#include "tailspec/json_io.hpp"

#include <json.hpp>

#include <cstdio>
#include <stdexcept>

namespace tailspec {

namespace {

using json = nlohmann::ordered_json;

json graph_to_value(const Graph& g) {
    json j;
    j["n"] = g.n;
    json edges = json::array();
    for (const auto& [a, b] : g.edges) edges.push_back(json::array({a, b}));
    j["edges"] = std::move(edges);
    if (g.anchor) j["anchor"] = *g.anchor;
    return j;
}

const char* side_name(BandSide s) {
    return s == BandSide::above ? "above-band" : "below-band";
}

json record_to_value(const EigenvalueRecord& rec) {
    json j;
    j["lambda"] = rec.lambda;
    j["x"] = rec.x;
    j["side"] = side_name(rec.side);
    j["residual"] = rec.residual;
    j["near_band"] = rec.near_band;
    return j;
}

json truncation_to_value(const TruncationReport& r) {
    json j;
    j["L"] = r.L;
    j["total_dim"] = r.total_dim;
    j["margin"] = r.margin;
    j["outliers"] = r.outliers;
    j["predicted"] = r.predicted;
    j["max_abs_error"] = r.max_abs_error;
    j["band_fill"] = r.band_fill;
    j["eigenvalues"] = r.eigenvalues;
    return j;
}

void flatten(const json& v, const std::string& path, std::string& out) {
    if (v.is_object()) {
        for (const auto& [key, child] : v.items())
            flatten(child, path.empty() ? key : path + "." + key, out);
    } else if (v.is_array()) {
        size_t idx = 0;
        for (const auto& child : v)
            flatten(child, path + "[" + std::to_string(idx++) + "]", out);
    } else {
        out += path;
        out += ",";
        out += v.is_string() ? v.get<std::string>() : v.dump();
        out += "\n";
    }
}

std::string fmt17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

}  // namespace

std::string to_json(const Graph& g) { return graph_to_value(g).dump(); }

Graph graph_from_json(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw std::invalid_argument(std::string("graph_from_json: ") + e.what());
    }
    if (!j.is_object() || !j.contains("n") || !j["n"].is_number_integer())
        throw std::invalid_argument("graph_from_json: missing integer field \"n\"");
    Graph g(j["n"].get<int>());
    if (j.contains("edges")) {
        if (!j["edges"].is_array())
            throw std::invalid_argument("graph_from_json: \"edges\" must be an array");
        for (const auto& e : j["edges"]) {
            if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() ||
                !e[1].is_number_integer())
                throw std::invalid_argument(
                    "graph_from_json: each edge must be a pair of integers");
            g.add_edge(e[0].get<int>(), e[1].get<int>());
        }
    }
    if (j.contains("anchor")) {
        if (!j["anchor"].is_number_integer())
            throw std::invalid_argument("graph_from_json: \"anchor\" must be an integer");
        int a = j["anchor"].get<int>();
        if (a < 1 || a > g.n)
            throw std::invalid_argument("graph_from_json: anchor out of range");
        g.anchor = a;
    }
    return g;
}

std::vector<std::string> coeff_strings(const IntPoly& p) {
    std::vector<std::string> out;
    out.reserve(p.coeffs().size());
    for (const auto& c : p.coeffs()) out.push_back(c.get_str());
    return out;
}

std::string to_json(const SpectrumReport& r) {
    json j;
    j["band"] = json::array({r.band_lo, r.band_hi});
    json evs = json::array();
    for (const auto& rec : r.eigenvalues) evs.push_back(record_to_value(rec));
    j["eigenvalues"] = std::move(evs);
    j["diagnostics"] = {
        {"stripped_x_power", r.stripped_x_power},
        {"s_degree", r.s_degree},
        {"band_edge_roots_discarded", r.band_edge_roots_discarded},
    };
    return j.dump();
}

std::string to_json(const FamilyReport& r) {
    json j;
    j["spec"] = {
        {"family", r.spec.family == Family::star ? "star" : "flower"},
        {"kappa", r.spec.kappa},
    };
    j["band"] = json::array({-2.0, 2.0});
    json evs = json::array();
    for (const auto& rec : r.eigenvalues) evs.push_back(record_to_value(rec));
    j["eigenvalues"] = std::move(evs);
    auto opt = [](const std::optional<double>& v) {
        return v ? json(*v) : json(nullptr);
    };
    j["t_plus"] = opt(r.t_plus);
    j["t_minus"] = opt(r.t_minus);
    j["lambda_plus"] = opt(r.lambda_plus);
    j["lambda_minus"] = opt(r.lambda_minus);
    j["phi_zero_limit"] = {
        {"plus", r.phi_zero_limit_plus},
        {"minus", r.phi_zero_limit_minus},
    };
    return j.dump();
}

std::string to_json(const TruncationReport& r) {
    return truncation_to_value(r).dump();
}

std::string to_json(const std::vector<TruncationReport>& rs) {
    json j = json::array();
    for (const auto& r : rs) j.push_back(truncation_to_value(r));
    return j.dump();
}

std::string to_json(const SchurIdentityReport& r) {
    json j;
    j["dim1"] = r.dim1;
    j["dim2"] = r.dim2;
    j["seed"] = r.seed;
    j["resamples"] = r.resamples;
    j["factorization_residual_c22"] = r.factorization_residual_c22;
    j["factorization_residual_c11"] = r.factorization_residual_c11;
    j["inverse_residual_c22"] = r.inverse_residual_c22;
    j["inverse_residual_c11"] = r.inverse_residual_c11;
    j["det_residual"] = r.det_residual;
    return j.dump();
}

std::string convergence_csv(const std::vector<TruncationReport>& rs) {
    std::string out = "L,predicted,computed,abs_error\n";
    for (const auto& r : rs) {
        const size_t matched = std::min(r.predicted.size(), r.outliers.size());
        for (size_t k = 0; k < matched; ++k) {
            out += std::to_string(r.L);
            out += ",";
            out += fmt17(r.predicted[k]);
            out += ",";
            out += fmt17(r.outliers[k]);
            out += ",";
            out += fmt17(std::abs(r.outliers[k] - r.predicted[k]));
            out += "\n";
        }
    }
    return out;
}

std::string flatten_csv(const std::string& json_text) {
    json j;
    try {
        j = json::parse(json_text);
    } catch (const json::exception& e) {
        throw std::invalid_argument(std::string("flatten_csv: ") + e.what());
    }
    std::string out = "path,value\n";
    flatten(j, "", out);
    return out;
}

}  // namespace tailspec
