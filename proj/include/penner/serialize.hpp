// JSON / CSV serialization of series, tables and reports, plus the parsers
// needed for round-tripping. Output is byte-deterministic for equal inputs;
// rationals travel as exact "num/den" strings, never as floats.
#pragma once

#include <cstdio>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "penner/continuum.hpp"
#include "penner/euler_char.hpp"
#include "penner/museries.hpp"
#include "penner/tseries.hpp"
#include "penner/verify.hpp"

namespace penner {

using Json = nlohmann::ordered_json;

/// Fixed 17-significant-digit rendering for floating-point outputs.
inline std::string format_double(double x) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

namespace detail {

inline Json npoly_to_json(const NPoly& p) {
    Json arr = Json::array();
    for (int d = 0; d <= p.degree(); ++d)
        if (!p.coeff(d).is_zero())
            arr.push_back(Json::array({d, p.coeff(d).to_string()}));
    return arr;
}

inline NPoly npoly_from_json(const Json& j) {
    NPoly p;
    for (const auto& entry : j) {
        if (!entry.is_array() || entry.size() != 2)
            throw std::invalid_argument("poly entry must be [degree, \"num/den\"]");
        const auto degree = entry[0].get<long long>();
        if (degree < 0)
            throw std::invalid_argument("poly degree must be >= 0");
        p += NPoly::monomial(static_cast<unsigned>(degree),
                             Rational::from_string(entry[1].get<std::string>()));
    }
    return p;
}

} // namespace detail

inline std::string serialize_tseries(const TSeries& s) {
    Json j;
    j["order"] = s.order();
    Json coeffs = Json::array();
    for (int k = 0; k <= s.order(); ++k) {
        if (s.coeff(k).is_zero())
            continue;
        Json c;
        c["power"] = k;
        c["poly"] = detail::npoly_to_json(s.coeff(k));
        coeffs.push_back(std::move(c));
    }
    j["coefficients"] = std::move(coeffs);
    return j.dump();
}

inline TSeries parse_tseries(const std::string& text) {
    const Json j = Json::parse(text);
    TSeries s(j.at("order").get<int>());
    for (const auto& c : j.at("coefficients"))
        s.set_coeff(c.at("power").get<int>(), detail::npoly_from_json(c.at("poly")));
    return s;
}

inline std::string serialize_museries(const MuSeries& s,
                                      const std::vector<std::string>& notes = {}) {
    Json j;
    Json terms = Json::array();
    for (const auto& t : s.terms()) {
        Json e;
        e["coeff"] = t.coeff.to_string();
        e["mu_power"] = t.mu_power;
        e["log_power"] = t.log_power;
        terms.push_back(std::move(e));
    }
    j["terms"] = std::move(terms);
    j["notes"] = notes;
    return j.dump();
}

inline std::pair<MuSeries, std::vector<std::string>> parse_museries(const std::string& text) {
    const Json j = Json::parse(text);
    MuSeries s;
    for (const auto& e : j.at("terms"))
        s.add_term(Rational::from_string(e.at("coeff").get<std::string>()),
                   e.at("mu_power").get<int>(), e.at("log_power").get<int>());
    std::vector<std::string> notes;
    if (j.contains("notes"))
        notes = j.at("notes").get<std::vector<std::string>>();
    return {std::move(s), std::move(notes)};
}

/// Report JSON keeps the first `max_mismatches` mismatching powers in full
/// and counts the rest in "mismatch_count".
inline std::string serialize_report(const VerificationReport& r,
                                    std::size_t max_mismatches = 5) {
    Json j;
    j["identity"] = r.identity;
    j["order"] = r.order;
    j["size_param"] = r.size_param;
    j["matched"] = r.matched;
    j["mismatch_count"] = r.mismatches.size();
    Json mm = Json::array();
    for (std::size_t i = 0; i < r.mismatches.size() && i < max_mismatches; ++i) {
        Json e;
        e["power"] = r.mismatches[i].power;
        e["left"] = detail::npoly_to_json(r.mismatches[i].left);
        e["right"] = detail::npoly_to_json(r.mismatches[i].right);
        mm.push_back(std::move(e));
    }
    j["mismatches"] = std::move(mm);
    j["notes"] = r.notes;
    return j.dump();
}

inline std::string report_to_text(const VerificationReport& r, std::size_t max_mismatches = 5) {
    std::ostringstream os;
    os << "identity: " << r.identity << "\norder: " << r.order
       << "\nsize: " << r.size_param << "\nmatched: " << (r.matched ? "true" : "false") << "\n";
    for (std::size_t i = 0; i < r.mismatches.size() && i < max_mismatches; ++i)
        os << "mismatch at t^" << r.mismatches[i].power << ": left = "
           << r.mismatches[i].left.to_string()
           << ", right = " << r.mismatches[i].right.to_string() << "\n";
    if (r.mismatches.size() > max_mismatches)
        os << "... and " << r.mismatches.size() - max_mismatches << " more mismatches\n";
    for (const auto& n : r.notes)
        os << "note: " << n << "\n";
    return os.str();
}

inline std::string serialize_chi_table_csv(const std::vector<ChiValue>& table) {
    std::ostringstream os;
    os << "kind,genus_index,punctures,value\n";
    for (const auto& v : table)
        os << to_string(v.kind) << "," << v.genus_index << "," << v.punctures << ","
           << v.value.to_string() << "\n";
    return os.str();
}

inline std::vector<ChiValue> parse_chi_table_csv(const std::string& text) {
    std::vector<ChiValue> table;
    std::istringstream is(text);
    std::string line;
    if (!std::getline(is, line) || line != "kind,genus_index,punctures,value")
        throw std::invalid_argument("chi table CSV: bad header");
    while (std::getline(is, line)) {
        if (line.empty())
            continue;
        std::istringstream ls(line);
        std::string kind, g, n, value;
        if (!std::getline(ls, kind, ',') || !std::getline(ls, g, ',') ||
            !std::getline(ls, n, ',') || !std::getline(ls, value))
            throw std::invalid_argument("chi table CSV: bad row '" + line + "'");
        CurveKind k;
        if (kind == "complex")
            k = CurveKind::Complex;
        else if (kind == "real")
            k = CurveKind::Real;
        else
            throw std::invalid_argument("chi table CSV: bad kind '" + kind + "'");
        table.push_back(ChiValue{k, static_cast<unsigned>(std::stoul(g)),
                                 static_cast<unsigned>(std::stoul(n)),
                                 Rational::from_string(value)});
    }
    return table;
}

inline std::string serialize_chi_table_json(const std::vector<ChiValue>& table) {
    Json arr = Json::array();
    for (const auto& v : table) {
        Json e;
        e["kind"] = to_string(v.kind);
        e["genus_index"] = v.genus_index;
        e["punctures"] = v.punctures;
        e["value"] = v.value.to_string();
        arr.push_back(std::move(e));
    }
    return arr.dump();
}

inline std::string serialize_residual_check(const ResidualCheck& r) {
    std::ostringstream os;
    os << "{\"N\":" << r.size << ",\"mu\":" << format_double(r.mu)
       << ",\"t\":" << format_double(r.t) << ",\"q_max\":" << r.q_max
       << ",\"residual\":" << format_double(r.residual)
       << ",\"target\":" << format_double(r.target)
       << ",\"abs_error\":" << format_double(r.abs_error) << "}";
    return os.str();
}

} // namespace penner
