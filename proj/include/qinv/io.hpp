#pragma once

/**
 * @file io.hpp
 * @brief JSON and CSV encodings of presentations, knot tables, series and reports.
 *
 * Big integers and rationals travel as decimal strings so no precision is lost.
 * Everything except the "timings_ms" object is a pure function of the inputs.
 */

#include "qinv/cyclotomic.hpp"
#include "qinv/hseries.hpp"
#include "qinv/invariants.hpp"
#include "qinv/numtheory.hpp"
#include "qinv/tcc.hpp"
#include "qinv/verifier.hpp"

#include <json.hpp>

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace qinv {

using Json = nlohmann::ordered_json;

inline constexpr int kReportSchema = 1;

// --- values ------------------------------------------------------------------

inline Json to_json(const CycInt& z) {
    Json coeffs = Json::array();
    for (const auto& c : z.coeffs()) coeffs.push_back(c.get_str());
    return Json{{"K", z.K().value()}, {"coeffs", std::move(coeffs)}};
}

inline CycInt cycint_from_json(const Json& j) {
    const PrimeK K(j.at("K").get<long>());
    std::vector<Integer> coeffs;
    for (const auto& c : j.at("coeffs")) coeffs.emplace_back(c.get<std::string>());
    return CycInt(K, std::move(coeffs));
}

inline Json to_json(const HSeries& s) {
    Json coeffs = Json::array();
    for (const auto& c : s.coeffs()) coeffs.push_back(to_string(c));
    return Json{{"trunc", s.trunc()}, {"coeffs", std::move(coeffs)}};
}

inline HSeries hseries_from_json(const Json& j) {
    std::vector<Rational> coeffs;
    for (const auto& c : j.at("coeffs")) coeffs.push_back(parse_rational(c.get<std::string>()));
    if (coeffs.size() != j.at("trunc").get<std::size_t>()) throw std::invalid_argument("series: trunc does not match coefficient count");
    return HSeries(std::move(coeffs));
}

// --- manifolds ---------------------------------------------------------------

inline Json to_json(const SurgeryPresentation& p) {
    return Json{{"surgery_unknot_framings", p.framings}, {"embedded_unknot_colors", p.embedded_colors}};
}

inline SurgeryPresentation presentation_from_json(const Json& j) {
    if (!j.is_object()) throw std::invalid_argument("manifold: expected a JSON object");
    SurgeryPresentation p;
    p.framings = j.at("surgery_unknot_framings").get<std::vector<long>>();
    if (j.contains("embedded_unknot_colors")) p.embedded_colors = j.at("embedded_unknot_colors").get<std::vector<long>>();
    p.validate();
    return p;
}

// --- knot tables -------------------------------------------------------------

inline Json to_json(const DTable& d) {
    Json entries = Json::array();
    for (const auto& [key, v] : d.entries) entries.push_back(Json{{"m", key.first}, {"n", key.second}, {"d", to_string(v)}});
    return Json{{"h1M", d.h1M.get_si()}, {"self_linking", d.self_linking}, {"entries", std::move(entries)}};
}

inline DTable dtable_from_json(const Json& j) {
    DTable d;
    d.h1M = j.at("h1M").get<long>();
    d.self_linking = j.at("self_linking").get<long>();
    for (const auto& e : j.at("entries")) {
        const std::pair<long, long> key{e.at("m").get<long>(), e.at("n").get<long>()};
        if (d.entries.count(key)) throw std::invalid_argument("DTable: duplicate entry");
        const Json& v = e.at("d");
        d.entries[key] = v.is_string() ? parse_rational(v.get<std::string>()) : Rational(v.get<long>());
    }
    d.validate();
    return d;
}

// --- reports -----------------------------------------------------------------

inline Json to_json(const OhtsukiSeries& s) { return Json{{"h1", s.h1.get_str()}, {"lambda", to_json(s.lambda)}}; }

inline Json to_json(const VerificationReport& r) {
    Json j;
    j["manifold"] = to_json(r.manifold);
    j["prime"] = r.prime;
    j["h1"] = r.h1.get_str();
    j["status"] = to_string(r.status);
    if (!r.note.empty()) j["note"] = r.note;
    j["legendre_h1"] = r.legendre_h1;
    Json a = Json::array();
    for (const auto& x : r.a_n) a.push_back(x.get_str());
    j["a_n"] = std::move(a);
    j["lambda"] = to_json(r.lambda);
    if (r.status != Status::skipped) j["zprime"] = to_json(r.zprime);
    j["lawrence_depth_checked"] = r.lawrence_depth_checked;
    j["lawrence_pass"] = r.lawrence_pass;
    j["ohtsuki_pass"] = r.ohtsuki_pass;
    Json t = Json::object();
    for (const auto& [k, v] : r.timings_ms) t[k] = v;
    j["timings_ms"] = std::move(t);
    return j;
}

inline Json report_document(const SurgeryPresentation& pres, const std::vector<VerificationReport>& reports) {
    Json runs = Json::array();
    for (const auto& r : reports) runs.push_back(to_json(r));
    return Json{{"schema", kReportSchema}, {"manifold", to_json(pres)}, {"status", to_string(overall_status(reports))}, {"reports", std::move(runs)}};
}

/// Rows (K, n, a_n, lambda_n mod K) for n < K-1; skipped primes emit nothing.
inline std::string reports_csv(const std::vector<VerificationReport>& reports) {
    std::ostringstream out;
    out << "K,n,a_n,lambda_n_mod_K\n";
    for (const auto& r : reports) {
        if (r.status == Status::skipped) continue;
        const PrimeK K(r.prime);
        for (std::size_t n = 0; n < r.a_n.size(); ++n) {
            out << r.prime << ',' << n << ',' << r.a_n[n].get_str() << ',';
            if (n < r.lambda.trunc()) out << remainder_mod(r.lambda[n], K, 0).get_str();
            out << '\n';
        }
    }
    return out.str();
}

// --- files -------------------------------------------------------------------

inline Json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    try {
        return Json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
        throw std::invalid_argument("malformed JSON in " + path + ": " + e.what());
    }
}

inline void write_text_file(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << text;
}

}  // namespace qinv
