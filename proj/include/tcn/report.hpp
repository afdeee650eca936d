#ifndef TCN_REPORT_HPP
#define TCN_REPORT_HPP

// Text / JSON / CSV renderings of the library's results.
//
// JSON uses nlohmann::json with its default ordered-by-key objects, so
// dump() is canonical: parse + dump reproduces the same bytes. Square
// classes are written as signed integers; a class too large for int64 is
// written as a decimal string.

#include <sstream>
#include <string>

#include <json.hpp>

#include "tcn/criteria.hpp"
#include "tcn/graph.hpp"

namespace tcn {

using Json = nlohmann::json;

inline Json class_json(const SquareClass& d) {
    if (d.fits_i64()) return d.representative();
    return d.to_string();
}

inline Json classes_json(const std::vector<SquareClass>& v) {
    Json out = Json::array();
    for (const auto& d : v) out.push_back(class_json(d));
    return out;
}

inline std::string classes_text(const std::vector<SquareClass>& v) {
    std::string out = "{";
    for (std::size_t i = 0; i < v.size(); ++i) out += (i ? ", " : "") + v[i].to_string();
    return out + "}";
}

inline Json selmer_json(const SelmerReport& r) {
    return {{"s_prime", classes_json(r.s_prime)},
            {"s", classes_json(r.s)},
            {"rk2_s_prime", r.rk2_s_prime},
            {"rk2_s", r.rk2_s},
            {"s_rank", r.s_rank}};
}

inline Json witness_json(const WitnessPoint& w) {
    return {{"curve", theta_name(w.curve.theta())}, {"x", w.x_string()}, {"y", w.y_string()}};
}

inline Json verdict_json(const CriterionVerdict& v) {
    Json j{{"id", criterion_name(v.id)}, {"reading", reading_name(v.reading)}, {"applicable", v.applicable},
           {"descent_truth", v.descent_truth}};
    j["graph_prediction"] = v.graph_prediction ? Json(*v.graph_prediction) : Json(nullptr);
    j["agree"] = v.agree ? Json(*v.agree) : Json(nullptr);
    return j;
}

inline Json record_json(const ClassificationRecord& r) {
    Json crit = Json::array();
    for (const auto& v : r.criteria) crit.push_back(verdict_json(v));
    return {{"n", r.n},
            {"factors", r.factors},
            {"n_mod_24", r.n_mod_24},
            {"curves", {{theta_name(Theta::PiThird), selmer_json(r.pi3)}, {theta_name(Theta::TwoPiThird), selmer_json(r.two_pi3)}}},
            {"non_pi3_cn", certification_name(r.non_pi3_cn)},
            {"non_2pi3_cn", certification_name(r.non_2pi3_cn)},
            {"non_tn", certification_name(r.non_tn)},
            {"tn_witness", r.tn_witness ? witness_json(*r.tn_witness) : Json(nullptr)},
            {"criteria", crit}};
}

inline std::string fired_list(const ClassificationRecord& r, const char* sep) {
    std::string out;
    for (std::size_t i = 0; i < r.fired.size(); ++i) out += (i ? sep : "") + std::string(criterion_name(r.fired[i]));
    return out;
}

inline std::string factors_text(const std::vector<u64>& f) {
    std::string out;
    for (std::size_t i = 0; i < f.size(); ++i) out += (i ? " * " : "") + std::to_string(f[i]);
    return out;
}

inline std::string record_text(const ClassificationRecord& r) {
    std::ostringstream os;
    os << "n = " << r.n << " = " << factors_text(r.factors) << "  (n mod 24 = " << r.n_mod_24 << ")\n";
    for (const SelmerReport* s : {&r.pi3, &r.two_pi3}) {
        os << "  " << s->curve.name() << ": S' = " << classes_text(s->s_prime) << ", S = " << classes_text(s->s)
           << ", s-rank = " << s->s_rank << "\n";
    }
    os << "  non-pi/3-CN:  " << certification_name(r.non_pi3_cn) << "\n";
    os << "  non-2pi/3-CN: " << certification_name(r.non_2pi3_cn) << "\n";
    os << "  non-TN:       " << certification_name(r.non_tn) << "\n";
    if (r.tn_witness) {
        const auto& w = *r.tn_witness;
        os << "  TN witness:   (" << w.x_string() << ", +-" << w.y_string() << ") on " << w.curve.name() << "\n";
    }
    os << "  criteria:\n";
    if (r.criteria.empty()) os << "    (none applicable)\n";
    for (const auto& v : r.criteria) {
        os << "    " << criterion_name(v.id) << ": graph " << (*v.graph_prediction ? "true" : "false") << ", descent "
           << (v.descent_truth ? "true" : "false") << (*v.agree ? ", agree" : ", DISAGREE") << "\n";
    }
    os << "  fired: " << (r.fired.empty() ? "-" : fired_list(r, ", ")) << "\n";
    return os.str();
}

// Scan rows. Column order is fixed.
inline constexpr const char* kScanCsvHeader = "n,n_mod_24,s_rank_pi3,s_rank_2pi3,non_pi3_cn,non_2pi3_cn,non_tn,fired";

inline std::string scan_csv_row(const ClassificationRecord& r) {
    std::ostringstream os;
    os << r.n << ',' << r.n_mod_24 << ',' << r.pi3.s_rank << ',' << r.two_pi3.s_rank << ','
       << certification_name(r.non_pi3_cn) << ',' << certification_name(r.non_2pi3_cn) << ','
       << certification_name(r.non_tn) << ',' << fired_list(r, ";");
    return os.str();
}

inline std::string scan_text_row(const ClassificationRecord& r) {
    std::ostringstream os;
    os << r.n << "  mod24=" << r.n_mod_24 << "  s_rank(pi/3)=" << r.pi3.s_rank << "  s_rank(2pi/3)=" << r.two_pi3.s_rank
       << "  non_pi3_cn=" << certification_name(r.non_pi3_cn) << "  non_2pi3_cn=" << certification_name(r.non_2pi3_cn)
       << "  non_tn=" << certification_name(r.non_tn) << "  fired=" << (r.fired.empty() ? "-" : fired_list(r, ","));
    return os.str();
}

inline Json selmer_report_json(const SelmerReport& r) {
    Json j = selmer_json(r);
    j["n"] = r.curve.n();
    j["theta"] = theta_name(r.curve.theta());
    j["torsion_seed"] = classes_json(torsion_seed(r.curve));
    return j;
}

inline std::string selmer_report_text(const SelmerReport& r) {
    std::ostringstream os;
    os << r.curve.name() << "\n  S' = " << classes_text(r.s_prime) << "  (rank " << r.rk2_s_prime << ")\n  S  = "
       << classes_text(r.s) << "  (rank " << r.rk2_s << ")\n  s-rank = " << r.s_rank << "\n";
    return os.str();
}

struct GraphSummary {
    std::size_t vertices = 0;
    std::size_t laplacian_rank = 0;
    bool odd = false;
    u64 even_partitions = 0;
};

inline GraphSummary summarize(const ResidueGraph& g) {
    return {g.size(), rank_f2(g.laplacian()), is_odd_graph(g), even_partition_count(g)};
}

inline Json graph_json(const ResidueGraph& g) {
    const GraphSummary s = summarize(g);
    Json labels = Json::array(), arcs = Json::array();
    for (const auto& l : g.labels()) labels.push_back(l.value());
    for (const auto& [i, j] : g.arcs()) arcs.push_back({g.labels()[i].value(), g.labels()[j].value()});
    return {{"graph", g.source().to_string()}, {"vertices", labels},     {"arcs", arcs},
            {"laplacian_rank", s.laplacian_rank}, {"odd", s.odd}, {"even_partitions", s.even_partitions}};
}

inline std::string graph_text(const ResidueGraph& g) {
    const GraphSummary s = summarize(g);
    std::ostringstream os;
    os << g.source().to_string() << "\n  vertices:";
    for (const auto& l : g.labels()) os << ' ' << l.to_string();
    os << "\n  arcs:";
    if (g.arcs().empty()) os << " none";
    for (const auto& [i, j] : g.arcs()) os << ' ' << g.labels()[i].to_string() << "->" << g.labels()[j].to_string();
    os << "\n  laplacian rank over F2: " << s.laplacian_rank << "\n  even partitions: " << s.even_partitions
       << "\n  odd: " << (s.odd ? "yes" : "no") << "\n";
    return os.str();
}

inline Json verify_json(const VerifyReport& v, const ConjectureReport& c) {
    Json tallies = Json::array();
    for (const auto& t : v.tallies) {
        tallies.push_back({{"id", criterion_name(t.id)},
                           {"reading", reading_name(t.reading)},
                           {"production", t.production},
                           {"applicable", t.applicable},
                           {"agree", t.agree},
                           {"disagreeing_n", t.disagreeing_n}});
    }
    Json viol = Json::array();
    for (const auto& d : v.violations)
        viol.push_back({{"n", d.n}, {"id", criterion_name(d.id)}, {"graph_prediction", d.graph_prediction},
                        {"descent_truth", d.descent_truth}});
    return {{"lo", v.lo},
            {"hi", v.hi},
            {"numbers_checked", v.numbers_checked},
            {"criteria", tallies},
            {"violations", viol},
            {"conjecture",
             {{"certified_non_pi3", c.certified_non_pi3},
              {"certified_non_2pi3", c.certified_non_2pi3},
              {"certified_non_tn", c.non_tn.size()},
              {"pi3_anomalies", c.pi3_anomalies},
              {"2pi3_anomalies", c.two_pi3_anomalies}}}};
}

inline std::string verify_text(const VerifyReport& v, const ConjectureReport& c) {
    std::ostringstream os;
    os << "verify [" << v.lo << ", " << v.hi << "]: " << v.numbers_checked << " odd square-free n\n";
    for (const auto& t : v.tallies) {
        std::string name(criterion_name(t.id));
        if (has_alternate_reading(t.id)) name += "[" + std::string(reading_name(t.reading)) + "]";
        os << "  " << name << std::string(name.size() < 24 ? 24 - name.size() : 1, ' ') << "applicable=" << t.applicable
           << " agree=" << t.agree;
        if (!t.production) os << "  (not used for the verdict)";
        if (!t.disagreeing_n.empty()) {
            os << "  first disagreements:";
            for (std::size_t i = 0; i < t.disagreeing_n.size() && i < 8; ++i) os << ' ' << t.disagreeing_n[i];
        }
        os << "\n";
    }
    os << "conjecture: certified non-pi/3-CN " << c.certified_non_pi3 << ", non-2pi/3-CN " << c.certified_non_2pi3
       << ", non-TN " << c.non_tn.size() << "; anomalies pi/3 " << c.pi3_anomalies.size() << ", 2pi/3 "
       << c.two_pi3_anomalies.size() << "\n";
    os << (v.ok() ? "OK: no disagreements\n" : "FAIL: " + std::to_string(v.violations.size()) + " disagreements\n");
    return os.str();
}

}  // namespace tcn

#endif
