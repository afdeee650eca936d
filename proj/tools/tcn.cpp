// tcn: command-line front end for the tiling-number toolkit.
//
// Exit codes: 0 ok, 1 verification disagreement, 2 out-of-scope input, 64 usage.

#include <CLI11.hpp>

#include <iostream>
#include <optional>
#include <string>

#include "tcn/report.hpp"

namespace {

constexpr int kExitDisagree = 1;
constexpr int kExitScope = 2;
constexpr int kExitUsage = 64;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

tcn::Theta parse_theta(const std::string& s) {
    if (s == "pi3" || s == "pi_3" || s == "pi/3") return tcn::Theta::PiThird;
    if (s == "2pi3" || s == "2pi_3" || s == "2pi/3") return tcn::Theta::TwoPiThird;
    throw UsageError("theta must be pi3 or 2pi3, got '" + s + "'");
}

void require_format(const std::string& format, std::initializer_list<const char*> allowed) {
    for (const char* a : allowed)
        if (format == a) return;
    throw UsageError("--format " + format + " is not supported by this command");
}

int run_classify(tcn::u64 n, const std::string& format, tcn::i64 witness_height) {
    require_format(format, {"text", "json"});
    const auto rec = tcn::classify(n, {witness_height});
    if (format == "json")
        std::cout << tcn::record_json(rec).dump(2) << "\n";
    else
        std::cout << tcn::record_text(rec);
    return 0;
}

int run_scan(tcn::u64 lo, tcn::u64 hi, const std::string& format, unsigned jobs, bool only_certified,
             tcn::i64 witness_height) {
    require_format(format, {"text", "json", "csv"});
    const auto ns = tcn::odd_square_free_range(lo, hi);
    std::vector<std::optional<tcn::ClassificationRecord>> recs(ns.size());
    tcn::parallel_for(ns.size(), jobs, [&](std::size_t i) { recs[i] = tcn::classify(ns[i], {witness_height}); });

    auto keep = [&](const tcn::ClassificationRecord& r) {
        return !only_certified || r.non_pi3_cn == tcn::Certification::Certified ||
               r.non_2pi3_cn == tcn::Certification::Certified;
    };
    if (format == "json") {
        tcn::Json out = tcn::Json::array();
        for (const auto& r : recs)
            if (keep(*r)) out.push_back(tcn::record_json(*r));
        std::cout << out.dump(2) << "\n";
        return 0;
    }
    if (format == "csv") std::cout << tcn::kScanCsvHeader << "\n";
    for (const auto& r : recs) {
        if (!keep(*r)) continue;
        std::cout << (format == "csv" ? tcn::scan_csv_row(*r) : tcn::scan_text_row(*r)) << "\n";
    }
    return 0;
}

int run_graph(tcn::i64 m, const std::string& kind, const std::string& format) {
    require_format(format, {"text", "json", "dot"});
    std::optional<tcn::ResidueGraph> g;
    try {
        // The library accepts any class; on the command line m must be square-free as written.
        if (m == 0) throw tcn::BadInput("m must be nonzero");
        const tcn::u64 mag = m < 0 ? static_cast<tcn::u64>(-(m + 1)) + 1 : static_cast<tcn::u64>(m);
        if (!tcn::is_square_free(mag)) throw tcn::BadInput("m = " + std::to_string(m) + " is not square-free");
        if (kind == "unified") {
            g = tcn::build_unified(m);
        } else if (kind == "goto-G" || kind == "goto-g") {
            if (m <= 0) throw tcn::BadInput("Goto graphs take a positive n");
            g = kind == "goto-G" ? tcn::build_goto_G(static_cast<tcn::u64>(m)) : tcn::build_goto_g(static_cast<tcn::u64>(m));
        } else {
            throw UsageError("--kind must be unified, goto-G or goto-g");
        }
    } catch (const tcn::NotSquareFree& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitScope;
    } catch (const tcn::EmptyVertexSet& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitScope;
    } catch (const tcn::BadInput& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitScope;
    }
    if (format == "dot")
        std::cout << tcn::to_dot(*g);
    else if (format == "json")
        std::cout << tcn::graph_json(*g).dump(2) << "\n";
    else
        std::cout << tcn::graph_text(*g);
    return 0;
}

int run_selmer(tcn::u64 n, const std::string& theta, const std::string& format) {
    require_format(format, {"text", "json"});
    const tcn::Curve c(n, parse_theta(theta));
    const auto r = tcn::selmer(c);
    if (format == "json")
        std::cout << tcn::selmer_report_json(r).dump(2) << "\n";
    else
        std::cout << tcn::selmer_report_text(r);
    return 0;
}

int run_verify(tcn::u64 lo, tcn::u64 hi, const std::string& format, unsigned jobs) {
    require_format(format, {"text", "json"});
    const auto v = tcn::verify_range(lo, hi, jobs);
    const auto c = tcn::conjecture_report(lo, hi, jobs);
    if (format == "json")
        std::cout << tcn::verify_json(v, c).dump(2) << "\n";
    else
        std::cout << tcn::verify_text(v, c);
    return v.ok() ? 0 : kExitDisagree;
}

int run_search_point(tcn::u64 n, const std::string& theta, tcn::i64 height, const std::string& format) {
    require_format(format, {"text", "json"});
    if (height < 1) throw UsageError("--height must be >= 1");
    const tcn::Curve c(n, parse_theta(theta));
    std::optional<tcn::WitnessPoint> w;
    try {
        w = tcn::search_point(c, height);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
    if (format == "json") {
        tcn::Json j{{"curve", c.name()}, {"height", height}};
        j["point"] = w ? tcn::witness_json(*w) : tcn::Json(nullptr);
        std::cout << j.dump(2) << "\n";
    } else if (w) {
        std::cout << "(" << w->x_string() << ", " << w->y_string() << ")\n";
    } else {
        std::cout << "no point up to height " << height << "\n";
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Selmer-rank certificates for theta-congruent and tiling numbers"};
    app.require_subcommand(1);

    std::string format = "text";
    unsigned jobs = 1;
    app.add_option("--format", format, "text, json, csv or dot")->check(CLI::IsMember({"text", "json", "csv", "dot"}));
    app.add_option("--jobs", jobs, "worker threads for range commands")->check(CLI::Range(1U, 1024U));

    tcn::u64 n = 0, lo = 0, hi = 0;
    tcn::i64 m = 0, height = 0, witness_height = -1;
    std::string theta, kind = "unified";
    bool only_certified = false;

    auto* classify = app.add_subcommand("classify", "certify non-CN / non-TN for one n");
    classify->add_option("n", n)->required();
    classify->add_option("--witness-height", witness_height, "point-search height (0 disables, default 10)");

    auto* scan = app.add_subcommand("scan", "classify every odd square-free n in [lo, hi]");
    scan->add_option("lo", lo)->required();
    scan->add_option("hi", hi)->required();
    scan->add_flag("--only-certified", only_certified, "keep rows with at least one certificate");
    scan->add_option("--witness-height", witness_height, "point-search height (default 0: off)");

    auto* graph = app.add_subcommand("graph", "build and analyse the residue graph G(m)");
    graph->add_option("m", m, "nonzero square-free integer, sign allowed")->required();
    graph->add_option("--kind", kind, "unified, goto-G or goto-g");

    auto* selmer = app.add_subcommand("selmer", "dump S' and S for one curve");
    selmer->add_option("n", n)->required();
    selmer->add_option("theta", theta, "pi3 or 2pi3")->required();

    auto* verify = app.add_subcommand("verify", "check every criterion against descent over [lo, hi]");
    verify->add_option("lo", lo)->required();
    verify->add_option("hi", hi)->required();

    auto* search = app.add_subcommand("search-point", "bounded search for a point with y != 0");
    search->add_option("n", n)->required();
    search->add_option("theta", theta, "pi3 or 2pi3")->required();
    search->add_option("--height", height, "height bound H >= 1")->required();

    for (auto* sub : {classify, scan, graph, selmer, verify, search}) {
        sub->add_option("--format", format, "text, json, csv or dot")
            ->check(CLI::IsMember({"text", "json", "csv", "dot"}));
        sub->add_option("--jobs", jobs, "worker threads for range commands")->check(CLI::Range(1U, 1024U));
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (*classify) return run_classify(n, format, witness_height < 0 ? 10 : witness_height);
        if (*scan) return run_scan(lo, hi, format, jobs, only_certified, witness_height < 0 ? 0 : witness_height);
        if (*graph) return run_graph(m, kind, format);
        if (*selmer) return run_selmer(n, theta, format);
        if (*verify) return run_verify(lo, hi, format, jobs);
        if (*search) return run_search_point(n, theta, height, format);
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const tcn::OutOfScope& e) {
        std::cerr << "error: " << e.what() << " (not square-free or even, or below 5)\n";
        return kExitScope;
    } catch (const tcn::NotSquareFree& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitScope;
    } catch (const tcn::OutOfRange& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitScope;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitScope;
    }
    return kExitUsage;
}
