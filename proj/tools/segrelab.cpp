#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "segrelab/ideal.hpp"
#include "segrelab/session.hpp"

using namespace segrelab;

namespace {

bool parse_field(const std::string& s, Field& out) {
    if (s == "qq" || s == "QQ") {
        out = Field::rationals();
        return true;
    }
    if (s.rfind("gf:", 0) == 0) {
        try {
            out = Field::prime(std::stoull(s.substr(3)));
            return true;
        } catch (const std::exception&) {
            return false;
        }
    }
    return false;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"segrelab: polar and Segre invariants of ideals, projective degrees of "
                 "rational maps, integral-dependence criteria, and family scans"};

    std::string script;
    std::string field_str;
    std::string format = "table";
    std::string out_path;
    std::string cache_dir;
    bool no_cache = false;
    RunConfig cfg;

    app.add_option("script", script, "session script (.slab), or - for stdin")->required();
    auto* field_opt =
        app.add_option("--field", field_str,
                       "coefficient field, qq or gf:<p>; overrides ring declarations");
    app.add_option("--seed", cfg.seed, "base seed for all randomized choices");
    app.add_option("--retries", cfg.retries, "genericity retries per certification");
    app.add_option("--coeff-bound", cfg.coeff_bound, "coefficient bound for general elements");
    app.add_option("--hs-window", cfg.hs_window, "stabilization window for truncated lengths");
    app.add_option("--hs-cap", cfg.hs_cap, "truncation cap for local computations");
    app.add_option("--trials", cfg.trials, "random fiber points per pseudo-generic estimate");
    app.add_option("--format", format, "output format: table or json")
        ->check(CLI::IsMember({"table", "json"}));
    app.add_option("--out", out_path, "write the report to this file instead of stdout");
    app.add_option("--cache-dir", cache_dir, "directory for the on-disk basis cache");
    app.add_flag("--no-cache", no_cache, "disable the on-disk basis cache");

    CLI11_PARSE(app, argc, argv);

    if (const char* env = std::getenv("SEGRELAB_SEED"); env && app.count("--seed") == 0)
        cfg.seed = std::strtoull(env, nullptr, 10);
    if (field_opt->count() > 0) {
        if (!parse_field(field_str, cfg.field)) {
            std::cerr << "error: --field must be qq or gf:<p>\n";
            return 2;
        }
        cfg.field_overridden = true;
    }
    if (!cache_dir.empty() && !no_cache) gb_set_disk_cache(cache_dir);

    std::string text;
    if (script == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        text = ss.str();
    } else {
        std::ifstream in(script);
        if (!in) {
            std::cerr << "error: cannot open " << script << "\n";
            return 2;
        }
        std::ostringstream ss;
        ss << in.rdbuf();
        text = ss.str();
    }

    RunOutcome outcome;
    try {
        Session s = parse_session(text);
        outcome = run_session(s, cfg);
    } catch (const std::exception& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return 2;
    }

    const std::string& body = format == "json" ? outcome.json : outcome.table;
    if (out_path.empty()) {
        std::cout << body;
    } else {
        std::ofstream out(out_path);
        if (!out) {
            std::cerr << "error: cannot write " << out_path << "\n";
            return 2;
        }
        out << body;
    }

    // cache accounting goes to stderr so that reports are byte-stable across
    // cold and warm caches
    GBCacheStats st = gb_cache_stats();
    std::cerr << "cache: " << st.memo_hits << " memo hits, " << st.disk_hits << " disk hits, "
              << st.misses << " misses\n";

    return outcome.any_failed ? 1 : 0;
}
