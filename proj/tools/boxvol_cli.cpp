// boxvol command-line front end.
//
// Subcommands: psi, volume, classify, verify, simulate, catalan.
// Formats: table (human oriented, unstable), json (single document on
// stdout), csv. Diagnostics go to stderr only.
//
// Exit codes: 0 success/verified, 1 verification failure, 2 usage error.

#include "boxvol/oracle.hpp"
#include "boxvol/serialize.hpp"
#include "boxvol/volume.hpp"

#include <CLI11.hpp>

#include <cstdint>
#include <iostream>
#include <string>
#include <vector>

namespace {

using namespace boxvol;

constexpr int kExitOk = 0;
constexpr int kExitVerificationFailure = 1;
constexpr int kExitUsage = 2;

std::string join_tokens(const std::vector<std::string>& tokens) {
    std::string s;
    for (std::size_t i = 0; i < tokens.size(); ++i) {
        if (i) s += ' ';
        s += tokens[i];
    }
    return s;
}

Weights parse_weights(const std::vector<std::string>& tokens) {
    std::vector<Rational> w;
    w.reserve(tokens.size());
    for (const std::string& t : tokens) w.push_back(parse_rational(t));
    return Weights(std::move(w));
}

std::string csv_escape(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += "\"\"";
        else out += c;
    }
    out += '"';
    return out;
}

void print_csv_row(const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) {
        if (i) std::cout << ',';
        std::cout << csv_escape(cells[i]);
    }
    std::cout << '\n';
}

// Shortest round-trip representation, identical to the JSON rendering.
std::string double_str(double x) { return Json(x).dump(); }

std::string parts_str(const Partition& p) {
    std::string s;
    for (std::size_t i = 0; i < p.parts().size(); ++i) {
        if (i) s += ' ';
        s += std::to_string(p.parts()[i]);
    }
    return s;
}

std::string cells_str(const CellSet& cells) {
    std::string s;
    for (const auto& [r, c] : cells) {
        if (!s.empty()) s += ' ';
        s += std::to_string(r) + ":" + std::to_string(c);
    }
    return s;
}

std::string weights_str(const Weights& w) {
    std::string s;
    for (std::size_t i = 0; i < w.values().size(); ++i) {
        if (i) s += ' ';
        s += rational_str(w.values()[i]);
    }
    return s;
}

void emit_json(Json doc) { std::cout << doc.dump(2) << '\n'; }

struct GlobalOptions {
    std::string format = "table";
    unsigned threads = 1;
    int max_n = 0;  // 0 = per-command default
    std::uint64_t seed = 42;
};

int run_psi(const GlobalOptions& g, const std::vector<std::string>& perm_tokens, bool art) {
    const Permutation p = Permutation::parse(join_tokens(perm_tokens));
    const Partition psi = psi_by_minima(p);
    const Partition crossing = psi_by_crossing(p);
    if (psi != crossing)
        throw std::logic_error("psi routes disagree on " + p.str() + ": " + psi.str() + " vs " +
                               crossing.str());
    const Partition lmax = lambda_max(p);
    const CellSet cells = diagram(p);
    const bool avoiding = is_132_avoiding(p);
    const std::string dyck = dyck_path_of(psi, p.size());

    if (g.format == "json") {
        Json out{{"command", "psi"}, {"n", p.size()}, {"permutation", permutation_json(p)},
                 {"psi", partition_json(psi)}, {"lambda_max", partition_json(lmax)}};
        Json jcells = Json::array();
        for (const auto& [r, c] : cells) jcells.push_back(Json::array({r, c}));
        out["diagram"] = jcells;
        out["is_132_avoiding"] = avoiding;
        out["dyck_path"] = dyck;
        emit_json(out);
    } else if (g.format == "csv") {
        print_csv_row({"permutation", "psi", "lambda_max", "is_132_avoiding", "dyck_path", "diagram"});
        print_csv_row({p.str(), parts_str(psi), parts_str(lmax), avoiding ? "true" : "false", dyck,
                       cells_str(cells)});
    } else {
        std::cout << "permutation  : " << p.str() << '\n';
        std::cout << "psi          : " << psi.str() << '\n';
        std::cout << "lambda_max   : " << lmax.str() << '\n';
        std::cout << "diagram      : " << (cells.empty() ? "{}" : cells_str(cells)) << '\n';
        std::cout << "132-avoiding : " << (avoiding ? "yes" : "no") << '\n';
        std::cout << "dyck path    : " << dyck << '\n';
        if (art) {
            std::cout << "psi diagram  :" << (psi.empty() ? " (empty)" : "") << '\n';
            for (int i = 1; i <= psi.num_parts(); ++i)
                std::cout << "  " << std::string(static_cast<std::size_t>(psi.part(i)), '#') << '\n';
        }
    }
    return kExitOk;
}

int run_volume(const GlobalOptions& g, const std::vector<std::string>& perm_tokens,
               const std::vector<std::string>& weight_tokens) {
    const Permutation p = Permutation::parse(join_tokens(perm_tokens));
    const Polynomial vol_a = volume_poly(p);
    const Polynomial vol_w = vol_a.substitute_a_to_w();

    bool have_weights = !weight_tokens.empty();
    std::string volume_txt, probability_txt;
    Json jvolume = nullptr, jprobability = nullptr, jweights = nullptr;
    if (have_weights) {
        const Weights w = parse_weights(weight_tokens);
        const Rational v = volume_at(p, w);
        const Rational prob = v / w.box_volume();
        volume_txt = rational_str(v);
        probability_txt = rational_str(prob);
        jvolume = volume_txt;
        jprobability = probability_txt;
        jweights = weights_json(w);
    }

    if (g.format == "json") {
        Json out{{"command", "volume"}, {"n", p.size()}, {"permutation", permutation_json(p)},
                 {"volume_a", polynomial_json(vol_a)}, {"volume_w", polynomial_json(vol_w)},
                 {"weights", jweights}, {"volume", jvolume}, {"probability", jprobability}};
        emit_json(out);
    } else if (g.format == "csv") {
        print_csv_row({"permutation", "volume_a", "volume_w", "weights", "volume", "probability"});
        print_csv_row({p.str(), vol_a.str(), vol_w.str(),
                       have_weights ? weights_str(parse_weights(weight_tokens)) : "", volume_txt,
                       probability_txt});
    } else {
        std::cout << "permutation : " << p.str() << '\n';
        std::cout << "volume (a)  : " << vol_a.str() << '\n';
        std::cout << "volume (W)  : " << vol_w.str() << '\n';
        if (have_weights) {
            std::cout << "weights     : " << weights_str(parse_weights(weight_tokens)) << '\n';
            std::cout << "volume      : " << volume_txt << '\n';
            std::cout << "probability : " << probability_txt << '\n';
        }
    }
    return kExitOk;
}

int run_classify(const GlobalOptions& g, int n, bool paranoid, std::size_t members_limit) {
    ClassifyOptions opt;
    opt.paranoid = paranoid;
    opt.threads = g.threads;
    if (g.max_n > 0) opt.max_n = g.max_n;
    const Classification c = classify(n, opt);

    if (g.format == "json") {
        Json out{{"command", "classify"}};
        out.update(classification_json(c, members_limit));
        emit_json(out);
    } else if (g.format == "csv") {
        print_csv_row({"psi", "size", "representative", "volume_a", "volume_w"});
        for (const VolumeClass& vc : c.classes)
            print_csv_row({parts_str(vc.psi), std::to_string(vc.members.size()),
                           vc.representative.str(), vc.volume_a.str(), vc.volume_w.str()});
    } else {
        std::cout << "n = " << c.n << "   classes = " << c.classes.size()
                  << "   catalan = " << c.catalan.str() << '\n';
        if (c.paranoid_checked)
            std::cout << "paranoid check: " << (c.paranoid_ok ? "ok" : "FAILED") << '\n';
        std::cout << "total volume (W): " << c.total_volume_w.str() << '\n';
        for (const VolumeClass& vc : c.classes) {
            std::cout << "psi=" << vc.psi.str() << "  size=" << vc.members.size()
                      << "  rep=" << vc.representative.str() << '\n';
            std::cout << "    vol_a = " << vc.volume_a.str() << '\n';
            std::cout << "    vol_W = " << vc.volume_w.str() << '\n';
            if (vc.members.size() <= members_limit) {
                std::cout << "    members:";
                for (const Permutation& m : vc.members) std::cout << "  " << m.str();
                std::cout << '\n';
            }
        }
    }
    if (c.paranoid_checked && !c.paranoid_ok) {
        std::cerr << "classify --paranoid: polynomial cross-check FAILED\n";
        return kExitVerificationFailure;
    }
    return kExitOk;
}

int run_verify(const GlobalOptions& g, int n, std::size_t members_limit) {
    VerifyOptions opt;
    opt.threads = g.threads;
    if (g.max_n > 0) opt.max_n = g.max_n;
    if (n > 8)
        std::cerr << "warning: exhaustive verification at n = " << n
                  << " computes " << n << "! volume polynomials; expect a long runtime\n";
    const TheoremReport r = verify_theorem(n, opt);

    if (g.format == "json") {
        Json out{{"command", "verify"}};
        out.update(theorem_report_json(r, members_limit));
        emit_json(out);
    } else if (g.format == "csv") {
        print_csv_row({"n", "agree", "class_count", "catalan", "total_volume_ok",
                       "box_oracle_checked", "box_oracle_ok", "ok"});
        print_csv_row({std::to_string(r.n), r.agree ? "true" : "false",
                       std::to_string(r.class_count), r.catalan.str(),
                       r.total_volume_ok ? "true" : "false",
                       r.box_oracle_checked ? "true" : "false",
                       r.box_oracle_ok ? "true" : "false", r.ok() ? "true" : "false"});
    } else {
        std::cout << "n = " << r.n << '\n';
        std::cout << "volume classes        : " << r.class_count << '\n';
        std::cout << "catalan               : " << r.catalan.str() << '\n';
        std::cout << "partitions agree      : " << (r.agree ? "yes" : "NO") << '\n';
        std::cout << "total volume identity : " << (r.total_volume_ok ? "ok" : "FAILED") << '\n';
        std::cout << "box refinement oracle : "
                  << (r.box_oracle_checked ? (r.box_oracle_ok ? "ok" : "FAILED") : "skipped") << '\n';
        std::cout << "verdict               : " << (r.ok() ? "VERIFIED" : "FAILED") << '\n';
    }
    if (!r.ok()) {
        std::cerr << "verify: verification FAILED for n = " << n << '\n';
        return kExitVerificationFailure;
    }
    return kExitOk;
}

int run_simulate(const GlobalOptions& g, const std::vector<std::string>& perm_tokens,
                 const std::vector<std::string>& weight_tokens, std::uint64_t samples) {
    const Permutation p = Permutation::parse(join_tokens(perm_tokens));
    const Weights w = parse_weights(weight_tokens);
    const SimReport r = monte_carlo_probability(p, w, samples, g.seed, g.threads);

    if (g.format == "json") {
        Json out{{"command", "simulate"}};
        out.update(sim_report_json(r));
        emit_json(out);
    } else if (g.format == "csv") {
        const Json j = sim_report_json(r);
        print_csv_row({"permutation", "weights", "samples", "seed", "workers", "hits", "estimate",
                       "std_error", "exact", "exact_real", "z_score"});
        print_csv_row({r.permutation.str(), weights_str(r.weights), std::to_string(r.samples),
                       std::to_string(r.seed), std::to_string(r.workers), std::to_string(r.hits),
                       double_str(r.estimate), double_str(r.std_error), rational_str(r.exact),
                       j["exact_real"].dump(), j["z_score"].dump()});
    } else {
        const Json j = sim_report_json(r);
        std::cout << "permutation : " << r.permutation.str() << '\n';
        std::cout << "weights     : " << weights_str(r.weights) << '\n';
        std::cout << "samples     : " << r.samples << "   seed: " << r.seed
                  << "   workers: " << r.workers << '\n';
        std::cout << "hits        : " << r.hits << '\n';
        std::cout << "estimate    : " << double_str(r.estimate) << '\n';
        std::cout << "std error   : " << double_str(r.std_error) << '\n';
        std::cout << "exact       : " << rational_str(r.exact) << " = " << j["exact_real"].dump()
                  << '\n';
        std::cout << "z-score     : " << j["z_score"].dump() << '\n';
    }
    return kExitOk;
}

int run_catalan(const GlobalOptions& g, unsigned n) {
    const BigInt c = catalan(n);
    if (g.format == "json") {
        emit_json(Json{{"command", "catalan"}, {"n", n}, {"catalan", c.str()}});
    } else if (g.format == "csv") {
        print_csv_row({"n", "catalan"});
        print_csv_row({std::to_string(n), c.str()});
    } else {
        std::cout << "C_" << n << " = " << c.str() << '\n';
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact volumes of the box dissection along x_i = x_j:\n"
                 "psi images, equal-volume classes (Catalan many), independent\n"
                 "oracles and seeded Monte Carlo simulation."};
    app.require_subcommand(1);
    GlobalOptions g;
    app.add_option("--format", g.format, "output format")
        ->check(CLI::IsMember({"table", "json", "csv"}))
        ->capture_default_str();
    app.add_option("--threads", g.threads, "worker cap for parallel phases")->capture_default_str();
    app.add_option("--max-n", g.max_n, "override the per-command size cap");
    app.add_option("--seed", g.seed, "PRNG seed for simulate")->capture_default_str();

    std::vector<std::string> perm_tokens;
    std::vector<std::string> weight_tokens;
    bool art = false;
    bool paranoid = false;
    int size_n = 0;
    unsigned catalan_n = 0;
    std::uint64_t samples = 1000000;
    std::size_t members_limit = 1000;

    // let global flags (--format, --threads, ...) appear after the subcommand
    app.fallthrough();

    CLI::App* cmd_psi = app.add_subcommand("psi", "psi, lambda_max, diagram and 132-avoidance");
    cmd_psi->add_option("permutation", perm_tokens, "one-line notation, e.g. \"42531\" or \"4 2 5 3 1\"")
        ->required();
    cmd_psi->add_flag("--diagram-art", art, "also draw the psi Young diagram (table format)");

    CLI::App* cmd_volume = app.add_subcommand("volume", "exact volume polynomial of a piece");
    cmd_volume->add_option("permutation", perm_tokens, "one-line notation")->required();
    cmd_volume->add_option("--weights,-w", weight_tokens, "W_1 < ... < W_n as p, p/q or decimals")
        ->delimiter(',');

    CLI::App* cmd_classify = app.add_subcommand("classify", "group S_n into equal-volume classes");
    cmd_classify->add_option("n", size_n, "symmetric group size")->required();
    cmd_classify->add_flag("--paranoid", paranoid, "recompute all n! polynomials and cross-check");
    cmd_classify->add_option("--members-limit", members_limit,
                             "elide member lists above this class size")
        ->capture_default_str();

    CLI::App* cmd_verify = app.add_subcommand("verify", "exhaustively verify the classification");
    cmd_verify->add_option("n", size_n, "symmetric group size")->required();
    cmd_verify->add_option("--members-limit", members_limit,
                           "elide the S_n partitions above this total size")
        ->capture_default_str();

    CLI::App* cmd_simulate = app.add_subcommand("simulate", "seeded Monte Carlo probability of E_pi");
    cmd_simulate->add_option("permutation", perm_tokens, "one-line notation")->required();
    cmd_simulate->add_option("--weights,-w", weight_tokens, "W_1 < ... < W_n")
        ->delimiter(',')
        ->required();
    cmd_simulate->add_option("--samples", samples, "number of sample points")->capture_default_str();

    CLI::App* cmd_catalan = app.add_subcommand("catalan", "the n-th Catalan number");
    cmd_catalan->add_option("n", catalan_n, "index n >= 0")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help and friends
        std::cerr << "usage error: " << e.what() << '\n';
        return kExitUsage;
    }

    try {
        if (app.got_subcommand(cmd_psi)) return run_psi(g, perm_tokens, art);
        if (app.got_subcommand(cmd_volume)) return run_volume(g, perm_tokens, weight_tokens);
        if (app.got_subcommand(cmd_classify)) return run_classify(g, size_n, paranoid, members_limit);
        if (app.got_subcommand(cmd_verify)) return run_verify(g, size_n, members_limit);
        if (app.got_subcommand(cmd_simulate)) return run_simulate(g, perm_tokens, weight_tokens, samples);
        if (app.got_subcommand(cmd_catalan)) return run_catalan(g, catalan_n);
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::out_of_range& e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::logic_error& e) {
        // an internal invariant the mathematics guarantees has been violated
        std::cerr << "VERIFICATION FAILURE: " << e.what() << '\n';
        return kExitVerificationFailure;
    }
    return kExitUsage;
}
