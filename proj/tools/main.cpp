// Command-line front end: exact classification and census workflows plus
// the floating-point zero-curvature-plane verifiers.
//
// Exit codes: 0 success, 1 verification failure, 2 invalid input/usage.

#include <cstdint>
#include <filesystem>
#include <iostream>
#include <string>
#include <thread>

#include <CLI11.hpp>

#include "bazaikin/catalog.hpp"
#include "bazaikin/zero_plane.hpp"

namespace {

using namespace bazaikin;

struct Options {
    std::string q_text;
    std::int64_t p1_max = 0;
    std::string out;
    std::string format = "jsonl";
    std::string key = "p1s";
    std::string input;
    int samples = 100;
    std::uint64_t seed = 42;
    double tol = kZeroTol;
    double group_tol = kGroupTol;
    double theta = 0.02;
    unsigned threads = 0;
};

CatalogFormat parse_format(const std::string& name, const std::string& path) {
    if (name == "csv") return CatalogFormat::CSV;
    if (name == "jsonl") return CatalogFormat::JSONL;
    if (name.empty() && path.size() >= 4 && path.substr(path.size() - 4) == ".csv") {
        return CatalogFormat::CSV;
    }
    return CatalogFormat::JSONL;
}

void print_summary(const CensusSummary& s) {
    std::cout << "classes: " << s.total << "\n";
    std::cout << "new_quasi_positive: " << s.new_qp << "\n";
    for (const auto& [verdict, count] : s.by_class) {
        std::cout << to_code(verdict) << ": " << count << "\n";
    }
}

int run_classify(const Options& opt) {
    const FiveTuple q = parse_five_tuple(opt.q_text);
    std::cout << to_code(classify(q)) << "\n";
    return 0;
}

int run_invariants(const Options& opt) {
    const FiveTuple q = parse_five_tuple(opt.q_text);
    const TopInvariants inv = invariants(q);
    std::cout << "p1=" << inv.p1 << " s=" << inv.s << " p2=" << inv.p2
              << " sigma2=" << inv.sigma2 << " sigma3=" << inv.sigma3
              << " sigma4=" << inv.sigma4 << "\n";
    return 0;
}

int run_canon(const Options& opt) {
    const FiveTuple q = parse_five_tuple(opt.q_text);
    const CanonicalClass c = canonical_class(q);
    std::cout << to_string(c.canon) << "\n";
    return 0;
}

int run_enumerate(const Options& opt) {
    const auto records = enumerate_classes(opt.p1_max, opt.threads);
    if (!opt.out.empty()) {
        export_records(records, parse_format(opt.format, opt.out), opt.out);
    }
    print_summary(summarize_counts(records));
    return 0;
}

int run_collisions(const Options& opt) {
    const auto records = enumerate_classes(opt.p1_max, opt.threads);
    const auto groups = find_collisions(records, collision_key_from_string(opt.key));
    std::cout << "groups: " << groups.size() << "\n";
    for (const auto& group : groups) {
        std::cout << "p1=" << group.front().p1;
        if (opt.key != "p1") std::cout << " s=" << group.front().s;
        if (opt.key == "p1sp2") {
            std::cout << " p2_set={" << group.front().p2 << ","
                      << (group.front().s - group.front().p2) % group.front().s << "}";
        }
        std::cout << ":";
        for (const auto& rec : group) {
            std::cout << " [" << to_string(rec.canon.canon) << "]"
                      << (rec.new_example ? "*" : "");
        }
        std::cout << "\n";
    }
    if (!opt.out.empty()) {
        std::vector<CatalogRecord> flat;
        for (const auto& group : groups) flat.insert(flat.end(), group.begin(), group.end());
        export_records(flat, parse_format(opt.format, opt.out), opt.out);
    }
    return 0;
}

int run_export(const Options& opt) {
    const auto records = load_records(opt.input);
    if (opt.out.empty()) {
        export_records(records, parse_format(opt.format, ""), std::cout);
    } else {
        export_records(records, parse_format(opt.format, opt.out), opt.out);
    }
    std::cerr << "records: " << records.size() << "\n";
    return 0;
}

int run_verify_zero_planes(const Options& opt) {
    const FiveTuple q = parse_five_tuple(opt.q_text);
    int found = 0;
    double worst = 0.0;
    for (int i = 0; i < opt.samples; ++i) {
        const Matrix5c a = random_su5(derive_seed(opt.seed, static_cast<std::uint64_t>(i)));
        const ZeroPlaneReport rep =
            find_zero_plane(q, a, opt.tol, derive_seed(opt.seed, 0x1000000ULL + i));
        if (rep.zero_plane_found()) {
            ++found;
            if (rep.zero_witness) worst = std::max(worst, std::abs(rep.g_at_witness));
        }
    }
    std::cout << "witnesses: " << found << "/" << opt.samples
              << " max|g|=" << worst << "\n";
    if (found != opt.samples) {
        std::cerr << "verification failed: " << (opt.samples - found)
                  << " points have no certified zero plane\n";
        return 1;
    }
    return 0;
}

int run_verify_qp(const Options& opt) {
    const FiveTuple q = parse_five_tuple(opt.q_text);
    const auto witness = same_sign_witness(q);
    if (!witness) {
        std::cerr << "verification failed: no same-sign pair configuration exists for "
                  << to_string(q) << "\n";
        return 1;
    }
    // Reorder so the witness pairs sit at slots (1,3) and (2,4); the
    // identity coset then carries no zero plane.  Negate if the shared
    // sign is negative so the functional certificate comes out positive.
    const auto [a, b, c, d] = *witness;
    FiveTuple r{q[a], q[c], q[b], q[d], 0};
    for (int i = 0; i < 5; ++i) {
        if (i != a && i != b && i != c && i != d) r[4] = q[i];
    }
    if (r[0] + r[2] < 0) {
        for (auto& v : r.q) v = -v;
    }
    const Matrix5c identity = Matrix5c::Identity();
    const double residual = fifth_column_residual(r, identity);
    const MinimizeResult min = minimize_plane_functional(r, identity, opt.samples, opt.seed);
    std::cout << "reordered q: " << to_string(r) << "\n";
    std::cout << "fifth-column residual at I: " << residual << "\n";
    std::cout << "functional minimum over " << opt.samples << " restarts: " << min.value
              << "\n";
    if (std::abs(residual) <= opt.tol || min.value <= opt.tol) {
        std::cerr << "verification failed: a zero-curvature certificate survived at I\n";
        return 1;
    }
    std::cout << "no zero plane at the identity coset\n";
    return 0;
}

int run_verify_open_set(const Options& opt) {
    const FiveTuple q = parse_five_tuple(opt.q_text);
    const OpenSetReport rep =
        verify_open_set(q, opt.theta, static_cast<std::size_t>(opt.samples), opt.seed, opt.tol);
    std::cout << "samples: " << rep.samples << " in_set: " << rep.in_set
              << " verified: " << rep.verified << "\n";
    std::cout << "min functional at identity: " << rep.min_identity_value << "\n";
    std::cout << "max functional at start point: " << rep.max_start_value << "\n";
    std::cout << "max |g| at witnesses: " << rep.max_witness_abs << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Census and curvature verification for the 13-dimensional spaces "
                 "defined by five odd integer parameters"};
    app.require_subcommand(1);

    Options opt;
    opt.threads = std::thread::hardware_concurrency();

    auto add_q = [&](CLI::App* cmd) {
        cmd->add_option("--q", opt.q_text, "five comma-separated odd integers")->required();
    };
    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--seed", opt.seed, "RNG seed");
        cmd->add_option("--tol", opt.tol, "zero-certification tolerance");
        cmd->add_option("--group-tol", opt.group_tol, "group-membership tolerance");
    };

    auto* classify_cmd = app.add_subcommand("classify", "curvature class of a tuple");
    add_q(classify_cmd);

    auto* invariants_cmd = app.add_subcommand("invariants", "topological invariants");
    add_q(invariants_cmd);

    auto* canon_cmd = app.add_subcommand("canon", "canonical six-tuple of the class");
    add_q(canon_cmd);

    auto* enum_cmd = app.add_subcommand("enumerate", "census of classes with p1 <= bound");
    enum_cmd->add_option("--p1-max", opt.p1_max, "p1 bound")->required();
    enum_cmd->add_option("--out", opt.out, "output file");
    enum_cmd->add_option("--format", opt.format, "jsonl|csv")
        ->check(CLI::IsMember({"jsonl", "csv"}));
    enum_cmd->add_option("--threads", opt.threads, "worker threads");

    auto* coll_cmd = app.add_subcommand("collisions", "classes sharing invariants");
    coll_cmd->add_option("--p1-max", opt.p1_max, "p1 bound")->required();
    coll_cmd->add_option("--key", opt.key, "p1|p1s|p1sp2")
        ->check(CLI::IsMember({"p1", "p1s", "p1sp2"}));
    coll_cmd->add_option("--out", opt.out, "output file");
    coll_cmd->add_option("--format", opt.format, "jsonl|csv")
        ->check(CLI::IsMember({"jsonl", "csv"}));
    coll_cmd->add_option("--threads", opt.threads, "worker threads");

    auto* export_cmd = app.add_subcommand("export", "reload a catalog and re-export it");
    export_cmd->add_option("input", opt.input, "catalog file (jsonl or csv)")->required();
    export_cmd->add_option("--out", opt.out, "output file (stdout when omitted)");
    export_cmd->add_option("--format", opt.format, "jsonl|csv")
        ->check(CLI::IsMember({"jsonl", "csv"}));

    auto* vzp_cmd = app.add_subcommand("verify-zero-planes",
                                       "zero-plane witnesses at random points");
    add_q(vzp_cmd);
    vzp_cmd->add_option("--samples", opt.samples, "number of random points");
    add_common(vzp_cmd);

    auto* vqp_cmd = app.add_subcommand("verify-qp",
                                       "certify the identity coset carries no zero plane");
    add_q(vqp_cmd);
    vqp_cmd->add_option("--samples", opt.samples, "minimization restarts");
    add_common(vqp_cmd);

    auto* vos_cmd = app.add_subcommand("verify-open-set",
                                       "zero planes on a neighborhood of the base point");
    add_q(vos_cmd);
    vos_cmd->add_option("--theta", opt.theta, "base-point angle");
    vos_cmd->add_option("--samples", opt.samples, "perturbation count");
    add_common(vos_cmd);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        app.exit(e);
        return 2;
    }

    try {
        if (classify_cmd->parsed()) return run_classify(opt);
        if (invariants_cmd->parsed()) return run_invariants(opt);
        if (canon_cmd->parsed()) return run_canon(opt);
        if (enum_cmd->parsed()) return run_enumerate(opt);
        if (coll_cmd->parsed()) return run_collisions(opt);
        if (export_cmd->parsed()) return run_export(opt);
        if (vzp_cmd->parsed()) return run_verify_zero_planes(opt);
        if (vqp_cmd->parsed()) return run_verify_qp(opt);
        if (vos_cmd->parsed()) return run_verify_open_set(opt);
    } catch (const VerificationFailure& e) {
        std::cerr << "verification failed: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
