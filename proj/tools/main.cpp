// Command-line surface: generate instances, run the approximation pipelines,
// apply problem reductions, solve small instances exactly, and audit the
// structural invariants.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "lcmst/experiment.hpp"
#include "lcmst/reductions.hpp"

namespace fs = std::filesystem;
using namespace lcmst;

namespace {

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

void spit(const std::string& path, const std::string& content) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << content;
}

AuditLevel audit_of(const std::string& s) {
    if (s == "none") return AuditLevel::None;
    if (s == "basic") return AuditLevel::Basic;
    if (s == "full") return AuditLevel::Full;
    throw CLI::ValidationError("--audit", "expected none|basic|full");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"length-constrained spanning/Steiner tree toolkit"};
    app.require_subcommand(1);

    // ── gen ─────────────────────────────────────────────────────────
    auto* gen = app.add_subcommand("gen", "generate a seeded planar instance");
    GeneratorConfig gcfg;
    std::string gen_kind = "grid";
    std::string gen_out;
    gen->add_option("--kind", gen_kind,
                    "grid|triangulated-random|stacked-triangulation|gadget-fig1-analog|gst-gadget");
    gen->add_option("--n", gcfg.n, "target vertex count");
    gen->add_option("--seed", gcfg.seed, "rng seed (fully determines the instance)");
    gen->add_option("--h-factor", gcfg.h_factor, "h = ceil(factor * SPT eccentricity)");
    gen->add_option("--max-length", gcfg.max_length);
    gen->add_option("--min-length", gcfg.min_length);
    gen->add_option("--max-weight", gcfg.max_weight);
    gen->add_option("--min-weight", gcfg.min_weight);
    gen->add_option("--keep-edge-prob", gcfg.keep_edge_prob);
    gen->add_option("--groups", gcfg.groups, "group count (gst-gadget)");
    gen->add_flag("--adversarial", gcfg.adversarial, "anti-correlate weight and length");
    gen->add_flag("--infeasible", gcfg.infeasible, "force h below the eccentricity");
    gen->add_option("--out", gen_out, "output file (stdout if omitted)");

    // ── solve ───────────────────────────────────────────────────────
    auto* solve = app.add_subcommand("solve", "run the approximation pipeline(s)");
    std::string solve_file, solve_algo = "main", solve_audit = "basic", solve_out;
    std::string solve_hier_dump;
    double alpha_opt = 2.0, delta_opt = 0.5, eps_opt = 0.0, lp_eps = 1.0;
    std::int64_t beta_opt = 2;
    std::uint64_t seed_opt = 0;
    std::string solve_gen_kind;
    int solve_gen_n = 12;
    solve->add_option("file", solve_file, "instance file (or use --gen)");
    solve->add_option("--gen", solve_gen_kind, "generate instead of reading a file");
    solve->add_option("--n", solve_gen_n, "generated size");
    solve->add_option("--seed", seed_opt, "generator seed");
    solve->add_option("--algo", solve_algo, "main|lp-shortcuts|exact|all");
    solve->add_option("--alpha", alpha_opt);
    solve->add_option("--beta", beta_opt);
    solve->add_option("--delta", delta_opt);
    solve->add_option("--epsilon", eps_opt, "preset: derive alpha/beta/delta from epsilon");
    solve->add_option("--lp-epsilon", lp_eps, "epsilon for the lp-shortcuts variant");
    solve->add_option("--audit", solve_audit, "none|basic|full");
    solve->add_option("--out", solve_out, "report directory (json + csv)");
    solve->add_option("--dump-hierarchy", solve_hier_dump, "write the hierarchy JSON here");

    // ── reduce ──────────────────────────────────────────────────────
    auto* reduce = app.add_subcommand("reduce", "apply a problem reduction");
    std::string red_file, red_from, red_to, red_out, red_sidecar;
    reduce->add_option("file", red_file)->required();
    reduce->add_option("--from", red_from, "lcst|lcmst|dst|gst")->required();
    reduce->add_option("--to", red_to, "lcmst|dst|lcst")->required();
    reduce->add_option("--out", red_out, "target instance file (stdout if omitted)");
    reduce->add_option("--sidecar", red_sidecar, "mapper correspondence tables (json)");

    // ── solve-exact ─────────────────────────────────────────────────
    auto* sx = app.add_subcommand("solve-exact", "brute-force oracle");
    std::string sx_file;
    sx->add_option("file", sx_file)->required();

    // ── audit ───────────────────────────────────────────────────────
    auto* audit = app.add_subcommand("audit", "re-verify structural invariants");
    std::string audit_file, audit_level = "full";
    double a_alpha = 2.0;
    std::int64_t a_beta = 2;
    audit->add_option("file", audit_file)->required();
    audit->add_option("--alpha", a_alpha);
    audit->add_option("--beta", a_beta);
    audit->add_option("--audit", audit_level, "basic|full");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*gen) {
            gcfg.kind = generator_kind_of(gen_kind);
            Instance inst = generate_instance(gcfg);
            std::string text = serialize_instance(inst);
            if (gen_out.empty())
                std::cout << text;
            else
                spit(gen_out, text);
            return 0;
        }

        if (*solve) {
            ExperimentConfig cfg;
            if (!solve_gen_kind.empty()) {
                cfg.generator.kind = generator_kind_of(solve_gen_kind);
                cfg.generator.n = solve_gen_n;
                cfg.generator.seed = seed_opt;
            }
            if (solve_algo == "main")
                cfg.algo = AlgoChoice::Main;
            else if (solve_algo == "lp-shortcuts")
                cfg.algo = AlgoChoice::LpShortcuts;
            else if (solve_algo == "exact")
                cfg.algo = AlgoChoice::Exact;
            else if (solve_algo == "all")
                cfg.algo = AlgoChoice::All;
            else
                throw CLI::ValidationError("--algo", "expected main|lp-shortcuts|exact|all");
            cfg.audit = audit_of(solve_audit);
            cfg.epsilon = lp_eps;

            Instance inst;
            if (!solve_gen_kind.empty()) {
                inst = generate_instance(cfg.generator);
            } else if (!solve_file.empty()) {
                inst = parse_instance(slurp(solve_file));
                cfg.instance_id = fs::path(solve_file).stem().string();
            } else {
                std::cerr << "solve: need an instance file or --gen\n";
                return 2;
            }
            if (eps_opt > 0) {
                cfg.params = params_from_epsilon(eps_opt, inst.n);
            } else {
                cfg.params.alpha =
                    Rational(static_cast<std::int64_t>(std::lround(alpha_opt * 4)), 4);
                cfg.params.beta = beta_opt;
                cfg.params.delta = delta_opt;
            }

            ExperimentReport rep = run_experiment_on(inst, cfg);
            std::cout << rep.to_json() << '\n';
            if (!solve_out.empty()) {
                fs::create_directories(solve_out);
                spit(solve_out + "/" + rep.instance_id + ".json", rep.to_json());
                std::string csv = ExperimentReport::csv_header() + "\n" + rep.csv_row() + "\n";
                spit(solve_out + "/" + rep.instance_id + ".csv", csv);
            }
            if (!solve_hier_dump.empty() &&
                (inst.kind == ProblemKind::LCMST || inst.kind == ProblemKind::LCST)) {
                Graph scaled = graph_of(inst);
                for (Edge& e : scaled.edges) e.length *= cfg.params.beta;
                HierarchyParams hp;
                hp.alpha = cfg.params.alpha;
                hp.h = inst.h * cfg.params.beta;
                Hierarchy hier = build_hierarchy(scaled, hp);
                spit(solve_hier_dump, hierarchy_to_json(hier));
            }
            return rep.violations.empty() ? 0 : 1;
        }

        if (*reduce) {
            Instance inst = parse_instance(slurp(red_file));
            if (kind_name(inst.kind) != red_from)
                throw ValidationError("--from does not match the instance kind");
            ReductionBundle bundle;
            if (red_from == "lcst" && red_to == "lcmst")
                bundle = lcst_to_lcmst(inst);
            else if (red_from == "lcmst" && red_to == "dst")
                bundle = lcmst_to_dst(inst);
            else if (red_from == "dst" && red_to == "lcst")
                bundle = dst_to_lcst(inst);
            else if (red_from == "gst" && red_to == "lcmst")
                bundle = gst_to_lcmst(inst);
            else
                throw ValidationError("unsupported reduction " + red_from + " -> " + red_to);
            std::string text = serialize_instance(bundle.target);
            if (red_out.empty())
                std::cout << text;
            else
                spit(red_out, text);
            if (!red_sidecar.empty()) spit(red_sidecar, bundle.sidecar_json());
            return 0;
        }

        if (*sx) {
            Instance inst = parse_instance(slurp(sx_file));
            ExactResult res;
            if (inst.kind == ProblemKind::DST)
                res = exact_dst(inst);
            else if (inst.kind == ProblemKind::LCMST)
                res = exact_lcmst(inst);
            else
                throw ValidationError("solve-exact handles lcmst and dst instances");
            if (!res.feasible) {
                std::cout << "infeasible\n";
                return 1;
            }
            std::cout << "optimum " << res.weight << "\nedges";
            for (int ei : res.edge_ids) std::cout << ' ' << ei;
            std::cout << "\ncandidates " << res.candidates << "\n";
            return 0;
        }

        if (*audit) {
            Instance inst = parse_instance(slurp(audit_file));
            AssemblerParams p;
            p.alpha = Rational(static_cast<std::int64_t>(std::lround(a_alpha * 4)), 4);
            p.beta = a_beta;
            auto bad = audit_instance(inst, p, audit_of(audit_level));
            for (const auto& v : bad) std::cerr << "violation: " << v << '\n';
            std::cout << (bad.empty() ? "audit clean\n" : "audit failed\n");
            return bad.empty() ? 0 : 1;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 0;
}
