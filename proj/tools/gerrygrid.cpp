// gerrygrid: enumerate grid districting plans, sweep voter distributions,
// regress clustering against expected representation, and run the
// distribution optimizers. All outputs carry a `#` metadata line and are
// reproducible from the recorded flags and seed.

#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "gerry/analyze.hpp"
#include "gerry/enumerate.hpp"
#include "gerry/eval.hpp"
#include "gerry/graph.hpp"
#include "gerry/optimize.hpp"
#include "gerry/plan.hpp"

namespace {

constexpr const char* kVersion = "gerrygrid 1.0.0";

std::string join_args(int argc, char** argv) {
    std::string s;
    for (int i = 1; i < argc; ++i) {
        if (i > 1) s.push_back(' ');
        s += argv[i];
    }
    return s;
}

// The `#` metadata line embedded at the top of every output file.
std::string metadata_line(const std::string& args, std::optional<std::uint64_t> seed) {
    std::ostringstream os;
    os << "# " << kVersion << " | args: " << args;
    if (seed) os << " | seed=" << *seed;
    return os.str();
}

// Output sink: a file when a path is given, stdout otherwise.
class Sink {
  public:
    explicit Sink(const std::string& path) {
        if (!path.empty()) {
            file_.open(path, std::ios::binary);
            if (!file_) throw std::runtime_error("cannot open output file: " + path);
        }
    }
    std::ostream& out() { return file_.is_open() ? file_ : std::cout; }
    void finish() {
        if (file_.is_open()) {
            file_.flush();
            if (!file_) throw std::runtime_error("write failed");
        }
    }

  private:
    std::ofstream file_;
};

int default_threads() {
    if (const char* env = std::getenv("GERRYGRID_THREADS")) {
        int t = std::atoi(env);
        if (t > 0) return t;
    }
    return 0;  // sweep() resolves 0 to the hardware count
}

gerry::PlanSet load_or_enumerate(const std::string& plans_path, int n) {
    if (plans_path.empty()) return gerry::enumerate_plans(n);
    std::ifstream in(plans_path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open plan file: " + plans_path);
    gerry::PlanSet ps = gerry::read_plans(in);
    if (ps.n != n)
        throw std::invalid_argument("plan file is for n=" + std::to_string(ps.n) +
                                    ", requested n=" + std::to_string(n));
    return ps;
}

struct EvalFlags {
    std::string backend = "exact";
    std::size_t sample_size = 1000;
    std::uint64_t steps = 100000, burn_in = 1000, thin = 10;
};

gerry::Evaluator make_evaluator(const EvalFlags& f, const gerry::PlanSet& ps,
                                const gerry::DualGraph& g, std::uint64_t seed) {
    if (f.backend == "exact") return gerry::Evaluator::exact(ps);
    if (f.backend == "sampled") return gerry::Evaluator::sampled(ps, f.sample_size, seed);
    if (f.backend == "chain")
        return gerry::Evaluator::chain(g, ps.n, f.steps, f.burn_in, f.thin, seed);
    throw std::invalid_argument("unknown evaluator backend: " + f.backend);
}

void add_optimizer_flags(CLI::App* cmd, gerry::OptimizerConfig& cfg) {
    cmd->add_option("--theta", cfg.theta, "happiness threshold for the shuffle step");
    cmd->add_option("--t0", cfg.t0, "initial annealing temperature");
    cmd->add_option("--alpha", cfg.alpha, "cooling factor");
    cmd->add_option("--theta-r", cfg.theta_r, "random-restart probability");
    cmd->add_option("--n-swap", cfg.n_swap, "blocks shuffled per random step");
    cmd->add_option("--k-max", cfg.k_max, "evaluation budget");
    cmd->add_flag("--cool-every-step", cfg.cool_every_step,
                  "cool on every iteration instead of only on acceptance");
}

int run(int argc, char** argv) {
    const std::string args = join_args(argc, argv);
    CLI::App app{"grid districting plans, voter-distribution sweeps and optimizers"};
    app.set_version_flag("--version", kVersion);
    app.require_subcommand(1);

    // ---- enumerate
    int en_n = 5;
    std::string en_out;
    auto* cmd_en = app.add_subcommand("enumerate", "list all legal plans for the n x n grid");
    cmd_en->add_option("-n,--grid", en_n, "grid side")->check(CLI::Range(1, 6))->required();
    cmd_en->add_option("-o,--out", en_out, "plan file path (omit to print only the count)");

    // ---- sweep
    int sw_n = 5, sw_threads = default_threads();
    std::string sw_plans, sw_out, sw_resume;
    bool sw_dedup = false;
    std::optional<int> sw_num;
    auto* cmd_sw = app.add_subcommand("sweep", "score every voter distribution over all plans");
    cmd_sw->add_option("-n,--grid", sw_n, "grid side")->check(CLI::Range(1, 6))->required();
    cmd_sw->add_option("--plans", sw_plans, "plan file from `enumerate` (else enumerated here)");
    cmd_sw->add_option("--num", sw_num, "restrict to distributions with this many dots");
    cmd_sw->add_flag("--dedup", sw_dedup, "one representative per symmetry orbit");
    cmd_sw->add_option("--resume-from", sw_resume, "restart strictly after this bits_hex value");
    cmd_sw->add_option("--threads", sw_threads, "worker threads (0 = hardware)");
    cmd_sw->add_option("-o,--out", sw_out, "CSV path (default stdout)");

    // ---- analyze
    std::string an_in, an_out;
    int an_n = 5;
    auto* cmd_an = app.add_subcommand("analyze", "slopes and extremes from a sweep CSV");
    cmd_an->add_option("--in", an_in, "sweep CSV")->required();
    cmd_an->add_option("--out", an_out, "slope CSV path (default stdout)");
    cmd_an->add_option("-n,--grid", an_n, "grid side for rendering extremes")
        ->check(CLI::Range(1, 6));

    // ---- optimize
    std::string op_alg, op_out;
    int op_n = 5, op_num = 10;
    std::uint64_t op_seed = 0;
    gerry::OptimizerConfig op_cfg;
    EvalFlags op_eval;
    auto* cmd_op = app.add_subcommand("optimize", "search for a high-representation distribution");
    cmd_op->add_option("--alg", op_alg, "rrils | sa | rsa | random")->required();
    cmd_op->add_option("--num", op_num, "dot count to optimize over")->required();
    cmd_op->add_option("-n,--grid", op_n, "grid side")->check(CLI::Range(1, 6));
    cmd_op->add_option("--seed", op_seed, "rng seed");
    add_optimizer_flags(cmd_op, op_cfg);
    cmd_op->add_option("--eval", op_eval.backend, "exact | sampled | chain");
    cmd_op->add_option("--sample-size", op_eval.sample_size, "plans sampled per evaluation");
    cmd_op->add_option("--steps", op_eval.steps, "chain steps per evaluation");
    cmd_op->add_option("--burn-in", op_eval.burn_in, "chain burn-in steps");
    cmd_op->add_option("--thin", op_eval.thin, "chain thinning interval");
    cmd_op->add_option("-o,--out", op_out, "JSON path (default stdout)");

    // ---- compare
    std::string cp_algs = "rrils,sa,rsa,random", cp_out, cp_exhaustive, cp_kgrid = "1,10,100,1000";
    int cp_n = 5, cp_num = 10, cp_trials = 100;
    std::uint64_t cp_seed = 0;
    gerry::OptimizerConfig cp_cfg;
    EvalFlags cp_eval;
    auto* cmd_cp = app.add_subcommand("compare", "mean best-so-far curves across algorithms");
    cmd_cp->add_option("--algs", cp_algs, "comma list of rrils,sa,rsa,random");
    cmd_cp->add_option("--num", cp_num, "dot count")->required();
    cmd_cp->add_option("--trials", cp_trials, "independent trials per algorithm");
    cmd_cp->add_option("--k-max-grid", cp_kgrid, "comma list of budgets to report");
    cmd_cp->add_option("-n,--grid", cp_n, "grid side")->check(CLI::Range(1, 6));
    cmd_cp->add_option("--seed", cp_seed, "rng seed");
    add_optimizer_flags(cmd_cp, cp_cfg);
    cmd_cp->add_option("--eval", cp_eval.backend, "exact | sampled | chain");
    cmd_cp->add_option("--sample-size", cp_eval.sample_size, "plans sampled per evaluation");
    cmd_cp->add_option("--exhaustive", cp_exhaustive,
                       "sweep CSV holding the exhaustive result; adds a known_max row");
    cmd_cp->add_option("-o,--out", cp_out, "curves CSV path (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    if (*cmd_en) {
        gerry::PlanSet ps = gerry::enumerate_plans(en_n);
        if (!en_out.empty()) {
            Sink sink(en_out);
            sink.out() << metadata_line(args, std::nullopt) << '\n';
            gerry::write_plans(ps, sink.out());
            sink.finish();
        }
        std::cout << ps.plans.size() << '\n';
        return 0;
    }

    if (*cmd_sw) {
        gerry::PlanSet ps = load_or_enumerate(sw_plans, sw_n);
        gerry::DualGraph g = gerry::grid_graph(sw_n, sw_n);
        std::optional<std::uint64_t> resume;
        if (!sw_resume.empty()) resume = std::stoull(sw_resume, nullptr, 16);
        Sink sink(sw_out);
        sink.out() << metadata_line(args, std::nullopt) << '\n';
        gerry::write_sweep_header(sink.out(), sw_n);
        gerry::sweep(g, ps, sw_dedup ? gerry::SweepMode::dedup : gerry::SweepMode::full, sw_num,
                     sw_threads, [&](const gerry::SweepRecord& r) {
                         gerry::write_sweep_record(sink.out(), r);
                     },
                     resume);
        sink.finish();
        return 0;
    }

    if (*cmd_an) {
        std::ifstream in(an_in, std::ios::binary);
        if (!in) throw std::runtime_error("cannot open sweep CSV: " + an_in);
        std::vector<gerry::ParsedSweepRecord> recs = gerry::read_sweep_csv(in);

        // regression of expected representation on the one-sided clustering
        // score, one point per row
        std::map<int, gerry::OlsAccumulator> acc;
        std::map<int, long long> counts;
        struct Extreme {
            gerry::ParsedSweepRecord best, worst;
            bool init = false;
        };
        std::map<int, Extreme> ext;
        for (const auto& r : recs) {
            if (r.num > 0 && r.clusp) {
                acc[r.num].add(*r.clusp, r.e_rep);
                ++counts[r.num];
            }
            Extreme& e = ext[r.num];
            if (!e.init) {
                e.best = e.worst = r;
                e.init = true;
            } else {
                if (r.e_rep > e.best.e_rep || (r.e_rep == e.best.e_rep && r.bits < e.best.bits))
                    e.best = r;
                if (r.e_rep < e.worst.e_rep || (r.e_rep == e.worst.e_rep && r.bits < e.worst.bits))
                    e.worst = r;
            }
        }
        std::vector<gerry::SlopeRow> rows;
        for (auto& [num, a] : acc) {
            if (num < 1 || num >= an_n * an_n) continue;
            auto [slope, intercept] = a.slope_intercept();
            rows.push_back({num, slope, intercept, counts[num]});
        }
        Sink sink(an_out);
        sink.out() << metadata_line(args, std::nullopt) << '\n';
        gerry::write_slope_csv(sink.out(), rows);
        sink.finish();

        for (auto& [num, e] : ext) {
            std::printf("num=%d best: bits=%llx e_rep=%.6f\n", num,
                        static_cast<unsigned long long>(e.best.bits), e.best.e_rep);
            std::fputs(gerry::ascii_grid(e.best.bits, an_n).c_str(), stdout);
            std::printf("num=%d worst: bits=%llx e_rep=%.6f\n", num,
                        static_cast<unsigned long long>(e.worst.bits), e.worst.e_rep);
            std::fputs(gerry::ascii_grid(e.worst.bits, an_n).c_str(), stdout);
        }
        return 0;
    }

    if (*cmd_op) {
        op_cfg.seed = op_seed;
        op_cfg.validate();
        gerry::DualGraph g = gerry::grid_graph(op_n, op_n);
        gerry::PlanSet ps = gerry::enumerate_plans(op_n);
        gerry::Evaluator ev = make_evaluator(op_eval, ps, g, op_seed);
        gerry::TrialResult r = gerry::run_algorithm(op_alg, ev, g, op_num, op_cfg);

        char hex[20];
        std::snprintf(hex, sizeof hex, "%llx", static_cast<unsigned long long>(r.best_bits));
        nlohmann::json j{
            {"algorithm", op_alg},
            {"grid", op_n},
            {"num", op_num},
            {"seed", op_seed},
            {"config",
             {{"theta", op_cfg.theta},
              {"t0", op_cfg.t0},
              {"alpha", op_cfg.alpha},
              {"theta_r", op_cfg.theta_r},
              {"n_swap", op_cfg.n_swap},
              {"k_max", op_cfg.k_max},
              {"cool_every_step", op_cfg.cool_every_step},
              {"eval", op_eval.backend}}},
            {"best_bits_hex", hex},
            {"best_score", r.best_score},
            {"evaluations", r.best_so_far.size()},
        };
        Sink sink(op_out);
        sink.out() << metadata_line(args, op_seed) << '\n' << j.dump(2) << '\n';
        sink.finish();
        return 0;
    }

    if (*cmd_cp) {
        cp_cfg.seed = cp_seed;
        cp_cfg.validate();
        std::vector<std::string> algs;
        for (std::stringstream ss(cp_algs); ss.good();) {
            std::string a;
            std::getline(ss, a, ',');
            if (!a.empty()) algs.push_back(a);
        }
        std::vector<long> kgrid;
        for (std::stringstream ss(cp_kgrid); ss.good();) {
            std::string a;
            std::getline(ss, a, ',');
            if (!a.empty()) kgrid.push_back(std::stol(a));
        }
        if (algs.empty() || kgrid.empty())
            throw std::invalid_argument("compare: empty --algs or --k-max-grid");

        gerry::DualGraph g = gerry::grid_graph(cp_n, cp_n);
        gerry::PlanSet ps = gerry::enumerate_plans(cp_n);
        gerry::Evaluator ev = make_evaluator(cp_eval, ps, g, cp_seed);
        std::vector<gerry::CurvePoint> curve =
            gerry::compare(algs, ev, g, cp_num, cp_trials, kgrid, cp_cfg, cp_seed);

        Sink sink(cp_out);
        sink.out() << metadata_line(args, cp_seed) << '\n';
        sink.out() << "algorithm,k_max,mean_best,stderr\n";
        char buf[128];
        for (const auto& p : curve) {
            std::snprintf(buf, sizeof buf, "%s,%ld,%.12g,%.12g\n", p.algorithm.c_str(), p.k_max,
                          p.mean_best, p.stderr_best);
            sink.out() << buf;
        }
        if (!cp_exhaustive.empty()) {
            std::ifstream in(cp_exhaustive, std::ios::binary);
            if (!in) throw std::runtime_error("cannot open sweep CSV: " + cp_exhaustive);
            double known = 0;
            bool seen = false;
            for (const auto& r : gerry::read_sweep_csv(in)) {
                if (r.num != cp_num) continue;
                if (!seen || r.e_rep > known) known = r.e_rep;
                seen = true;
            }
            if (!seen)
                throw std::invalid_argument("exhaustive CSV has no rows with num=" +
                                            std::to_string(cp_num));
            std::snprintf(buf, sizeof buf, "known_max,,%.12g,\n", known);
            sink.out() << buf;
        }
        sink.finish();
        return 0;
    }

    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    } catch (const std::runtime_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return 2;
    }
}
