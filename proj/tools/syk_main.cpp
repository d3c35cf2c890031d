// Command-line driver: ensemble sampling, density comparison, theory tables,
// q=2 statistics, extreme-eigenvalue campaigns, combinatorial bound sweeps.
//
// Exit codes: 0 ok, 2 invalid argument, 3 resource limit, 4 numeric failure,
// 5 parse error (malformed input file).
#include <omp.h>

#include <CLI11.hpp>
#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <json.hpp>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "syk/bits.hpp"
#include "syk/errors.hpp"
#include "syk/ffunc.hpp"
#include "syk/lanczos.hpp"
#include "syk/limit.hpp"
#include "syk/partitions.hpp"
#include "syk/q2.hpp"
#include "syk/spectra.hpp"
#include "syk/subsets.hpp"

using nlohmann::json;
using namespace syk;

namespace {

constexpr int kSchemaVersion = 1;

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::ofstream open_out(const std::string& path) {
    std::ofstream f(path);
    if (!f) throw std::invalid_argument("cannot open output file: " + path);
    return f;
}

void write_json(const std::string& path, const json& j) {
    auto f = open_out(path);
    f << j.dump(2) << "\n";
}

// ---------------------------------------------------------------------------
// eigenvalue CSV schema: "# schema_version=1" comment, then
// seed,n,q,index,eigenvalue
// ---------------------------------------------------------------------------

void write_eigs_csv(const std::string& path, const std::vector<EmpiricalMeasure>& spectra) {
    auto f = open_out(path);
    f << "# schema_version=" << kSchemaVersion << "\n";
    f << "seed,n,q,index,eigenvalue\n";
    for (const auto& m : spectra)
        for (std::size_t j = 0; j < m.eigenvalues.size(); ++j)
            f << m.seed << ',' << m.n << ',' << m.q << ',' << j << ','
              << fmt(m.eigenvalues[j]) << "\n";
}

void write_hist_csv(const std::string& path, const HistogramView& h) {
    auto f = open_out(path);
    f << "# schema_version=" << kSchemaVersion << "\n";
    f << "bin_left,bin_right,density\n";
    for (std::size_t b = 0; b + 1 < h.edges.size(); ++b)
        f << fmt(h.edges[b]) << ',' << fmt(h.edges[b + 1]) << ',' << fmt(h.density[b]) << "\n";
}

void write_density_csv(const std::string& path, const LimitDensity& d, int points) {
    auto f = open_out(path);
    f << "# schema_version=" << kSchemaVersion << "\n";
    f << "x,density\n";
    const double lo = d.support_min(), hi = d.support_max();
    for (int i = 0; i < points; ++i) {
        const double x = lo + (hi - lo) * i / (points - 1.0);
        f << fmt(x) << ',' << fmt(density_eval(d, x)) << "\n";
    }
}

std::vector<EmpiricalMeasure> read_eigs_csv(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw parse_error("cannot open eigenvalue CSV: " + path);
    std::string line;
    long lineno = 0;
    bool header_seen = false;
    std::map<std::uint64_t, std::size_t> slot; // seed -> measure index (first appearance)
    std::vector<EmpiricalMeasure> out;
    while (std::getline(f, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line[0] == '#') continue;
        if (!header_seen) {
            if (line != "seed,n,q,index,eigenvalue")
                throw parse_error("expected header 'seed,n,q,index,eigenvalue'", lineno);
            header_seen = true;
            continue;
        }
        std::array<std::string, 5> field;
        std::size_t pos = 0;
        for (int c = 0; c < 5; ++c) {
            const std::size_t next = line.find(',', pos);
            if (c < 4 && next == std::string::npos)
                throw parse_error("expected 5 comma-separated fields", lineno);
            field[c] = line.substr(pos, next == std::string::npos ? next : next - pos);
            pos = next + 1;
            if (c == 4 && next != std::string::npos)
                throw parse_error("expected 5 comma-separated fields", lineno);
        }
        try {
            const std::uint64_t seed = std::stoull(field[0]);
            const int n = std::stoi(field[1]);
            const int q = std::stoi(field[2]);
            (void)std::stoull(field[3]); // index: presence checked, order not trusted
            const double ev = std::stod(field[4]);
            auto [it, fresh] = slot.try_emplace(seed, out.size());
            if (fresh) {
                out.emplace_back();
                out.back().seed = seed;
                out.back().n = n;
                out.back().q = q;
            }
            EmpiricalMeasure& m = out[it->second];
            if (m.n != n || m.q != q)
                throw parse_error("inconsistent n or q within one seed group", lineno);
            m.eigenvalues.push_back(ev);
        } catch (const parse_error&) {
            throw;
        } catch (const std::exception&) {
            throw parse_error("malformed numeric field", lineno);
        }
    }
    if (!header_seen) throw parse_error("missing header line", lineno);
    if (out.empty()) throw parse_error("no eigenvalue rows", lineno);
    for (auto& m : out) std::sort(m.eigenvalues.begin(), m.eigenvalues.end());
    const int n0 = out[0].n, q0 = out[0].q;
    for (const auto& m : out)
        if (m.n != n0 || m.q != q0) throw parse_error("mixed (n,q) groups in one file");
    return out;
}

// ---------------------------------------------------------------------------
// JSON config injection: --config FILE supplies defaults; explicit CLI flags
// win because injected tokens come first and options take the last value.
// ---------------------------------------------------------------------------

std::vector<std::string> expand_config(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    std::string cfg_path;
    std::size_t cfg_at = args.size();
    for (std::size_t i = 0; i < args.size(); ++i) {
        if (args[i] == "--config") {
            if (i + 1 >= args.size()) throw std::invalid_argument("--config needs a file path");
            cfg_path = args[i + 1];
            cfg_at = i;
            args.erase(args.begin() + i, args.begin() + i + 2);
            break;
        }
        if (args[i].rfind("--config=", 0) == 0) {
            cfg_path = args[i].substr(9);
            cfg_at = i;
            args.erase(args.begin() + i);
            break;
        }
    }
    if (cfg_path.empty()) return args;
    if (args.empty() || args[0].rfind("-", 0) == 0)
        throw std::invalid_argument("--config requires a subcommand");

    std::ifstream f(cfg_path);
    if (!f) throw parse_error("cannot open config file: " + cfg_path);
    json cfg;
    try {
        f >> cfg;
    } catch (const json::exception& e) {
        throw parse_error(std::string("config JSON: ") + e.what());
    }
    if (!cfg.is_object()) throw parse_error("config JSON must be an object");
    (void)cfg_at;
    std::vector<std::string> inject;
    for (const auto& [key, val] : cfg.items()) {
        if (val.is_boolean()) {
            if (val.get<bool>()) inject.push_back("--" + key);
        } else if (val.is_string()) {
            inject.push_back("--" + key);
            inject.push_back(val.get<std::string>());
        } else if (val.is_number_unsigned()) {
            inject.push_back("--" + key);
            inject.push_back(std::to_string(val.get<std::uint64_t>()));
        } else if (val.is_number_integer()) {
            inject.push_back("--" + key);
            inject.push_back(std::to_string(val.get<long long>()));
        } else if (val.is_number_float()) {
            inject.push_back("--" + key);
            inject.push_back(fmt(val.get<double>()));
        } else {
            throw parse_error("config key '" + key + "' has an unsupported value type");
        }
    }
    args.insert(args.begin() + 1, inject.begin(), inject.end());
    return args;
}

Dist parse_dist(const std::string& s) { return dist_from_string(s); }

Parity parity_of_q(int q) { return q % 2 == 0 ? Parity::even : Parity::odd; }

double family_theory_moment(DensityFamily fam, int k, double a, Parity par) {
    if (k % 2 != 0) return 0.0;
    switch (fam) {
        case DensityFamily::gaussian: return double_factorial_odd(k);
        case DensityFamily::semicircle: return static_cast<double>(catalan_moment(k));
        case DensityFamily::qhermite: return limit_moment(k, a, par);
    }
    return 0.0;
}

struct FamilyEntry {
    std::string name;
    LimitDensity density;
    DensityFamily fam;
};

// ---------------------------------------------------------------------------
// subcommands
// ---------------------------------------------------------------------------

int cmd_sample(int n, int q, const std::string& dist, int samples, std::uint64_t seed,
               const std::string& out, const std::string& hist, int bins,
               std::size_t dense_cap) {
    SpectrumOptions opt;
    opt.dense_cap = dense_cap;
    const auto spectra = sample_spectra(n, q, parse_dist(dist), samples, seed, opt);
    write_eigs_csv(out, spectra);
    std::vector<double> pooled;
    for (const auto& m : spectra)
        pooled.insert(pooled.end(), m.eigenvalues.begin(), m.eigenvalues.end());
    write_hist_csv(hist, histogram(pooled, bins));
    std::printf("wrote %zu eigenvalues (%d samples) to %s, histogram to %s\n", pooled.size(),
                samples, out.c_str(), hist.c_str());
    return 0;
}

int cmd_compare(const std::string& eigs_path, const std::string& families_csv,
                const std::string& out) {
    const auto spectra = read_eigs_csv(eigs_path);
    const int n = spectra[0].n, q = spectra[0].q;
    const double a = static_cast<double>(q) * q / n;
    const Parity par = parity_of_q(q);
    const double y = (par == Parity::even ? 1.0 : -1.0) * std::exp(-2.0 * a);

    std::vector<FamilyEntry> fams;
    std::stringstream ss(families_csv);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (tok == "gaussian")
            fams.push_back({tok, LimitDensity::gaussian(), DensityFamily::gaussian});
        else if (tok == "semicircle")
            fams.push_back({tok, LimitDensity::semicircle(), DensityFamily::semicircle});
        else if (tok == "qhermite")
            fams.push_back({tok, LimitDensity::qhermite(y), DensityFamily::qhermite});
        else
            throw std::invalid_argument("unknown family: " + tok);
    }
    if (fams.empty()) throw std::invalid_argument("no families requested");

    EmpiricalMeasure pooled;
    pooled.n = n;
    pooled.q = q;
    for (const auto& m : spectra)
        pooled.eigenvalues.insert(pooled.eigenvalues.end(), m.eigenvalues.begin(),
                                  m.eigenvalues.end());
    std::sort(pooled.eigenvalues.begin(), pooled.eigenvalues.end());

    // per-sample moments k = 1..8 -> ensemble mean and stderr
    const int S = static_cast<int>(spectra.size());
    json moment_rows = json::array();
    std::vector<double> emp_mean(9, 0.0), emp_se(9, 0.0);
    for (int k = 1; k <= 8; ++k) {
        std::vector<double> ms(S);
        for (int i = 0; i < S; ++i) ms[i] = empirical_moment(spectra[i], k);
        double mean = 0;
        for (double v : ms) mean += v;
        mean /= S;
        double var = 0;
        for (double v : ms) var += (v - mean) * (v - mean);
        const double se = S > 1 ? std::sqrt(var / (S - 1.0) / S) : 0.0;
        emp_mean[k] = mean;
        emp_se[k] = se;
    }

    json jfam = json::array();
    std::string best;
    double best_ks = 2.0;
    for (const auto& fe : fams) {
        const double ks = ks_distance(pooled, fe.density);
        json rows = json::array();
        for (int k = 1; k <= 8; ++k)
            rows.push_back({{"k", k},
                            {"empirical_mean", emp_mean[k]},
                            {"empirical_stderr", emp_se[k]},
                            {"theory", family_theory_moment(fe.fam, k, a, par)}});
        json entry{{"family", fe.name}, {"ks", ks}, {"moments", rows}};
        if (fe.fam == DensityFamily::qhermite) entry["y"] = y;
        jfam.push_back(entry);
        if (ks < best_ks) {
            best_ks = ks;
            best = fe.name;
        }
    }

    json rep{{"schema_version", kSchemaVersion},
             {"n", n},
             {"q", q},
             {"a", a},
             {"samples", S},
             {"eigenvalues", pooled.eigenvalues.size()},
             {"families", jfam},
             {"selected_family", best},
             {"selected_ks", best_ks}};
    write_json(out, rep);
    std::printf("minimal-KS family: %s (ks = %s); report in %s\n", best.c_str(), fmt(best_ks).c_str(),
                out.c_str());
    return 0;
}

int cmd_theory(int kmax, const std::string& a_csv, const std::string& parity_s,
               const std::string& moments_out, const std::string& density_out,
               int density_points) {
    if (kmax < 1 || kmax > 14) throw std::invalid_argument("kmax must be in [1, 14]");
    const Parity par = parity_s == "even" ? Parity::even
                       : parity_s == "odd" ? Parity::odd
                                           : throw std::invalid_argument("parity: even|odd");
    std::vector<std::pair<std::string, AParam>> as;
    std::stringstream ss(a_csv);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (tok == "inf" || tok == "Inf" || tok == "INF")
            as.emplace_back("inf", AParam::infinity());
        else
            as.emplace_back(tok, AParam(std::stod(tok)));
    }
    if (as.empty()) throw std::invalid_argument("empty a-list");

    json entries = json::array();
    for (const auto& [label, a] : as)
        for (int k = 1; k <= kmax; ++k) {
            json e{{"k", k}, {"parity", parity_s}, {"value", limit_moment(k, a, par)}};
            if (a.is_infinite())
                e["a"] = "inf";
            else
                e["a"] = a.value();
            entries.push_back(e);
        }

    json dfiles = json::object();
    if (!density_out.empty()) {
        const std::size_t dot = density_out.rfind('.');
        const std::string stem = dot == std::string::npos ? density_out : density_out.substr(0, dot);
        const std::string ext = dot == std::string::npos ? ".csv" : density_out.substr(dot);
        for (std::size_t i = 0; i < as.size(); ++i) {
            const auto& [label, a] = as[i];
            std::optional<LimitDensity> d;
            if (a.is_infinite())
                d = LimitDensity::semicircle();
            else if (par == Parity::even && a.value() < 1e-4)
                d = LimitDensity::gaussian();
            else if (a.value() > 0.0)
                d = LimitDensity::qhermite(
                    (par == Parity::even ? 1.0 : -1.0) * std::exp(-2.0 * a.value()));
            // odd parity at a = 0 is a pure two-atom law: no density to grid
            if (!d) {
                dfiles[label] = nullptr;
                continue;
            }
            const std::string path = stem + "_a" + std::to_string(i) + ext;
            write_density_csv(path, *d, density_points);
            dfiles[label] = path;
        }
    }

    json rep{{"schema_version", kSchemaVersion},
             {"parity", parity_s},
             {"kmax", kmax},
             {"moments", entries}};
    if (!density_out.empty()) rep["density_files"] = dfiles;
    write_json(moments_out, rep);
    std::printf("theory tables in %s\n", moments_out.c_str());
    return 0;
}

int cmd_q2(int n, int samples, std::uint64_t seed, const std::string& out) {
    if (n < 2 || n % 2 != 0) throw std::invalid_argument("q2: n must be positive even");
    if (samples < 1) throw std::invalid_argument("q2: samples >= 1");
    std::vector<double> ratios(samples);
    for (int i = 0; i < samples; ++i) {
        const auto b = sample_antisymmetric(n, Dist::gaussian, derive_seed(seed, i));
        ratios[i] = q2_lambda_max(b) / std::sqrt(static_cast<double>(n));
    }
    double mean = 0;
    for (double r : ratios) mean += r;
    mean /= samples;
    double var = 0;
    for (double r : ratios) var += (r - mean) * (r - mean);
    const double se = samples > 1 ? std::sqrt(var / (samples - 1.0) / samples) : 0.0;
    const double ref = 4.0 * std::sqrt(2.0) / (3.0 * std::acos(-1.0));
    json rep{{"schema_version", kSchemaVersion},
             {"n", n},
             {"samples", samples},
             {"seed", seed},
             {"lambda_max_over_sqrt_n_mean", mean},
             {"stderr", se},
             {"reference_4sqrt2_over_3pi", ref},
             {"deviation", mean - ref},
             {"per_sample", ratios}};
    write_json(out, rep);
    std::printf("lambda_max/sqrt(n): mean = %s, stderr = %s, reference = %s, deviation = %s\n",
                fmt(mean).c_str(), fmt(se).c_str(), fmt(ref).c_str(), fmt(mean - ref).c_str());
    return 0;
}

int cmd_lmax(int n, int q, int samples, std::uint64_t seed, double tol, int max_iter,
             std::size_t mf_cap, const std::string& out) {
    if (samples < 1) throw std::invalid_argument("lmax: samples >= 1");
    LanczosOptions lopt;
    lopt.tol = tol;
    lopt.max_iter = max_iter;
    lopt.matrix_free_cap = mf_cap;
    json per = json::array();
    std::vector<double> vals;
    int failures = 0;
    for (int i = 0; i < samples; ++i) {
        const auto t = sample_couplings(n, q, Dist::gaussian, derive_seed(seed, i));
        const auto h = build_hamiltonian(t);
        try {
            const auto r = lanczos_extreme(h, Extreme::max, lopt);
            vals.push_back(r.value);
            per.push_back({{"sample", i},
                           {"seed", t.seed},
                           {"lambda_max", r.value},
                           {"iterations", r.iterations},
                           {"residual", r.residual}});
        } catch (const numeric_error& e) {
            ++failures;
            per.push_back({{"sample", i},
                           {"seed", t.seed},
                           {"error", e.what()},
                           {"best_estimate", e.best_estimate},
                           {"residual", e.residual}});
        }
    }
    double mean = 0;
    for (double v : vals) mean += v;
    if (!vals.empty()) mean /= static_cast<double>(vals.size());
    double var = 0;
    for (double v : vals) var += (v - mean) * (v - mean);
    const double se =
        vals.size() > 1 ? std::sqrt(var / (vals.size() - 1.0) / vals.size()) : 0.0;

    const bool bound_applies = q >= 4 && q % 2 == 0;
    const double bound = std::sqrt(n * std::log(2.0));
    bool violated = false;
    json rep{{"schema_version", kSchemaVersion},
             {"n", n},
             {"q", q},
             {"samples", samples},
             {"seed", seed},
             {"converged", vals.size()},
             {"lambda_max_mean", mean},
             {"stderr", se},
             {"per_sample", per}};
    if (bound_applies) {
        violated = !vals.empty() && mean > bound + 4 * se;
        rep["bound_sqrt_n_ln2"] = bound;
        rep["bound_margin"] = bound - mean;
        rep["bound_violated"] = violated;
        std::printf("mean lambda_max = %s (stderr %s), bound sqrt(n ln 2) = %s, margin = %s\n",
                    fmt(mean).c_str(), fmt(se).c_str(), fmt(bound).c_str(),
                    fmt(bound - mean).c_str());
    } else {
        std::printf("mean lambda_max = %s (stderr %s); bound check skipped (needs even q >= 4)\n",
                    fmt(mean).c_str(), fmt(se).c_str());
    }
    write_json(out, rep);
    if (failures > 0)
        throw numeric_error(std::to_string(failures) + " sample(s) failed to converge", mean, 0.0);
    if (violated)
        throw numeric_error("mean lambda_max exceeds sqrt(n ln 2) beyond 4 stderr", mean,
                            mean - bound);
    return 0;
}

int cmd_fbound(int m_max, const std::string& out) {
    const auto rep = f_bound_check(m_max);
    json j{{"schema_version", kSchemaVersion},
           {"m_max", m_max},
           {"cases_checked", rep.cases_checked},
           {"all_pass", rep.all_pass},
           {"max_ratio", rep.max_ratio},
           {"worst",
            {{"p", rep.worst.p},
             {"q", rep.worst.q},
             {"m", rep.worst.m},
             {"abs_f", rep.worst.abs_f},
             {"bound", rep.worst.bound}}}};
    if (!out.empty()) write_json(out, j);
    std::printf("%s: %ld cases, max |F|/bound = %s at (p=%ld, q=%ld, m=%ld)\n",
                rep.all_pass ? "PASS" : "FAIL", rep.cases_checked, fmt(rep.max_ratio).c_str(),
                rep.worst.p, rep.worst.q, rep.worst.m);
    if (!rep.all_pass)
        throw numeric_error("combinatorial bound violated", rep.max_ratio, 0.0);
    return 0;
}

int cmd_intersect(int n, int q, std::uint64_t trials, std::uint64_t seed, const std::string& out) {
    const auto st = intersection_statistics(n, q, trials, seed);
    // exact hypergeometric reference and its exact TV to Poisson(q^2/n)
    const double a = static_cast<double>(q) * q / n;
    std::vector<double> hyper(q + 1);
    for (int j = 0; j <= q; ++j)
        hyper[j] = binomial_d(q, j) * binomial_d(n - q, q - j) / binomial_d(n, q);
    double tv_exact = 0, pois = std::exp(-a), tail = 1.0;
    for (int j = 0; j <= q; ++j) {
        tv_exact += std::abs(hyper[j] - pois);
        tail -= pois;
        pois *= a / (j + 1);
    }
    tv_exact = 0.5 * (tv_exact + std::max(tail, 0.0));
    json rep{{"schema_version", kSchemaVersion},
             {"n", n},
             {"q", q},
             {"trials", trials},
             {"seed", seed},
             {"poisson_a", a},
             {"mean", st.mean},
             {"mean_exact", a},
             {"pmf", st.pmf},
             {"pmf_exact", hyper},
             {"tv_to_poisson", st.tv_to_poisson},
             {"tv_exact", tv_exact}};
    write_json(out, rep);
    std::printf("mean overlap = %s (exact %s), TV to Poisson(a) = %s (exact %s)\n",
                fmt(st.mean).c_str(), fmt(a).c_str(), fmt(st.tv_to_poisson).c_str(),
                fmt(tv_exact).c_str());
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"SYK spectra laboratory: sampling, limit laws, exact q=2, bounds"};
    app.require_subcommand(1);
    app.option_defaults()->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);

    int workers = 0;
    app.add_option("--workers", workers, "worker threads (results are invariant)");

    // sample
    auto* sc_sample = app.add_subcommand("sample", "sample spectra of random Hamiltonians");
    sc_sample->fallthrough();
    int s_n = 16, s_q = 4, s_samples = 10, s_bins = 101;
    std::string s_dist = "gaussian", s_out = "eigenvalues.csv", s_hist = "histogram.csv";
    std::uint64_t s_seed = 0;
    std::size_t s_cap = 4096;
    sc_sample->add_option("--n", s_n, "Majorana count (even)")->required();
    sc_sample->add_option("--q", s_q, "interaction order");
    sc_sample->add_option("--dist", s_dist, "gaussian|rademacher|uniform");
    sc_sample->add_option("--samples", s_samples, "ensemble size");
    sc_sample->add_option("--seed", s_seed, "base seed (per-sample seeds are derived)")
        ->required();
    sc_sample->add_option("--out", s_out, "eigenvalue CSV path");
    sc_sample->add_option("--hist", s_hist, "histogram CSV path");
    sc_sample->add_option("--bins", s_bins, "histogram bin count");
    sc_sample->add_option("--dense-cap", s_cap, "largest dense dimension");

    // compare
    auto* sc_compare = app.add_subcommand("compare", "KS/moment comparison against limit laws");
    sc_compare->fallthrough();
    std::string c_eigs, c_out = "compare.json", c_fams = "gaussian,qhermite,semicircle";
    sc_compare->add_option("--eigs", c_eigs, "eigenvalue CSV (from sample)")->required();
    sc_compare->add_option("--families", c_fams, "comma list: gaussian,qhermite,semicircle");
    sc_compare->add_option("--out", c_out, "report JSON path");

    // theory
    auto* sc_theory = app.add_subcommand("theory", "limit moments and density grids");
    sc_theory->fallthrough();
    int t_kmax = 8, t_points = 512;
    std::string t_alist = "0,0.5,1,2,inf", t_parity = "even", t_out = "theory.json",
                t_density;
    sc_theory->add_option("--kmax", t_kmax, "largest moment order (<= 14)");
    sc_theory->add_option("--a-list", t_alist, "comma list of a values; 'inf' allowed");
    sc_theory->add_option("--parity", t_parity, "even|odd");
    sc_theory->add_option("--out", t_out, "moment table JSON path");
    sc_theory->add_option("--density-out", t_density, "density CSV path stem (one file per a)");
    sc_theory->add_option("--density-points", t_points, "grid points per density CSV");

    // q2
    auto* sc_q2 = app.add_subcommand("q2", "closed-form q=2 largest-eigenvalue statistics");
    sc_q2->fallthrough();
    int q2_n = 1000, q2_samples = 20;
    std::uint64_t q2_seed = 0;
    std::string q2_out = "q2.json";
    sc_q2->add_option("--n", q2_n, "matrix size (even)");
    sc_q2->add_option("--samples", q2_samples, "ensemble size");
    sc_q2->add_option("--seed", q2_seed, "base seed")->required();
    sc_q2->add_option("--out", q2_out, "report JSON path");

    // lmax
    auto* sc_lmax = app.add_subcommand("lmax", "extreme eigenvalue campaign (Lanczos)");
    sc_lmax->fallthrough();
    int l_n = 28, l_q = 4, l_samples = 20, l_maxit = 300;
    double l_tol = 1e-6;
    std::uint64_t l_seed = 0;
    std::size_t l_cap = std::size_t{1} << 16;
    std::string l_out = "lmax.json";
    sc_lmax->add_option("--n", l_n, "Majorana count (even)");
    sc_lmax->add_option("--q", l_q, "interaction order");
    sc_lmax->add_option("--samples", l_samples, "ensemble size");
    sc_lmax->add_option("--seed", l_seed, "base seed")->required();
    sc_lmax->add_option("--tol", l_tol, "Lanczos tolerance");
    sc_lmax->add_option("--max-iter", l_maxit, "Lanczos iteration budget");
    sc_lmax->add_option("--mf-cap", l_cap, "matrix-free dimension cap");
    sc_lmax->add_option("--out", l_out, "report JSON path");

    // fbound
    auto* sc_fbound = app.add_subcommand("fbound", "exhaustive combinatorial bound sweep");
    sc_fbound->fallthrough();
    int f_mmax = 40;
    std::string f_out;
    sc_fbound->add_option("--mmax", f_mmax, "largest m (<= 60)");
    sc_fbound->add_option("--out", f_out, "optional report JSON path");

    // intersect
    auto* sc_intersect = app.add_subcommand("intersect", "subset-overlap law vs Poisson");
    sc_intersect->fallthrough();
    int i_n = 100, i_q = 10;
    std::uint64_t i_trials = 100000, i_seed = 0;
    std::string i_out = "intersect.json";
    sc_intersect->add_option("--n", i_n, "ground-set size");
    sc_intersect->add_option("--q", i_q, "subset size");
    sc_intersect->add_option("--trials", i_trials, "pair draws");
    sc_intersect->add_option("--seed", i_seed, "RNG seed")->required();
    sc_intersect->add_option("--out", i_out, "report JSON path");

    try {
        const auto args = expand_config(argc, argv);
        // CLI11 parses reversed vectors
        std::vector<std::string> rev(args.rbegin(), args.rend());
        app.parse(rev);
        if (workers > 0) omp_set_num_threads(workers);
        if (*sc_sample)
            return cmd_sample(s_n, s_q, s_dist, s_samples, s_seed, s_out, s_hist, s_bins, s_cap);
        if (*sc_compare) return cmd_compare(c_eigs, c_fams, c_out);
        if (*sc_theory)
            return cmd_theory(t_kmax, t_alist, t_parity, t_out, t_density, t_points);
        if (*sc_q2) return cmd_q2(q2_n, q2_samples, q2_seed, q2_out);
        if (*sc_lmax)
            return cmd_lmax(l_n, l_q, l_samples, l_seed, l_tol, l_maxit, l_cap, l_out);
        if (*sc_fbound) return cmd_fbound(f_mmax, f_out);
        if (*sc_intersect) return cmd_intersect(i_n, i_q, i_trials, i_seed, i_out);
        return 2;
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    } catch (const parse_error& e) {
        std::fprintf(stderr, "parse error: %s\n", e.what());
        return 5;
    } catch (const resource_limit_error& e) {
        std::fprintf(stderr, "resource limit: %s\n", e.what());
        return 3;
    } catch (const numeric_error& e) {
        std::fprintf(stderr, "numeric failure: %s (best estimate %.17g, residual %.17g)\n",
                     e.what(), e.best_estimate, e.residual);
        return 4;
    } catch (const std::invalid_argument& e) {
        std::fprintf(stderr, "invalid argument: %s\n", e.what());
        return 2;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    }
}
