#pragma once

// Batch commands behind the tpgabor executable. Each command reads a JSON
// configuration, writes its outputs into a directory and returns the process
// exit code: 0 success, 2 configuration error, 3 density violation,
// 4 numerical failure, 5 admissibility failure.

#include "tpgabor/error.hpp"
#include "tpgabor/gabor_frames.hpp"
#include "tpgabor/io.hpp"
#include "tpgabor/point_sequence.hpp"
#include "tpgabor/si_sampling.hpp"
#include "tpgabor/tp_kernel.hpp"
#include "tpgabor/tp_linalg.hpp"

#include "json.hpp"

#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

namespace tpgabor::cli {

enum ExitCode : int { Ok = 0, ConfigError = 2, DensityError = 3, NumericalError = 4, AdmissibilityError = 5 };

inline int exit_code_for(ErrorCode code)
{
    switch (code) {
    case ErrorCode::DensityViolation:
        return DensityError;
    case ErrorCode::ConditionViolated:
        return AdmissibilityError;
    case ErrorCode::NegativeDeterminant:
    case ErrorCode::SingularSubmatrix:
    case ErrorCode::UnboundedEntries:
    case ErrorCode::DegenerateSpectrum:
    case ErrorCode::ConditionCrViolated:
    case ErrorCode::WindowTooSmall:
        return NumericalError;
    default:
        return ConfigError;
    }
}

// ---------------------------------------------------------------------------
// logging (TPGABOR_LOG = off | error | warn | info | debug)

enum class LogLevel { Off, Error, Warn, Info, Debug };

inline LogLevel log_level()
{
    static const LogLevel level = [] {
        const char* env = std::getenv("TPGABOR_LOG");
        const std::string v = env ? env : "warn";
        if (v == "off")
            return LogLevel::Off;
        if (v == "error")
            return LogLevel::Error;
        if (v == "info")
            return LogLevel::Info;
        if (v == "debug")
            return LogLevel::Debug;
        return LogLevel::Warn;
    }();
    return level;
}

inline void log(LogLevel level, const std::string& msg)
{
    static const char* names[] = {"", "error", "warn", "info", "debug"};
    if (level != LogLevel::Off && level <= log_level())
        std::cerr << "[tpgabor] " << names[static_cast<int>(level)] << ": " << msg << '\n';
}

// ---------------------------------------------------------------------------
// options and output

enum class Format { Json, Csv };

struct Options {
    std::string config_path;
    std::string out_dir = ".";
    Format format = Format::Json;
    std::optional<std::uint64_t> seed;
    unsigned threads = 1;
};

/// The parsed configuration with --seed folded in, and its hash.
struct RunConfig {
    nlohmann::json params;
    std::string hash;
    std::filesystem::path base_dir;
    Options opt;

    std::uint64_t seed() const { return params.value("seed", std::uint64_t{1}); }
};

inline RunConfig load_config(const Options& opt)
{
    std::ifstream in(opt.config_path);
    if (!in)
        fail(ErrorCode::InvalidArgument, "cannot open config " + opt.config_path);
    RunConfig rc;
    try {
        rc.params = nlohmann::json::parse(in);
    } catch (const nlohmann::json::exception& e) {
        fail(ErrorCode::InvalidArgument, std::string("config is not valid JSON: ") + e.what());
    }
    if (!rc.params.is_object())
        fail(ErrorCode::InvalidArgument, "config must be a JSON object");
    if (opt.seed)
        rc.params["seed"] = *opt.seed;
    rc.hash = fnv1a_hex(rc.params.dump());
    rc.base_dir = std::filesystem::path(opt.config_path).parent_path();
    rc.opt = opt;
    return rc;
}

inline std::filesystem::path output_path(const RunConfig& rc, const std::string& name)
{
    std::filesystem::create_directories(rc.opt.out_dir);
    return std::filesystem::path(rc.opt.out_dir) / name;
}

inline void write_csv_header(std::ostream& os, const RunConfig& rc)
{
    os << "# tpgabor " << version << "\n# config_hash " << rc.hash << '\n';
}

namespace detail {

inline void flatten(const nlohmann::json& j, const std::string& prefix, std::vector<std::pair<std::string, std::string>>& out)
{
    if (j.is_object()) {
        for (auto it = j.begin(); it != j.end(); ++it)
            flatten(it.value(), prefix.empty() ? it.key() : prefix + "." + it.key(), out);
    } else if (j.is_array()) {
        for (std::size_t i = 0; i < j.size(); ++i)
            flatten(j[i], prefix + "[" + std::to_string(i) + "]", out);
    } else if (j.is_number_float()) {
        out.emplace_back(prefix, format_double(j.get<double>()));
    } else if (j.is_string()) {
        out.emplace_back(prefix, j.get<std::string>());
    } else {
        out.emplace_back(prefix, j.dump());
    }
}

} // namespace detail

/// Writes `<stem>.json` or `<stem>.csv` (flattened key,value pairs).
inline void write_report(const RunConfig& rc, const std::string& stem, nlohmann::json report)
{
    report["version"] = std::string(version);
    report["config_hash"] = rc.hash;
    if (rc.opt.format == Format::Json) {
        std::ofstream os(output_path(rc, stem + ".json"));
        os << report.dump(2) << '\n';
        return;
    }
    std::ofstream os(output_path(rc, stem + ".csv"));
    write_csv_header(os, rc);
    os << "key,value\n";
    std::vector<std::pair<std::string, std::string>> rows;
    detail::flatten(report, "", rows);
    for (const auto& [k, v] : rows)
        os << k << ',' << v << '\n';
}

// ---------------------------------------------------------------------------
// config access

inline const nlohmann::json& require(const nlohmann::json& j, const char* key)
{
    if (!j.contains(key))
        fail(ErrorCode::InvalidArgument, std::string("config is missing \"") + key + "\"");
    return j.at(key);
}

inline double get_number(const nlohmann::json& j, const char* key, std::optional<double> fallback = std::nullopt)
{
    if (!j.contains(key)) {
        if (fallback)
            return *fallback;
        require(j, key);
    }
    if (!j.at(key).is_number())
        fail(ErrorCode::InvalidArgument, std::string("\"") + key + "\" must be a number");
    return j.at(key).get<double>();
}

inline long get_int(const nlohmann::json& j, const char* key, long fallback, long min_value)
{
    if (!j.contains(key))
        return fallback;
    if (!j.at(key).is_number_integer())
        fail(ErrorCode::InvalidArgument, std::string("\"") + key + "\" must be an integer");
    const long v = j.at(key).get<long>();
    if (v < min_value)
        fail(ErrorCode::InvalidArgument, std::string("\"") + key + "\" must be >= " + std::to_string(min_value));
    return v;
}

inline TPFiniteType get_window(const nlohmann::json& j)
{
    return tp_from_json(require(j, "window"));
}

// uniform double in [0, 1) from the top 53 bits
inline double unit(std::mt19937_64& rng)
{
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

// ---------------------------------------------------------------------------
// tp-verify

struct SwTrialStats {
    long trials = 0;
    long disagreements = 0;
    long positive = 0;
    long zero = 0;
    /// smallest det / threshold over Positive cases
    double min_positive_margin = std::numeric_limits<double>::infinity();
    /// largest |det| / threshold over Zero cases
    double max_zero_ratio = 0.0;
    nlohmann::json failures = nlohmann::json::array();
};

/// Random strictly increasing point sets of size 1..max_size. Half of the
/// points are drawn from the grid step * Z inside [-span, span], the rest
/// uniformly, so boundary cases of the Schoenberg–Whitney conditions occur.
inline std::vector<double> random_increasing(std::mt19937_64& rng, std::size_t n, double grid, double span)
{
    while (true) {
        std::vector<double> v(n);
        for (auto& x : v) {
            const double u = -span + 2.0 * span * unit(rng);
            x = unit(rng) < 0.5 ? grid * std::round(u / grid) : u;
        }
        std::sort(v.begin(), v.end());
        if (std::adjacent_find(v.begin(), v.end()) == v.end())
            return v;
    }
}

inline SwTrialStats run_sw_trials(const TPFiniteType& g, long trials, int max_size, double grid, double span, std::uint64_t seed)
{
    std::mt19937_64 rng(seed);
    SwTrialStats st;
    for (long t = 0; t < trials; ++t) {
        const auto n = static_cast<std::size_t>(1 + rng() % static_cast<std::uint64_t>(max_size));
        const auto X = random_increasing(rng, n, grid, span);
        const auto Y = random_increasing(rng, n, grid, span);
        const bool sw = sw_check(X, Y, g.m(), g.n());
        const DetClassification d = det_sign_oracle(g, X, Y);
        ++st.trials;
        if (d.sign == DetSign::Positive) {
            ++st.positive;
            st.min_positive_margin = std::min(st.min_positive_margin, d.det / d.threshold);
        } else {
            ++st.zero;
            st.max_zero_ratio = std::max(st.max_zero_ratio, std::abs(d.det) / d.threshold);
        }
        if (sw != (d.sign == DetSign::Positive)) {
            ++st.disagreements;
            if (st.failures.size() < 10)
                st.failures.push_back({{"X", X}, {"Y", Y}, {"sw", sw}, {"det", d.det}, {"threshold", d.threshold}});
        }
    }
    return st;
}

inline int cmd_tp_verify(const RunConfig& rc)
{
    const auto& p = rc.params;
    const TPFiniteType g = get_window(p);
    if (g.order() < 2)
        fail(ErrorCode::TypeTooSmall, "Schoenberg–Whitney trials need M >= 2");
    const long trials = get_int(p, "trials", 200, 0);
    const long max_size = get_int(p, "max_size", 4, 1);
    const double grid = get_number(p, "grid", 0.25);
    const double span = get_number(p, "span", 4.0);
    if (!(grid > 0.0) || !(span > 0.0))
        fail(ErrorCode::InvalidArgument, "grid and span must be positive");
    log(LogLevel::Info, "tp-verify: " + std::to_string(trials) + " trials");
    const SwTrialStats st = run_sw_trials(g, trials, static_cast<int>(max_size), grid, span, rc.seed());
    nlohmann::json rep{{"command", "tp-verify"},
                       {"window", to_json(g)},
                       {"seed", rc.seed()},
                       {"trials", st.trials},
                       {"max_size", max_size},
                       {"disagreements", st.disagreements},
                       {"positive", st.positive},
                       {"zero", st.zero},
                       {"min_positive_margin", st.positive ? nlohmann::json(st.min_positive_margin) : nlohmann::json()},
                       {"max_zero_ratio", st.max_zero_ratio},
                       {"failures", st.failures}};
    write_report(rc, "tp_verify", rep);
    if (st.disagreements > 0) {
        log(LogLevel::Error, std::to_string(st.disagreements) + " disagreements between sw_check and det_sign_oracle");
        return NumericalError;
    }
    return Ok;
}

// ---------------------------------------------------------------------------
// dual-window

inline int cmd_dual_window(const RunConfig& rc)
{
    const auto& p = rc.params;
    const TPFiniteType g = get_window(p);
    const LatticeParams lat = make_lattice(get_number(p, "alpha"), get_number(p, "beta"));
    DualWindowOptions dopt;
    dopt.initial_cells = static_cast<int>(get_int(p, "initial_cells", 256, 1));
    dopt.threads = rc.opt.threads;
    const int kmax = static_cast<int>(get_int(p, "kmax", 5, 0));
    const int lmax = static_cast<int>(get_int(p, "lmax", 5, 0));
    const auto nodes = static_cast<unsigned>(get_int(p, "quadrature_nodes", 32, 1));
    const int per_cell = static_cast<int>(get_int(p, "points_per_cell", 1, 1));
    const double tol = get_number(p, "tolerance", 1e-6);

    log(LogLevel::Info, "dual-window: alpha = " + format_double(lat.alpha) + ", beta = " + format_double(lat.beta));
    const DualWindow dw = dual_window(g, lat, dopt);
    log(LogLevel::Info, "dual-window: " + std::to_string(dw.cells().size()) + " cells");
    const BiorthogonalityReport bio = verify_biorthogonality(g, dw, kmax, lmax, nodes);

    // every exported sample must fall in the support interval
    bool samples_in_support = true;
    {
        std::ofstream os(output_path(rc, "dual_window.csv"));
        write_csv_header(os, rc);
        std::ostringstream body;
        dw.write_csv(body, per_cell);
        os << body.str();
        std::istringstream in(body.str());
        for (const auto& row : read_csv(in).rows) {
            const double t = parse_double(row[2]);
            if (t < dw.support_lo() || t > dw.support_hi())
                samples_in_support = false;
        }
    }
    const auto bound = static_cast<std::size_t>((dw.r() + 1) * g.order());
    const bool support_ok = dw.support_ok() && samples_in_support && dw.max_row_support() <= bound;

    // upper bound for ||P(0)|| from a section wide enough to hold every row above cutoff
    const auto pregramian_schur = schur_test(pregramian(g, lat, 0.0, -400, 400, -20, 20));

    nlohmann::json rep{{"command", "dual-window"},
                       {"window", to_json(g)},
                       {"alpha", lat.alpha},
                       {"beta", lat.beta},
                       {"r", dw.r()},
                       {"support_interval", {dw.support_lo(), dw.support_hi()}},
                       {"cells", dw.cells().size()},
                       {"max_row_support", dw.max_row_support()},
                       {"row_support_bound", bound},
                       {"support_check", support_ok},
                       {"biorthogonality", bio.to_json()},
                       {"tolerance", tol},
                       {"bessel_sum", bessel_check(dw)},
                       {"max_entry", max_entry(dw)},
                       {"min_abs_det", dw.min_abs_det()},
                       {"pregramian_schur_bound", pregramian_schur}};
    write_report(rc, "dual_window_report", rep);
    if (!support_ok || !(bio.max_deviation <= tol)) {
        log(LogLevel::Error, "dual window failed its support or biorthogonality check");
        return NumericalError;
    }
    return Ok;
}

// ---------------------------------------------------------------------------
// frame-scan

inline int cmd_frame_scan(const RunConfig& rc)
{
    const auto& p = rc.params;
    const TPFiniteType g = get_window(p);
    if (g.order() < 2)
        fail(ErrorCode::TypeTooSmall, "frame scan needs M >= 2; for M = 1 the frame region is alpha beta <= 1");
    std::vector<int> sizes = default_truncation_sizes();
    if (p.contains("sizes")) {
        sizes.clear();
        for (const auto& s : p.at("sizes")) {
            if (!s.is_number_integer() || s.get<int>() < 1)
                fail(ErrorCode::InvalidArgument, "sizes must be positive integers");
            sizes.push_back(s.get<int>());
        }
    }
    const int xcount = static_cast<int>(get_int(p, "x_samples", 17, 1));
    const auto& pairs = p.contains("pairs") ? p.at("pairs") : nlohmann::json::array();
    if (!pairs.is_array())
        fail(ErrorCode::InvalidArgument, "\"pairs\" must be an array of [alpha, beta]");

    nlohmann::json results = nlohmann::json::array();
    std::ostringstream csv;
    csv << "alpha,beta,verdict,size,x,lambda_min,lambda_max\n";
    for (const auto& pr : pairs) {
        if (!pr.is_array() || pr.size() != 2 || !pr[0].is_number() || !pr[1].is_number())
            fail(ErrorCode::InvalidArgument, "each pair must be [alpha, beta]");
        const double a = pr[0].get<double>(), b = pr[1].get<double>();
        nlohmann::json entry{{"alpha", a}, {"beta", b}};
        try {
            const LatticeParams lat = make_lattice(a, b);
            const FrameReport fr = frame_check(g, lat, sizes, default_x_samples(a, xcount), rc.opt.threads);
            const auto& fb = fr.bounds;
            bool decreasing = true;
            for (std::size_t i = 1; i < fb.A_ladder.size(); ++i)
                decreasing = decreasing && fb.A_ladder[i] < fb.A_ladder[i - 1];
            const double rel_change = fb.A_ladder.size() > 1
                ? std::abs(fb.A_ladder.back() - fb.A_ladder[fb.A_ladder.size() - 2]) / fb.A_ladder[fb.A_ladder.size() - 2]
                : 0.0;
            entry["verdict"] = to_string(fr.verdict);
            entry["density"] = a * b;
            entry["bounds"] = fb.to_json();
            entry["A_ladder_strictly_decreasing"] = decreasing;
            entry["A_last_relative_change"] = rel_change;
            for (const auto& s : fb.table)
                csv << format_double(a) << ',' << format_double(b) << ',' << to_string(fr.verdict) << ',' << s.size << ','
                    << format_double(s.x) << ',' << format_double(s.lambda_min) << ',' << format_double(s.lambda_max) << '\n';
        } catch (const Error& e) {
            entry["error"] = e.what();
            log(LogLevel::Warn, std::string("frame-scan pair failed: ") + e.what());
        }
        results.push_back(std::move(entry));
    }
    if (rc.opt.format == Format::Json) {
        write_report(rc, "frame_scan", {{"command", "frame-scan"}, {"window", to_json(g)}, {"pairs", results}});
    } else {
        std::ofstream os(output_path(rc, "frame_scan.csv"));
        write_csv_header(os, rc);
        os << csv.str();
    }
    return Ok;
}

// ---------------------------------------------------------------------------
// sample-reconstruct

inline int cmd_sample_reconstruct(const RunConfig& rc)
{
    const auto& p = rc.params;
    const TPFiniteType g = get_window(p);
    if (g.order() < 2)
        fail(ErrorCode::TypeTooSmall, "sampling needs M >= 2");
    const double h = get_number(p, "h", 1.0);
    if (!(h > 0.0))
        fail(ErrorCode::InvalidArgument, "h must be positive");
    Index k_lo = -40, k_hi = 40;
    if (p.contains("nodes")) {
        const auto& n = p.at("nodes");
        if (!n.is_array() || n.size() != 2 || !n[0].is_number_integer() || !n[1].is_number_integer())
            fail(ErrorCode::InvalidArgument, "\"nodes\" must be [k_lo, k_hi]");
        k_lo = n[0].get<Index>();
        k_hi = n[1].get<Index>();
    }
    const PointSequence Y = PointSequence::uniform(0.0, h, k_lo, k_hi);
    const long signals = get_int(p, "signals", 100, 0);
    const double noise = get_number(p, "noise", 0.0);
    const double tol = get_number(p, "tolerance", 1e-6);

    const auto& sampling = require(p, "sampling");
    std::optional<PointSequence> X;
    std::vector<double> given_values;
    std::optional<double> declared_gap;
    if (sampling.contains("csv")) {
        auto path = std::filesystem::path(sampling.at("csv").get<std::string>());
        if (path.is_relative())
            path = rc.base_dir / path;
        SampleTable t = load_samples_csv(path.string());
        X = t.points;
        given_values = std::move(t.values);
    } else if (sampling.contains("jitter")) {
        const auto& jt = sampling.at("jitter");
        JitterParams jp;
        jp.max_gap = get_number(jt, "max_gap");
        jp.base_step = get_number(jt, "base_step", 0.0);
        jp.lo = static_cast<Index>(get_number(jt, "lo", static_cast<double>(k_lo - 16) * h / (0.75 * jp.max_gap)));
        jp.hi = static_cast<Index>(get_number(jt, "hi", static_cast<double>(k_hi + 16) * h / (0.75 * jp.max_gap)));
        jp.seed = rc.seed();
        declared_gap = jp.max_gap;
        X = jittered_samples(jp);
    } else {
        fail(ErrorCode::InvalidArgument, "\"sampling\" needs \"csv\" or \"jitter\"");
    }

    {
        std::ofstream os(output_path(rc, "samples.csv"));
        write_csv_header(os, rc);
        os << "index,position\n";
        for (Index j = X->lo(); j <= X->hi(); ++j)
            os << j << ',' << format_double((*X)[j]) << '\n';
    }

    const GapAdmissibility adm = max_gap_admissible(*X, h);
    nlohmann::json rep{{"command", "sample-reconstruct"},
                       {"window", to_json(g)},
                       {"h", h},
                       {"seed", rc.seed()},
                       {"samples", X->size()},
                       {"max_gap", adm.max_gap},
                       {"separation", X->separation()}};
    const bool admissible = adm.ok && (!declared_gap || *declared_gap < h);
    rep["admissible"] = admissible;
    if (!admissible) {
        write_report(rc, "sample_reconstruct", rep);
        log(LogLevel::Error, "sampling set is not admissible: max gap " + format_double(adm.max_gap) + " >= h");
        return AdmissibilityError;
    }
    SamplingConfig cfg{static_cast<int>(get_int(p, "r", adm.r, 1)), get_number(p, "epsilon", adm.epsilon)};
    rep["r"] = cfg.r;
    rep["epsilon"] = cfg.epsilon;
    rep["condition_Cr_eps"] = condition_Cr_eps(*X, Y, cfg);
    if (!rep["condition_Cr_eps"].get<bool>()) {
        write_report(rc, "sample_reconstruct", rep);
        log(LogLevel::Error, "condition C_r(eps) fails");
        return AdmissibilityError;
    }

    const SamplingInverse inv = sampling_left_inverse(g, *X, Y, cfg, rc.opt.threads);
    const RieszBounds rb = riesz_bounds(g, Y);
    const double schur = inv.schur();

    std::mt19937_64 rng(rc.seed() ^ 0x9e3779b97f4a7c15ULL);
    double max_err = 0.0, sum_err = 0.0, max_noise_err = 0.0;
    std::optional<Reconstruction> first;
    for (long s = 0; s < signals; ++s) {
        SISignal f{g, Y, std::vector<double>(Y.size(), 0.0)};
        for (Index k = inv.certified_lo; k <= inv.certified_hi; ++k)
            f.c[static_cast<std::size_t>(k - Y.lo())] = 2.0 * unit(rng) - 1.0;
        std::vector<double> samples = sample_signal(f, *X);
        const Reconstruction rec = reconstruct(inv, samples);
        double e = 0.0, n = 0.0;
        for (Index k = inv.certified_lo; k <= inv.certified_hi; ++k) {
            const auto i = static_cast<std::size_t>(k - Y.lo());
            e += (rec.coefficients[i] - f.c[i]) * (rec.coefficients[i] - f.c[i]);
            n += f.c[i] * f.c[i];
        }
        const double rel = n > 0.0 ? std::sqrt(e / n) : std::sqrt(e);
        max_err = std::max(max_err, rel);
        sum_err += rel;
        if (noise > 0.0) {
            std::vector<double> pert(samples.size());
            double norm = 0.0;
            for (auto& v : pert) {
                v = 2.0 * unit(rng) - 1.0;
                norm += v * v;
            }
            for (std::size_t i = 0; i < pert.size(); ++i)
                samples[i] += noise * pert[i] / std::sqrt(norm);
            const Reconstruction noisy = reconstruct(inv, samples);
            double d = 0.0;
            for (Index k = inv.certified_lo; k <= inv.certified_hi; ++k) {
                const auto i = static_cast<std::size_t>(k - Y.lo());
                d += (noisy.coefficients[i] - rec.coefficients[i]) * (noisy.coefficients[i] - rec.coefficients[i]);
            }
            max_noise_err = std::max(max_noise_err, std::sqrt(d));
        }
        if (!first)
            first = rec;
    }
    if (!given_values.empty()) {
        if (given_values.size() != X->size())
            fail(ErrorCode::LengthMismatch, "sample values do not match the sampling set");
        first = reconstruct(inv, given_values);
    }
    if (first) {
        std::ofstream os(output_path(rc, "reconstruction.csv"));
        write_csv_header(os, rc);
        write_reconstruction_csv(os, *first, Y);
    }

    rep["certified_window"] = {inv.certified_lo, inv.certified_hi};
    rep["submatrix_size"] = inv.N;
    rep["schur_bound"] = schur;
    rep["riesz_bounds"] = {rb.lower, rb.upper};
    rep["signals"] = signals;
    rep["max_relative_error"] = max_err;
    rep["mean_relative_error"] = signals > 0 ? sum_err / static_cast<double>(signals) : 0.0;
    rep["tolerance"] = tol;
    if (noise > 0.0) {
        rep["noise"] = noise;
        rep["max_noise_error"] = max_noise_err;
        rep["noise_error_bound"] = schur * noise;
    }
    write_report(rc, "sample_reconstruct", rep);
    if (!(max_err <= tol)) {
        log(LogLevel::Error, "round-trip error " + format_double(max_err) + " exceeds tolerance");
        return NumericalError;
    }
    return Ok;
}

// ---------------------------------------------------------------------------

/// Runs one subcommand and maps library errors to exit codes.
inline int run(const std::string& command, const Options& opt)
{
    try {
        const RunConfig rc = load_config(opt);
        log(LogLevel::Debug, "config hash " + rc.hash);
        if (command == "tp-verify")
            return cmd_tp_verify(rc);
        if (command == "dual-window")
            return cmd_dual_window(rc);
        if (command == "frame-scan")
            return cmd_frame_scan(rc);
        if (command == "sample-reconstruct")
            return cmd_sample_reconstruct(rc);
        fail(ErrorCode::InvalidArgument, "unknown command " + command);
    } catch (const Error& e) {
        log(LogLevel::Error, e.what());
        return exit_code_for(e.code());
    } catch (const nlohmann::json::exception& e) {
        log(LogLevel::Error, std::string("config: ") + e.what());
        return ConfigError;
    } catch (const std::filesystem::filesystem_error& e) {
        log(LogLevel::Error, e.what());
        return ConfigError;
    }
}

} // namespace tpgabor::cli
