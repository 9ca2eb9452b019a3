// Copyright 2026-present the ccsketch project
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// ccsketch command-line front end.
//
// Subcommands: sketch, estimate, entropy, tailbound, cdf, experiment,
// choose-delta. Tables go to stdout (or --out) as CSV with axes first,
// metrics after, and a status column last; floats carry 17 significant
// digits so reruns under the same seed are byte-identical. Exit codes:
// 0 success, 2 bad arguments or configuration, 3 input error, 4 numerical
// failure. CC_SEED sets the default seed where one applies.

#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <numbers>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "cc/cc_sketch.hpp"
#include "cc/csv.hpp"
#include "cc/entropy.hpp"
#include "cc/errors.hpp"
#include "cc/estimators.hpp"
#include "cc/oracle.hpp"
#include "cc/rng.hpp"
#include "cc/sparse_vector.hpp"
#include "cc/stable_dist.hpp"
#include "cc/tail_bounds.hpp"
#include "cc/vector_io.hpp"

namespace {

using nlohmann::json;

std::uint64_t env_seed() {
    const char* s = std::getenv("CC_SEED");
    if (s == nullptr || *s == '\0') return 0;
    char* end = nullptr;
    const unsigned long long v = std::strtoull(s, &end, 10);
    if (end == s || *end != '\0') {
        throw cc::config_error("CC_SEED must be an unsigned integer");
    }
    return static_cast<std::uint64_t>(v);
}

// Keeps status fields CSV-safe: one cell, no separators.
std::string sanitize(std::string s) {
    for (char& ch : s) {
        if (ch == ',') ch = ';';
        if (ch == '\n' || ch == '\r') ch = ' ';
    }
    return s;
}

struct Sink {
    explicit Sink(const std::string& path) {
        if (!path.empty()) {
            file_.open(path);
            if (!file_) {
                throw cc::input_error("cannot open '" + path + "' for writing");
            }
            os_ = &file_;
        }
    }
    std::ostream& stream() { return *os_; }
    void finish() {
        os_->flush();
        if (!*os_) throw cc::input_error("output write failure");
    }

 private:
    std::ofstream file_;
    std::ostream* os_ = &std::cout;
};

cc::est::Estimator parse_method(const std::string& name) {
    if (name == "new") return cc::est::Estimator::NewInversePower;
    if (name == "gm") return cc::est::Estimator::GeometricMean;
    if (name == "hm") return cc::est::Estimator::HarmonicMean;
    if (name == "min") return cc::est::Estimator::SampleMinimum;
    if (name == "sym") return cc::est::Estimator::SymmetricGM;
    throw cc::config_error("unknown estimator '" + name + "'");
}

std::optional<double> theo_rel_var(cc::est::Estimator e, double delta,
                                   double alpha, std::size_t k) {
    const auto kd = static_cast<double>(k);
    switch (e) {
        case cc::est::Estimator::NewInversePower:
            return delta * delta * (3.0 - 2.0 * delta) / kd;
        case cc::est::Estimator::GeometricMean:
            return std::numbers::pi * std::numbers::pi / 6.0 * delta *
                   (1.0 + alpha) / kd;
        case cc::est::Estimator::HarmonicMean:
            return cc::est::hm_factor(alpha) / kd;
        default:
            return std::nullopt;
    }
}

void check_skew_matches(const cc::sketch::CCSketch& s, cc::est::Estimator e) {
    const bool wants_symmetric = e == cc::est::Estimator::SymmetricGM;
    if (wants_symmetric != (s.params().skew == cc::stable::Skew::Symmetric)) {
        throw cc::config_error(
            wants_symmetric
                ? "method 'sym' needs a sketch built with --skew"
                : "this method needs a maximally-skewed sketch (drop --skew)");
    }
}

// ---- sketch ---------------------------------------------------------------

struct SketchOpts {
    std::string input;
    std::string out;
    std::uint64_t k = 0;
    double alpha = 0.0;
    double delta = 0.0;
    bool has_alpha = false;
    bool has_delta = false;
    std::uint64_t seed = 0;
    bool symmetric = false;
    std::uint64_t which = 0;
};

void run_sketch(const SketchOpts& o) {
    if (!o.has_alpha && !o.has_delta) {
        throw cc::config_error("sketch needs --alpha or --delta");
    }
    const auto skew = o.symmetric ? cc::stable::Skew::Symmetric
                                  : cc::stable::Skew::MaximallySkewed;
    const cc::stable::StableParams params =
        o.has_alpha ? cc::stable::StableParams(o.alpha, skew)
                    : cc::stable::StableParams::from_delta(o.delta, skew);

    const auto vectors = cc::io::ingest_corpus(o.input);
    for (std::size_t i = 0; i < vectors.size(); ++i) {
        const auto& v = vectors[i];
        std::cerr << "vector " << i << ": d=" << v.d
                  << " nnz=" << v.entries.size() << " sparsity="
                  << cc::csv::format_double(static_cast<double>(v.entries.size()) /
                                            static_cast<double>(v.d))
                  << " shannon_bits="
                  << cc::csv::format_double(cc::oracle::exact_shannon(v, 2.0))
                  << '\n';
    }
    if (o.which >= vectors.size()) {
        throw cc::input_error("--vector " + std::to_string(o.which) +
                              " but the corpus holds " +
                              std::to_string(vectors.size()) + " vector(s)");
    }
    const auto sk = cc::sketch::CCSketch::project_dense(
        vectors[o.which], static_cast<std::size_t>(o.k), params, o.seed);
    sk.save_file(o.out);
    std::cerr << "sketched vector " << o.which << " with k=" << o.k
              << " alpha=" << cc::csv::format_double(sk.params().alpha)
              << " seed=" << o.seed << " -> " << o.out << '\n';
}

// ---- estimate / entropy ---------------------------------------------------

struct EstimateOpts {
    std::string sketch_path;
    std::string method = "new";
    std::string out;
    std::int64_t calib_trials = 100000;
    std::uint64_t calib_seed = 0;
    bool has_calib_seed = false;
    // entropy extras
    std::string via = "renyi";
    double base = 2.0;
};

double calibration_for(const cc::sketch::CCSketch& sk, const EstimateOpts& o,
                       cc::est::Estimator method) {
    if (method != cc::est::Estimator::SymmetricGM) return 0.0;
    const std::uint64_t seed = o.has_calib_seed
                                   ? o.calib_seed
                                   : cc::rng::derive_key(sk.seed(), 0x53, 2);
    return cc::est::calibrate_symmetric_gm(sk.params().alpha, sk.k(),
                                           o.calib_trials, seed);
}

void run_estimate(const EstimateOpts& o) {
    const auto sk = cc::sketch::CCSketch::load_file(o.sketch_path);
    const auto method = parse_method(o.method);
    check_skew_matches(sk, method);
    const double alpha = sk.params().alpha;
    const double calibration = calibration_for(sk, o, method);

    cc::est::MomentEstimate m;
    switch (method) {
        case cc::est::Estimator::NewInversePower:
            m = cc::est::estimate_new(sk.x(), alpha, sk.f1());
            break;
        case cc::est::Estimator::GeometricMean:
            m = cc::est::estimate_gm(sk.x(), alpha);
            break;
        case cc::est::Estimator::HarmonicMean:
            m = cc::est::estimate_hm(sk.x(), alpha);
            break;
        case cc::est::Estimator::SampleMinimum:
            m = cc::est::estimate_min(sk.x(), alpha);
            break;
        case cc::est::Estimator::SymmetricGM:
            m = cc::est::estimate_symmetric_gm(sk.x(), alpha, calibration);
            break;
    }

    Sink sink(o.out);
    cc::csv::Row row;
    row.add("method").add("k").add("alpha").add("delta").add("estimate")
        .add("theo_rel_var").add("status");
    row.write(sink.stream());
    row.add(o.method).add(static_cast<std::uint64_t>(sk.k())).add(alpha)
        .add(sk.params().delta).add(m.value);
    if (m.theo_rel_var) {
        row.add(*m.theo_rel_var);
    } else {
        row.add("");
    }
    row.add(m.warning.empty() ? "ok" : sanitize(m.warning));
    row.write(sink.stream());
    sink.finish();
}

void run_entropy(const EstimateOpts& o) {
    const auto sk = cc::sketch::CCSketch::load_file(o.sketch_path);
    const auto method = parse_method(o.method);
    check_skew_matches(sk, method);
    const auto via = o.via == "tsallis" ? cc::ent::EntropyKind::Tsallis
                                        : cc::ent::EntropyKind::Renyi;
    const double calibration = calibration_for(sk, o, method);
    const auto e =
        cc::ent::shannon_from_sketch(sk, method, via, o.base, calibration);

    Sink sink(o.out);
    cc::csv::Row row;
    row.add("method").add("via").add("base").add("k").add("alpha").add("delta")
        .add("entropy").add("status");
    row.write(sink.stream());
    row.add(o.method).add(o.via).add(o.base)
        .add(static_cast<std::uint64_t>(sk.k())).add(sk.params().alpha)
        .add(sk.params().delta).add(e.shannon_proxy)
        .add(e.diagnostic.empty() ? "ok" : sanitize(e.diagnostic));
    row.write(sink.stream());
    sink.finish();
}

// ---- tailbound ------------------------------------------------------------

struct TailOpts {
    std::string tail;
    double delta = 0.0;
    double eps = 0.0;
    double nu = 0.0;
    bool has_eps = false;
    bool has_nu = false;
    std::int64_t grid = 0;
    std::string out;
};

void tail_row(cc::csv::Row& row, std::ostream& os, cc::tail::Tail tail,
              double delta, double nu, double eps) {
    row.add(tail == cc::tail::Tail::Right ? "right" : "left")
        .add(delta).add(nu).add(eps);
    try {
        const auto r = cc::tail::solve_tail(tail, eps, delta);
        row.add(r.t_star).add(r.exponent).add(r.g_over_delta_sq).add("ok");
    } catch (const cc::error& e) {
        row.add("").add("").add("").add(sanitize(e.what()));
    }
    row.write(os);
}

void run_tailbound(const TailOpts& o) {
    const auto tail =
        o.tail == "right" ? cc::tail::Tail::Right : cc::tail::Tail::Left;
    const int given = (o.has_eps ? 1 : 0) + (o.has_nu ? 1 : 0) +
                      (o.grid > 0 ? 1 : 0);
    if (given != 1) {
        throw cc::config_error(
            "tailbound needs exactly one of --eps, --nu, --grid");
    }
    Sink sink(o.out);
    cc::csv::Row row;
    row.add("tail").add("delta").add("nu").add("epsilon").add("t_star")
        .add("exponent").add("g_over_delta_sq").add("status");
    row.write(sink.stream());
    if (o.grid > 0) {
        for (std::int64_t i = 1; i <= o.grid; ++i) {
            const double nu =
                static_cast<double>(i) / static_cast<double>(o.grid + 1);
            tail_row(row, sink.stream(), tail, o.delta, nu, nu * o.delta);
        }
    } else {
        const double eps = o.has_eps ? o.eps : o.nu * o.delta;
        const double nu = o.has_nu ? o.nu : o.eps / o.delta;
        // A single requested point reports its failure through the exit
        // code, not a status cell.
        const auto r = cc::tail::solve_tail(tail, eps, o.delta);
        row.add(o.tail).add(o.delta).add(nu).add(eps).add(r.t_star)
            .add(r.exponent).add(r.g_over_delta_sq).add("ok");
        row.write(sink.stream());
    }
    sink.finish();
}

// ---- cdf ------------------------------------------------------------------

struct CdfOpts {
    double delta = 0.0;
    double tmin = 0.0;
    double tmax = 0.0;
    std::int64_t points = 50;
    std::string out;
};

void run_cdf(const CdfOpts& o) {
    if (!(o.tmin > 0.0) || !(o.tmax > o.tmin)) {
        throw cc::config_error("cdf needs 0 < --tmin < --tmax");
    }
    if (o.points < 2) throw cc::config_error("cdf needs --points >= 2");
    Sink sink(o.out);
    cc::csv::Row row;
    row.add("delta").add("t").add("cdf_exact").add("cdf_approx").add("status");
    row.write(sink.stream());
    const double ratio = std::log(o.tmax / o.tmin);
    for (std::int64_t i = 0; i < o.points; ++i) {
        const double t =
            o.tmin * std::exp(ratio * static_cast<double>(i) /
                              static_cast<double>(o.points - 1));
        row.add(o.delta).add(t);
        try {
            const double exact = cc::stable::cdf_exact(t, o.delta);
            const double approx = cc::stable::cdf_approx(t, o.delta);
            row.add(exact).add(approx).add("ok");
        } catch (const cc::error& e) {
            row.add("").add("").add(sanitize(e.what()));
        }
        row.write(sink.stream());
    }
    sink.finish();
}

// ---- choose-delta ---------------------------------------------------------

struct ChooseOpts {
    double domain = 0.0;
    double stream_len = 0.0;
    double nu = 0.0;
    std::string variant = "focs08";
    std::string out;
};

void run_choose_delta(const ChooseOpts& o) {
    const auto variant = o.variant == "itw08" ? cc::ent::DeltaVariant::ITW08
                                              : cc::ent::DeltaVariant::FOCS08;
    const double delta =
        cc::ent::choose_delta(o.domain, o.stream_len, o.nu, variant);
    Sink sink(o.out);
    cc::csv::Row row;
    row.add("variant").add("domain").add("stream_length").add("nu").add("delta")
        .add("alpha").add("status");
    row.write(sink.stream());
    row.add(o.variant).add(o.domain).add(o.stream_len).add(o.nu).add(delta)
        .add(1.0 - delta).add("ok");
    row.write(sink.stream());
    sink.finish();
}

// ---- experiment -----------------------------------------------------------

struct ExperimentOpts {
    std::string config_path;
    std::string out;
};

struct ExperimentConfig {
    std::string mode = "moment";
    std::vector<double> deltas = {0.2,  1e-1, 1e-2, 1e-3, 1e-4, 1e-5,
                                  1e-6, 1e-7, 1e-8, 1e-9, 1e-10};
    std::vector<std::uint64_t> ks = {3, 10, 100, 1000};
    std::vector<std::string> estimators = {"new", "gm", "hm", "min", "sym"};
    std::int64_t trials = 200;
    std::uint64_t base_seed = 0;
    std::string via = "renyi";
    double base = 2.0;
    cc::SparseVector vector;
};

ExperimentConfig load_experiment_config(const std::string& path) {
    ExperimentConfig cfg;
    cfg.base_seed = env_seed();
    json j = json::object();
    if (!path.empty()) {
        std::ifstream in(path);
        if (!in) throw cc::input_error("cannot open config '" + path + "'");
        try {
            in >> j;
        } catch (const json::exception& e) {
            throw cc::input_error("config '" + path + "': " + e.what());
        }
    }
    try {
        if (j.contains("mode")) cfg.mode = j["mode"].get<std::string>();
        if (j.contains("deltas")) {
            cfg.deltas = j["deltas"].get<std::vector<double>>();
        }
        if (j.contains("ks")) {
            cfg.ks = j["ks"].get<std::vector<std::uint64_t>>();
        }
        if (j.contains("estimators")) {
            cfg.estimators = j["estimators"].get<std::vector<std::string>>();
        }
        if (j.contains("trials")) cfg.trials = j["trials"].get<std::int64_t>();
        if (j.contains("base_seed")) {
            cfg.base_seed = j["base_seed"].get<std::uint64_t>();
        }
        if (j.contains("via")) cfg.via = j["via"].get<std::string>();
        if (j.contains("base")) cfg.base = j["base"].get<double>();
        if (j.contains("vector")) {
            const auto& v = j["vector"];
            if (v.contains("file")) {
                const auto vectors =
                    cc::io::ingest_corpus(v["file"].get<std::string>());
                const auto idx =
                    v.contains("index") ? v["index"].get<std::size_t>() : 0;
                if (idx >= vectors.size()) {
                    throw cc::input_error("vector index out of range in config");
                }
                cfg.vector = vectors[idx];
            } else if (v.contains("zipf")) {
                const auto& z = v["zipf"];
                cfg.vector = cc::make_zipf(z["n"].get<std::uint64_t>(),
                                           z["s"].get<double>(),
                                           z["d"].get<std::uint64_t>());
            } else {
                throw cc::input_error("config vector needs 'file' or 'zipf'");
            }
        }
    } catch (const json::exception& e) {
        throw cc::input_error(std::string("malformed experiment config: ") +
                              e.what());
    }
    if (cfg.mode != "moment" && cfg.mode != "entropy") {
        throw cc::config_error("mode must be 'moment' or 'entropy'");
    }
    if (cfg.via != "renyi" && cfg.via != "tsallis") {
        throw cc::config_error("via must be 'renyi' or 'tsallis'");
    }
    if (cfg.trials < 100) throw cc::config_error("trials must be >= 100");
    if (cfg.vector.entries.empty()) {
        cfg.vector = cc::make_zipf(64, 1.1, 4096);
    }
    return cfg;
}

void run_experiment(const ExperimentOpts& o) {
    const ExperimentConfig cfg = load_experiment_config(o.config_path);
    Sink sink(o.out);
    cc::csv::Row row;
    row.add("mode").add("estimator").add("delta").add("alpha").add("k")
        .add("trials").add("seed").add("truth").add("mean")
        .add("normalized_mse").add("normalized_bias").add("median_abs_error")
        .add("theo_rel_var").add("errors").add("status");
    row.write(sink.stream());

    std::uint64_t cell = 0;
    for (const auto& name : cfg.estimators) {
        const auto estimator = parse_method(name);
        for (const double delta : cfg.deltas) {
            for (const std::uint64_t k : cfg.ks) {
                const double alpha = 1.0 - delta;
                const std::uint64_t seed =
                    cc::rng::derive_key(cfg.base_seed, cell++, 11);
                row.add(cfg.mode).add(name).add(delta).add(alpha).add(k)
                    .add(cfg.trials).add(seed);
                try {
                    cc::oracle::MCConfig mc;
                    mc.vector = cfg.vector;
                    mc.k = static_cast<std::size_t>(k);
                    mc.alpha = alpha;
                    mc.estimator = estimator;
                    mc.trials = cfg.trials;
                    mc.base_seed = seed;
                    mc.mode = cfg.mode == "moment"
                                  ? cc::oracle::MCMode::Moment
                                  : cc::oracle::MCMode::Entropy;
                    mc.via = cfg.via == "renyi" ? cc::ent::EntropyKind::Renyi
                                                : cc::ent::EntropyKind::Tsallis;
                    mc.base = cfg.base;
                    const auto rep = cc::oracle::run_mc(mc);
                    row.add(rep.truth).add(rep.mean).add(rep.normalized_mse)
                        .add(rep.normalized_bias).add(rep.median_abs_error);
                    const auto theo = theo_rel_var(estimator, delta, alpha,
                                                   static_cast<std::size_t>(k));
                    if (theo) {
                        row.add(*theo);
                    } else {
                        row.add("");
                    }
                    row.add(rep.errors).add("ok");
                } catch (const cc::error& e) {
                    row.add("").add("").add("").add("").add("").add("")
                        .add("").add(sanitize(e.what()));
                }
                row.write(sink.stream());
            }
        }
    }
    sink.finish();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "ccsketch: skewed-stable projection sketches for fractional frequency "
        "moments and streaming entropy"};
    app.require_subcommand(1);

    SketchOpts sk;
    auto* c_sk = app.add_subcommand("sketch",
                                    "project a corpus vector into a sketch file");
    c_sk->add_option("--input", sk.input, "corpus file (#D header + entries)")
        ->required();
    c_sk->add_option("--out", sk.out, "output sketch file")->required();
    c_sk->add_option("--k", sk.k, "number of projections")->required()
        ->check(CLI::PositiveNumber);
    auto* o_alpha = c_sk->add_option("--alpha", sk.alpha, "moment order in (0,1)");
    auto* o_delta =
        c_sk->add_option("--delta", sk.delta, "1 - alpha, for tiny gaps");
    o_alpha->excludes(o_delta);
    o_delta->excludes(o_alpha);
    c_sk->add_option("--seed", sk.seed, "projection seed (default $CC_SEED)");
    c_sk->add_flag("--skew", sk.symmetric,
                   "use symmetric projections (sym estimator baseline)");
    c_sk->add_option("--vector", sk.which, "index of the corpus vector to use");

    EstimateOpts est_o;
    auto* c_est =
        app.add_subcommand("estimate", "moment estimate from a sketch file");
    c_est->add_option("--sketch", est_o.sketch_path, "sketch file")->required();
    c_est->add_option("--method", est_o.method, "new|gm|hm|min|sym")
        ->required()
        ->check(CLI::IsMember({"new", "gm", "hm", "min", "sym"}));
    c_est->add_option("--out", est_o.out, "CSV output path (default stdout)");
    c_est->add_option("--calib-trials", est_o.calib_trials,
                      "sym calibration sample count");
    auto* o_cseed = c_est->add_option("--calib-seed", est_o.calib_seed,
                                      "sym calibration seed");

    EstimateOpts ent_o;
    auto* c_ent = app.add_subcommand(
        "entropy", "Shannon entropy proxy from a sketch file");
    c_ent->add_option("--sketch", ent_o.sketch_path, "sketch file")->required();
    c_ent->add_option("--method", ent_o.method, "new|gm|hm|min|sym")
        ->check(CLI::IsMember({"new", "gm", "hm", "min", "sym"}));
    c_ent->add_option("--via", ent_o.via, "renyi|tsallis")
        ->check(CLI::IsMember({"renyi", "tsallis"}));
    c_ent->add_option("--base", ent_o.base, "log base (default 2)");
    c_ent->add_option("--out", ent_o.out, "CSV output path (default stdout)");
    c_ent->add_option("--calib-trials", ent_o.calib_trials,
                      "sym calibration sample count");
    auto* o_cseed2 = c_ent->add_option("--calib-seed", ent_o.calib_seed,
                                       "sym calibration seed");

    TailOpts tail_o;
    auto* c_tail = app.add_subcommand(
        "tailbound", "Chernoff exponent table for the inverse-power estimator");
    c_tail->add_option("--tail", tail_o.tail, "left|right")
        ->required()
        ->check(CLI::IsMember({"left", "right"}));
    c_tail->add_option("--delta", tail_o.delta, "1 - alpha")->required();
    auto* o_eps = c_tail->add_option("--eps", tail_o.eps,
                                     "multiplicative accuracy epsilon");
    auto* o_nu =
        c_tail->add_option("--nu", tail_o.nu, "additive target nu = eps/delta");
    c_tail->add_option("--grid", tail_o.grid,
                       "emit N rows at nu = i/(N+1), i = 1..N");
    o_eps->excludes(o_nu);
    o_nu->excludes(o_eps);
    c_tail->add_option("--out", tail_o.out, "CSV output path (default stdout)");

    CdfOpts cdf_o;
    auto* c_cdf = app.add_subcommand(
        "cdf", "exact vs approximate sketch-coordinate CDF table");
    c_cdf->add_option("--delta", cdf_o.delta, "1 - alpha, in (0, 0.5)")
        ->required();
    c_cdf->add_option("--tmin", cdf_o.tmin, "smallest t")->required();
    c_cdf->add_option("--tmax", cdf_o.tmax, "largest t")->required();
    c_cdf->add_option("--points", cdf_o.points, "geometric grid size");
    c_cdf->add_option("--out", cdf_o.out, "CSV output path (default stdout)");

    ExperimentOpts exp_o;
    auto* c_exp = app.add_subcommand(
        "experiment", "Monte-Carlo sweep over delta x k x estimator");
    c_exp->add_option("--config", exp_o.config_path,
                      "JSON config (defaults used when omitted)");
    c_exp->add_option("--out", exp_o.out, "CSV output path (default stdout)");

    ChooseOpts ch_o;
    auto* c_ch = app.add_subcommand(
        "choose-delta", "delta for an additive entropy accuracy target");
    c_ch->add_option("--D", ch_o.domain, "domain size")->required();
    c_ch->add_option("--m", ch_o.stream_len, "stream length")->required();
    c_ch->add_option("--nu", ch_o.nu, "additive entropy target")->required();
    c_ch->add_option("--variant", ch_o.variant, "itw08|focs08")
        ->check(CLI::IsMember({"itw08", "focs08"}));
    c_ch->add_option("--out", ch_o.out, "CSV output path (default stdout)");

    try {
        app.parse(argc, argv);
        if (*c_sk) {
            sk.has_alpha = o_alpha->count() > 0;
            sk.has_delta = o_delta->count() > 0;
            if (c_sk->count("--seed") == 0) sk.seed = env_seed();
            run_sketch(sk);
        } else if (*c_est) {
            est_o.has_calib_seed = o_cseed->count() > 0;
            run_estimate(est_o);
        } else if (*c_ent) {
            ent_o.has_calib_seed = o_cseed2->count() > 0;
            run_entropy(ent_o);
        } else if (*c_tail) {
            tail_o.has_eps = o_eps->count() > 0;
            tail_o.has_nu = o_nu->count() > 0;
            run_tailbound(tail_o);
        } else if (*c_cdf) {
            run_cdf(cdf_o);
        } else if (*c_exp) {
            run_experiment(exp_o);
        } else if (*c_ch) {
            run_choose_delta(ch_o);
        }
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    } catch (const cc::config_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const cc::input_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 3;
    } catch (const cc::error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 4;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
