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

#include <sys/wait.h>

#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"

#include "cc/errors.hpp"
#include "cc/kernels.hpp"
#include "cc/oracle.hpp"
#include "cc/sparse_vector.hpp"
#include "cc/vector_io.hpp"

using namespace cc;

namespace {

namespace fs = std::filesystem;

// ---- subprocess helpers (CLI end-to-end cases) ----

// Paths are injected by the test harness; when absent (e.g. the binary is
// run by hand) the subprocess cases are skipped, not failed.
const char* cli_bin() { return std::getenv("CCSKETCH_BIN"); }
const char* zipf_bin() { return std::getenv("GEN_ZIPF_BIN"); }

fs::path work_dir() {
    const auto d = fs::temp_directory_path() / "ccsketch_ut";
    fs::create_directories(d);
    return d;
}

struct RunResult {
    int exit_code = -1;
    std::string out;
};

std::string read_file(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

// Runs `cmd`, capturing stdout to a scratch file; stderr is left visible in
// the test log. `env_prefix` may carry VAR=value assignments.
RunResult run_cmd(const std::string& cmd, const std::string& env_prefix = "") {
    const auto out_path = work_dir() / "last_stdout.txt";
    const std::string full =
        env_prefix + (env_prefix.empty() ? "" : " ") + cmd + " > " +
        out_path.string();
    const int rc = std::system(full.c_str());
    RunResult r;
    r.exit_code = WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
    r.out = read_file(out_path);
    return r;
}

std::string q(const fs::path& p) { return "\"" + p.string() + "\""; }

// ---- small fixtures ----

SparseVector three_entry_vector() {
    SparseVector v;
    v.d = 100;
    v.entries = {{0, 1.0}, {5, 2.0}, {17, 3.0}};
    return v;
}

}  // namespace

TEST_SUITE("oracle_cli") {

TEST_CASE("exact moments") {
    const auto v = three_entry_vector();
    CHECK(oracle::exact_moment(v, 0.5) ==
          doctest::Approx(1.0 + std::sqrt(2.0) + std::sqrt(3.0))
              .epsilon(1e-15));
    CHECK(oracle::exact_moment(v, 1.0) == 6.0);

    SparseVector u;
    u.d = 50;
    for (std::uint64_t i = 0; i < 32; ++i) u.entries.push_back({i, 1.0});
    CHECK(oracle::exact_moment(u, 0.73) == doctest::Approx(32.0).epsilon(1e-15));

    CHECK_THROWS_AS(oracle::exact_moment(v, 0.0), config_error);
    CHECK_THROWS_AS(oracle::exact_moment(v, -1.0), config_error);
    SparseVector z;
    z.d = 10;
    z.entries = {{3, 0.0}};
    CHECK_THROWS_AS(oracle::exact_moment(z, 0.5), input_error);
}

TEST_CASE("exact Shannon entropy") {
    SUBCASE("frozen heavy-tailed profile") {
        const auto a = make_zipf(39059, 1.076160191, 65536);
        CHECK(oracle::exact_shannon(a, 2.0) ==
              doctest::Approx(9.546300).epsilon(1e-5));
    }
    SUBCASE("uniform and point mass") {
        SparseVector u;
        u.d = 64;
        for (std::uint64_t i = 0; i < 64; ++i) u.entries.push_back({i, 3.0});
        CHECK(oracle::exact_shannon(u, 2.0) == doctest::Approx(6.0).epsilon(1e-14));
        SparseVector p;
        p.d = 64;
        p.entries = {{9, 123.0}};
        CHECK(std::fabs(oracle::exact_shannon(p, 2.0)) < 1e-12);
    }
    SUBCASE("base and content validation") {
        const auto v = three_entry_vector();
        CHECK_THROWS_AS(oracle::exact_shannon(v, 1.0), config_error);
        SparseVector z;
        z.d = 10;
        z.entries = {{3, 0.0}};
        CHECK_THROWS_AS(oracle::exact_shannon(z, 2.0), input_error);
    }
}

TEST_CASE("exact order-alpha entropies compose the moment") {
    const auto v = three_entry_vector();
    const double alpha = 0.8;
    const double f = oracle::exact_moment(v, alpha);
    const double want_r = std::log(f / std::pow(6.0, alpha)) /
                          ((1.0 - alpha) * std::log(2.0));
    CHECK(oracle::exact_renyi(v, alpha, 2.0) ==
          doctest::Approx(want_r).epsilon(1e-13));
    const double want_t = (f / std::pow(6.0, alpha) - 1.0) / (1.0 - alpha);
    CHECK(oracle::exact_tsallis(v, alpha) ==
          doctest::Approx(want_t).epsilon(1e-13));
}

TEST_CASE("Monte-Carlo harness") {
    oracle::MCConfig cfg;
    cfg.vector = three_entry_vector();
    cfg.k = 20;
    cfg.alpha = 0.95;
    cfg.estimator = est::Estimator::NewInversePower;
    cfg.trials = 200;
    cfg.base_seed = 31;

    SUBCASE("reports are bit-identical across runs") {
        const auto a = oracle::run_mc(cfg);
        const auto b = oracle::run_mc(cfg);
        CHECK(a.mean == b.mean);
        CHECK(a.normalized_mse == b.normalized_mse);
        CHECK(a.median_abs_error == b.median_abs_error);
        for (std::size_t i = 0; i < oracle::kQuantiles.size(); ++i) {
            CHECK(a.percentiles[i] == b.percentiles[i]);
        }
    }
    SUBCASE("report invariants") {
        const auto r = oracle::run_mc(cfg);
        CHECK(r.trials == 200);
        CHECK(r.errors == 0);
        CHECK(r.truth == oracle::exact_moment(cfg.vector, cfg.alpha));
        CHECK(r.normalized_mse >=
              r.normalized_bias * r.normalized_bias * (1.0 - 1e-12));
        for (std::size_t i = 1; i < r.percentiles.size(); ++i) {
            CHECK(r.percentiles[i] >= r.percentiles[i - 1]);
        }
        CHECK(r.percentiles[0] > 0.0);
        CHECK(r.median_abs_error >= 0.0);
    }
    SUBCASE("entropy mode hits the exact Shannon value on average") {
        cfg.mode = oracle::MCMode::Entropy;
        cfg.alpha = 1.0 - 1e-4;
        cfg.k = 100;
        cfg.trials = 400;
        const auto r = oracle::run_mc(cfg);
        CHECK(r.truth ==
              doctest::Approx(oracle::exact_shannon(cfg.vector, 2.0))
                  .epsilon(1e-12));
        // mean within 5 standard errors (sd ~ sqrt(3/k)/ln2 ~ 0.25 bits)
        CHECK(r.mean == doctest::Approx(r.truth).epsilon(0.08));
    }
    SUBCASE("config validation") {
        cfg.trials = 99;
        CHECK_THROWS_AS(oracle::run_mc(cfg), config_error);
        cfg.trials = 200;
        cfg.k = 0;
        CHECK_THROWS_AS(oracle::run_mc(cfg), config_error);
    }
}

TEST_CASE("corpus parsing errors carry line numbers") {
    const auto expect_line = [](const std::string& text,
                                const std::string& line_token) {
        std::istringstream in(text);
        try {
            io::read_corpus(in);
            FAIL_CHECK("expected input_error for: " << text);
        } catch (const input_error& e) {
            CHECK(std::string(e.what()).find(line_token) != std::string::npos);
        }
    };
    expect_line("#D 10\n1\tabc\n", "line 2");
    expect_line("#D 10\nxyz\t1.0\n", "line 2");
    expect_line("#D 10\n3 4.5\n", "line 2");
    expect_line("5\t1.0\n", "line 1");
    expect_line("#D 10\n\n#D 10\n1\t2.0\n", "line 3");  // first vector empty
    expect_line("#D 0\n1\t2.0\n", "line 1");

    SUBCASE("duplicate index") {
        std::istringstream in("#D 10\n1\t2.0\n1\t3.0\n");
        CHECK_THROWS_AS(io::read_corpus(in), input_error);
    }
    SUBCASE("negative value is a model violation") {
        std::istringstream in("#D 10\n1\t-2.0\n");
        CHECK_THROWS_AS(io::read_corpus(in), model_violation);
    }
    SUBCASE("empty corpus") {
        std::istringstream in("\n\n");
        CHECK_THROWS_AS(io::read_corpus(in), input_error);
    }
}

TEST_CASE("corpus writer round-trips exactly") {
    std::vector<SparseVector> corpus;
    corpus.push_back(three_entry_vector());
    SparseVector w;
    w.d = 7;
    w.entries = {{0, 0.1}, {6, 1e-300}};
    corpus.push_back(w);

    std::ostringstream out;
    io::write_corpus(out, corpus);
    std::istringstream in(out.str());
    const auto back = io::read_corpus(in);
    REQUIRE(back.size() == corpus.size());
    for (std::size_t i = 0; i < corpus.size(); ++i) {
        CHECK(back[i].d == corpus[i].d);
        REQUIRE(back[i].entries.size() == corpus[i].entries.size());
        for (std::size_t j = 0; j < corpus[i].entries.size(); ++j) {
            CHECK(back[i].entries[j].index == corpus[i].entries[j].index);
            CHECK(back[i].entries[j].value == corpus[i].entries[j].value);
        }
    }
}

TEST_CASE("command-line pipeline end to end") {
    if (cli_bin() == nullptr || zipf_bin() == nullptr) {
        MESSAGE("CCSKETCH_BIN/GEN_ZIPF_BIN not set; skipping subprocess cases");
        return;
    }
    const std::string cc = q(cli_bin());
    const std::string gz = q(zipf_bin());
    const auto dir = work_dir();
    const auto corpus = dir / "zipf.tsv";
    const auto sk = dir / "pipe.sketch";

    SUBCASE("generate, sketch, estimate, entropy") {
        auto r = run_cmd(gz + " --n 64 --s 1.1 --d 4096 --out " + q(corpus) +
                         " 2>/dev/null");
        REQUIRE(r.exit_code == 0);
        r = run_cmd(cc + " sketch --input " + q(corpus) +
                    " --k 64 --delta 1e-4 --seed 7 --out " + q(sk) +
                    " 2>/dev/null");
        REQUIRE(r.exit_code == 0);
        r = run_cmd(cc + " estimate --sketch " + q(sk) + " --method new");
        CHECK(r.exit_code == 0);
        CHECK(r.out.find("method,k,alpha,delta,estimate,theo_rel_var,status") !=
              std::string::npos);
        CHECK(r.out.find("ok") != std::string::npos);
        r = run_cmd(cc + " entropy --sketch " + q(sk) +
                    " --method new --via renyi --base 2");
        CHECK(r.exit_code == 0);
        CHECK(r.out.find("entropy") != std::string::npos);
    }
    SUBCASE("exit codes by error class") {
        // missing required option -> CLI parse error -> 2
        auto r = run_cmd(cc + " sketch --k 8 2>/dev/null");
        CHECK(r.exit_code == 2);
        // unreadable input path -> input error -> 3
        r = run_cmd(cc + " sketch --input /nonexistent/x.tsv --k 8 "
                         "--delta 0.1 --seed 1 --out " +
                    q(dir / "never.sketch") + " 2>/dev/null");
        CHECK(r.exit_code == 3);
        // left tail far outside its regime -> numeric error -> 4
        r = run_cmd(cc + " tailbound --tail left --delta 1e-4 --eps 0.999 "
                         "2>/dev/null");
        CHECK(r.exit_code == 4);
    }
    SUBCASE("tail-bound and delta-selection output") {
        auto r = run_cmd(cc + " tailbound --tail right --delta 1e-4 --nu 0.5");
        CHECK(r.exit_code == 0);
        CHECK(r.out.find("7.178") != std::string::npos);
        r = run_cmd(cc + " choose-delta --D 1e6 --m 1e6 --nu 0.1 "
                         "--variant focs08");
        CHECK(r.exit_code == 0);
        CHECK(r.out.find("9.999") != std::string::npos);
    }
    SUBCASE("experiment runs are byte-identical") {
        const auto cfgp = dir / "exp.json";
        {
            std::ofstream cfg(cfgp);
            cfg << "{\"trials\": 100, \"ks\": [5], \"deltas\": [0.1, 0.01],\n"
                   " \"estimators\": [\"new\", \"gm\"], \"seed\": 5,\n"
                   " \"vector\": {\"zipf\": {\"n\": 16, \"s\": 1.1, "
                   "\"d\": 64}}}\n";
        }
        const auto o1 = dir / "exp1.csv";
        const auto o2 = dir / "exp2.csv";
        auto r = run_cmd(cc + " experiment --config " + q(cfgp) + " --out " +
                         q(o1) + " 2>/dev/null");
        REQUIRE(r.exit_code == 0);
        r = run_cmd(cc + " experiment --config " + q(cfgp) + " --out " +
                    q(o2) + " 2>/dev/null");
        REQUIRE(r.exit_code == 0);
        const auto b1 = read_file(o1);
        CHECK(!b1.empty());
        CHECK(b1 == read_file(o2));
    }
    SUBCASE("kernel backends produce identical results end to end") {
        if (!kern::detail::cpu_has_avx2()) {
            MESSAGE("AVX2 unavailable; skipping backend comparison");
            return;
        }
        const auto s1 = dir / "scalar.sketch";
        const auto s2 = dir / "avx2.sketch";
        auto r = run_cmd(cc + " sketch --input " + q(corpus) +
                             " --k 32 --delta 0.01 --seed 9 --out " + q(s1) +
                             " 2>/dev/null",
                         "CC_KERNEL=scalar");
        REQUIRE(r.exit_code == 0);
        r = run_cmd(cc + " sketch --input " + q(corpus) +
                        " --k 32 --delta 0.01 --seed 9 --out " + q(s2) +
                        " 2>/dev/null",
                    "CC_KERNEL=avx2");
        REQUIRE(r.exit_code == 0);
        CHECK(read_file(s1) == read_file(s2));
    }
    SUBCASE("CC_SEED environment default matches --seed") {
        const auto s1 = dir / "envseed.sketch";
        const auto s2 = dir / "optseed.sketch";
        auto r = run_cmd(cc + " sketch --input " + q(corpus) +
                             " --k 16 --delta 0.01 --out " + q(s1) +
                             " 2>/dev/null",
                         "CC_SEED=12345");
        REQUIRE(r.exit_code == 0);
        r = run_cmd(cc + " sketch --input " + q(corpus) +
                    " --k 16 --delta 0.01 --seed 12345 --out " + q(s2) +
                    " 2>/dev/null");
        REQUIRE(r.exit_code == 0);
        CHECK(read_file(s1) == read_file(s2));
    }
}

}  // TEST_SUITE
