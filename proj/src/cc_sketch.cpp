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

#include "cc/cc_sketch.hpp"

#include <bit>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <istream>
#include <ostream>

#include "cc/errors.hpp"
#include "cc/kernels.hpp"

namespace cc {
namespace sketch {

namespace {

constexpr char kMagic[4] = {'C', 'C', 'S', 'K'};
constexpr std::uint16_t kVersion = 1;

void put_u16(std::ostream& os, std::uint16_t v) {
    for (int b = 0; b < 2; ++b) os.put(static_cast<char>((v >> (8 * b)) & 0xFF));
}

void put_u64(std::ostream& os, std::uint64_t v) {
    for (int b = 0; b < 8; ++b) os.put(static_cast<char>((v >> (8 * b)) & 0xFF));
}

void put_f64(std::ostream& os, double v) {
    put_u64(os, std::bit_cast<std::uint64_t>(v));
}

int get_byte(std::istream& is) {
    const int c = is.get();
    if (c == std::istream::traits_type::eof()) {
        throw input_error("truncated sketch data");
    }
    return c;
}

std::uint16_t get_u16(std::istream& is) {
    std::uint16_t v = 0;
    for (int b = 0; b < 2; ++b) {
        v = static_cast<std::uint16_t>(
            v | static_cast<std::uint16_t>(get_byte(is)) << (8 * b));
    }
    return v;
}

std::uint64_t get_u64(std::istream& is) {
    std::uint64_t v = 0;
    for (int b = 0; b < 8; ++b) {
        v |= static_cast<std::uint64_t>(get_byte(is)) << (8 * b);
    }
    return v;
}

double get_f64(std::istream& is) { return std::bit_cast<double>(get_u64(is)); }

// Reconstruct the exact (alpha, delta) pair that was serialized: the pair
// always came from one of the two public constructors, so one of the two
// complements reproduces both fields bit-for-bit.
stable::StableParams restore_params(double alpha, double delta, stable::Skew skew) {
    if (1.0 - alpha == delta) return stable::StableParams(alpha, skew);
    if (1.0 - delta == alpha) return stable::StableParams::from_delta(delta, skew);
    throw input_error("sketch data has inconsistent alpha/delta fields");
}

}  // namespace

CCSketch::CCSketch(std::size_t k, stable::StableParams params, std::uint64_t seed,
                   std::uint64_t d)
    : params_(params), seed_(seed), d_(d) {
    if (k < 1) throw config_error("sketch needs k >= 1 projections");
    if (d < 1) throw config_error("sketch needs domain size d >= 1");
    x_.assign(k, 0.0);
    x_comp_.assign(k, 0.0);
    scratch_.assign(2 * k, 0.0);
}

void CCSketch::enable_compensated_accumulation(bool on) { kahan_ = on; }

void CCSketch::update(std::uint64_t index, double amount) {
    if (index >= d_) {
        throw input_error("stream update index " + std::to_string(index) +
                          " out of range for domain size " + std::to_string(d_));
    }
    if (!std::isfinite(amount)) {
        throw input_error("stream update amount is not finite");
    }
    const std::size_t k = x_.size();
    double* r = scratch_.data() + k;
    if (params_.skew == stable::Skew::MaximallySkewed) {
        double* lz = scratch_.data();
        kern::vlogz(seed_, index, 0, params_.alpha, lz, k);
        kern::vexp(lz, r, k);
    } else {
        kern::vsym(seed_, index, 0, params_.alpha, r, k);
    }
    if (!kahan_) {
        kern::vaxpy(amount, r, x_.data(), k);
        f1_ += amount;
    } else {
        for (std::size_t j = 0; j < k; ++j) {
            const double term = amount * r[j];
            const double y = term - x_comp_[j];
            const double t = x_[j] + y;
            x_comp_[j] = (t - x_[j]) - y;
            x_[j] = t;
        }
        const double y = amount - (-f1_comp_);
        const double t = f1_ + y;
        f1_comp_ = -((t - f1_) - y);
        f1_ = t;
    }
}

CCSketch CCSketch::project_dense(const SparseVector& v, std::size_t k,
                                 stable::StableParams params, std::uint64_t seed) {
    validate_sparse_vector(v);
    CCSketch s(k, params, seed, v.d);
    for (const auto& e : v.entries) s.update(e.index, e.value);
    return s;
}

CCSketch CCSketch::merge(const CCSketch& a, const CCSketch& b) {
    if (a.k() != b.k() || a.seed_ != b.seed_ || a.d_ != b.d_ ||
        a.params_.alpha != b.params_.alpha || a.params_.delta != b.params_.delta ||
        a.params_.skew != b.params_.skew) {
        throw config_error(
            "cannot merge sketches with different (k, params, seed, d)");
    }
    CCSketch out = a;
    for (std::size_t j = 0; j < out.x_.size(); ++j) {
        out.x_[j] = (a.x_[j] + a.x_comp_[j]) + (b.x_[j] + b.x_comp_[j]);
        out.x_comp_[j] = 0.0;
    }
    out.f1_ = a.f1() + b.f1();
    out.f1_comp_ = 0.0;
    return out;
}

void CCSketch::save(std::ostream& os) const {
    os.write(kMagic, 4);
    put_u16(os, kVersion);
    os.put(params_.skew == stable::Skew::MaximallySkewed ? '\0' : '\1');
    os.put('\0');  // reserved
    put_u64(os, x_.size());
    put_f64(os, params_.alpha);
    put_f64(os, params_.delta);
    put_u64(os, seed_);
    put_u64(os, d_);
    put_f64(os, f1());
    for (std::size_t j = 0; j < x_.size(); ++j) put_f64(os, x_[j] + x_comp_[j]);
    if (!os) throw input_error("failed to write sketch data");
}

CCSketch CCSketch::load(std::istream& is) {
    char magic[4];
    for (char& c : magic) c = static_cast<char>(get_byte(is));
    if (magic[0] != kMagic[0] || magic[1] != kMagic[1] || magic[2] != kMagic[2] ||
        magic[3] != kMagic[3]) {
        throw input_error("not a sketch file (bad magic)");
    }
    const std::uint16_t version = get_u16(is);
    if (version != kVersion) {
        throw input_error("unsupported sketch version " + std::to_string(version));
    }
    const int skew_byte = get_byte(is);
    if (skew_byte != 0 && skew_byte != 1) {
        throw input_error("unsupported skew tag in sketch data");
    }
    get_byte(is);  // reserved
    const std::uint64_t k = get_u64(is);
    const double alpha = get_f64(is);
    const double delta = get_f64(is);
    const std::uint64_t seed = get_u64(is);
    const std::uint64_t d = get_u64(is);
    const double f1 = get_f64(is);
    const auto skew =
        skew_byte == 0 ? stable::Skew::MaximallySkewed : stable::Skew::Symmetric;
    if (k < 1 || k > (1ull << 32)) {
        throw input_error("sketch data has implausible k = " + std::to_string(k));
    }
    CCSketch s(static_cast<std::size_t>(k), restore_params(alpha, delta, skew),
               seed, d);
    s.f1_ = f1;
    for (std::uint64_t j = 0; j < k; ++j) s.x_[j] = get_f64(is);
    return s;
}

void CCSketch::save_file(const std::string& path) const {
    std::ofstream os(path, std::ios::binary);
    if (!os) throw input_error("cannot open " + path + " for writing");
    save(os);
    os.flush();
    if (!os) throw input_error("failed to write " + path);
}

CCSketch CCSketch::load_file(const std::string& path) {
    std::ifstream is(path, std::ios::binary);
    if (!is) throw input_error("cannot open " + path);
    return load(is);
}

}  // namespace sketch
}  // namespace cc
