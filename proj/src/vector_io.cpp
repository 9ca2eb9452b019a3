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

#include "cc/vector_io.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>
#include <string>

#include "cc/errors.hpp"

namespace cc {
namespace io {

namespace {

[[noreturn]] void bad_line(std::size_t line_no, const std::string& why) {
    throw input_error("line " + std::to_string(line_no) + ": " + why);
}

bool blank(const std::string& s) {
    for (const char ch : s) {
        if (!std::isspace(static_cast<unsigned char>(ch))) return false;
    }
    return true;
}

std::uint64_t parse_u64(const char* first, const char* last,
                        std::size_t line_no, const char* what) {
    std::uint64_t out = 0;
    const auto [ptr, ec] = std::from_chars(first, last, out);
    if (ec != std::errc{} || ptr != last) {
        bad_line(line_no, std::string("malformed ") + what + " '" +
                              std::string(first, last) + "'");
    }
    return out;
}

void finish_vector(std::vector<SparseVector>& out, SparseVector& current,
                   bool open, std::size_t line_no) {
    if (!open) return;
    if (current.entries.empty()) {
        bad_line(line_no, "vector declared by the preceding #D has no entries");
    }
    validate_sparse_vector(current);
    out.push_back(std::move(current));
    current = SparseVector{};
}

}  // namespace

std::vector<SparseVector> read_corpus(std::istream& in) {
    std::vector<SparseVector> out;
    SparseVector current;
    bool open = false;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (blank(line)) continue;
        if (line[0] == '#') {
            if (line.rfind("#D ", 0) != 0) {
                bad_line(line_no, "expected '#D <domain-size>' header");
            }
            finish_vector(out, current, open, line_no);
            current.d = parse_u64(line.data() + 3, line.data() + line.size(),
                                  line_no, "domain size");
            if (current.d == 0) bad_line(line_no, "domain size must be positive");
            open = true;
            continue;
        }
        if (!open) bad_line(line_no, "entry appears before any #D header");
        const auto tab = line.find('\t');
        if (tab == std::string::npos) {
            bad_line(line_no, "expected 'index<TAB>value'");
        }
        SparseVector::Entry e;
        e.index = parse_u64(line.data(), line.data() + tab, line_no, "index");
        if (e.index >= current.d) {
            bad_line(line_no, "index " + std::to_string(e.index) +
                                  " is outside domain of size " +
                                  std::to_string(current.d));
        }
        const std::string val(line, tab + 1);
        char* end = nullptr;
        e.value = std::strtod(val.c_str(), &end);
        if (end != val.c_str() + val.size() || val.empty()) {
            bad_line(line_no, "malformed value '" + val + "'");
        }
        if (!std::isfinite(e.value) || e.value < 0.0) {
            throw model_violation("line " + std::to_string(line_no) +
                                  ": value " + val +
                                  " breaks the nonnegative-signal model");
        }
        current.entries.push_back(e);
    }
    finish_vector(out, current, open, line_no + 1);
    if (out.empty()) throw input_error("corpus holds no vectors");
    return out;
}

std::vector<SparseVector> ingest_corpus(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw input_error("cannot open vector file '" + path + "'");
    return read_corpus(in);
}

void write_corpus(std::ostream& out, const std::vector<SparseVector>& vectors) {
    char buf[40];
    for (const auto& v : vectors) {
        out << "#D " << v.d << '\n';
        for (const auto& e : v.entries) {
            std::snprintf(buf, sizeof buf, "%.17g", e.value);
            out << e.index << '\t' << buf << '\n';
        }
    }
}

void write_corpus_file(const std::string& path,
                       const std::vector<SparseVector>& vectors) {
    std::ofstream out(path);
    if (!out) throw input_error("cannot open '" + path + "' for writing");
    write_corpus(out, vectors);
    if (!out.flush()) throw input_error("failed writing '" + path + "'");
}

}  // namespace io
}  // namespace cc
