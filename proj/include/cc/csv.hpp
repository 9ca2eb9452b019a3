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

#pragma once

// Minimal CSV emission. Floats are serialized with 17 significant digits so
// a rerun under the same seed reproduces the output byte for byte. Fields
// here never need quoting: numbers, plain identifiers, and status words.

#include <cstdint>
#include <cstdio>
#include <ostream>
#include <string>
#include <string_view>

namespace cc {
namespace csv {

inline std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

class Row {
 public:
    Row& add(std::string_view s) {
        sep();
        line_.append(s);
        return *this;
    }
    Row& add(double v) { return add(std::string_view(format_double(v))); }
    Row& add(std::int64_t v) { return add(std::string_view(std::to_string(v))); }
    Row& add(std::uint64_t v) { return add(std::string_view(std::to_string(v))); }

    void write(std::ostream& os) {
        os << line_ << '\n';
        line_.clear();
        first_ = true;
    }

 private:
    void sep() {
        if (!first_) line_.push_back(',');
        first_ = false;
    }
    std::string line_;
    bool first_ = true;
};

}  // namespace csv
}  // namespace cc
