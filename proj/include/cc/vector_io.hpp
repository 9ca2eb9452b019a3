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

// Text corpus format, chosen to be hand-writable and diff-able:
//
//   #D 65536          <- starts a new vector with this domain size
//   0<TAB>3.5         <- one "index<TAB>value" entry per line
//   17<TAB>1
//
// Blank lines are ignored. Every parse error carries its 1-based line
// number. Negative or non-finite values violate the nonnegative-signal
// read-time model and raise model_violation; duplicate or out-of-range
// indices raise input_error.

#include <iosfwd>
#include <string>
#include <vector>

#include "cc/sparse_vector.hpp"

namespace cc {
namespace io {

std::vector<SparseVector> read_corpus(std::istream& in);

// Opens and parses `path`; input_error if the file cannot be opened or
// holds no vectors.
std::vector<SparseVector> ingest_corpus(const std::string& path);

void write_corpus(std::ostream& out, const std::vector<SparseVector>& vectors);

void write_corpus_file(const std::string& path,
                       const std::vector<SparseVector>& vectors);

}  // namespace io
}  // namespace cc
