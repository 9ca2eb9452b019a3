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

#include <stdexcept>
#include <string>

namespace cc {

// Error taxonomy mirrored by the CLI's exit codes:
//   config_error  -> 2 (bad arguments / invalid parameter ranges)
//   input_error   -> 3 (malformed or inconsistent input data)
//   numeric_error -> 4 (a numerical procedure failed to converge or
//                       produced an unusable result)
class error : public std::runtime_error {
 public:
    explicit error(const std::string& what) : std::runtime_error(what) {}
};

class config_error : public error {
 public:
    explicit config_error(const std::string& what) : error(what) {}
};

class input_error : public error {
 public:
    explicit input_error(const std::string& what) : error(what) {}
};

// Raised when estimation-time model assumptions are violated by the data
// (e.g. a nonpositive projected accumulator under a strictly positive
// projection). A kind of input error: the stream broke its contract.
class model_violation : public input_error {
 public:
    explicit model_violation(const std::string& what) : input_error(what) {}
};

class numeric_error : public error {
 public:
    explicit numeric_error(const std::string& what) : error(what) {}
};

}  // namespace cc
