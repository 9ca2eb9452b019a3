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

// Writes a one-vector corpus file holding a Zipf profile: n entries over a
// domain of size d with value (i+1)^-s. Handy for synthesizing vectors with
// a prescribed sparsity/entropy profile.

#include <iostream>

#include "CLI11.hpp"

#include "cc/errors.hpp"
#include "cc/oracle.hpp"
#include "cc/sparse_vector.hpp"
#include "cc/vector_io.hpp"

int main(int argc, char** argv) {
    CLI::App app{"gen_zipf: write a Zipf-profile corpus vector"};
    std::uint64_t n = 0;
    std::uint64_t d = 0;
    double s = 1.0;
    std::string out;
    app.add_option("--n", n, "number of non-zero entries")->required();
    app.add_option("--s", s, "Zipf exponent")->required();
    app.add_option("--d", d, "domain size")->required();
    app.add_option("--out", out, "output corpus path")->required();

    try {
        app.parse(argc, argv);
        const auto v = cc::make_zipf(n, s, d);
        cc::io::write_corpus_file(out, {v});
        std::cerr << "wrote " << out << ": d=" << d << " nnz=" << n
                  << " shannon_bits=" << cc::oracle::exact_shannon(v, 2.0)
                  << '\n';
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    } catch (const cc::config_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const cc::input_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
