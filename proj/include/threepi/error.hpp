// Copyright 2026 The threepi Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef THREEPI_ERROR_HPP
#define THREEPI_ERROR_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace threepi {

/// Failure categories reported by the library. CLI exit codes key off these.
enum class errc {
    non_square,
    not_hermitian,
    no_convergence,
    not_psd,
    dimension_mismatch,
    index_out_of_range,
    empty_keep_set,
    wrong_length,
    zero_vector,
    not_normalized,
    out_of_range,
    syntax_error,
    mixed_qubit_counts,
    not_two_qubit,
    not_three_qubit,
    too_few_qubits,
    monogamy_violation,
    ambiguous_class,
    not_finite,
    internal,
};

class Error : public std::runtime_error {
  public:
    Error(errc code, const std::string& message)
        : std::runtime_error(message), code_(code) {}

    /// Parser errors carry the 0-based input offset of the offending token.
    static Error at_offset(errc code, std::size_t offset, const std::string& message) {
        Error e(code, message + " (offset " + std::to_string(offset) + ")");
        e.offset_ = offset;
        e.has_offset_ = true;
        return e;
    }

    errc code() const noexcept { return code_; }
    bool has_offset() const noexcept { return has_offset_; }
    std::size_t offset() const noexcept { return offset_; }

  private:
    errc code_;
    std::size_t offset_ = 0;
    bool has_offset_ = false;
};

}  // namespace threepi

#endif  // THREEPI_ERROR_HPP
