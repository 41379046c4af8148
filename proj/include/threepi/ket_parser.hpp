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

#ifndef THREEPI_KET_PARSER_HPP
#define THREEPI_KET_PARSER_HPP

#include <string_view>

#include "threepi/state.hpp"

namespace threepi {

/// Parses a ket expression into a pure state. Grammar:
///
///   expr   := term (('+' | '-') term)*
///   term   := coeff? ket
///   coeff  := (real | '(' real (('+'|'-') real 'i')? ')') '*'*
///   ket    := '|' bit+ '>'        bit := '0' | '1'
///   real   := decimal literal with optional exponent, optional sign
///
/// Whitespace between tokens is insignificant; kets admit none inside.
/// Amplitudes accumulate across repeated kets. All kets must have the
/// same bit count (mixed_qubit_counts otherwise). Syntax errors report
/// the 0-based input offset. With normalize=false the accumulated vector
/// must already be normalized (not_normalized); with normalize=true it is
/// rescaled (zero_vector if everything cancels).
PureState parse_ket(std::string_view expr, bool normalize = false);

}  // namespace threepi

#endif  // THREEPI_KET_PARSER_HPP
