/*
   Copyright 2026 The coringkit Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef CORING_ERROR_HPP
#define CORING_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace coring {

enum class Errc {
    algebra_mismatch,
    coring_mismatch,
    dimension_mismatch,
    not_firm,
    not_algebra_morphism,
    invalid_context,
    not_galois,
    not_unital,
    precondition_failed,
    parse_error,
    unknown_reference,
    bad_field_element,
    invalid_params,
    singular_matrix,
};

constexpr std::string_view errc_name(Errc c) noexcept {
    switch (c) {
        case Errc::algebra_mismatch: return "AlgebraMismatch";
        case Errc::coring_mismatch: return "CoringMismatch";
        case Errc::dimension_mismatch: return "DimensionMismatch";
        case Errc::not_firm: return "NotFirm";
        case Errc::not_algebra_morphism: return "NotAlgebraMorphism";
        case Errc::invalid_context: return "InvalidContext";
        case Errc::not_galois: return "NotGalois";
        case Errc::not_unital: return "NotUnital";
        case Errc::precondition_failed: return "PreconditionFailed";
        case Errc::parse_error: return "ParseError";
        case Errc::unknown_reference: return "UnknownReference";
        case Errc::bad_field_element: return "BadFieldElement";
        case Errc::invalid_params: return "InvalidParams";
        case Errc::singular_matrix: return "SingularMatrix";
    }
    return "Unknown";
}

/// Every failure raised by the library carries one of the codes above; the
/// message names the offending object.
class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& what)
        : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

    Errc code() const noexcept { return code_; }

private:
    Errc code_;
};

}  // namespace coring

#endif  // CORING_ERROR_HPP
