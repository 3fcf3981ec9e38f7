#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace ssval {

enum class errc {
    unsupported_field,
    division_by_zero,
    inexact_division,
    non_integral_model,
    bad_reduction,
    singular_curve,
    not_short_form,
    not_supersingular,
    precision_too_low,
    invalid_mu,
    precondition_violated,
    invalid_input,
};

constexpr std::string_view errc_name(errc c) noexcept {
    switch (c) {
    case errc::unsupported_field: return "UnsupportedField";
    case errc::division_by_zero: return "DivisionByZero";
    case errc::inexact_division: return "InexactDivision";
    case errc::non_integral_model: return "NonIntegralModel";
    case errc::bad_reduction: return "BadReduction";
    case errc::singular_curve: return "SingularCurve";
    case errc::not_short_form: return "NotShortForm";
    case errc::not_supersingular: return "NotSupersingular";
    case errc::precision_too_low: return "PrecisionTooLow";
    case errc::invalid_mu: return "InvalidMu";
    case errc::precondition_violated: return "PreconditionViolated";
    case errc::invalid_input: return "InvalidInput";
    }
    return "Unknown";
}

// Internal-consistency failures (a wrong recursion, a broken identity) as
// opposed to bad caller input.
constexpr bool is_internal(errc c) noexcept { return c == errc::inexact_division; }

class error : public std::runtime_error {
public:
    error(errc code, const std::string& what)
        : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

    errc code() const noexcept { return code_; }

private:
    errc code_;
};

} // namespace ssval
