#pragma once

#include <functional>
#include <optional>
#include <string_view>

#include "c2coh/coefficients.hpp"
#include "c2coh/dual_steenrod.hpp"
#include "c2coh/gf2.hpp"

namespace c2coh {

bool is_identifier(std::string_view s);

using GeneratorLookup = std::function<std::optional<GenId>(std::string_view)>;

// sums of products of powers; atoms are generator names, 0, 1, or (expr)
Polynomial parse_polynomial(std::string_view text, const GeneratorLookup& lookup);

// atoms a, u, th[i,j], 0, 1
CoeffElem parse_coefficient(std::string_view text);

// atoms a, u, x{i}, t{i}, z{i} (z{i} stands for psi(zeta_i)), 0, 1.
// Returns the raw product; pass it to normal_form.
EqElement parse_eq_expression(std::string_view text);

// a single coefficient-free monomial such as "x1^2*t0"
EqMonomial parse_eq_monomial(std::string_view text);

}  // namespace c2coh
