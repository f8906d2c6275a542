#pragma once

#include <string>
#include <string_view>

#include "masure/laurent.hpp"

namespace masure {

// Expressions over k(w)(u):  integers, w, u, + - * / ^ (integer exponents) and parentheses.
// Example: (1+w^2)/(w*(1-w)),  w^2*u^3,  u^-3, u^(-3).
RationalU parse_rational_u(std::string_view text);

// same syntax, rejecting any dependence on u
RationalFunc parse_ratfunc(std::string_view text);

// parse of "p/q" or an integer, used for point coordinates
mpq_class parse_rational_number(std::string_view text);

}  // namespace masure
