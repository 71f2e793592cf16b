#pragma once

// Polynomial expressions: rationals p/q, generator names, + - * ^ and
// parentheses. An identifier directly followed by '(' is a call whose
// raw argument text is handed to a caller-supplied resolver.

#include <functional>
#include <string>
#include <string_view>

#include "cdgalab/algebra.hpp"

namespace cdgalab {

using CallResolver = std::function<Polynomial(const std::string& name, std::string_view argument)>;

/// Throws ParseError (line 0) on syntax errors, odd powers >= 2 of a
/// generator and calls without a resolver; UnknownGenerator propagates.
Polynomial parse_polynomial(std::string_view text, const AlgebraPtr& algebra,
                            const CallResolver& resolve_call = {});

bool is_identifier_start(char c);
bool is_identifier_char(char c);

}  // namespace cdgalab
