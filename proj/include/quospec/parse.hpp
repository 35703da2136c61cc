#pragma once

#include <string>
#include <string_view>

#include "quospec/group_ring.hpp"

namespace quospec {

/// Parse a group-ring expression.
///
/// Grammar (whitespace insignificant):
///   expr    := ['+'|'-'] term (('+'|'-') term)*
///   term    := coeff ['*'] monomial | coeff | monomial
///   coeff   := NUMBER | '(' NUMBER ',' NUMBER ')'        -- (re,im)
///   monomial:= gen ['^' INT] (['*'] gen ['^' INT])*
///   gen     := 'a' | 'b' | 'c'            -- Heisenberg generators
///            | 'g' [INDEX]                -- abelian; bare g means g1,
///                                            gj addresses coordinate j
/// Matrices are bracketed row lists: [[expr, ...], ...].
///
/// Errors carry the offending position and the expected-token set.
RingElement parse_element(std::string_view text, const Group& group);
RingMatrix parse_matrix(std::string_view text, const Group& group);

/// Canonical text form; reparsing yields an equal element.
std::string format_element(const RingElement& e);
std::string format_matrix(const RingMatrix& m);

}  // namespace quospec
