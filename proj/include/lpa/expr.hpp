#pragma once

#include <string>

#include "lpa/element.hpp"
#include "lpa/graph.hpp"

namespace lpa {

/// Evaluates an algebra expression over g:
///
///   expr   := ['+'|'-'] term (('+'|'-') term)*
///   term   := atom ('*' atom)*
///   atom   := rational | vertexName | edgeName | edgeName '^' | '(' expr ')'
///
/// Rationals are `int` or `int/posint`; a bare rational is a multiple of
/// the identity. Ghost edges carry a trailing '^'. Whitespace is
/// insignificant. Element::to_string() output reparses to an equal value.
Element eval_expression(const Graph& g, const std::string& text);

}  // namespace lpa
