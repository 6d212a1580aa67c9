#pragma once

#include "formgen/schema_ast.hpp"
#include "formgen/token.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace formgen {

/// Recursive-descent parse of a schema token sequence. Throws SyntaxError at
/// the first token no production can continue from, and SemanticError for
/// dialect validity violations (facet applicability, facet value shapes,
/// occurrence bounds). No error recovery: the first error aborts.
SchemaDocument parse_schema(const std::vector<Token>& tokens);

/// Parse one element declaration starting at tokens[cursor] (which must be
/// the `<` of an `<xs:element` opening). Advances cursor past the element's
/// closing delimiter. The variant is selected by lookahead: a self-closing
/// tag yields a simple element, nested xs:simpleType a derived element,
/// nested xs:complexType a complex element.
ElementDecl parse_element(const std::vector<Token>& tokens, std::size_t& cursor);

/// Canonical printer, the inverse of parse_schema. Attribute order is
/// normalized to name, type, default, fixed; occurrence attributes are
/// printed only when they differ from the (1,1) default.
std::string unparse_schema(const SchemaDocument& doc);

} // namespace formgen
