#pragma once

#include "tapps/ast.hpp"
#include "tapps/lexer.hpp"

#include <span>
#include <string_view>

namespace tapps {

/// Recursive-descent parser over one statement's tokens, dispatching on the
/// leading keyword. Throws ParseError(ParseError) with the offending token index.
ast::Statement parse_statement(std::span<const Token> tokens);

/// tokenize + parse_statement.
ast::Statement parse(std::string_view text);

/// Parses a standalone id_list ("all" or "a,b,c"), as produced by
/// ast::format_id_list.
SeriesSelector parse_id_list(std::string_view text);

}  // namespace tapps
