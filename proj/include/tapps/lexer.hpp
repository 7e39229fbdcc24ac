#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace tapps {

enum class TokenKind { Keyword, Identifier, Number, String, Filename, Operator, Delimiter };

std::string_view token_kind_name(TokenKind kind);

struct Token {
    TokenKind kind;
    // Keywords are stored lowercased; quoted strings hold their unescaped content.
    std::string lexeme;
    int line = 1;
    int column = 1;
    // Source spelling, which differs from lexeme for keywords and strings.
    std::string spelling;

    bool is_keyword(std::string_view kw) const { return kind == TokenKind::Keyword && lexeme == kw; }
    bool operator==(const Token& other) const {
        return kind == other.kind && lexeme == other.lexeme && line == other.line &&
               column == other.column;
    }
};

bool is_keyword(std::string_view word);

/// Splits one statement line into tokens. Throws ParseError(LexError) on an
/// unterminated string or a stray '=' / '!'.
std::vector<Token> tokenize(std::string_view text, int line = 1);

/// Renders a name so that it lexes back to a single identifier-like token with
/// the same text: bare when it already does, double-quoted otherwise.
std::string quote_if_needed(std::string_view name);
/// Same, for positions that also accept bare file names.
std::string quote_path_if_needed(std::string_view path);
std::string quote(std::string_view text);

}  // namespace tapps
