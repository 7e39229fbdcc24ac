#include "tapps/lexer.hpp"

#include "tapps/cell.hpp"
#include "tapps/error.hpp"

#include <algorithm>
#include <array>
#include <cctype>

namespace tapps {

namespace {

constexpr std::array<std::string_view, 44> kKeywords = {
    "all",        "alpha",     "as",       "asthistory", "cast",       "csv",
    "cwd",        "dataframe", "delete",   "describe",   "displayast", "environment",
    "fillin",     "float",     "from",     "history",    "in",         "integer",
    "labels",     "list",      "load",     "merge",      "new",        "noheader",
    "nonalpha",   "ocwd",      "parameter", "plugin",    "pythonshell", "rcwd",
    "real",       "rename",    "replace",  "results",    "runplugin",  "save",
    "select",     "separator", "series",   "session",    "set",        "show",
    "to",         "where",
};

bool is_space(char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\n'; }

bool breaks_word(char c) {
    switch (c) {
        case ',': case '<': case '>': case '=': case '!': case '"': case '\'':
        case ';': case '|': case '*': case ':':
            return true;
        default:
            return is_space(c);
    }
}

bool lone_separator(std::string_view word) {
    return word.size() == 1 &&
           (word[0] == '.' || word[0] == '+' || word[0] == '-' || word[0] == '/' || word[0] == '\\');
}

std::string lower(std::string_view s) {
    std::string out(s);
    std::transform(out.begin(), out.end(), out.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return out;
}

[[noreturn]] void lex_error(std::string_view text, std::size_t pos, const std::string& what) {
    auto fragment = std::string(text.substr(pos, 12));
    throw ParseError(ErrorKind::LexError,
                     what + " at column " + std::to_string(pos + 1) + ": '" + fragment + "'", pos,
                     fragment);
}

}  // namespace

std::string_view token_kind_name(TokenKind kind) {
    switch (kind) {
        case TokenKind::Keyword: return "keyword";
        case TokenKind::Identifier: return "identifier";
        case TokenKind::Number: return "number";
        case TokenKind::String: return "string";
        case TokenKind::Filename: return "filename";
        case TokenKind::Operator: return "operator";
        case TokenKind::Delimiter: return "delimiter";
    }
    return "token";
}

bool is_keyword(std::string_view word) {
    auto w = lower(word);
    return std::binary_search(kKeywords.begin(), kKeywords.end(), w);
}

std::vector<Token> tokenize(std::string_view text, int line) {
    std::vector<Token> tokens;
    std::size_t i = 0;
    auto push = [&](TokenKind kind, std::string lexeme, std::size_t start) {
        tokens.push_back(Token{kind, std::move(lexeme), line, static_cast<int>(start + 1),
                               std::string(text.substr(start, i - start))});
    };
    while (i < text.size()) {
        char c = text[i];
        if (is_space(c)) {
            ++i;
            continue;
        }
        const std::size_t start = i;
        if (c == '"' || c == '\'') {
            const char quote_char = c;
            std::string content;
            ++i;
            bool closed = false;
            while (i < text.size()) {
                char d = text[i++];
                if (d == quote_char) {
                    closed = true;
                    break;
                }
                if (d == '\\' && i < text.size()) {
                    char e = text[i++];
                    switch (e) {
                        case 'n': content.push_back('\n'); break;
                        case 't': content.push_back('\t'); break;
                        case 'r': content.push_back('\r'); break;
                        default: content.push_back(e); break;
                    }
                    continue;
                }
                content.push_back(d);
            }
            if (!closed) lex_error(text, start, "unterminated string");
            push(TokenKind::String, std::move(content), start);
            continue;
        }
        if (c == '<' || c == '>' || c == '=' || c == '!') {
            if (i + 1 < text.size() && text[i + 1] == '=') {
                i += 2;
                push(TokenKind::Operator, std::string(text.substr(start, 2)), start);
                continue;
            }
            if (c == '=' || c == '!') lex_error(text, start, "unexpected character");
            ++i;
            push(TokenKind::Operator, std::string(1, c), start);
            continue;
        }
        if (breaks_word(c)) {
            ++i;
            push(TokenKind::Delimiter, std::string(1, c), start);
            continue;
        }
        while (i < text.size() && !breaks_word(text[i])) ++i;
        auto word = text.substr(start, i - start);
        if (lone_separator(word)) {
            push(TokenKind::Delimiter, std::string(word), start);
        } else if (parse_number(word)) {
            push(TokenKind::Number, std::string(word), start);
        } else if (is_keyword(word)) {
            push(TokenKind::Keyword, lower(word), start);
        } else if (word.find_first_of("./\\") != std::string_view::npos) {
            push(TokenKind::Filename, std::string(word), start);
        } else {
            push(TokenKind::Identifier, std::string(word), start);
        }
    }
    return tokens;
}

std::string quote(std::string_view text) {
    std::string out = "\"";
    for (char c : text) {
        switch (c) {
            case '"': out += "\\\""; break;
            case '\\': out += "\\\\"; break;
            case '\n': out += "\\n"; break;
            case '\t': out += "\\t"; break;
            case '\r': out += "\\r"; break;
            default: out.push_back(c);
        }
    }
    out.push_back('"');
    return out;
}

namespace {

bool lexes_as_single(std::string_view text, bool allow_filename) {
    try {
        auto tokens = tokenize(text);
        if (tokens.size() != 1 || tokens[0].lexeme != text) return false;
        auto k = tokens[0].kind;
        return k == TokenKind::Identifier || k == TokenKind::Number ||
               (allow_filename && k == TokenKind::Filename);
    } catch (const Error&) {
        return false;
    }
}

}  // namespace

std::string quote_if_needed(std::string_view name) {
    return lexes_as_single(name, false) ? std::string(name) : quote(name);
}

std::string quote_path_if_needed(std::string_view path) {
    return lexes_as_single(path, true) ? std::string(path) : quote(path);
}

}  // namespace tapps
