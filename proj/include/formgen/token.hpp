#pragma once

#include <string>

namespace formgen {

enum class TokenKind {
    keyword,
    symbol,
    identifier,
    numeric_value,
    string_value,
    end_of_input,
};

const char* kind_name(TokenKind kind);

/// A lexical unit. line/column are 1-based and point at the first
/// character of the lexeme (for string values, the opening quote).
struct Token {
    TokenKind kind = TokenKind::end_of_input;
    std::string lexeme;
    int line = 1;
    int column = 1;

    bool is(TokenKind k) const { return kind == k; }
    bool is(TokenKind k, const std::string& lex) const {
        return kind == k && lexeme == lex;
    }
};

bool same_kind_and_lexeme(const Token& a, const Token& b);

} // namespace formgen
