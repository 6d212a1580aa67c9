#pragma once

#include "formgen/token.hpp"

#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

namespace formgen {

/// Keyword and symbol tables for one of the two input languages. Both
/// languages share the lexer engine; the profile is the only difference.
struct LanguageProfile {
    enum class Kind { schema, stylesheet };

    Kind kind;
    std::unordered_set<std::string> keywords;
    std::vector<std::string> symbols; // ordered longest-first for maximal munch

    bool is_keyword(const std::string& word) const {
        return keywords.count(word) != 0;
    }
};

const LanguageProfile& schema_profile();
const LanguageProfile& stylesheet_profile();

/// Convert source text into tokens, discarding whitespace. The result is
/// always terminated by a single end-of-input token. Classification is
/// case-sensitive. Throws LexicalError when a character begins no valid
/// token for the profile.
std::vector<Token> tokenize(std::string_view source, const LanguageProfile& profile);

struct StringScan {
    Token token;             // kind string_value, positioned at the opening quote
    std::size_t next_offset; // first offset past the closing quote
    int next_line;
    int next_column;
};

/// Scan a double-quoted literal starting at `offset` (which must hold `"`).
/// The lexeme is every character strictly between the quotes. Throws
/// LexicalError("unterminated string") at the opening quote's position when
/// input ends before a closing quote.
StringScan scan_quoted_string(std::string_view source, std::size_t offset,
                              int line, int column);

} // namespace formgen
