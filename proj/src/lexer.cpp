#include "formgen/lexer.hpp"

#include "formgen/errors.hpp"

#include <cctype>

namespace formgen {

const char* kind_name(TokenKind kind) {
    switch (kind) {
    case TokenKind::keyword: return "keyword";
    case TokenKind::symbol: return "symbol";
    case TokenKind::identifier: return "identifier";
    case TokenKind::numeric_value: return "numerical-value";
    case TokenKind::string_value: return "string-value";
    case TokenKind::end_of_input: return "end-of-input";
    }
    return "?";
}

bool same_kind_and_lexeme(const Token& a, const Token& b) {
    return a.kind == b.kind && a.lexeme == b.lexeme;
}

const LanguageProfile& schema_profile() {
    static const LanguageProfile profile{
        LanguageProfile::Kind::schema,
        {
            "schema", "xs", "element", "name", "type", "fixed", "default",
            "complexType", "simpleType", "sequence", "minOccurs", "maxOccurs",
            "base", "restriction", "value",
            "string", "integer", "positiveInteger", "boolean", "decimal", "dateTime",
            "length", "minLength", "maxLength", "pattern", "enumeration",
            "totalDigits", "fractionDigits",
        },
        // two-character delimiters first so maximal munch picks them
        {"</", "/>", "<", ">", ":", "=", "\"", "/", "+", "-"},
    };
    return profile;
}

const LanguageProfile& stylesheet_profile() {
    static const LanguageProfile profile{
        LanguageProfile::Kind::stylesheet,
        {
            "element", "tag", "h1", "h2", "h3", "h4", "h5", "h6",
            "ol", "type", "listype", "ul", "a", "label", "text", "password",
            "checkbox", "radio", "textarea", "select", "null", "submit",
        },
        {":", "(", ")", ","},
    };
    return profile;
}

namespace {

bool is_letter(char c) {
    return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z');
}

bool is_digit(char c) {
    return c >= '0' && c <= '9';
}

bool is_space(char c) {
    return c == ' ' || c == '\t' || c == '\r' || c == '\n';
}

struct Scanner {
    std::string_view source;
    const LanguageProfile& profile;
    std::size_t offset = 0;
    int line = 1;
    int column = 1;

    bool at_end() const { return offset >= source.size(); }
    char peek(std::size_t ahead = 0) const {
        return offset + ahead < source.size() ? source[offset + ahead] : '\0';
    }

    void advance() {
        if (source[offset] == '\n') {
            line++;
            column = 1;
        } else {
            column++; // tabs count as one column
        }
        offset++;
    }

    void skip_whitespace() {
        while (!at_end() && is_space(source[offset]))
            advance();
    }

    Token scan_word() {
        Token token{TokenKind::identifier, {}, line, column};
        std::size_t start = offset;
        while (!at_end() && (is_letter(source[offset]) || is_digit(source[offset])))
            advance();
        token.lexeme = std::string(source.substr(start, offset - start));
        if (profile.is_keyword(token.lexeme))
            token.kind = TokenKind::keyword;
        return token;
    }

    // (+|-)? digit digit* (. digit digit*)?  — caller guarantees the first
    // digit (possibly after a sign) is present.
    Token scan_number() {
        Token token{TokenKind::numeric_value, {}, line, column};
        std::size_t start = offset;
        if (source[offset] == '+' || source[offset] == '-')
            advance();
        while (!at_end() && is_digit(source[offset]))
            advance();
        if (peek() == '.' && is_digit(peek(1))) {
            advance();
            while (!at_end() && is_digit(source[offset]))
                advance();
        }
        token.lexeme = std::string(source.substr(start, offset - start));
        return token;
    }

    Token scan_string() {
        StringScan scan = scan_quoted_string(source, offset, line, column);
        offset = scan.next_offset;
        line = scan.next_line;
        column = scan.next_column;
        return scan.token;
    }

    Token scan_symbol() {
        for (const std::string& sym : profile.symbols) {
            if (source.compare(offset, sym.size(), sym) == 0) {
                Token token{TokenKind::symbol, sym, line, column};
                for (std::size_t i = 0; i < sym.size(); i++)
                    advance();
                return token;
            }
        }
        std::string msg = "character '";
        msg += source[offset];
        msg += "' begins no valid token";
        throw LexicalError(msg, line, column);
    }

    Token next() {
        char c = source[offset];
        if (c == '"')
            return scan_string();
        if (is_letter(c))
            return scan_word();
        if (is_digit(c))
            return scan_number();
        if ((c == '+' || c == '-') && is_digit(peek(1)))
            return scan_number();
        return scan_symbol();
    }
};

} // namespace

StringScan scan_quoted_string(std::string_view source, std::size_t offset,
                              int line, int column) {
    const int open_line = line;
    const int open_column = column;
    std::size_t pos = offset + 1; // past the opening quote
    int cur_line = line;
    int cur_column = column + 1;
    std::string lexeme;
    while (pos < source.size()) {
        char c = source[pos];
        if (c == '"') {
            Token token{TokenKind::string_value, std::move(lexeme), open_line, open_column};
            return StringScan{std::move(token), pos + 1, cur_line, cur_column + 1};
        }
        lexeme += c;
        if (c == '\n') {
            cur_line++;
            cur_column = 1;
        } else {
            cur_column++;
        }
        pos++;
    }
    throw LexicalError("unterminated string", open_line, open_column);
}

std::vector<Token> tokenize(std::string_view source, const LanguageProfile& profile) {
    Scanner scanner{source, profile};
    std::vector<Token> tokens;
    for (;;) {
        scanner.skip_whitespace();
        if (scanner.at_end())
            break;
        tokens.push_back(scanner.next());
    }
    tokens.push_back(Token{TokenKind::end_of_input, "", scanner.line, scanner.column});
    return tokens;
}

} // namespace formgen
