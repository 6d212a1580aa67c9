#include "formgen/stylesheet.hpp"

#include "formgen/errors.hpp"

namespace formgen {

const char* tag_name_text(TagName tag) {
    switch (tag) {
    case TagName::h1: return "h1";
    case TagName::h2: return "h2";
    case TagName::h3: return "h3";
    case TagName::h4: return "h4";
    case TagName::h5: return "h5";
    case TagName::h6: return "h6";
    case TagName::ol: return "ol";
    case TagName::ul: return "ul";
    case TagName::a: return "a";
    case TagName::label: return "label";
    case TagName::text: return "text";
    case TagName::password: return "password";
    case TagName::checkbox: return "checkbox";
    case TagName::radio: return "radio";
    case TagName::submit: return "submit";
    case TagName::textarea: return "textarea";
    case TagName::select: return "select";
    case TagName::null: return "null";
    }
    return "?";
}

std::optional<TagName> tag_from_lexeme(const std::string& lexeme) {
    if (lexeme == "h1") return TagName::h1;
    if (lexeme == "h2") return TagName::h2;
    if (lexeme == "h3") return TagName::h3;
    if (lexeme == "h4") return TagName::h4;
    if (lexeme == "h5") return TagName::h5;
    if (lexeme == "h6") return TagName::h6;
    if (lexeme == "ol") return TagName::ol;
    if (lexeme == "ul") return TagName::ul;
    if (lexeme == "a") return TagName::a;
    if (lexeme == "label") return TagName::label;
    if (lexeme == "text") return TagName::text;
    if (lexeme == "password") return TagName::password;
    if (lexeme == "checkbox") return TagName::checkbox;
    if (lexeme == "radio") return TagName::radio;
    if (lexeme == "submit") return TagName::submit;
    if (lexeme == "textarea") return TagName::textarea;
    if (lexeme == "select") return TagName::select;
    if (lexeme == "null") return TagName::null;
    return std::nullopt;
}

bool is_header_tag(TagName tag) {
    switch (tag) {
    case TagName::h1:
    case TagName::h2:
    case TagName::h3:
    case TagName::h4:
    case TagName::h5:
    case TagName::h6:
        return true;
    default:
        return false;
    }
}

bool is_list_tag(TagName tag) {
    return tag == TagName::ol || tag == TagName::ul;
}

bool is_input_tag(TagName tag) {
    switch (tag) {
    case TagName::text:
    case TagName::password:
    case TagName::checkbox:
    case TagName::radio:
    case TagName::submit:
        return true;
    default:
        return false;
    }
}

bool is_validated_control_tag(TagName tag) {
    return tag == TagName::text || tag == TagName::password || tag == TagName::textarea;
}

const char* list_type_text(ListType type) {
    switch (type) {
    case ListType::numeric: return "1";
    case ListType::lower_alpha: return "a";
    case ListType::upper_alpha: return "A";
    case ListType::lower_roman: return "i";
    case ListType::upper_roman: return "I";
    }
    return "?";
}

std::optional<ListType> list_type_from_lexeme(const std::string& lexeme) {
    if (lexeme == "1") return ListType::numeric;
    if (lexeme == "a") return ListType::lower_alpha;
    if (lexeme == "A") return ListType::upper_alpha;
    if (lexeme == "i") return ListType::lower_roman;
    if (lexeme == "I") return ListType::upper_roman;
    return std::nullopt;
}

namespace {

class StylesheetParser {
public:
    explicit StylesheetParser(const std::vector<Token>& tokens) : tokens_(tokens) {}

    std::vector<StyleInstruction> parse() {
        std::vector<StyleInstruction> instructions;
        while (peek().is(TokenKind::keyword, "element"))
            instructions.push_back(parse_instruction());
        if (!peek().is(TokenKind::end_of_input))
            fail("'element'", peek());
        return instructions;
    }

private:
    StyleInstruction parse_instruction() {
        StyleInstruction instruction;
        const Token& head = expect_keyword("element");
        instruction.line = head.line;
        instruction.column = head.column;
        expect_symbol(":");

        // Element names share the identifier alphabet with keywords, so a
        // name like `submit` arrives as a keyword token.
        const Token& name = peek();
        if (!name.is(TokenKind::identifier) && !name.is(TokenKind::keyword))
            fail("an element name", name);
        instruction.element_name = name.lexeme;
        advance();

        expect_symbol("(");
        expect_keyword("tag");
        expect_symbol(":");

        const Token& tag_token = peek();
        auto tag = tag_from_lexeme(tag_token.lexeme);
        if (!tag_token.is(TokenKind::keyword) || !tag)
            fail_at(tag_token, "'" + tag_token.lexeme + "' is not a recognized tag name");
        instruction.tag = *tag;
        advance();

        if (peek().is(TokenKind::symbol, ",")) {
            advance();
            const Token& key = peek();
            if (!key.is(TokenKind::keyword, "listype") && !key.is(TokenKind::keyword, "type"))
                fail("'listype'", key);
            advance();
            expect_symbol(":");
            const Token& value = peek();
            auto list_type = list_type_from_lexeme(value.lexeme);
            if (!list_type)
                fail_at(value, "'" + value.lexeme +
                                   "' is not a list type (expected 1, a, A, i or I)");
            advance();
            if (instruction.tag != TagName::ol)
                fail_at(key, "listype is only valid on tag ol");
            instruction.list_type = *list_type;
        } else if (instruction.tag == TagName::ol) {
            fail_at(peek(), "tag ol requires a listype");
        }

        expect_symbol(")");
        return instruction;
    }

    const Token& peek() const {
        return tokens_[pos_ < tokens_.size() ? pos_ : tokens_.size() - 1];
    }
    void advance() {
        if (pos_ + 1 < tokens_.size())
            pos_++;
    }

    const Token& expect_symbol(const std::string& lexeme) {
        const Token& token = peek();
        if (!token.is(TokenKind::symbol, lexeme))
            fail("'" + lexeme + "'", token);
        advance();
        return token;
    }

    const Token& expect_keyword(const std::string& lexeme) {
        const Token& token = peek();
        if (!token.is(TokenKind::keyword, lexeme))
            fail("'" + lexeme + "'", token);
        advance();
        return token;
    }

    [[noreturn]] void fail(const std::string& expected, const Token& found) const {
        std::string shown = found.is(TokenKind::end_of_input)
                                ? std::string("end of input")
                                : "'" + found.lexeme + "'";
        throw SyntaxError("expected " + expected + ", found " + shown, expected, found);
    }

    [[noreturn]] void fail_at(const Token& token, const std::string& message) const {
        throw SyntaxError(message, "", token);
    }

    const std::vector<Token>& tokens_;
    std::size_t pos_ = 0;
};

} // namespace

std::vector<StyleInstruction> parse_stylesheet(const std::vector<Token>& tokens) {
    return StylesheetParser(tokens).parse();
}

} // namespace formgen
