#include "formgen/schema_parser.hpp"

#include "formgen/errors.hpp"

#include <map>
#include <sstream>

namespace formgen {

namespace {

bool is_identifier_text(const std::string& text) {
    if (text.empty())
        return false;
    char first = text[0];
    if (!((first >= 'a' && first <= 'z') || (first >= 'A' && first <= 'Z')))
        return false;
    for (char c : text) {
        bool ok = (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9');
        if (!ok)
            return false;
    }
    return true;
}

// Digits only, capped at nine digits so the value always fits an int.
bool is_nonnegative_integer_text(const std::string& text) {
    if (text.empty() || text.size() > 9)
        return false;
    for (char c : text)
        if (c < '0' || c > '9')
            return false;
    return true;
}

struct AttrValue {
    std::string text;
    int line;
    int column;
};

class SchemaParser {
public:
    SchemaParser(const std::vector<Token>& tokens, std::size_t cursor)
        : tokens_(tokens), pos_(cursor) {}

    std::size_t cursor() const { return pos_; }

    SchemaDocument parse_document() {
        expect_symbol("<");
        expect_keyword("xs");
        expect_symbol(":");
        expect_keyword("schema");
        expect_symbol(">");
        SchemaDocument doc;
        while (peek().is(TokenKind::symbol, "<"))
            doc.roots.push_back(parse_element_decl());
        expect_symbol("</");
        expect_keyword("xs");
        expect_symbol(":");
        expect_keyword("schema");
        expect_symbol(">");
        if (!peek().is(TokenKind::end_of_input))
            fail("end of input", peek());
        return doc;
    }

    ElementDecl parse_element_decl() {
        const Token& open = peek();
        expect_symbol("<");
        expect_keyword("xs");
        expect_symbol(":");
        expect_keyword("element");

        std::map<std::string, AttrValue> attrs;
        while (peek().is(TokenKind::keyword)) {
            const Token& key = peek();
            if (key.lexeme != "name" && key.lexeme != "type" &&
                key.lexeme != "default" && key.lexeme != "fixed")
                fail("an element attribute (name, type, default, fixed)", key);
            advance();
            expect_symbol("=");
            const Token& value = expect_kind(TokenKind::string_value, "a quoted attribute value");
            if (attrs.count(key.lexeme))
                fail_at(key, "duplicate attribute '" + key.lexeme + "'");
            attrs[key.lexeme] = AttrValue{value.lexeme, value.line, value.column};
        }

        ElementDecl decl;
        decl.line = open.line;
        decl.column = open.column;

        if (peek().is(TokenKind::symbol, "/>")) {
            advance();
            decl.node = finish_simple(attrs);
            return decl;
        }

        const Token& closer = expect_symbol(">");
        // Nested content: only the name attribute is meaningful here.
        for (const char* key : {"type", "default", "fixed"}) {
            if (attrs.count(key))
                fail_at(closer, std::string("an element with nested content carries only a name attribute, not '") + key + "'");
        }

        expect_symbol("<");
        expect_keyword("xs");
        expect_symbol(":");
        const Token& nested = peek();
        if (nested.is(TokenKind::keyword, "simpleType")) {
            advance();
            decl.node = finish_derived(attrs, open);
        } else if (nested.is(TokenKind::keyword, "complexType")) {
            advance();
            decl.node = finish_complex(attrs);
        } else {
            fail("'simpleType' or 'complexType'", nested);
        }
        return decl;
    }

private:
    SimpleElement finish_simple(const std::map<std::string, AttrValue>& attrs) {
        SimpleElement simple;
        simple.name = require_name(attrs);
        auto type_it = attrs.find("type");
        if (type_it == attrs.end())
            fail_at(previous(), "element is missing its type attribute");
        auto primitive = primitive_from_qualified(type_it->second.text);
        if (!primitive) {
            fail_at_pos(type_it->second.line, type_it->second.column,
                        "'" + type_it->second.text +
                            "' is not a primitive data type (expected one of xs:string, "
                            "xs:integer, xs:positiveInteger, xs:boolean, xs:decimal, xs:dateTime)");
        }
        simple.datatype = *primitive;
        if (auto it = attrs.find("default"); it != attrs.end())
            simple.default_value = it->second.text;
        if (auto it = attrs.find("fixed"); it != attrs.end())
            simple.fixed_value = it->second.text;
        return simple;
    }

    DerivedElement finish_derived(const std::map<std::string, AttrValue>& attrs,
                                  const Token& open) {
        DerivedElement derived;
        derived.name = require_name(attrs);
        expect_symbol(">");

        expect_symbol("<");
        expect_keyword("xs");
        expect_symbol(":");
        expect_keyword("restriction");
        expect_keyword("base");
        expect_symbol("=");
        const Token& base = expect_kind(TokenKind::string_value, "a quoted base type");
        auto primitive = primitive_from_qualified(base.lexeme);
        if (!primitive) {
            fail_at(base, "'" + base.lexeme +
                              "' is not a primitive data type (expected one of xs:string, "
                              "xs:integer, xs:positiveInteger, xs:boolean, xs:decimal, xs:dateTime)");
        }
        derived.base = *primitive;
        expect_symbol(">");

        while (peek().is(TokenKind::symbol, "<"))
            derived.facets.push_back(parse_facet());

        expect_symbol("</");
        expect_keyword("xs");
        expect_symbol(":");
        expect_keyword("restriction");
        expect_symbol(">");
        expect_symbol("</");
        expect_keyword("xs");
        expect_symbol(":");
        expect_keyword("simpleType");
        expect_symbol(">");
        expect_symbol("</");
        expect_keyword("xs");
        expect_symbol(":");
        expect_keyword("element");
        expect_symbol(">");

        if (derived.facets.empty())
            throw SemanticError("derived element '" + derived.name + "' has no facets",
                                open.line, open.column);
        for (std::size_t i = 0; i < derived.facets.size(); i++) {
            const Facet& facet = derived.facets[i];
            if (!facet_is_repeatable(facet.kind)) {
                for (std::size_t j = 0; j < i; j++) {
                    if (derived.facets[j].kind == facet.kind)
                        throw SemanticError("facet '" + std::string(facet_name(facet.kind)) +
                                                "' appears more than once in one restriction",
                                            facet.line, facet.column);
                }
            }
        }
        check_facet_applicability(derived);
        return derived;
    }

    Facet parse_facet() {
        const Token& open = peek();
        expect_symbol("<");
        expect_keyword("xs");
        expect_symbol(":");
        const Token& kind_token = peek();
        auto kind = kind_token.is(TokenKind::keyword)
                        ? facet_from_name(kind_token.lexeme)
                        : std::nullopt;
        if (!kind)
            fail("a facet name (length, minLength, maxLength, pattern, enumeration, "
                 "totalDigits, fractionDigits)",
                 kind_token);
        advance();
        expect_keyword("value");
        expect_symbol("=");
        const Token& value = expect_kind(TokenKind::string_value, "a quoted facet value");
        expect_symbol("/>");

        Facet facet{*kind, value.lexeme, open.line, open.column};
        if (facet_is_numeric(facet.kind) && !is_nonnegative_integer_text(facet.value))
            throw SemanticError("facet '" + std::string(facet_name(facet.kind)) +
                                    "' requires a non-negative integer value, got \"" +
                                    facet.value + "\"",
                                value.line, value.column);
        return facet;
    }

    ComplexElement finish_complex(const std::map<std::string, AttrValue>& attrs) {
        ComplexElement complex;
        if (auto it = attrs.find("name"); it != attrs.end()) {
            if (!is_identifier_text(it->second.text))
                fail_at_pos(it->second.line, it->second.column,
                            "name \"" + it->second.text + "\" is not a valid identifier");
            complex.name = it->second.text;
        }
        expect_symbol(">");

        expect_symbol("<");
        expect_keyword("xs");
        expect_symbol(":");
        expect_keyword("sequence");

        std::map<std::string, AttrValue> seq_attrs;
        while (peek().is(TokenKind::keyword)) {
            const Token& key = peek();
            if (key.lexeme != "minOccurs" && key.lexeme != "maxOccurs")
                fail("a sequence attribute (minOccurs, maxOccurs)", key);
            advance();
            expect_symbol("=");
            const Token& value = expect_kind(TokenKind::string_value, "a quoted attribute value");
            if (seq_attrs.count(key.lexeme))
                fail_at(key, "duplicate attribute '" + key.lexeme + "'");
            seq_attrs[key.lexeme] = AttrValue{value.lexeme, value.line, value.column};
        }
        expect_symbol(">");

        complex.occurrence = parse_occurrence(seq_attrs);

        while (peek().is(TokenKind::symbol, "<"))
            complex.children.push_back(parse_element_decl());

        expect_symbol("</");
        expect_keyword("xs");
        expect_symbol(":");
        expect_keyword("sequence");
        expect_symbol(">");
        expect_symbol("</");
        expect_keyword("xs");
        expect_symbol(":");
        expect_keyword("complexType");
        expect_symbol(">");
        expect_symbol("</");
        expect_keyword("xs");
        expect_symbol(":");
        expect_keyword("element");
        expect_symbol(">");
        return complex;
    }

    Occurrence parse_occurrence(const std::map<std::string, AttrValue>& attrs) {
        Occurrence occurrence;
        if (auto it = attrs.find("minOccurs"); it != attrs.end()) {
            if (!is_nonnegative_integer_text(it->second.text))
                throw SemanticError("minOccurs requires a non-negative integer, got \"" +
                                        it->second.text + "\"",
                                    it->second.line, it->second.column);
            occurrence.min = std::stoi(it->second.text);
        }
        if (auto it = attrs.find("maxOccurs"); it != attrs.end()) {
            if (!is_nonnegative_integer_text(it->second.text) || it->second.text == "0")
                throw SemanticError("maxOccurs requires a positive integer, got \"" +
                                        it->second.text + "\"",
                                    it->second.line, it->second.column);
            occurrence.max = std::stoi(it->second.text);
        }
        if (occurrence.min > occurrence.max) {
            auto it = attrs.find("minOccurs");
            throw SemanticError("minOccurs exceeds maxOccurs",
                                it->second.line, it->second.column);
        }
        return occurrence;
    }

    std::string require_name(const std::map<std::string, AttrValue>& attrs) {
        auto it = attrs.find("name");
        if (it == attrs.end())
            fail_at(previous(), "element is missing its name attribute");
        if (!is_identifier_text(it->second.text))
            fail_at_pos(it->second.line, it->second.column,
                        "name \"" + it->second.text + "\" is not a valid identifier");
        return it->second.text;
    }

    const Token& peek() const {
        return tokens_[pos_ < tokens_.size() ? pos_ : tokens_.size() - 1];
    }
    const Token& previous() const { return tokens_[pos_ > 0 ? pos_ - 1 : 0]; }
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

    const Token& expect_kind(TokenKind kind, const std::string& what) {
        const Token& token = peek();
        if (!token.is(kind))
            fail(what, token);
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

    [[noreturn]] void fail_at_pos(int line, int column, const std::string& message) const {
        Token marker{TokenKind::string_value, "", line, column};
        throw SyntaxError(message, "", marker);
    }

    const std::vector<Token>& tokens_;
    std::size_t pos_;
};

void print_element(std::ostringstream& out, const ElementDecl& element);

void print_simple(std::ostringstream& out, const SimpleElement& simple) {
    out << "<xs:element name=\"" << simple.name << "\" type=\"xs:"
        << primitive_name(simple.datatype) << "\"";
    if (simple.default_value)
        out << " default=\"" << *simple.default_value << "\"";
    if (simple.fixed_value)
        out << " fixed=\"" << *simple.fixed_value << "\"";
    out << "/>";
}

void print_derived(std::ostringstream& out, const DerivedElement& derived) {
    out << "<xs:element name=\"" << derived.name << "\">\n";
    out << "<xs:simpleType>\n";
    out << "<xs:restriction base=\"xs:" << primitive_name(derived.base) << "\">\n";
    for (const Facet& facet : derived.facets)
        out << "<xs:" << facet_name(facet.kind) << " value=\"" << facet.value << "\"/>\n";
    out << "</xs:restriction>\n</xs:simpleType>\n</xs:element>";
}

void print_complex(std::ostringstream& out, const ComplexElement& complex) {
    out << "<xs:element";
    if (complex.name)
        out << " name=\"" << *complex.name << "\"";
    out << ">\n<xs:complexType>\n<xs:sequence";
    if (complex.occurrence.min != 1 || complex.occurrence.max != 1) {
        out << " minOccurs=\"" << complex.occurrence.min << "\" maxOccurs=\""
            << complex.occurrence.max << "\"";
    }
    out << ">\n";
    for (const ElementDecl& child : complex.children) {
        print_element(out, child);
        out << "\n";
    }
    out << "</xs:sequence>\n</xs:complexType>\n</xs:element>";
}

void print_element(std::ostringstream& out, const ElementDecl& element) {
    if (element.is_simple())
        print_simple(out, element.simple());
    else if (element.is_derived())
        print_derived(out, element.derived());
    else
        print_complex(out, element.complex());
}

} // namespace

SchemaDocument parse_schema(const std::vector<Token>& tokens) {
    SchemaParser parser(tokens, 0);
    return parser.parse_document();
}

ElementDecl parse_element(const std::vector<Token>& tokens, std::size_t& cursor) {
    SchemaParser parser(tokens, cursor);
    ElementDecl decl = parser.parse_element_decl();
    cursor = parser.cursor();
    return decl;
}

std::string unparse_schema(const SchemaDocument& doc) {
    std::ostringstream out;
    out << "<xs:schema>\n";
    for (const ElementDecl& root : doc.roots) {
        print_element(out, root);
        out << "\n";
    }
    out << "</xs:schema>";
    return out.str();
}

} // namespace formgen
