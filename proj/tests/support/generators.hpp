#pragma once

// Seeded random input generators for the property suites.

#include "formgen/lexer.hpp"
#include "formgen/schema_ast.hpp"
#include "formgen/stylesheet.hpp"

#include <random>
#include <string>
#include <vector>

namespace formgen::testsupport {

class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    int range(int lo, int hi) { // inclusive
        return std::uniform_int_distribution<int>(lo, hi)(engine_);
    }
    bool chance(double p) {
        return std::uniform_real_distribution<double>(0.0, 1.0)(engine_) < p;
    }
    template <typename T>
    const T& pick(const std::vector<T>& options) {
        return options[static_cast<std::size_t>(range(0, static_cast<int>(options.size()) - 1))];
    }

private:
    std::mt19937_64 engine_;
};

inline std::string random_identifier(Rng& rng, const LanguageProfile& profile) {
    static const std::string letters = "abcdefghijklmnopqrstuvwxyzABCDEFGHIJKLMNOPQRSTUVWXYZ";
    static const std::string alnum =
        "abcdefghijklmnopqrstuvwxyzABCDEFGHIJKLMNOPQRSTUVWXYZ0123456789";
    for (;;) {
        std::string word;
        word += letters[static_cast<std::size_t>(rng.range(0, static_cast<int>(letters.size()) - 1))];
        int extra = rng.range(0, 5);
        for (int i = 0; i < extra; i++)
            word += alnum[static_cast<std::size_t>(rng.range(0, static_cast<int>(alnum.size()) - 1))];
        if (!profile.is_keyword(word))
            return word;
    }
}

inline std::string random_numeric_lexeme(Rng& rng) {
    std::string text;
    if (rng.chance(0.3))
        text += rng.chance(0.5) ? '+' : '-';
    int digits = rng.range(1, 4);
    for (int i = 0; i < digits; i++)
        text += static_cast<char>('0' + rng.range(0, 9));
    if (rng.chance(0.3)) {
        text += '.';
        int frac = rng.range(1, 3);
        for (int i = 0; i < frac; i++)
            text += static_cast<char>('0' + rng.range(0, 9));
    }
    return text;
}

inline std::string random_string_lexeme(Rng& rng) {
    static const std::string charset =
        "abcdefghijklmnopqrstuvwxyzABCDEFGHIJKLMNOPQRSTUVWXYZ0123456789 .,:;-/<>&'";
    std::string text;
    int len = rng.range(0, 12);
    for (int i = 0; i < len; i++)
        text += charset[static_cast<std::size_t>(rng.range(0, static_cast<int>(charset.size()) - 1))];
    return text;
}

inline Token random_token(Rng& rng, const LanguageProfile& profile) {
    std::vector<std::string> keywords(profile.keywords.begin(), profile.keywords.end());
    std::sort(keywords.begin(), keywords.end());
    switch (rng.range(0, 4)) {
    case 0:
        return Token{TokenKind::keyword, rng.pick(keywords), 1, 1};
    case 1:
        return Token{TokenKind::identifier, random_identifier(rng, profile), 1, 1};
    case 2:
        return Token{TokenKind::numeric_value, random_numeric_lexeme(rng), 1, 1};
    case 3:
        return Token{TokenKind::string_value, random_string_lexeme(rng), 1, 1};
    default: {
        // the quote symbol opens a literal, so it cannot stand alone
        std::vector<std::string> symbols;
        for (const std::string& sym : profile.symbols)
            if (sym != "\"")
                symbols.push_back(sym);
        return Token{TokenKind::symbol, rng.pick(symbols), 1, 1};
    }
    }
}

inline std::vector<Token> random_token_stream(Rng& rng, const LanguageProfile& profile) {
    std::vector<Token> tokens;
    int count = rng.range(0, 30);
    for (int i = 0; i < count; i++)
        tokens.push_back(random_token(rng, profile));
    return tokens;
}

inline std::string random_whitespace(Rng& rng) {
    static const std::string kinds = " \t\n\r";
    std::string ws;
    int len = rng.range(1, 3);
    for (int i = 0; i < len; i++)
        ws += kinds[static_cast<std::size_t>(rng.range(0, 3))];
    return ws;
}

/// Render a token stream back to text. Separator is a single space when
/// `rng` is null, otherwise a random whitespace run.
inline std::string render_tokens(const std::vector<Token>& tokens, Rng* rng) {
    std::string text;
    for (std::size_t i = 0; i < tokens.size(); i++) {
        if (i)
            text += rng ? random_whitespace(*rng) : std::string(" ");
        if (tokens[i].kind == TokenKind::string_value)
            text += "\"" + tokens[i].lexeme + "\"";
        else
            text += tokens[i].lexeme;
    }
    return text;
}

// ---- schema + stylesheet pair generation ----

struct NameSource {
    int next = 0;
    std::string fresh() {
        int n = next++;
        std::string name = "f";
        for (int i = 0; i < 3; i++) {
            name += static_cast<char>('a' + n % 26);
            n /= 26;
        }
        return name;
    }
};

inline PrimitiveDataType random_primitive(Rng& rng) {
    static const std::vector<PrimitiveDataType> all = {
        PrimitiveDataType::string, PrimitiveDataType::integer,
        PrimitiveDataType::positiveInteger, PrimitiveDataType::boolean,
        PrimitiveDataType::decimal, PrimitiveDataType::dateTime,
    };
    Rng& r = rng;
    return all[static_cast<std::size_t>(r.range(0, static_cast<int>(all.size()) - 1))];
}

inline Facet random_facet_for(Rng& rng, PrimitiveDataType base) {
    std::vector<FacetKind> legal;
    for (FacetKind kind : {FacetKind::length, FacetKind::minLength, FacetKind::maxLength,
                           FacetKind::pattern, FacetKind::enumeration,
                           FacetKind::totalDigits, FacetKind::fractionDigits}) {
        if (facet_applicable(kind, base))
            legal.push_back(kind);
    }
    FacetKind kind = legal[static_cast<std::size_t>(rng.range(0, static_cast<int>(legal.size()) - 1))];
    Facet facet{kind, "", 0, 0};
    if (facet_is_numeric(kind))
        facet.value = std::to_string(rng.range(0, 20));
    else if (kind == FacetKind::pattern)
        facet.value = "[0-9]+";
    else
        facet.value = random_string_lexeme(rng);
    return facet;
}

inline ElementDecl random_element(Rng& rng, NameSource& names, int depth);

inline ElementDecl random_simple(Rng& rng, NameSource& names) {
    SimpleElement simple;
    simple.name = names.fresh();
    simple.datatype = random_primitive(rng);
    if (rng.chance(0.6))
        simple.default_value = random_string_lexeme(rng);
    if (rng.chance(0.25))
        simple.fixed_value = random_string_lexeme(rng);
    return ElementDecl{simple, 0, 0};
}

inline ElementDecl random_derived(Rng& rng, NameSource& names) {
    DerivedElement derived;
    derived.name = names.fresh();
    derived.base = random_primitive(rng);
    int facet_count = rng.range(1, 3);
    for (int i = 0; i < facet_count; i++) {
        Facet facet = random_facet_for(rng, derived.base);
        bool duplicate = false;
        for (const Facet& existing : derived.facets)
            if (existing.kind == facet.kind && !facet_is_repeatable(facet.kind))
                duplicate = true;
        if (!duplicate)
            derived.facets.push_back(std::move(facet));
    }
    return ElementDecl{derived, 0, 0};
}

inline ElementDecl random_complex(Rng& rng, NameSource& names, int depth) {
    ComplexElement complex;
    if (rng.chance(0.7))
        complex.name = names.fresh();
    if (rng.chance(0.3)) {
        complex.occurrence.min = rng.range(0, 2);
        complex.occurrence.max = complex.occurrence.min + rng.range(complex.occurrence.min == 0 ? 1 : 0, 2);
        if (complex.occurrence.max < 1)
            complex.occurrence.max = 1;
    }
    int child_count = rng.range(0, 3);
    for (int i = 0; i < child_count; i++)
        complex.children.push_back(random_element(rng, names, depth - 1));
    return ElementDecl{complex, 0, 0};
}

inline ElementDecl random_element(Rng& rng, NameSource& names, int depth) {
    int roll = rng.range(0, 99);
    if (depth > 0 && roll < 25)
        return random_complex(rng, names, depth);
    if (roll < 55)
        return random_derived(rng, names);
    return random_simple(rng, names);
}

inline SchemaDocument random_schema(Rng& rng) {
    NameSource names;
    SchemaDocument doc;
    int count = rng.range(1, 5);
    for (int i = 0; i < count; i++)
        doc.roots.push_back(random_element(rng, names, 2));
    return doc;
}

inline bool derived_has_enumeration(const DerivedElement& derived) {
    for (const Facet& facet : derived.facets)
        if (facet.kind == FacetKind::enumeration)
            return true;
    return false;
}

/// Instructions compatible with the schema, mirroring the binder's
/// consumption rule (ol/ul absorb the bound complex element's subtree).
inline std::vector<StyleInstruction> compatible_instructions(Rng& rng,
                                                             const SchemaDocument& doc) {
    std::vector<ElementDecl> renderables = flatten_renderables(doc);
    std::vector<StyleInstruction> instructions;
    std::size_t cursor = 0;
    int line = 1;
    while (cursor < renderables.size()) {
        const ElementDecl& element = renderables[cursor];
        StyleInstruction instruction;
        instruction.element_name = *element_name(element);
        instruction.line = line++;
        instruction.column = 1;

        if (element.is_complex()) {
            int roll = rng.range(0, 2);
            if (roll == 0) {
                instruction.tag = TagName::null;
                cursor += 1;
            } else {
                instruction.tag = roll == 1 ? TagName::ol : TagName::ul;
                if (instruction.tag == TagName::ol) {
                    static const std::vector<ListType> types = {
                        ListType::numeric, ListType::lower_alpha, ListType::upper_alpha,
                        ListType::lower_roman, ListType::upper_roman};
                    instruction.list_type = rng.pick(types);
                }
                cursor += 1 + renderable_descendant_count(element);
            }
        } else {
            std::vector<TagName> options = {TagName::null, TagName::text, TagName::password};
            if (element.is_derived()) {
                options.push_back(TagName::textarea);
                if (derived_has_enumeration(element.derived()))
                    options.push_back(TagName::select);
            } else {
                options.push_back(TagName::checkbox);
                options.push_back(TagName::radio);
                options.push_back(TagName::submit);
                options.push_back(TagName::textarea);
                if (element.simple().default_value) {
                    options.push_back(TagName::label);
                    options.push_back(TagName::h1);
                    options.push_back(TagName::h3);
                    options.push_back(TagName::h6);
                }
                if (element.simple().fixed_value)
                    options.push_back(TagName::a);
            }
            instruction.tag = rng.pick(options);
            cursor += 1;
        }
        instructions.push_back(std::move(instruction));
    }
    return instructions;
}

inline std::string stylesheet_text(const std::vector<StyleInstruction>& instructions) {
    std::string text;
    for (const StyleInstruction& instruction : instructions) {
        text += "element:" + instruction.element_name +
                " (tag:" + tag_name_text(instruction.tag);
        if (instruction.list_type)
            text += ", listype:" + std::string(list_type_text(*instruction.list_type));
        text += ")\n";
    }
    return text;
}

} // namespace formgen::testsupport
