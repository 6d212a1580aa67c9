#pragma once

#include "formgen/token.hpp"

#include <optional>
#include <string>
#include <vector>

namespace formgen {

enum class TagName {
    h1, h2, h3, h4, h5, h6,
    ol, ul,
    a,
    label,
    text, password, checkbox, radio, submit,
    textarea,
    select,
    null,
};

const char* tag_name_text(TagName tag);
std::optional<TagName> tag_from_lexeme(const std::string& lexeme);

bool is_header_tag(TagName tag);
bool is_list_tag(TagName tag);

/// Tags rendered as <input type="...">.
bool is_input_tag(TagName tag);

/// Free-entry controls whose values get generated check routines.
bool is_validated_control_tag(TagName tag);

/// Ordered-list numbering style: 1, a, A, i or I.
enum class ListType { numeric, lower_alpha, upper_alpha, lower_roman, upper_roman };

const char* list_type_text(ListType type);
std::optional<ListType> list_type_from_lexeme(const std::string& lexeme);

/// One stylesheet line: bind the named schema element to an HTML tag.
struct StyleInstruction {
    std::string element_name;
    TagName tag = TagName::null;
    std::optional<ListType> list_type; // present iff tag == ol
    int line = 1;
    int column = 1;
};

/// Parse the line-oriented stylesheet language. Accepted shape:
///   element:NAME (tag:TAGNAME)
///   element:NAME (tag:ol, listype:LISTTYPE)
/// `type` is accepted as a synonym for `listype`. Throws SyntaxError on
/// unknown tag names, missing punctuation, a listype on a non-ol tag, or a
/// missing listype on ol.
std::vector<StyleInstruction> parse_stylesheet(const std::vector<Token>& tokens);

} // namespace formgen
