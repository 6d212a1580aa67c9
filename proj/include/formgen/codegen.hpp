#pragma once

#include "formgen/binder.hpp"

#include <string>
#include <vector>

namespace formgen {

/// One predicate of a generated check routine. Facet checks carry the facet
/// value in `parameter`; the enumeration check carries the admissible values
/// in `values`; base-type checks carry nothing.
enum class CheckKind {
    length,
    min_length,
    max_length,
    pattern,
    enumeration,
    total_digits,
    fraction_digits,
    integer_format,
    positive_integer_format,
    decimal_format,
    boolean_format,
    date_time_format,
};

struct ValidatorCheck {
    CheckKind kind;
    std::string parameter;
    std::vector<std::string> values;
};

/// A script routine named validate_<element> that assigns "Bad Input" to the
/// control's value when any check fails.
struct ScriptRoutine {
    std::string function_name;
    std::string target_element;
    std::vector<ValidatorCheck> checks;
};

enum class FragmentKind {
    header,
    label,
    input,
    select,
    textarea,
    anchor,
    list,
    submit,
};

struct HtmlFragment {
    std::string text;
    FragmentKind kind;
};

struct HtmlPage {
    std::vector<ScriptRoutine> routines;
    std::vector<HtmlFragment> fragments; // binding order
};

/// Entity-escape the five markup-significant characters.
std::string escape_html(const std::string& text);

/// Escape a value for use inside a double-quoted script string literal.
std::string escape_js_string(const std::string& text);

/// Render one non-null binding to its markup fragment.
HtmlFragment render_control(const ControlBinding& binding);

/// Build the check routine for a validator-needed binding: one check per
/// facet in facet order (repeated enumeration facets collapse into a single
/// membership check at the first occurrence), preceded by a base-type check
/// when the base type is not string.
ScriptRoutine generate_validator(const ControlBinding& binding);

/// Script text of one routine.
std::string routine_text(const ScriptRoutine& routine);

HtmlPage build_page(const BindingPlan& plan);

/// Assemble the complete page text. Deterministic byte-for-byte: equal plans
/// yield identical text.
std::string assemble_page(const BindingPlan& plan);

} // namespace formgen
