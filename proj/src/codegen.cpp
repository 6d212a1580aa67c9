#include "formgen/codegen.hpp"

#include <sstream>

namespace formgen {

std::string escape_html(const std::string& text) {
    std::string out;
    out.reserve(text.size());
    for (char c : text) {
        switch (c) {
        case '&': out += "&amp;"; break;
        case '<': out += "&lt;"; break;
        case '>': out += "&gt;"; break;
        case '"': out += "&quot;"; break;
        case '\'': out += "&#39;"; break;
        default: out += c;
        }
    }
    return out;
}

std::string escape_js_string(const std::string& text) {
    std::string out;
    out.reserve(text.size());
    for (char c : text) {
        switch (c) {
        case '\\': out += "\\\\"; break;
        case '"': out += "\\\""; break;
        case '\n': out += "\\n"; break;
        case '\r': out += "\\r"; break;
        case '\t': out += "\\t"; break;
        default: out += c;
        }
    }
    return out;
}

namespace {

std::string validator_call(const std::string& element_name) {
    return "validate_" + element_name + "(this)";
}

std::string input_fragment(const ControlBinding& binding, const std::string& type) {
    const SimpleElement* simple =
        binding.element.is_simple() ? &binding.element.simple() : nullptr;
    std::ostringstream out;
    out << "<input name=\"" << escape_html(*element_name(binding.element))
        << "\" type=\"" << type << "\"";
    if (simple && simple->default_value)
        out << " value=\"" << escape_html(*simple->default_value) << "\"";
    if (binding.validator_needed)
        out << " onBlur=\"" << validator_call(*element_name(binding.element)) << "\"";
    out << "/>";
    return out.str();
}

std::string list_items(const std::vector<ElementDecl>& children) {
    std::ostringstream out;
    for (const ElementDecl& child : children)
        out << "<li>" << escape_html(element_default(child).value_or("")) << "</li>\n";
    return out.str();
}

CheckKind base_type_check(PrimitiveDataType type) {
    switch (type) {
    case PrimitiveDataType::integer: return CheckKind::integer_format;
    case PrimitiveDataType::positiveInteger: return CheckKind::positive_integer_format;
    case PrimitiveDataType::decimal: return CheckKind::decimal_format;
    case PrimitiveDataType::boolean: return CheckKind::boolean_format;
    case PrimitiveDataType::dateTime: return CheckKind::date_time_format;
    case PrimitiveDataType::string: break;
    }
    return CheckKind::length; // unreachable; string has no base-type check
}

CheckKind facet_check(FacetKind kind) {
    switch (kind) {
    case FacetKind::length: return CheckKind::length;
    case FacetKind::minLength: return CheckKind::min_length;
    case FacetKind::maxLength: return CheckKind::max_length;
    case FacetKind::pattern: return CheckKind::pattern;
    case FacetKind::enumeration: return CheckKind::enumeration;
    case FacetKind::totalDigits: return CheckKind::total_digits;
    case FacetKind::fractionDigits: return CheckKind::fraction_digits;
    }
    return CheckKind::length;
}

// The condition under which one check REJECTS the control's value, written
// against the JS expression `object_var.value`.
std::string reject_condition(const ValidatorCheck& check) {
    const std::string value = "object_var.value";
    switch (check.kind) {
    case CheckKind::length:
        return value + ".length != " + check.parameter;
    case CheckKind::min_length:
        return value + ".length < " + check.parameter;
    case CheckKind::max_length:
        return value + ".length > " + check.parameter;
    case CheckKind::pattern:
        return "!(new RegExp(\"^(?:" + escape_js_string(check.parameter) +
               ")$\").test(" + value + "))";
    case CheckKind::enumeration: {
        std::string list = "[";
        for (std::size_t i = 0; i < check.values.size(); i++) {
            if (i)
                list += ", ";
            list += "\"" + escape_js_string(check.values[i]) + "\"";
        }
        list += "]";
        return list + ".indexOf(" + value + ") == -1";
    }
    case CheckKind::total_digits:
        return "(" + value + ".match(/[0-9]/g) || []).length > " + check.parameter;
    case CheckKind::fraction_digits:
        return "(" + value + ".indexOf(\".\") == -1 ? 0 : (" + value + ".substring(" +
               value + ".indexOf(\".\") + 1).match(/[0-9]/g) || []).length) > " +
               check.parameter;
    case CheckKind::integer_format:
        return "!/^[+-]?[0-9]+$/.test(" + value + ")";
    case CheckKind::positive_integer_format:
        return "!(/^[+-]?[0-9]+$/.test(" + value + ") && parseInt(" + value +
               ", 10) > 0)";
    case CheckKind::decimal_format:
        return "!/^[+-]?[0-9]+(\\.[0-9]+)?$/.test(" + value + ")";
    case CheckKind::boolean_format:
        return "!(" + value + " == \"true\" || " + value + " == \"false\")";
    case CheckKind::date_time_format:
        return "isNaN(Date.parse(" + value + "))";
    }
    return "false";
}

} // namespace

HtmlFragment render_control(const ControlBinding& binding) {
    const TagName tag = binding.instruction.tag;
    const std::string name = element_name(binding.element).value_or("");

    if (is_header_tag(tag)) {
        std::string level = tag_name_text(tag);
        std::string text = escape_html(element_default(binding.element).value_or(""));
        return HtmlFragment{"<" + level + ">" + text + "</" + level + ">",
                            FragmentKind::header};
    }
    if (tag == TagName::label) {
        std::string text = escape_html(element_default(binding.element).value_or(""));
        return HtmlFragment{"<label>" + text + "</label>", FragmentKind::label};
    }
    if (is_input_tag(tag)) {
        FragmentKind kind = tag == TagName::submit ? FragmentKind::submit
                                                   : FragmentKind::input;
        return HtmlFragment{input_fragment(binding, tag_name_text(tag)), kind};
    }
    if (tag == TagName::textarea) {
        std::ostringstream out;
        out << "<textarea name=\"" << escape_html(name) << "\" rows=\"5\" cols=\"30\"";
        if (binding.validator_needed)
            out << " onBlur=\"" << validator_call(name) << "\"";
        out << ">" << escape_html(element_default(binding.element).value_or(""))
            << "</textarea>";
        return HtmlFragment{out.str(), FragmentKind::textarea};
    }
    if (tag == TagName::select) {
        std::ostringstream out;
        out << "<select name=\"" << escape_html(name) << "\">\n";
        for (const Facet& facet : binding.element.derived().facets) {
            if (facet.kind == FacetKind::enumeration)
                out << "<option>" << escape_html(facet.value) << "</option>\n";
        }
        out << "</select>";
        return HtmlFragment{out.str(), FragmentKind::select};
    }
    if (tag == TagName::a) {
        const SimpleElement& simple = binding.element.simple();
        const std::string href = escape_html(*simple.fixed_value);
        // Visible text falls back to the fixed value when no default exists.
        const std::string text =
            escape_html(simple.default_value.value_or(*simple.fixed_value));
        return HtmlFragment{"<a href=\"" + href + "\">" + text + "</a>",
                            FragmentKind::anchor};
    }

    // ol / ul. Occurrences above one replicate the whole list.
    const ComplexElement& complex = binding.element.complex();
    std::string open = "<ul>";
    std::string close = "</ul>";
    if (binding.instruction.tag == TagName::ol) {
        open = "<ol type=\"" +
               std::string(list_type_text(*binding.instruction.list_type)) + "\">";
        close = "</ol>";
    }
    std::string one = open + "\n" + list_items(binding.child_items) + close;
    std::string text = one;
    for (int i = 1; i < complex.occurrence.max; i++)
        text += "\n" + one;
    return HtmlFragment{text, FragmentKind::list};
}

ScriptRoutine generate_validator(const ControlBinding& binding) {
    ScriptRoutine routine;
    routine.target_element = *element_name(binding.element);
    routine.function_name = "validate_" + routine.target_element;

    if (binding.element.is_derived()) {
        const DerivedElement& derived = binding.element.derived();
        if (derived.base != PrimitiveDataType::string)
            routine.checks.push_back(ValidatorCheck{base_type_check(derived.base), "", {}});
        bool enumeration_emitted = false;
        for (const Facet& facet : derived.facets) {
            if (facet.kind == FacetKind::enumeration) {
                // Repeated enumeration facets form one membership check over
                // the whole value set, at the first facet's position.
                if (enumeration_emitted)
                    continue;
                ValidatorCheck check{CheckKind::enumeration, "", {}};
                for (const Facet& other : derived.facets)
                    if (other.kind == FacetKind::enumeration)
                        check.values.push_back(other.value);
                routine.checks.push_back(std::move(check));
                enumeration_emitted = true;
            } else {
                routine.checks.push_back(
                    ValidatorCheck{facet_check(facet.kind), facet.value, {}});
            }
        }
    } else {
        routine.checks.push_back(
            ValidatorCheck{base_type_check(binding.element.simple().datatype), "", {}});
    }
    return routine;
}

std::string routine_text(const ScriptRoutine& routine) {
    std::ostringstream out;
    out << "function " << routine.function_name << "(object_var)\n{\n";
    if (!routine.checks.empty()) {
        out << "if (";
        for (std::size_t i = 0; i < routine.checks.size(); i++) {
            if (i)
                out << " || ";
            out << reject_condition(routine.checks[i]);
        }
        out << ")\nobject_var.value = \"Bad Input\";\n";
    }
    out << "}";
    return out.str();
}

HtmlPage build_page(const BindingPlan& plan) {
    HtmlPage page;
    for (const ControlBinding& binding : plan.bindings) {
        if (binding.validator_needed)
            page.routines.push_back(generate_validator(binding));
        page.fragments.push_back(render_control(binding));
    }
    return page;
}

std::string assemble_page(const BindingPlan& plan) {
    HtmlPage page = build_page(plan);

    // Group fragments into rows: labels glue to the fragment that follows
    // them, everything else ends a row.
    struct Row {
        std::string text;
        bool header = false;
    };
    std::vector<Row> rows;
    std::string pending;
    for (const HtmlFragment& fragment : page.fragments) {
        pending += fragment.text;
        if (fragment.kind == FragmentKind::label)
            continue;
        rows.push_back(Row{std::move(pending), fragment.kind == FragmentKind::header});
        pending.clear();
    }
    if (!pending.empty())
        rows.push_back(Row{std::move(pending), false});

    std::ostringstream body;
    for (std::size_t i = 0; i < rows.size(); i++) {
        body << rows[i].text << "\n";
        // Rows are separated by <br>; a header row is not.
        if (i + 1 < rows.size() && !rows[i].header)
            body << "<br>\n";
    }

    std::ostringstream script;
    for (std::size_t i = 0; i < page.routines.size(); i++)
        script << routine_text(page.routines[i]) << "\n";

    std::string out = "<html><head><script type=\"text/javascript\">";
    if (!page.routines.empty())
        out += "\n" + script.str();
    out += "</script></head><body><form>";
    if (!rows.empty())
        out += "\n" + body.str();
    out += "</form></body></html>";
    return out;
}

} // namespace formgen
