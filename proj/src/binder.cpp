#include "formgen/binder.hpp"

#include "formgen/errors.hpp"

#include <string>

namespace formgen {

namespace {

bool has_enumeration(const DerivedElement& derived) {
    for (const Facet& facet : derived.facets)
        if (facet.kind == FacetKind::enumeration)
            return true;
    return false;
}

bool validator_needed_for(const ElementDecl& element, TagName tag) {
    if (!is_validated_control_tag(tag))
        return false;
    if (element.is_derived())
        return true;
    if (element.is_simple())
        return element.simple().datatype != PrimitiveDataType::string;
    return false;
}

std::string describe(const StyleInstruction& instruction) {
    return "element '" + instruction.element_name + "' (line " +
           std::to_string(instruction.line) + ")";
}

// Count how many renderables one instruction consumes at `index` in the
// flattened list: 1, plus the bound complex element's subtree for ol/ul.
std::size_t consumed_by(const std::vector<ElementDecl>& renderables, std::size_t index,
                        const StyleInstruction& instruction) {
    std::size_t consumed = 1;
    if (is_list_tag(instruction.tag) && renderables[index].is_complex())
        consumed += renderable_descendant_count(renderables[index]);
    return consumed;
}

} // namespace

void check_compatibility(const ElementDecl& element, const StyleInstruction& instruction) {
    const TagName tag = instruction.tag;
    if (tag == TagName::null)
        return;
    if (tag == TagName::select) {
        if (!element.is_derived() || !has_enumeration(element.derived()))
            throw BindingError("tag select requires a derived element with enumeration "
                               "facets: " + describe(instruction),
                               instruction.line, instruction.column);
        return;
    }
    if (is_list_tag(tag)) {
        if (!element.is_complex())
            throw BindingError("tag " + std::string(tag_name_text(tag)) +
                                   " requires a complex element: " + describe(instruction),
                               instruction.line, instruction.column);
        return;
    }
    if (tag == TagName::a) {
        if (!element.is_simple() || !element.simple().fixed_value)
            throw BindingError("tag a requires an element with a fixed attribute: " +
                                   describe(instruction),
                               instruction.line, instruction.column);
        return;
    }
    if (is_header_tag(tag) || tag == TagName::label) {
        if (!element_default(element))
            throw BindingError("tag " + std::string(tag_name_text(tag)) +
                                   " requires an element with a default attribute: " +
                                   describe(instruction),
                               instruction.line, instruction.column);
        return;
    }
    // Input controls, textarea: no structural precondition.
}

BindingPlan bind(const SchemaDocument& doc, const std::vector<StyleInstruction>& instructions) {
    const std::vector<ElementDecl> renderables = flatten_renderables(doc);

    // Count first so that a shortened or padded stylesheet reports a count
    // mismatch rather than the name mismatch the desync would produce.
    std::size_t cursor = 0;
    for (std::size_t i = 0; i < instructions.size(); i++) {
        if (cursor >= renderables.size()) {
            const StyleInstruction& extra = instructions[i];
            throw BindingError("count mismatch: " + std::to_string(instructions.size()) +
                                   " style instructions for " +
                                   std::to_string(renderables.size()) +
                                   " renderable elements",
                               extra.line, extra.column);
        }
        cursor += consumed_by(renderables, cursor, instructions[i]);
    }
    if (cursor < renderables.size()) {
        int line = instructions.empty() ? 1 : instructions.back().line;
        int column = instructions.empty() ? 1 : instructions.back().column;
        throw BindingError("count mismatch: " + std::to_string(instructions.size()) +
                               " style instructions for " +
                               std::to_string(renderables.size()) + " renderable elements",
                           line, column);
    }

    BindingPlan plan;
    cursor = 0;
    for (std::size_t i = 0; i < instructions.size(); i++) {
        const StyleInstruction& instruction = instructions[i];
        const ElementDecl& element = renderables[cursor];

        auto name = element_name(element);
        if (!name || *name != instruction.element_name) {
            throw BindingError("name mismatch at position " + std::to_string(i + 1) +
                                   ": instruction names '" + instruction.element_name +
                                   "' but the schema element is '" +
                                   name.value_or("(anonymous)") + "'",
                               instruction.line, instruction.column);
        }
        check_compatibility(element, instruction);

        std::size_t consumed = consumed_by(renderables, cursor, instruction);
        cursor += consumed;

        if (instruction.tag == TagName::null) {
            plan.suppressed.push_back(*name);
            continue;
        }

        ControlBinding binding;
        binding.element = element;
        binding.instruction = instruction;
        binding.validator_needed = validator_needed_for(element, instruction.tag);
        if (is_list_tag(instruction.tag)) {
            binding.child_items = element.complex().children;
            plan.absorbed += consumed - 1;
        }
        plan.bindings.push_back(std::move(binding));
    }
    return plan;
}

} // namespace formgen
