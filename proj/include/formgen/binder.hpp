#pragma once

#include "formgen/schema_ast.hpp"
#include "formgen/stylesheet.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace formgen {

/// One renderable schema element paired with the style instruction that
/// formats it. For ol/ul bindings the bound complex element's direct
/// children are carried along as the list items.
struct ControlBinding {
    ElementDecl element;
    StyleInstruction instruction;
    bool validator_needed = false;
    std::vector<ElementDecl> child_items; // populated for ol/ul only
};

struct BindingPlan {
    std::vector<ControlBinding> bindings;   // stylesheet order
    std::vector<std::string> suppressed;    // names bound to tag null
    std::size_t absorbed = 0;               // renderables consumed as ol/ul subtree items
};

/// Verify that `instruction` may format `element` (names already match):
///   - select needs a derived element with at least one enumeration facet;
///   - ol/ul need a complex element;
///   - a needs a fixed attribute;
///   - h1..h6 and label need a default attribute;
///   - null is compatible with everything.
/// Throws BindingError with a one-line reason.
void check_compatibility(const ElementDecl& element, const StyleInstruction& instruction);

/// Match instructions one-to-one, in order, against the schema's renderable
/// elements. An ol/ul instruction consumes the bound complex element's whole
/// subtree; null-tagged elements are recorded as suppressed. Throws
/// BindingError on a count mismatch, a name mismatch, or an incompatible
/// pairing.
BindingPlan bind(const SchemaDocument& doc, const std::vector<StyleInstruction>& instructions);

} // namespace formgen
