#include "formgen/schema_ast.hpp"

#include "formgen/errors.hpp"

namespace formgen {

const char* primitive_name(PrimitiveDataType type) {
    switch (type) {
    case PrimitiveDataType::string: return "string";
    case PrimitiveDataType::integer: return "integer";
    case PrimitiveDataType::positiveInteger: return "positiveInteger";
    case PrimitiveDataType::boolean: return "boolean";
    case PrimitiveDataType::decimal: return "decimal";
    case PrimitiveDataType::dateTime: return "dateTime";
    }
    return "?";
}

std::optional<PrimitiveDataType> primitive_from_qualified(const std::string& text) {
    if (text.rfind("xs:", 0) != 0)
        return std::nullopt;
    const std::string name = text.substr(3);
    if (name == "string") return PrimitiveDataType::string;
    if (name == "integer") return PrimitiveDataType::integer;
    if (name == "positiveInteger") return PrimitiveDataType::positiveInteger;
    if (name == "boolean") return PrimitiveDataType::boolean;
    if (name == "decimal") return PrimitiveDataType::decimal;
    if (name == "dateTime") return PrimitiveDataType::dateTime;
    return std::nullopt;
}

const char* facet_name(FacetKind kind) {
    switch (kind) {
    case FacetKind::length: return "length";
    case FacetKind::minLength: return "minLength";
    case FacetKind::maxLength: return "maxLength";
    case FacetKind::pattern: return "pattern";
    case FacetKind::enumeration: return "enumeration";
    case FacetKind::totalDigits: return "totalDigits";
    case FacetKind::fractionDigits: return "fractionDigits";
    }
    return "?";
}

std::optional<FacetKind> facet_from_name(const std::string& name) {
    if (name == "length") return FacetKind::length;
    if (name == "minLength") return FacetKind::minLength;
    if (name == "maxLength") return FacetKind::maxLength;
    if (name == "pattern") return FacetKind::pattern;
    if (name == "enumeration") return FacetKind::enumeration;
    if (name == "totalDigits") return FacetKind::totalDigits;
    if (name == "fractionDigits") return FacetKind::fractionDigits;
    return std::nullopt;
}

bool facet_is_numeric(FacetKind kind) {
    switch (kind) {
    case FacetKind::length:
    case FacetKind::minLength:
    case FacetKind::maxLength:
    case FacetKind::totalDigits:
    case FacetKind::fractionDigits:
        return true;
    case FacetKind::pattern:
    case FacetKind::enumeration:
        return false;
    }
    return false;
}

bool facet_is_repeatable(FacetKind kind) {
    return kind == FacetKind::enumeration;
}

std::optional<std::string> element_name(const ElementDecl& element) {
    if (element.is_simple())
        return element.simple().name;
    if (element.is_derived())
        return element.derived().name;
    return element.complex().name;
}

std::optional<std::string> element_default(const ElementDecl& element) {
    if (element.is_simple())
        return element.simple().default_value;
    return std::nullopt;
}

bool facet_applicable(FacetKind kind, PrimitiveDataType base) {
    switch (kind) {
    case FacetKind::length:
    case FacetKind::minLength:
    case FacetKind::maxLength:
    case FacetKind::pattern:
    case FacetKind::enumeration:
        return true;
    case FacetKind::totalDigits:
        return base == PrimitiveDataType::integer ||
               base == PrimitiveDataType::positiveInteger ||
               base == PrimitiveDataType::decimal;
    case FacetKind::fractionDigits:
        return base == PrimitiveDataType::decimal;
    }
    return false;
}

void check_facet_applicability(const DerivedElement& element) {
    for (const Facet& facet : element.facets) {
        if (!facet_applicable(facet.kind, element.base)) {
            std::string msg = "facet '";
            msg += facet_name(facet.kind);
            msg += "' is not applicable to base type '";
            msg += primitive_name(element.base);
            msg += "' (element '";
            msg += element.name;
            msg += "')";
            throw SemanticError(msg, facet.line, facet.column);
        }
    }
}

namespace {

void flatten_into(const ElementDecl& element, std::vector<ElementDecl>& out) {
    if (element.is_complex()) {
        const ComplexElement& complex = element.complex();
        if (complex.name)
            out.push_back(element);
        for (const ElementDecl& child : complex.children)
            flatten_into(child, out);
    } else {
        out.push_back(element);
    }
}

} // namespace

std::vector<ElementDecl> flatten_renderables(const SchemaDocument& doc) {
    std::vector<ElementDecl> out;
    for (const ElementDecl& root : doc.roots)
        flatten_into(root, out);
    return out;
}

std::size_t renderable_descendant_count(const ElementDecl& element) {
    if (!element.is_complex())
        return 0;
    std::size_t count = 0;
    for (const ElementDecl& child : element.complex().children) {
        if (child.is_complex()) {
            if (child.complex().name)
                count++;
            count += renderable_descendant_count(child);
        } else {
            count++;
        }
    }
    return count;
}

} // namespace formgen
