#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace formgen {

enum class PrimitiveDataType {
    string,
    integer,
    positiveInteger,
    boolean,
    decimal,
    dateTime,
};

const char* primitive_name(PrimitiveDataType type);

/// Parse "xs:string" etc.; empty optional when unknown.
std::optional<PrimitiveDataType> primitive_from_qualified(const std::string& text);

enum class FacetKind {
    length,
    minLength,
    maxLength,
    pattern,
    enumeration,
    totalDigits,
    fractionDigits,
};

const char* facet_name(FacetKind kind);
std::optional<FacetKind> facet_from_name(const std::string& name);

/// True when the facet value must be a non-negative integer.
bool facet_is_numeric(FacetKind kind);

/// True when the facet may appear more than once per restriction
/// (enumeration only).
bool facet_is_repeatable(FacetKind kind);

struct Facet {
    FacetKind kind;
    std::string value;
    int line = 0;
    int column = 0;
};

struct Occurrence {
    int min = 1;
    int max = 1;
};

struct ElementDecl;

/// A leaf element carrying a primitive type and up to two literal attributes.
struct SimpleElement {
    std::string name;
    PrimitiveDataType datatype = PrimitiveDataType::string;
    std::optional<std::string> default_value;
    std::optional<std::string> fixed_value;
};

/// An element whose type narrows a primitive through facets.
struct DerivedElement {
    std::string name;
    PrimitiveDataType base = PrimitiveDataType::string;
    std::vector<Facet> facets; // source order
};

/// A container element. Anonymous containers are legal; they contribute
/// their children but are themselves invisible to flatten_renderables.
struct ComplexElement {
    std::optional<std::string> name;
    Occurrence occurrence;
    std::vector<ElementDecl> children; // source order
};

struct ElementDecl {
    std::variant<SimpleElement, DerivedElement, ComplexElement> node;
    int line = 0;
    int column = 0;

    bool is_simple() const { return std::holds_alternative<SimpleElement>(node); }
    bool is_derived() const { return std::holds_alternative<DerivedElement>(node); }
    bool is_complex() const { return std::holds_alternative<ComplexElement>(node); }

    const SimpleElement& simple() const { return std::get<SimpleElement>(node); }
    const DerivedElement& derived() const { return std::get<DerivedElement>(node); }
    const ComplexElement& complex() const { return std::get<ComplexElement>(node); }
};

/// Name of the element, if it has one (complex elements may not).
std::optional<std::string> element_name(const ElementDecl& element);

/// The default attribute value, if the element kind carries one.
std::optional<std::string> element_default(const ElementDecl& element);

struct SchemaDocument {
    std::vector<ElementDecl> roots;
};

/// True when `kind` may restrict `base`. length, minLength, maxLength,
/// pattern and enumeration apply to every base type; totalDigits to the
/// integral and decimal types; fractionDigits to decimal only.
bool facet_applicable(FacetKind kind, PrimitiveDataType base);

/// Throws SemanticError naming the element, facet kind and base type on the
/// first facet that is not legal for the element's base type.
void check_facet_applicability(const DerivedElement& element);

/// Every named simple and derived element in document order, descending into
/// complex elements. A complex element appears only when it has a name,
/// positioned before its children.
std::vector<ElementDecl> flatten_renderables(const SchemaDocument& doc);

/// Number of entries flatten_renderables would emit for the children of
/// `element` (zero for non-complex elements).
std::size_t renderable_descendant_count(const ElementDecl& element);

} // namespace formgen
