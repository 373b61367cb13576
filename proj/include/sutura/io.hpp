#pragma once

#include "sutura/diagram.hpp"
#include "sutura/element.hpp"
#include "sutura/simplicial.hpp"
#include "sutura/stack.hpp"
#include "sutura/surgery.hpp"

#include <json.hpp>

#include <iosfwd>
#include <string>

namespace sutura::io {

using json = nlohmann::ordered_json;

// words print as sign strings, the empty word as "()"
std::string word_text(const Word& w);
Word parse_word(std::string_view s);

json to_json(const Diagram& g);
json to_json(const Element& x);
json to_json(const BypassSystem& sys);
json to_json(const BoundedCategory& c);
json to_json(const Report& r);

Diagram diagram_from_json(const json& j);
Element element_from_json(const json& j);
BypassSystem system_from_json(const json& j);
// morphisms are rebuilt as the reflexive transitive closure of the hasse edges
BoundedCategory category_from_json(const json& j);

std::string render_svg(const Diagram& g);
std::string render_ascii(const Diagram& g);

// decompose memo as lines "<diagram> <word> <word> ..."
void save_decompose_cache(std::ostream& os);
std::size_t load_decompose_cache(std::istream& is);

}  // namespace sutura::io
