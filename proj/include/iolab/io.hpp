#pragma once

#include <iosfwd>
#include <string>
#include <variant>

#include "iolab/interval.hpp"
#include "iolab/modular.hpp"
#include "iolab/poset.hpp"

namespace iolab {

// Text formats:
//   poset NAME            graph NAME
//   elements: a b c       elements: a b c
//   a < b                 a -- b
// '#' starts a comment; relation pairs are closed transitively.
using Structure = std::variant<Poset, SimpleGraph>;

Structure read_structure(std::istream& in);
Structure read_structure_file(const std::string& path);

void write_poset(std::ostream& out, const Poset& p, const std::string& name);
void write_graph(std::ostream& out, const SimpleGraph& g, const std::string& name);

std::string amchain_to_json(const Poset& p, const AMChain& c);
std::string representation_to_json(const Poset& p, const IntervalRepresentation& r);
std::string module_tree_to_json(const ModuleTree& t, const Poset* names_from = nullptr);
std::string module_tree_to_dot(const ModuleTree& t);

}  // namespace iolab
