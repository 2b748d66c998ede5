#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "bigeo/design.hpp"

namespace bigeo {

struct CatalogEntry {
  std::string name;
  Design design;
  DesignParams params;
  std::string source;
};

// Names in catalog order.
std::vector<std::string> catalog_names();

// Throws PreconditionError naming the available entries for an unknown name.
const CatalogEntry& get_design(std::string_view name);

// Symmetric (n, k, 2) and (n, k, 3) designs known to exist, ascending in n.
const std::vector<SymmetricParams>& known_biplanes();
const std::vector<SymmetricParams>& known_triplanes();

}  // namespace bigeo
