#pragma once

#include <map>
#include <string>
#include <vector>

#include "nilcohom/input.hpp"

namespace nilcohom {

/// Expected results frozen per entry; the catalog self-test recomputes all
/// of them through the full pipeline and demands exact agreement.
struct CatalogExpected {
    std::vector<int> betti;
    std::map<std::pair<int, int>, int> hodge;  // selected h^{p,q}
    bool integrable = true;
    bool abelian_cs = false;
    bool bi_invariant = false;
    int nilpotency_class = 1;
    bool derham_formal = false;
    bool dolbeault_formal = false;
    bool zero_star_formal = false;
    bool ddbar_overall = false;
};

struct CatalogEntry {
    std::string name;
    InputDocument input;
    CatalogExpected expected;
};

/// torus_c1, torus_c2, kodaira_thurston, iwasawa.
std::vector<std::string> catalog_names();

/// Throws UnknownEntry.
CatalogEntry catalog_entry(const std::string& name);

}  // namespace nilcohom
