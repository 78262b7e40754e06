#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "regclass/permgroup.hpp"

namespace regclass {

enum class Family { Cyclic, Dihedral, Frobenius, Sym, Alt, Psl2, Pgl2, Pgammal2, Sl2, Psl3WithDuality, Sp4 };

std::string family_name(Family f);

struct CatalogEntry {
    std::string id;  // e.g. "psl2(16)", "frobenius(17,4)"
    Family family;
    std::vector<unsigned> params;
    std::uint64_t order = 0;  // closed-form order for the family
    std::size_t degree = 0;
    bool simple = false;
    // True when the conjugators together with the group induce all of Aut(S).
    bool aut_complete = false;
    // Shared by isomorphic simple entries so sweeps over simple groups count each once.
    std::string iso_label;
    // Order of the nonabelian composition factor, 0 for solvable groups.
    std::uint64_t nonabelian_factor = 0;
    std::string out_action;
    // Solvable Frobenius group C_p : C_d with d^2 = p - 1.
    bool is_sqrt_frobenius() const;
};

struct BuiltGroup {
    PermGroup group;
    std::vector<Perm> aut_conjugators;
};

// Default verification corpus; extended adds the large groups reachable only with
// the extended enumeration cap.
std::vector<CatalogEntry> catalog(bool extended = false);

// Parses ids such as "alt(6)" or "frobenius(37,6)"; throws std::invalid_argument
// for unknown families or unsupported parameters.
CatalogEntry parse_entry(const std::string& id);

// Constructs the group and its ambient conjugators. Verifies the order against the
// family formula and that every conjugator normalizes the group.
BuiltGroup build(const CatalogEntry& entry);

}  // namespace regclass
