#pragma once

#include <map>

#include "hopfkit/hopf.hpp"

namespace hopfkit {

/// A finite group as a multiplication table over element labels.
struct GroupSpec {
    std::vector<std::string> labels;
    std::vector<std::vector<size_t>> table;  // table[i][j] = index of g_i g_j

    size_t order() const { return labels.size(); }
    size_t identity() const;
    size_t inverse(size_t i) const;
    /// Verifies associativity, identity and inverses; throws InvalidGroupTable.
    void validate() const;

    static GroupSpec cyclic(size_t order);
    static GroupSpec symmetric(size_t degree);  // degree <= 4
    static GroupSpec product(const GroupSpec& a, const GroupSpec& b);
    static GroupSpec from_table(std::vector<std::string> labels,
                                std::vector<std::vector<size_t>> table);

    /// Index of the element with the given label (aliases included).
    size_t element(const std::string& label) const;
    std::map<std::string, size_t> aliases;  // extra names, e.g. "s1" for "(12)"
};

/// The permutations underlying symmetric(degree), in label order: entry g[x]
/// is the image of x under the group element with the same index.
std::vector<std::vector<size_t>> symmetric_permutations(size_t degree);

/// Indices of the Klein four-subgroup {e,(12)(34),(13)(24),(14)(23)} of S4,
/// ordered as the image of Z2+Z2 under (x,y) -> index x*2+y.
std::vector<size_t> klein_four_in_s4(const GroupSpec& s4);

HopfAlgebra group_algebra(const GroupSpec& g, const FieldPtr& f);
HopfAlgebra dual_group_algebra(const GroupSpec& g, const FieldPtr& f);
HopfAlgebra sweedler(const FieldPtr& f);

}  // namespace hopfkit
