#pragma once

#include <string>
#include <vector>

namespace qlab {

// Finite group given by its multiplication table.
struct FiniteGroup {
    int order = 0;
    std::vector<int> table;  // order*order, table[a*order+b] = a.b
    int identity = 0;
    std::vector<int> inverse;
    std::string name;

    int op(int a, int b) const { return table[a * order + b]; }
    int inv(int a) const { return inverse[a]; }
    int conj(int a, int b, int k) const;  // b^-k a b^k
};

// Exhaustive check of closure, associativity, identity and inverses.
bool verify_group(const std::vector<int>& table);
bool verify_group(const FiniteGroup& g);

// Validates the table and fills in identity/inverses; throws on failure.
FiniteGroup make_group(const std::vector<int>& table, std::string name = "");

FiniteGroup cyclic_group(int n);
FiniteGroup symmetric_group(int n);  // permutations of n letters, composition order: (p.q)(x) = p(q(x))
FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b);

}  // namespace qlab
