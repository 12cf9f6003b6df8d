#pragma once

#include <vector>

#include "qlab/cochain.hpp"
#include "qlab/group_ring.hpp"
#include "qlab/quandle.hpp"

namespace qlab {

// Braid word on m strands; letters are signed generator indices, +i / -i for
// sigma_i / sigma_i^-1 with 1 <= i <= m-1. The empty word closes to the
// m-component unlink.
struct BraidWord {
    int strands = 1;
    std::vector<int> letters;
};

void validate_braid(const BraidWord& b);

// Top-to-bottom coloring transport: sigma_i sends positions (a, b) to
// (b, a*b), its inverse sends (a, b) to (b inv* a, a).
std::vector<int> propagate(const BraidWord& b, const Quandle& x, std::vector<int> top);

// All tuples fixed by the full propagation (colorings of the closure).
std::vector<std::vector<int>> colorings(const BraidWord& b, const Quandle& x);
long long coloring_count(const BraidWord& b, const Quandle& x);

// Cocycle state-sum of the braid closure; phi must be a degree-2 quandle
// cocycle, whose coefficient group fixes the output's exponent arithmetic.
GroupRingElement state_sum(const BraidWord& b, const Quandle& x, const Cochain& phi);

struct LinkingInfo {
    int components = 0;
    std::vector<int> strand_component;           // strand index -> component index
    std::vector<std::vector<long long>> lk;      // symmetric, zero diagonal
    long long total() const;                     // sum over unordered pairs
};

// Components from the cycle decomposition of the underlying permutation;
// lk(i, j) = half the signed count of letters crossing components i and j.
LinkingInfo linking_matrix(const BraidWord& b);

// Closed forms over trivial quandles: weights w is a k x k matrix (row = color
// of the under strand, column = color of the over strand).
GroupRingElement oracle_Tk(const LinkingInfo& l, int k, const std::vector<std::vector<long long>>& w);
GroupRingElement oracle_T2(const LinkingInfo& l);

// Dihedral four-element closed form for phi = lambda1^u lambda2^v; requires all
// pairwise linking numbers even.
GroupRingElement oracle_R4(const LinkingInfo& l, long long u, long long v);

}  // namespace qlab
