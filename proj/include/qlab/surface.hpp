#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qlab/braid.hpp"

namespace qlab {

// Evaluation in x of the free-quandle automorphism induced by the braid word:
// letters act right to left; sigma_i sends (c_i, c_{i+1}) to
// (c_{i+1} inv* c_i, c_i) and its inverse sends them to (c_{i+1}, c_i * c_{i+1}).
std::vector<int> surface_tuple_action(const BraidWord& b, const Quandle& x, std::vector<int> tuple);

struct BranchRelation {
    BraidWord w;
    int k = 1;    // 1-based, identifies the relation w(x_k) = w(x_{k+1})
    int eps = 1;  // sign of the branch point
};

struct WhiteVertex {
    BraidWord beta;
    int i = 1;    // 1-based base index: the triple sits at positions (i, i+1, i+2)
    int eps = 1;
};

struct SurfaceBraidPresentation {
    int degree = 1;
    std::vector<BranchRelation> relations;
    std::vector<WhiteVertex> white_vertices;
};

void validate_presentation(const SurfaceBraidPresentation& p);

// Tuples satisfying every branch relation.
std::vector<std::vector<int>> colorings_of_presentation(const SurfaceBraidPresentation& p,
                                                        const Quandle& x);

// Triple-point state-sum: per coloring, the product over white vertices of
// theta on the acted triple, signed by the vertex. theta must be a degree-3
// quandle cocycle.
GroupRingElement surface_state_sum(const SurfaceBraidPresentation& p, const Quandle& x,
                                   const Cochain& theta);

SurfaceBraidPresentation twist_spun_trefoil_preset();
SurfaceBraidPresentation twist_spun_trefoil_reversed_preset();
std::optional<SurfaceBraidPresentation> preset_by_name(const std::string& name);
std::vector<std::string> preset_names();

// Closed forms of the two presets: sums of six-factor theta products over the
// pairs (y1, y2) with (y1*y2)*y1 = y2 and (y2*y1)*y1 = y2.
bool twist_spun_pair_admissible(const Quandle& x, int y1, int y2);
long long twist_spun_pair_exponent(const Quandle& x, const Cochain& theta, int y1, int y2);
long long twist_spun_reversed_pair_exponent(const Quandle& x, const Cochain& theta, int y1, int y2);
GroupRingElement twist_spun_trefoil_closed_form(const Quandle& x, const Cochain& theta);
GroupRingElement twist_spun_trefoil_reversed_closed_form(const Quandle& x, const Cochain& theta);

// Signed triple-point counts T(i, j, k) of a linked surface, stored for triples
// with i != j and j != k; components are 1-based.
struct TripleLinkingData {
    int components = 0;
    std::map<std::array<int, 3>, long long> counts;

    long long value(int i, int j, int k) const;
    void set(int i, int j, int k, long long v);
};

// T(i,j,i) = 0 and T(i,j,k) - T(i,k,j) + T(k,i,j) = 0 for distinct i, j, k.
bool validate_triple_linking(const TripleLinkingData& t);

// For three components: extracts (a, b) with T(1,2,3) = a = -T(3,2,1),
// T(3,1,2) = b = -T(2,1,3), T(2,3,1) = -(a+b) = -T(1,3,2).
std::optional<std::pair<long long, long long>> solve_ab(const TripleLinkingData& t);

// t^a + t^-a + t^b + t^-b + t^(a+b) + t^-(a+b) + 21 over Z.
GroupRingElement three_component_oracle(long long a, long long b);

}  // namespace qlab
