#pragma once

#include <optional>

#include "qlab/cochain.hpp"
#include "qlab/int_matrix.hpp"

namespace qlab {

// Matrix of the boundary map C_k -> C_{k-1} in the lexicographic tuple bases of
// the chosen theory; zero for k <= 1. For theory Q, image terms that become
// degenerate are dropped (quotient basis).
IntMatrix boundary_matrix(const Quandle& x, int k, Theory theory);

// Matrix of the coboundary C^k -> C^{k+1}, the transpose action of the boundary.
IntMatrix delta_matrix(const Quandle& x, int k, Theory theory);

struct CohomologyGroup {
    std::vector<long long> orders;  // divisor chain, 0 = infinite cyclic
    std::vector<Cochain> representatives;
    std::vector<Cochain> coboundaries;
};

// ker(delta_k)/im(delta_{k-1}) with coefficients in A; over Z via Smith forms,
// over Z_m via Howell-based kernels. With hprime (theory Q only) computes the
// variant (P^k ∩ Z_R^k)/(P^k ∩ B_R^k) instead.
CohomologyGroup cohomology(const Quandle& x, int k, Theory theory, Coefficients a, bool hprime = false);

// Coboundary of a (k-1)-cochain as a dense k-cochain.
Cochain coboundary_of(const Cochain& psi, const Quandle& x);

// Full cocycle condition (all tuples one degree up), plus degeneracy vanishing
// when the quandle flag is set.
bool is_cocycle(const Cochain& f, const Quandle& x);

// Solves delta g = f; for quandle cochains the witness g also vanishes on
// degenerate tuples. Returns nothing when f is not a coboundary.
std::optional<Cochain> coboundary_witness(const Cochain& f, const Quandle& x);

// The surjections Alex(n;h) -> T_n (T |-> 1, when n | h(1)) and
// Alex(n;h) -> R_n (T |-> -1, when n | h(-1)) that apply.
std::vector<QuandleHom> evaluation_homs(long long n, const std::vector<long long>& h);

// alpha indexed by a*|G|+b, values in A (additive).
bool is_group_2cocycle(const FiniteGroup& g, const std::vector<long long>& alpha, Coefficients a);

// phi(p,q) = alpha(p,q) - alpha(q, q^-1 p q), a quandle 2-cocycle on the
// conjugation quandle of g.
Cochain quandle_cocycle_from_group_cocycle(const FiniteGroup& g, const std::vector<long long>& alpha,
                                           Coefficients a);

}  // namespace qlab
