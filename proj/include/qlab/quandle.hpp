#pragma once

#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "qlab/finite_group.hpp"

namespace qlab {

// Finite quandle on elements 0..n-1 given by its operation table, together with
// the inverse operation: inv_op(a, b) is the unique c with c * b = a.
struct Quandle {
    int n = 0;
    std::vector<int> op_;
    std::vector<int> inv_op_;
    bool idempotent = true;  // false: rack satisfying only right-invertibility + self-distributivity
    std::string name;
    std::vector<std::string> labels;

    int op(int a, int b) const { return op_[a * n + b]; }
    int inv_op(int a, int b) const { return inv_op_[a * n + b]; }
    const std::string& label(int a) const { return labels[a]; }
};

struct AxiomViolation {
    int axiom = 0;  // 1, 2 or 3
    std::array<int, 3> witness{-1, -1, -1};
    std::string describe() const;
};

struct QuandleError : std::runtime_error {
    AxiomViolation violation;
    explicit QuandleError(AxiomViolation v) : std::runtime_error(v.describe()), violation(v) {}
};

// First violated axiom with a witnessing tuple, scanning I, then II, then III.
std::optional<AxiomViolation> check_quandle_axioms(const std::vector<std::vector<int>>& table,
                                                   bool allow_rack = false);

// Validates the table and derives the inverse operation; with allow_rack, tables
// failing only idempotence are accepted and flagged.
Quandle verify_quandle(const std::vector<std::vector<int>>& table, bool allow_rack = false);

Quandle trivial_quandle(int n);
Quandle dihedral_quandle(int n);  // i*j = 2j - i mod n
Quandle s4_quandle();             // rotations of the faces of a tetrahedron under conjugation

// Z_n[T, T^-1]/(h(T)) with a*b = Ta + (1-T)b; h given by ascending coefficients.
// Leading and terminal coefficients must be invertible mod n.
Quandle alexander_quandle(long long n, const std::vector<long long>& h);

// a*b = b^-k a b^k
Quandle conjugation_quandle(const FiniteGroup& g, int k);

struct QuandleHom {
    Quandle source, target;
    std::vector<int> map;

    int operator()(int a) const { return map[a]; }
};

bool is_hom(const Quandle& x, const Quandle& y, const std::vector<int>& map);
std::vector<QuandleHom> find_homs(const Quandle& x, const Quandle& y);
std::optional<QuandleHom> is_isomorphic(const Quandle& x, const Quandle& y);

}  // namespace qlab
