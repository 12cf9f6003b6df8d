#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <optional>
#include <vector>

namespace qlab {

using Int = boost::multiprecision::cpp_int;

// Dense matrix over Z, row-major, exact arithmetic throughout.
struct IntMatrix {
    int rows = 0, cols = 0;
    std::vector<Int> a;

    IntMatrix() = default;
    IntMatrix(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c) {}

    Int& at(int i, int j) { return a[static_cast<size_t>(i) * cols + j]; }
    const Int& at(int i, int j) const { return a[static_cast<size_t>(i) * cols + j]; }

    static IntMatrix identity(int n);
    IntMatrix transposed() const;
    bool is_zero() const;
    bool is_diagonal() const;
    std::vector<Int> column(int j) const;
    void set_column(int j, const std::vector<Int>& v);

    bool operator==(const IntMatrix&) const = default;
};

IntMatrix mul(const IntMatrix& a, const IntMatrix& b);
std::vector<Int> mul(const IntMatrix& a, const std::vector<Int>& x);
IntMatrix hcat(const IntMatrix& a, const IntMatrix& b);
IntMatrix vcat(const IntMatrix& a, const IntMatrix& b);

// u * m * v = d with u, v unimodular and d diagonal, d1 | d2 | ... >= 0.
// Pivoting: minimal absolute value, ties broken by (row, col).
struct SmithForm {
    IntMatrix u, d, v, u_inv, v_inv;
    int rank() const;
    std::vector<Int> diagonal() const;
};
SmithForm smith_normal_form(const IntMatrix& m);

// Basis (columns) of { x in Z^cols : m x = 0 }.
IntMatrix integer_kernel(const IntMatrix& m);

// One solution of m x = b over Z, if any.
std::optional<std::vector<Int>> solve_integer(const IntMatrix& m, const std::vector<Int>& b);

// Column-style Hermite form of the lattice spanned by the columns: one pivot per
// column at strictly increasing rows, pivots positive, entries to the left of a
// pivot reduced into [0, pivot). Zero columns dropped.
IntMatrix column_hermite(const IntMatrix& m);

// Canonical representative of v modulo the lattice spanned by the columns of h,
// where h is in column-hermite form.
std::vector<Int> reduce_mod_lattice(std::vector<Int> v, const IntMatrix& h);

// Structure of span(gens)/span(rels) as an abelian group. Columns of gens must be
// independent and the relation lattice contained in their span. Orders come out
// in a divisor chain with 0 meaning an infinite cyclic summand; generators holds
// one column per order != 1, reduced modulo the relation lattice.
struct QuotientStructure {
    std::vector<Int> orders;
    IntMatrix generators;
};
QuotientStructure lattice_quotient(const IntMatrix& gens, const IntMatrix& rels);

// Same quotient for subgroups of (Z_m)^n given by generator columns; the lift
// through Z happens internally, entries of the output are reduced into [0, m).
QuotientStructure quotient_mod(const IntMatrix& gens, const IntMatrix& rels, long long modulus);

// Howell normal form of the row span of m over Z_m: echelon rows with pivots
// dividing the modulus, entries above a pivot reduced below it, and the span
// property that makes canonical reduction complete over Z_m.
IntMatrix howell_form(const IntMatrix& m, long long modulus);

// Generators (columns) of { x in (Z_m)^cols : m x = 0 mod modulus }.
IntMatrix kernel_mod(const IntMatrix& m, long long modulus);

// One solution of m x = b mod modulus, if any.
std::optional<std::vector<long long>> solve_mod(const IntMatrix& m, const std::vector<long long>& b,
                                                long long modulus);

}  // namespace qlab
