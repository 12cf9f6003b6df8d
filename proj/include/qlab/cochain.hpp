#pragma once

#include <span>
#include <vector>

#include "qlab/group_ring.hpp"
#include "qlab/quandle.hpp"

namespace qlab {

enum class Theory { R, D, Q };

// k-tuples over the quandle in lexicographic order, with x1 the most significant
// digit. Theory R = all tuples, D = tuples with a repeated adjacent entry,
// Q = tuples with all adjacent entries distinct.
struct TupleBasis {
    int n = 0, degree = 0;
    Theory theory = Theory::R;
    std::vector<int> tuples;    // ranks of the basis tuples, ascending
    std::vector<int> index_of;  // rank -> basis index, -1 if absent

    int size() const { return static_cast<int>(tuples.size()); }
};

TupleBasis tuple_basis(const Quandle& x, int degree, Theory theory);

long long tuple_rank(std::span<const int> t, int n);
std::vector<int> tuple_unrank(long long rank, int n, int degree);
bool tuple_degenerate(std::span<const int> t);

// A-valued k-cochain stored densely over all n^k tuples. With quandle_flag the
// values on tuples with a repeated adjacent entry must vanish.
struct Cochain {
    int degree = 0;
    Coefficients coeff;
    bool quandle_flag = true;
    int n = 0;
    std::vector<long long> values;  // size n^degree

    long long eval(std::span<const int> t) const { return values[tuple_rank(t, n)]; }
    long long eval(std::initializer_list<int> t) const { return eval(std::span<const int>(t.begin(), t.size())); }
    bool vanishes_on_degenerate() const;
    void reduce();

    bool operator==(const Cochain&) const = default;
};

Cochain zero_cochain(const Quandle& x, int degree, Coefficients a, bool quandle_flag = true);

// Characteristic cochain of a single tuple; carries the quandle flag only when
// the tuple has no repeated adjacent entry.
Cochain chi(const Quandle& x, const std::vector<int>& tuple, Coefficients a);

Cochain cochain_add(const Cochain& a, const Cochain& b);
Cochain cochain_scale(long long s, const Cochain& a);

// (h#f)(x1..xk) = f(h(x1)..h(xk)) on the source of h.
Cochain pullback_cocycle(const QuandleHom& h, const Cochain& f);

}  // namespace qlab
