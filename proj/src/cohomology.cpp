#include "qlab/cohomology.hpp"

#include <array>
#include <limits>
#include <stdexcept>

namespace qlab {

namespace {

long long to_ll(const Int& x) {
    if (x > std::numeric_limits<long long>::max() / 4 || x < std::numeric_limits<long long>::min() / 4)
        throw std::overflow_error("cohomology: coefficient exceeds 64-bit range");
    return x.convert_to<long long>();
}

struct BoundaryTerms {
    // signed faces of a k-tuple: (sign, face tuple)
    std::vector<std::pair<int, std::vector<int>>> terms;
};

BoundaryTerms boundary_of_tuple(const Quandle& x, const std::vector<int>& t) {
    BoundaryTerms out;
    int k = static_cast<int>(t.size());
    for (int i = 2; i <= k; ++i) {
        int sign = (i % 2 == 0) ? 1 : -1;
        std::vector<int> drop, star;
        drop.reserve(k - 1);
        star.reserve(k - 1);
        for (int j = 0; j < k; ++j)
            if (j != i - 1) drop.push_back(t[j]);
        for (int j = 0; j < i - 1; ++j) star.push_back(x.op(t[j], t[i - 1]));
        for (int j = i; j < k; ++j) star.push_back(t[j]);
        out.terms.emplace_back(sign, std::move(drop));
        out.terms.emplace_back(-sign, std::move(star));
    }
    return out;
}

}  // namespace

IntMatrix boundary_matrix(const Quandle& x, int k, Theory theory) {
    if (k < 1) throw std::invalid_argument("boundary_matrix: degree must be >= 1");
    TupleBasis bk = tuple_basis(x, k, theory);
    TupleBasis bkm1 = tuple_basis(x, k - 1, theory);
    IntMatrix m(bkm1.size(), bk.size());
    if (k <= 1) return m;
    for (int c = 0; c < bk.size(); ++c) {
        std::vector<int> t = tuple_unrank(bk.tuples[c], x.n, k);
        for (const auto& [sign, face] : boundary_of_tuple(x, t).terms) {
            int idx = bkm1.index_of[tuple_rank(face, x.n)];
            if (idx >= 0) m.at(idx, c) += sign;
        }
    }
    return m;
}

IntMatrix delta_matrix(const Quandle& x, int k, Theory theory) {
    return boundary_matrix(x, k + 1, theory).transposed();
}

Cochain coboundary_of(const Cochain& psi, const Quandle& x) {
    if (psi.n != x.n) throw std::invalid_argument("coboundary_of: cochain not on this quandle");
    int k = psi.degree + 1;
    Cochain out = zero_cochain(x, k, psi.coeff, false);
    long long total = static_cast<long long>(out.values.size());
    for (long long r = 0; r < total; ++r) {
        std::vector<int> t = tuple_unrank(r, x.n, k);
        long long s = 0;
        for (const auto& [sign, face] : boundary_of_tuple(x, t).terms) s += sign * psi.eval(face);
        out.values[r] = psi.coeff.reduce(s);
    }
    out.quandle_flag = psi.quandle_flag && out.vanishes_on_degenerate();
    return out;
}

bool is_cocycle(const Cochain& f, const Quandle& x) {
    if (f.n != x.n) throw std::invalid_argument("is_cocycle: cochain not on this quandle");
    if (f.quandle_flag && !f.vanishes_on_degenerate()) return false;
    Cochain d = coboundary_of(f, x);
    for (long long v : d.values)
        if (f.coeff.reduce(v) != 0) return false;
    return true;
}

namespace {

Cochain cochain_from_basis_vector(const Quandle& x, const TupleBasis& basis, Coefficients a,
                                  const std::vector<Int>& col, bool quandle_flag) {
    Cochain c = zero_cochain(x, basis.degree, a, quandle_flag);
    for (int i = 0; i < basis.size(); ++i) c.values[basis.tuples[i]] = a.reduce(to_ll(col[i]));
    c.quandle_flag = quandle_flag && c.vanishes_on_degenerate();
    return c;
}

Cochain cochain_from_dense_vector(const Quandle& x, int degree, Coefficients a,
                                  const std::vector<Int>& col, bool quandle_flag) {
    Cochain c = zero_cochain(x, degree, a, quandle_flag);
    for (size_t i = 0; i < c.values.size(); ++i) c.values[i] = a.reduce(to_ll(col[i]));
    c.quandle_flag = quandle_flag && c.vanishes_on_degenerate();
    return c;
}

// rows selecting the degenerate coordinates of the degree-k R-basis
IntMatrix degenerate_selector(const Quandle& x, int k) {
    TupleBasis br = tuple_basis(x, k, Theory::R);
    TupleBasis bd = tuple_basis(x, k, Theory::D);
    IntMatrix e(bd.size(), br.size());
    for (int i = 0; i < bd.size(); ++i) e.at(i, bd.tuples[i]) = 1;
    return e;
}

CohomologyGroup finish_quotient(const Quandle& x, const TupleBasis& basis, Coefficients a,
                                const QuotientStructure& qs, const IntMatrix& coboundary_gens,
                                bool quandle_flag, bool dense) {
    CohomologyGroup out;
    for (const auto& e : qs.orders) out.orders.push_back(to_ll(e));
    for (int j = 0; j < qs.generators.cols; ++j) {
        std::vector<Int> col = qs.generators.column(j);
        out.representatives.push_back(dense
                                          ? cochain_from_dense_vector(x, basis.degree, a, col, quandle_flag)
                                          : cochain_from_basis_vector(x, basis, a, col, quandle_flag));
    }
    IntMatrix cb;
    if (!a.modulus) {
        cb = column_hermite(coboundary_gens);
    } else {
        cb = howell_form(coboundary_gens.transposed(), *a.modulus).transposed();
    }
    for (int j = 0; j < cb.cols; ++j) {
        std::vector<Int> col = cb.column(j);
        bool nonzero = false;
        for (const auto& v : col) nonzero |= a.reduce(to_ll(v)) != 0;
        if (!nonzero) continue;
        out.coboundaries.push_back(dense ? cochain_from_dense_vector(x, basis.degree, a, col, quandle_flag)
                                         : cochain_from_basis_vector(x, basis, a, col, quandle_flag));
    }
    return out;
}

CohomologyGroup cohomology_hprime(const Quandle& x, int k, Coefficients a) {
    // (P^k ∩ Z_R^k) / (P^k ∩ B_R^k), everything expressed in the full R basis
    IntMatrix dout = delta_matrix(x, k, Theory::R);
    IntMatrix din = delta_matrix(x, k - 1, Theory::R);
    IntMatrix sel = degenerate_selector(x, k);
    IntMatrix constrained = vcat(dout, sel);
    IntMatrix img_deg = mul(sel, din);  // degenerate part of each coboundary
    TupleBasis br = tuple_basis(x, k, Theory::R);
    QuotientStructure qs;
    IntMatrix rels;
    if (!a.modulus) {
        IntMatrix kern = integer_kernel(constrained);
        IntMatrix nn = integer_kernel(img_deg);
        rels = mul(din, nn);
        qs = lattice_quotient(kern, rels);
    } else {
        IntMatrix kern = kernel_mod(constrained, *a.modulus);
        IntMatrix nn = kernel_mod(img_deg, *a.modulus);
        rels = mul(din, nn);
        qs = quotient_mod(kern, rels, *a.modulus);
    }
    return finish_quotient(x, br, a, qs, rels, true, true);
}

}  // namespace

CohomologyGroup cohomology(const Quandle& x, int k, Theory theory, Coefficients a, bool hprime) {
    if (k < 1) throw std::invalid_argument("cohomology: degree must be >= 1");
    if (hprime) {
        if (theory != Theory::Q) throw std::invalid_argument("cohomology: hprime variant needs theory Q");
        return cohomology_hprime(x, k, a);
    }
    IntMatrix dout = delta_matrix(x, k, theory);
    IntMatrix din = delta_matrix(x, k - 1, theory);
    TupleBasis bk = tuple_basis(x, k, theory);
    QuotientStructure qs;
    if (!a.modulus) {
        qs = lattice_quotient(integer_kernel(dout), din);
    } else {
        qs = quotient_mod(kernel_mod(dout, *a.modulus), din, *a.modulus);
    }
    return finish_quotient(x, bk, a, qs, din, theory == Theory::Q, false);
}

std::optional<Cochain> coboundary_witness(const Cochain& f, const Quandle& x) {
    if (f.n != x.n) throw std::invalid_argument("coboundary_witness: cochain not on this quandle");
    int k = f.degree;
    if (k < 1) return std::nullopt;
    Theory th = f.quandle_flag ? Theory::Q : Theory::R;
    if (f.quandle_flag && !f.vanishes_on_degenerate()) return std::nullopt;
    IntMatrix din = delta_matrix(x, k - 1, th);
    TupleBasis bk = tuple_basis(x, k, th);
    TupleBasis bkm1 = tuple_basis(x, k - 1, th);
    if (!f.coeff.modulus) {
        std::vector<Int> b(bk.size());
        for (int i = 0; i < bk.size(); ++i) b[i] = f.values[bk.tuples[i]];
        auto g = solve_integer(din, b);
        if (!g) return std::nullopt;
        return cochain_from_basis_vector(x, bkm1, f.coeff, *g, f.quandle_flag);
    }
    std::vector<long long> b(bk.size());
    for (int i = 0; i < bk.size(); ++i) b[i] = f.values[bk.tuples[i]];
    auto g = solve_mod(din, b, *f.coeff.modulus);
    if (!g) return std::nullopt;
    std::vector<Int> gi(g->begin(), g->end());
    return cochain_from_basis_vector(x, bkm1, f.coeff, gi, f.quandle_flag);
}

std::vector<QuandleHom> evaluation_homs(long long n, const std::vector<long long>& h) {
    if (n < 2) throw std::invalid_argument("evaluation_homs: modulus must be >= 2");
    Quandle src = alexander_quandle(n, h);
    long long h1 = 0, hm1 = 0, sign = 1;
    for (size_t i = 0; i < h.size(); ++i) {
        h1 += h[i];
        hm1 += sign * h[i];
        sign = -sign;
    }
    std::vector<QuandleHom> out;
    auto digits_eval = [&](int idx, long long t_value) {
        long long v = 0, p = 1, r = idx;
        while (r > 0) {
            v += (r % n) * p;
            r /= n;
            p = p * t_value;
        }
        return ((v % n) + n) % n;
    };
    if (((h1 % n) + n) % n == 0) {
        QuandleHom p{src, trivial_quandle(static_cast<int>(n)), {}};
        p.map.resize(src.n);
        for (int e = 0; e < src.n; ++e) p.map[e] = static_cast<int>(digits_eval(e, 1));
        if (!is_hom(p.source, p.target, p.map))
            throw std::logic_error("evaluation_homs: T->1 map is not a homomorphism");
        out.push_back(std::move(p));
    }
    if (((hm1 % n) + n) % n == 0) {
        QuandleHom q{src, dihedral_quandle(static_cast<int>(n)), {}};
        q.map.resize(src.n);
        for (int e = 0; e < src.n; ++e) q.map[e] = static_cast<int>(digits_eval(e, -1));
        if (!is_hom(q.source, q.target, q.map))
            throw std::logic_error("evaluation_homs: T->-1 map is not a homomorphism");
        out.push_back(std::move(q));
    }
    return out;
}

bool is_group_2cocycle(const FiniteGroup& g, const std::vector<long long>& alpha, Coefficients a) {
    if (static_cast<int>(alpha.size()) != g.order * g.order)
        throw std::invalid_argument("is_group_2cocycle: alpha must have |G|^2 entries");
    auto al = [&](int x, int y) { return alpha[x * g.order + y]; };
    for (int x = 0; x < g.order; ++x)
        for (int y = 0; y < g.order; ++y)
            for (int z = 0; z < g.order; ++z)
                if (a.reduce(al(x, y) + al(g.op(x, y), z) - al(x, g.op(y, z)) - al(y, z)) != 0)
                    return false;
    return true;
}

Cochain quandle_cocycle_from_group_cocycle(const FiniteGroup& g, const std::vector<long long>& alpha,
                                           Coefficients a) {
    if (!is_group_2cocycle(g, alpha, a))
        throw std::invalid_argument("quandle_cocycle_from_group_cocycle: not a group 2-cocycle");
    Quandle q = conjugation_quandle(g, 1);
    Cochain c = zero_cochain(q, 2, a, true);
    auto al = [&](int x, int y) { return alpha[x * g.order + y]; };
    for (int p = 0; p < g.order; ++p)
        for (int r = 0; r < g.order; ++r) {
            int conj = g.conj(p, r, 1);
            c.values[tuple_rank(std::array{p, r}, q.n)] = a.reduce(al(p, r) - al(r, conj));
        }
    if (!c.vanishes_on_degenerate())
        throw std::logic_error("quandle_cocycle_from_group_cocycle: diagonal did not vanish");
    return c;
}

}  // namespace qlab
