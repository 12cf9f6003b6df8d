#include "qlab/cochain.hpp"

#include <stdexcept>

namespace qlab {

long long tuple_rank(std::span<const int> t, int n) {
    long long r = 0;
    for (int x : t) r = r * n + x;
    return r;
}

std::vector<int> tuple_unrank(long long rank, int n, int degree) {
    std::vector<int> t(degree);
    for (int i = degree - 1; i >= 0; --i) {
        t[i] = static_cast<int>(rank % n);
        rank /= n;
    }
    return t;
}

bool tuple_degenerate(std::span<const int> t) {
    for (size_t i = 0; i + 1 < t.size(); ++i)
        if (t[i] == t[i + 1]) return true;
    return false;
}

static long long pow_ll(int n, int k) {
    long long p = 1;
    for (int i = 0; i < k; ++i) {
        p *= n;
        if (p > (1LL << 40)) throw std::invalid_argument("tuple basis too large");
    }
    return p;
}

TupleBasis tuple_basis(const Quandle& x, int degree, Theory theory) {
    if (degree < 0) throw std::invalid_argument("tuple_basis: degree must be >= 0");
    TupleBasis b;
    b.n = x.n;
    b.degree = degree;
    b.theory = theory;
    long long total = pow_ll(x.n, degree);
    b.index_of.assign(total, -1);
    for (long long r = 0; r < total; ++r) {
        std::vector<int> t = tuple_unrank(r, x.n, degree);
        bool deg = tuple_degenerate(t);
        bool keep = theory == Theory::R || (theory == Theory::D ? deg : !deg);
        if (keep) {
            b.index_of[r] = static_cast<int>(b.tuples.size());
            b.tuples.push_back(static_cast<int>(r));
        }
    }
    return b;
}

bool Cochain::vanishes_on_degenerate() const {
    for (long long r = 0; r < static_cast<long long>(values.size()); ++r)
        if (values[r] != 0 && tuple_degenerate(tuple_unrank(r, n, degree))) return false;
    return true;
}

void Cochain::reduce() {
    for (auto& v : values) v = coeff.reduce(v);
}

Cochain zero_cochain(const Quandle& x, int degree, Coefficients a, bool quandle_flag) {
    Cochain c;
    c.degree = degree;
    c.coeff = a;
    c.quandle_flag = quandle_flag;
    c.n = x.n;
    c.values.assign(pow_ll(x.n, degree), 0);
    return c;
}

Cochain chi(const Quandle& x, const std::vector<int>& tuple, Coefficients a) {
    for (int v : tuple)
        if (v < 0 || v >= x.n) throw std::invalid_argument("chi: tuple entry out of range");
    Cochain c = zero_cochain(x, static_cast<int>(tuple.size()), a,
                             !tuple_degenerate(std::span<const int>(tuple)));
    c.values[tuple_rank(std::span<const int>(tuple), x.n)] = 1;
    return c;
}

Cochain cochain_add(const Cochain& a, const Cochain& b) {
    if (a.n != b.n || a.degree != b.degree || !(a.coeff == b.coeff))
        throw std::invalid_argument("cochain_add: incompatible cochains");
    Cochain c = a;
    c.quandle_flag = a.quandle_flag && b.quandle_flag;
    for (size_t i = 0; i < c.values.size(); ++i) c.values[i] = c.coeff.reduce(c.values[i] + b.values[i]);
    return c;
}

Cochain cochain_scale(long long s, const Cochain& a) {
    Cochain c = a;
    for (auto& v : c.values) v = c.coeff.reduce(s * v);
    return c;
}

Cochain pullback_cocycle(const QuandleHom& h, const Cochain& f) {
    if (h.target.n != f.n) throw std::invalid_argument("pullback_cocycle: cochain not on hom target");
    Cochain c = zero_cochain(h.source, f.degree, f.coeff, f.quandle_flag);
    long long total = static_cast<long long>(c.values.size());
    std::vector<int> mapped(f.degree);
    for (long long r = 0; r < total; ++r) {
        std::vector<int> t = tuple_unrank(r, h.source.n, f.degree);
        for (int i = 0; i < f.degree; ++i) mapped[i] = h.map[t[i]];
        c.values[r] = f.eval(mapped);
    }
    c.quandle_flag = c.quandle_flag && c.vanishes_on_degenerate();
    return c;
}

}  // namespace qlab
