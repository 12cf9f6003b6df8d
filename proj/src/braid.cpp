#include "qlab/braid.hpp"

#include <cstdlib>
#include <numeric>
#include <stdexcept>

#include "qlab/cohomology.hpp"
#include "qlab/parallel.hpp"

namespace qlab {

void validate_braid(const BraidWord& b) {
    if (b.strands < 1) throw std::invalid_argument("braid: strand count must be >= 1");
    for (int l : b.letters) {
        int i = std::abs(l);
        if (i < 1 || i >= b.strands) throw std::invalid_argument("braid: generator index out of range");
    }
}

std::vector<int> propagate(const BraidWord& b, const Quandle& x, std::vector<int> top) {
    if (static_cast<int>(top.size()) != b.strands)
        throw std::invalid_argument("propagate: tuple size must match strand count");
    for (int l : b.letters) {
        int i = std::abs(l) - 1;
        int a = top[i], c = top[i + 1];
        if (l > 0) {
            top[i] = c;
            top[i + 1] = x.op(a, c);
        } else {
            top[i] = x.inv_op(c, a);
            top[i + 1] = a;
        }
    }
    return top;
}

namespace {

long long power_ll(int base, int exp) {
    long long p = 1;
    for (int i = 0; i < exp; ++i) {
        p *= base;
        if (p > (1LL << 42)) throw std::invalid_argument("enumeration too large");
    }
    return p;
}

std::vector<int> tuple_of_index(long long idx, int n, int m) {
    std::vector<int> t(m);
    for (int i = m - 1; i >= 0; --i) {
        t[i] = static_cast<int>(idx % n);
        idx /= n;
    }
    return t;
}

}  // namespace

std::vector<std::vector<int>> colorings(const BraidWord& b, const Quandle& x) {
    validate_braid(b);
    long long total = power_ll(x.n, b.strands);
    std::vector<std::vector<std::vector<int>>> found(worker_count());
    int used = parallel_chunks(total, [&](int chunk, long long lo, long long hi) {
        for (long long idx = lo; idx < hi; ++idx) {
            std::vector<int> t = tuple_of_index(idx, x.n, b.strands);
            if (propagate(b, x, t) == t) found[chunk].push_back(std::move(t));
        }
    });
    std::vector<std::vector<int>> out;
    for (int c = 0; c < used; ++c)
        out.insert(out.end(), found[c].begin(), found[c].end());
    return out;
}

long long coloring_count(const BraidWord& b, const Quandle& x) {
    return static_cast<long long>(colorings(b, x).size());
}

GroupRingElement state_sum(const BraidWord& b, const Quandle& x, const Cochain& phi) {
    validate_braid(b);
    if (phi.degree != 2) throw std::invalid_argument("state_sum: a degree-2 cochain is required");
    if (!phi.quandle_flag || !is_cocycle(phi, x))
        throw std::invalid_argument("state_sum: the weight function must be a quandle 2-cocycle");
    long long total = power_ll(x.n, b.strands);
    std::vector<GroupRingElement> acc(worker_count(), GroupRingElement(phi.coeff));
    int used = parallel_chunks(total, [&](int chunk, long long lo, long long hi) {
        for (long long idx = lo; idx < hi; ++idx) {
            std::vector<int> top = tuple_of_index(idx, x.n, b.strands);
            std::vector<int> t = top;
            long long e = 0;
            for (int l : b.letters) {
                int i = std::abs(l) - 1;
                int a = t[i], c = t[i + 1];
                if (l > 0) {
                    e += phi.eval({a, c});
                    t[i] = c;
                    t[i + 1] = x.op(a, c);
                } else {
                    int under = x.inv_op(c, a);
                    e -= phi.eval({under, a});
                    t[i] = under;
                    t[i + 1] = a;
                }
            }
            if (t == top) acc[chunk].add_term(e, 1);
        }
    });
    GroupRingElement out(phi.coeff);
    for (int c = 0; c < used; ++c) out = group_ring_add(out, acc[c]);
    return out;
}

long long LinkingInfo::total() const {
    long long s = 0;
    for (int i = 0; i < components; ++i)
        for (int j = i + 1; j < components; ++j) s += lk[i][j];
    return s;
}

LinkingInfo linking_matrix(const BraidWord& b) {
    validate_braid(b);
    int m = b.strands;
    // occupant[p] = strand currently at position p
    std::vector<int> occ(m);
    std::iota(occ.begin(), occ.end(), 0);
    std::vector<std::vector<long long>> signed_count(m, std::vector<long long>(m, 0));
    for (int l : b.letters) {
        int i = std::abs(l) - 1;
        int u = occ[i], v = occ[i + 1];
        signed_count[u][v] += l > 0 ? 1 : -1;
        signed_count[v][u] += l > 0 ? 1 : -1;
        std::swap(occ[i], occ[i + 1]);
    }
    // closure: strand s continues as the strand that started where s ended
    std::vector<int> next(m);
    for (int p = 0; p < m; ++p) next[occ[p]] = p;
    LinkingInfo out;
    out.strand_component.assign(m, -1);
    for (int s = 0; s < m; ++s) {
        if (out.strand_component[s] >= 0) continue;
        int comp = out.components++;
        for (int t = s; out.strand_component[t] < 0; t = next[t]) out.strand_component[t] = comp;
    }
    out.lk.assign(out.components, std::vector<long long>(out.components, 0));
    for (int u = 0; u < m; ++u)
        for (int v = 0; v < m; ++v) {
            int cu = out.strand_component[u], cv = out.strand_component[v];
            if (cu != cv) out.lk[cu][cv] += signed_count[u][v];
        }
    for (int i = 0; i < out.components; ++i)
        for (int j = 0; j < out.components; ++j) {
            if (out.lk[i][j] % 2 != 0) throw std::logic_error("linking_matrix: odd signed count");
            out.lk[i][j] /= 2;
        }
    return out;
}

GroupRingElement oracle_Tk(const LinkingInfo& l, int k, const std::vector<std::vector<long long>>& w) {
    if (k < 1) throw std::invalid_argument("oracle_Tk: k must be >= 1");
    if (static_cast<int>(w.size()) != k) throw std::invalid_argument("oracle_Tk: weight matrix must be k x k");
    for (const auto& row : w)
        if (static_cast<int>(row.size()) != k) throw std::invalid_argument("oracle_Tk: weight matrix must be k x k");
    GroupRingElement out(Coefficients::integers());
    int n = l.components;
    std::vector<int> color(n, 0);
    for (;;) {
        long long e = 0;
        for (int p = 0; p < n; ++p)
            for (int q = 0; q < n; ++q)
                if (p != q) e += l.lk[p][q] * w[color[p]][color[q]];
        out.add_term(e, 1);
        int pos = n - 1;
        while (pos >= 0 && color[pos] == k - 1) color[pos--] = 0;
        if (pos < 0) break;
        ++color[pos];
    }
    return out;
}

GroupRingElement oracle_T2(const LinkingInfo& l) {
    return oracle_Tk(l, 2, {{0, 1}, {0, 0}});
}

GroupRingElement oracle_R4(const LinkingInfo& l, long long u, long long v) {
    int n = l.components;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (l.lk[i][j] % 2 != 0)
                throw std::invalid_argument("oracle_R4: requires even pairwise linking numbers");
    GroupRingElement out(Coefficients::integers());
    long long scale = 1;
    for (int i = 0; i < n; ++i) scale *= 2;
    for (long long mask = 0; mask < (1LL << n); ++mask) {
        long long cross = 0;
        for (int p = 0; p < n; ++p)
            for (int q = 0; q < n; ++q)
                if ((mask >> p & 1) && !(mask >> q & 1)) cross += l.lk[p][q];
        out.add_term((u + v) * cross / 2, scale);
    }
    return out;
}

}  // namespace qlab
