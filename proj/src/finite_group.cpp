#include "qlab/finite_group.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <numeric>
#include <stdexcept>

namespace qlab {

int FiniteGroup::conj(int a, int b, int k) const {
    int bk = identity;
    int step = k >= 0 ? b : inv(b);
    for (int i = 0; i < std::abs(k); ++i) bk = op(bk, step);
    return op(op(inv(bk), a), bk);
}

bool verify_group(const std::vector<int>& table) {
    size_t n2 = table.size();
    int n = static_cast<int>(std::lround(std::sqrt(static_cast<double>(n2))));
    if (n <= 0 || static_cast<size_t>(n) * n != n2) return false;
    auto op = [&](int a, int b) { return table[a * n + b]; };
    for (int v : table)
        if (v < 0 || v >= n) return false;
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c)
                if (op(op(a, b), c) != op(a, op(b, c))) return false;
    int e = -1;
    for (int cand = 0; cand < n; ++cand) {
        bool ok = true;
        for (int a = 0; a < n && ok; ++a) ok = op(cand, a) == a && op(a, cand) == a;
        if (ok) {
            e = cand;
            break;
        }
    }
    if (e < 0) return false;
    for (int a = 0; a < n; ++a) {
        bool has_inv = false;
        for (int b = 0; b < n && !has_inv; ++b) has_inv = op(a, b) == e && op(b, a) == e;
        if (!has_inv) return false;
    }
    return true;
}

bool verify_group(const FiniteGroup& g) { return verify_group(g.table); }

FiniteGroup make_group(const std::vector<int>& table, std::string name) {
    if (!verify_group(table)) throw std::invalid_argument("make_group: not a group table");
    FiniteGroup g;
    g.order = static_cast<int>(std::lround(std::sqrt(static_cast<double>(table.size()))));
    g.table = table;
    g.name = std::move(name);
    for (int cand = 0; cand < g.order; ++cand) {
        bool ok = true;
        for (int a = 0; a < g.order && ok; ++a) ok = g.op(cand, a) == a && g.op(a, cand) == a;
        if (ok) {
            g.identity = cand;
            break;
        }
    }
    g.inverse.assign(g.order, 0);
    for (int a = 0; a < g.order; ++a)
        for (int b = 0; b < g.order; ++b)
            if (g.op(a, b) == g.identity) {
                g.inverse[a] = b;
                break;
            }
    return g;
}

FiniteGroup cyclic_group(int n) {
    if (n < 1) throw std::invalid_argument("cyclic_group: order must be >= 1");
    std::vector<int> t(n * n);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) t[a * n + b] = (a + b) % n;
    return make_group(t, "Z" + std::to_string(n));
}

FiniteGroup symmetric_group(int n) {
    if (n < 1 || n > 7) throw std::invalid_argument("symmetric_group: supported for 1 <= n <= 7");
    std::vector<std::vector<int>> perms;
    std::vector<int> p(n);
    std::iota(p.begin(), p.end(), 0);
    do {
        perms.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    int order = static_cast<int>(perms.size());
    auto index_of = [&](const std::vector<int>& q) {
        return static_cast<int>(std::lower_bound(perms.begin(), perms.end(), q) - perms.begin());
    };
    std::vector<int> t(order * order);
    for (int a = 0; a < order; ++a)
        for (int b = 0; b < order; ++b) {
            std::vector<int> c(n);
            for (int x = 0; x < n; ++x) c[x] = perms[a][perms[b][x]];
            t[a * order + b] = index_of(c);
        }
    return make_group(t, "Sym" + std::to_string(n));
}

FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b) {
    int n = a.order * b.order;
    std::vector<int> t(n * n);
    auto enc = [&](int x, int y) { return x * b.order + y; };
    for (int x1 = 0; x1 < a.order; ++x1)
        for (int y1 = 0; y1 < b.order; ++y1)
            for (int x2 = 0; x2 < a.order; ++x2)
                for (int y2 = 0; y2 < b.order; ++y2)
                    t[enc(x1, y1) * n + enc(x2, y2)] = enc(a.op(x1, x2), b.op(y1, y2));
    return make_group(t, a.name + "x" + b.name);
}

}  // namespace qlab
