#include "qlab/quandle.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

namespace qlab {

std::string AxiomViolation::describe() const {
    switch (axiom) {
        case 1:
            return "axiom I (idempotence) fails at a=" + std::to_string(witness[0]);
        case 2:
            return "axiom II (right invertibility) fails in column b=" + std::to_string(witness[1]);
        default:
            return "axiom III (self-distributivity) fails at (a,b,c)=(" + std::to_string(witness[0]) +
                   "," + std::to_string(witness[1]) + "," + std::to_string(witness[2]) + ")";
    }
}

static void check_table_shape(const std::vector<std::vector<int>>& table) {
    int n = static_cast<int>(table.size());
    if (n == 0) throw std::invalid_argument("quandle table must be nonempty");
    for (const auto& row : table) {
        if (static_cast<int>(row.size()) != n) throw std::invalid_argument("quandle table must be square");
        for (int v : row)
            if (v < 0 || v >= n) throw std::invalid_argument("quandle table entry out of range");
    }
}

std::optional<AxiomViolation> check_quandle_axioms(const std::vector<std::vector<int>>& table,
                                                   bool allow_rack) {
    check_table_shape(table);
    int n = static_cast<int>(table.size());
    if (!allow_rack)
        for (int a = 0; a < n; ++a)
            if (table[a][a] != a) return AxiomViolation{1, {a, a, -1}};
    for (int b = 0; b < n; ++b) {
        std::vector<char> seen(n, 0);
        for (int a = 0; a < n; ++a) seen[table[a][b]] = 1;
        for (int a = 0; a < n; ++a)
            if (!seen[a]) return AxiomViolation{2, {-1, b, -1}};
    }
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c)
                if (table[table[a][b]][c] != table[table[a][c]][table[b][c]])
                    return AxiomViolation{3, {a, b, c}};
    return std::nullopt;
}

Quandle verify_quandle(const std::vector<std::vector<int>>& table, bool allow_rack) {
    if (auto bad = check_quandle_axioms(table, allow_rack)) throw QuandleError(*bad);
    int n = static_cast<int>(table.size());
    Quandle q;
    q.n = n;
    q.op_.assign(n * n, 0);
    q.inv_op_.assign(n * n, 0);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            q.op_[a * n + b] = table[a][b];
            q.inv_op_[table[a][b] * n + b] = a;
        }
    q.idempotent = true;
    for (int a = 0; a < n; ++a) q.idempotent &= table[a][a] == a;
    q.labels.resize(n);
    for (int a = 0; a < n; ++a) q.labels[a] = std::to_string(a);
    return q;
}

Quandle trivial_quandle(int n) {
    if (n < 1) throw std::invalid_argument("trivial_quandle: n must be >= 1");
    std::vector<std::vector<int>> t(n, std::vector<int>(n));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) t[a][b] = a;
    Quandle q = verify_quandle(t);
    q.name = "T" + std::to_string(n);
    return q;
}

Quandle dihedral_quandle(int n) {
    if (n < 1) throw std::invalid_argument("dihedral_quandle: n must be >= 1");
    std::vector<std::vector<int>> t(n, std::vector<int>(n));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) t[a][b] = ((2 * b - a) % n + n) % n;
    Quandle q = verify_quandle(t);
    q.name = "R" + std::to_string(n);
    return q;
}

Quandle s4_quandle() {
    std::vector<std::vector<int>> t = {
        {0, 2, 3, 1},
        {3, 1, 0, 2},
        {1, 3, 2, 0},
        {2, 0, 1, 3},
    };
    Quandle q = verify_quandle(t);
    q.name = "S4";
    return q;
}

namespace {

struct PolyRing {
    long long n;
    std::vector<long long> monic_h;  // monic reduction polynomial, ascending, degree d
    int d;

    std::vector<long long> decode(long long index) const {
        std::vector<long long> c(d);
        for (int i = 0; i < d; ++i) {
            c[i] = index % n;
            index /= n;
        }
        return c;
    }
    long long encode(const std::vector<long long>& c) const {
        long long idx = 0;
        for (int i = d - 1; i >= 0; --i) idx = idx * n + (c[i] % n + n) % n;
        return idx;
    }
    std::vector<long long> times_t(std::vector<long long> c) const {
        c.insert(c.begin(), 0);
        long long top = c[d] % n;
        for (int i = 0; i < d; ++i) c[i] = ((c[i] - top * monic_h[i]) % n + n) % n;
        c.resize(d);
        return c;
    }
};

long long inverse_mod(long long a, long long n) {
    a = (a % n + n) % n;
    for (long long x = 1; x < n; ++x)
        if (a * x % n == 1) return x;
    return -1;
}

std::string poly_label(const std::vector<long long>& c) {
    std::string s;
    for (size_t i = 0; i < c.size(); ++i) {
        if (c[i] == 0) continue;
        if (!s.empty()) s += "+";
        if (i == 0 || c[i] != 1) s += std::to_string(c[i]);
        if (i >= 1) s += "T";
        if (i >= 2) s += "^" + std::to_string(i);
    }
    return s.empty() ? "0" : s;
}

}  // namespace

Quandle alexander_quandle(long long n, const std::vector<long long>& h) {
    if (n < 2) throw std::invalid_argument("alexander_quandle: modulus must be >= 2");
    std::vector<long long> hh = h;
    while (!hh.empty() && hh.back() % n == 0) hh.pop_back();
    if (hh.size() < 2) throw std::invalid_argument("alexander_quandle: h must have degree >= 1 mod n");
    long long lead_inv = inverse_mod(hh.back(), n);
    long long term_inv = inverse_mod(hh.front(), n);
    if (lead_inv < 0 || term_inv < 0)
        throw std::invalid_argument(
            "alexander_quandle: leading and terminal coefficients of h must be invertible mod n");
    PolyRing ring;
    ring.n = n;
    ring.d = static_cast<int>(hh.size()) - 1;
    ring.monic_h.resize(ring.d + 1);
    for (size_t i = 0; i < hh.size(); ++i) ring.monic_h[i] = ((hh[i] * lead_inv) % n + n) % n;

    long long count = 1;
    for (int i = 0; i < ring.d; ++i) {
        count *= n;
        if (count > 4096) throw std::invalid_argument("alexander_quandle: quandle too large");
    }
    int size = static_cast<int>(count);
    std::vector<std::vector<int>> t(size, std::vector<int>(size));
    for (int a = 0; a < size; ++a) {
        std::vector<long long> pa = ring.decode(a);
        for (int b = 0; b < size; ++b) {
            std::vector<long long> pb = ring.decode(b);
            std::vector<long long> diff(ring.d);
            for (int i = 0; i < ring.d; ++i) diff[i] = ((pa[i] - pb[i]) % n + n) % n;
            std::vector<long long> td = ring.times_t(diff);
            for (int i = 0; i < ring.d; ++i) td[i] = (td[i] + pb[i]) % n;
            t[a][b] = static_cast<int>(ring.encode(td));
        }
    }
    Quandle q = verify_quandle(t);
    q.name = "Alex(" + std::to_string(n) + ")";
    for (int a = 0; a < size; ++a) q.labels[a] = poly_label(ring.decode(a));
    return q;
}

Quandle conjugation_quandle(const FiniteGroup& g, int k) {
    std::vector<std::vector<int>> t(g.order, std::vector<int>(g.order));
    for (int a = 0; a < g.order; ++a)
        for (int b = 0; b < g.order; ++b) t[a][b] = g.conj(a, b, k);
    Quandle q = verify_quandle(t);
    q.name = "Conj(" + (g.name.empty() ? "G" : g.name) + "," + std::to_string(k) + ")";
    return q;
}

bool is_hom(const Quandle& x, const Quandle& y, const std::vector<int>& map) {
    if (static_cast<int>(map.size()) != x.n) return false;
    for (int a = 0; a < x.n; ++a)
        for (int b = 0; b < x.n; ++b)
            if (map[x.op(a, b)] != y.op(map[a], map[b])) return false;
    return true;
}

namespace {

// Order the elements so that as many as possible are forced as products of
// earlier ones; backtracking then only branches on the free generators.
struct HomSearchPlan {
    std::vector<int> order;
    std::vector<std::array<int, 2>> forced_by;  // positions (i, j) in order, or {-1,-1} if free
};

HomSearchPlan plan_search(const Quandle& x) {
    HomSearchPlan plan;
    std::vector<int> pos_of(x.n, -1);
    while (static_cast<int>(plan.order.size()) < x.n) {
        bool placed = false;
        for (int e = 0; e < x.n && !placed; ++e) {
            if (pos_of[e] >= 0) continue;
            for (size_t i = 0; i < plan.order.size() && !placed; ++i)
                for (size_t j = 0; j < plan.order.size() && !placed; ++j)
                    if (x.op(plan.order[i], plan.order[j]) == e) {
                        pos_of[e] = static_cast<int>(plan.order.size());
                        plan.order.push_back(e);
                        plan.forced_by.push_back({static_cast<int>(i), static_cast<int>(j)});
                        placed = true;
                    }
        }
        if (!placed) {
            for (int e = 0; e < x.n; ++e)
                if (pos_of[e] < 0) {
                    pos_of[e] = static_cast<int>(plan.order.size());
                    plan.order.push_back(e);
                    plan.forced_by.push_back({-1, -1});
                    break;
                }
        }
    }
    return plan;
}

// Checks every hom constraint among the placed elements that involves the most
// recently placed one (as operand or as product).
bool partial_consistent(const Quandle& x, const Quandle& y, const std::vector<int>& image, int placed,
                        const std::vector<int>& order, const std::vector<int>& pos_of) {
    int knew = placed - 1;
    for (int i = 0; i < placed; ++i)
        for (int j = 0; j < placed; ++j) {
            int p = pos_of[x.op(order[i], order[j])];
            if (p >= placed) continue;
            if (i != knew && j != knew && p != knew) continue;
            if (image[p] != y.op(image[i], image[j])) return false;
        }
    return true;
}

}  // namespace

std::vector<QuandleHom> find_homs(const Quandle& x, const Quandle& y) {
    HomSearchPlan plan = plan_search(x);
    std::vector<int> pos_of(x.n);
    for (int i = 0; i < x.n; ++i) pos_of[plan.order[i]] = i;
    std::vector<QuandleHom> out;
    std::vector<int> image(x.n, -1);
    std::function<void(int)> rec = [&](int k) {
        if (k == x.n) {
            std::vector<int> map(x.n);
            for (int i = 0; i < x.n; ++i) map[plan.order[i]] = image[i];
            out.push_back(QuandleHom{x, y, std::move(map)});
            return;
        }
        auto [fi, fj] = plan.forced_by[k];
        if (fi >= 0) {
            image[k] = y.op(image[fi], image[fj]);
            if (partial_consistent(x, y, image, k + 1, plan.order, pos_of)) rec(k + 1);
        } else {
            for (int v = 0; v < y.n; ++v) {
                image[k] = v;
                if (partial_consistent(x, y, image, k + 1, plan.order, pos_of)) rec(k + 1);
            }
        }
        image[k] = -1;
    };
    rec(0);
    return out;
}

std::optional<QuandleHom> is_isomorphic(const Quandle& x, const Quandle& y) {
    if (x.n != y.n) return std::nullopt;
    std::vector<int> image(x.n, -1);
    std::vector<char> used(x.n, 0);
    std::function<bool(int)> rec = [&](int a) -> bool {
        if (a == x.n) return true;
        for (int v = 0; v < x.n; ++v) {
            if (used[v]) continue;
            image[a] = v;
            used[v] = 1;
            bool ok = true;
            for (int c = 0; c <= a && ok; ++c)
                for (int d = 0; d <= a && ok; ++d) {
                    int p = x.op(c, d);
                    if (p > a) continue;
                    if (c != a && d != a && p != a) continue;
                    if (image[p] != y.op(image[c], image[d])) ok = false;
                }
            if (ok && rec(a + 1)) return true;
            used[v] = 0;
            image[a] = -1;
        }
        return false;
    };
    if (!rec(0)) return std::nullopt;
    QuandleHom h{x, y, image};
    if (!is_hom(x, y, image)) return std::nullopt;
    return h;
}

}  // namespace qlab
