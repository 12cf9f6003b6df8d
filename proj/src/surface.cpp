#include "qlab/surface.hpp"

#include <array>
#include <cstdlib>
#include <stdexcept>

#include "qlab/cohomology.hpp"
#include "qlab/parallel.hpp"

namespace qlab {

std::vector<int> surface_tuple_action(const BraidWord& b, const Quandle& x, std::vector<int> tuple) {
    validate_braid(b);
    if (static_cast<int>(tuple.size()) != b.strands)
        throw std::invalid_argument("surface_tuple_action: tuple size must match strand count");
    for (auto it = b.letters.rbegin(); it != b.letters.rend(); ++it) {
        int l = *it;
        int i = std::abs(l) - 1;
        int ci = tuple[i], cj = tuple[i + 1];
        if (l > 0) {
            tuple[i] = x.inv_op(cj, ci);
            tuple[i + 1] = ci;
        } else {
            tuple[i] = cj;
            tuple[i + 1] = x.op(ci, cj);
        }
    }
    return tuple;
}

void validate_presentation(const SurfaceBraidPresentation& p) {
    if (p.degree < 1) throw std::invalid_argument("presentation: degree must be >= 1");
    for (const auto& r : p.relations) {
        BraidWord w = r.w;
        w.strands = p.degree;
        validate_braid(w);
        if (r.k < 1 || r.k >= p.degree) throw std::invalid_argument("presentation: relation index out of range");
        if (r.eps != 1 && r.eps != -1) throw std::invalid_argument("presentation: relation sign must be +-1");
    }
    for (const auto& wv : p.white_vertices) {
        BraidWord w = wv.beta;
        w.strands = p.degree;
        validate_braid(w);
        if (wv.i < 1 || wv.i + 1 >= p.degree)
            throw std::invalid_argument("presentation: white vertex index out of range");
        if (wv.eps != 1 && wv.eps != -1) throw std::invalid_argument("presentation: vertex sign must be +-1");
    }
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

BraidWord on_strands(const BraidWord& w, int m) {
    BraidWord b = w;
    b.strands = m;
    return b;
}

bool satisfies_relations(const SurfaceBraidPresentation& p, const Quandle& x,
                         const std::vector<int>& tuple) {
    for (const auto& r : p.relations) {
        std::vector<int> acted = surface_tuple_action(on_strands(r.w, p.degree), x, tuple);
        if (acted[r.k - 1] != acted[r.k]) return false;
    }
    return true;
}

}  // namespace

std::vector<std::vector<int>> colorings_of_presentation(const SurfaceBraidPresentation& p,
                                                        const Quandle& x) {
    validate_presentation(p);
    long long total = power_ll(x.n, p.degree);
    std::vector<std::vector<std::vector<int>>> found(worker_count());
    int used = parallel_chunks(total, [&](int chunk, long long lo, long long hi) {
        for (long long idx = lo; idx < hi; ++idx) {
            std::vector<int> t = tuple_of_index(idx, x.n, p.degree);
            if (satisfies_relations(p, x, t)) found[chunk].push_back(std::move(t));
        }
    });
    std::vector<std::vector<int>> out;
    for (int c = 0; c < used; ++c)
        out.insert(out.end(), found[c].begin(), found[c].end());
    return out;
}

GroupRingElement surface_state_sum(const SurfaceBraidPresentation& p, const Quandle& x,
                                   const Cochain& theta) {
    validate_presentation(p);
    if (theta.degree != 3) throw std::invalid_argument("surface_state_sum: a degree-3 cochain is required");
    if (!theta.quandle_flag || !is_cocycle(theta, x))
        throw std::invalid_argument("surface_state_sum: the weight function must be a quandle 3-cocycle");
    GroupRingElement out(theta.coeff);
    for (const auto& c : colorings_of_presentation(p, x)) {
        long long e = 0;
        for (const auto& wv : p.white_vertices) {
            std::vector<int> acted = surface_tuple_action(on_strands(wv.beta, p.degree), x, c);
            long long v = theta.eval({acted[wv.i - 1], acted[wv.i], acted[wv.i + 1]});
            e += wv.eps * v;
        }
        out.add_term(e, 1);
    }
    return out;
}

SurfaceBraidPresentation twist_spun_trefoil_preset() {
    SurfaceBraidPresentation p;
    p.degree = 4;
    p.relations = {
        {{4, {}}, 2, -1},          {{4, {-2, -2, 1}}, 1, 1}, {{4, {-2, -2, 1}}, 3, -1},
        {{4, {-2, 1, 3}}, 3, 1},   {{4, {-2, 1, 3}}, 1, -1}, {{4, {-1, 3}}, 2, 1},
    };
    p.white_vertices = {
        {{4, {1}}, 1, 1},     {{4, {-2, 1}}, 1, 1},  {{4, {-2, 1}}, 2, 1},
        {{4, {1, 3}}, 2, -1}, {{4, {1, 3}}, 1, -1},  {{4, {3}}, 1, -1},
    };
    return p;
}

SurfaceBraidPresentation twist_spun_trefoil_reversed_preset() {
    SurfaceBraidPresentation p;
    p.degree = 4;
    p.relations = {
        {{4, {1, -3}}, 2, 1},      {{4, {2, -1, -3}}, 1, -1}, {{4, {2, -1, -3}}, 3, 1},
        {{4, {2, 2, -1}}, 3, -1},  {{4, {2, 2, -1}}, 1, 1},   {{4, {}}, 2, -1},
    };
    p.white_vertices = {
        {{4, {1, 1, -3}}, 1, -1},     {{4, {2, 2, -1, -3}}, 1, -1}, {{4, {2, 2, -1, -3}}, 2, -1},
        {{4, {2, 2, 2, -1}}, 2, 1},   {{4, {2, 2, 2, -1}}, 1, 1},   {{4, {1}}, 1, 1},
    };
    return p;
}

std::vector<std::string> preset_names() { return {"TWIST_SPUN_TREFOIL", "TWIST_SPUN_TREFOIL_REVERSED"}; }

std::optional<SurfaceBraidPresentation> preset_by_name(const std::string& name) {
    if (name == "TWIST_SPUN_TREFOIL") return twist_spun_trefoil_preset();
    if (name == "TWIST_SPUN_TREFOIL_REVERSED") return twist_spun_trefoil_reversed_preset();
    return std::nullopt;
}

bool twist_spun_pair_admissible(const Quandle& x, int y1, int y2) {
    return x.op(x.op(y1, y2), y1) == y2 && x.op(x.op(y2, y1), y1) == y2;
}

long long twist_spun_pair_exponent(const Quandle& x, const Cochain& theta, int y1, int y2) {
    int u = x.op(y1, y2);
    long long e = 0;
    e += theta.eval({u, y1, y2});
    e += theta.eval({u, y2, u});
    e += theta.eval({y2, u, y1});
    e -= theta.eval({y1, u, y2});
    e -= theta.eval({u, y1, u});
    e -= theta.eval({y1, y2, u});
    return e;
}

long long twist_spun_reversed_pair_exponent(const Quandle& x, const Cochain& theta, int y1, int y2) {
    int u = x.op(y1, y2);
    long long e = 0;
    e -= theta.eval({y2, u, y1});
    e -= theta.eval({y2, y1, y2});
    e -= theta.eval({y1, y2, u});
    e += theta.eval({u, y2, y1});
    e += theta.eval({y2, u, y2});
    e += theta.eval({u, y1, y2});
    return e;
}

static GroupRingElement closed_form(const Quandle& x, const Cochain& theta, bool reversed) {
    if (theta.degree != 3 || !theta.quandle_flag || !is_cocycle(theta, x))
        throw std::invalid_argument("closed form: the weight function must be a quandle 3-cocycle");
    GroupRingElement out(theta.coeff);
    for (int y1 = 0; y1 < x.n; ++y1)
        for (int y2 = 0; y2 < x.n; ++y2) {
            if (!twist_spun_pair_admissible(x, y1, y2)) continue;
            long long e = reversed ? twist_spun_reversed_pair_exponent(x, theta, y1, y2)
                                   : twist_spun_pair_exponent(x, theta, y1, y2);
            out.add_term(e, 1);
        }
    return out;
}

GroupRingElement twist_spun_trefoil_closed_form(const Quandle& x, const Cochain& theta) {
    return closed_form(x, theta, false);
}

GroupRingElement twist_spun_trefoil_reversed_closed_form(const Quandle& x, const Cochain& theta) {
    return closed_form(x, theta, true);
}

long long TripleLinkingData::value(int i, int j, int k) const {
    auto it = counts.find({i, j, k});
    return it == counts.end() ? 0 : it->second;
}

void TripleLinkingData::set(int i, int j, int k, long long v) {
    if (i < 1 || j < 1 || k < 1 || i > components || j > components || k > components)
        throw std::invalid_argument("triple linking: component index out of range");
    if (i == j || j == k) throw std::invalid_argument("triple linking: adjacent components must differ");
    counts[{i, j, k}] = v;
}

bool validate_triple_linking(const TripleLinkingData& t) {
    int n = t.components;
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) {
            if (i == j) continue;
            if (t.value(i, j, i) != 0) return false;
        }
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
            for (int k = 1; k <= n; ++k) {
                if (i == j || j == k || i == k) continue;
                if (t.value(i, j, k) - t.value(i, k, j) + t.value(k, i, j) != 0) return false;
            }
    return true;
}

std::optional<std::pair<long long, long long>> solve_ab(const TripleLinkingData& t) {
    if (t.components != 3 || !validate_triple_linking(t)) return std::nullopt;
    long long a = t.value(1, 2, 3), b = t.value(3, 1, 2);
    if (t.value(3, 2, 1) != -a) return std::nullopt;
    if (t.value(2, 1, 3) != -b) return std::nullopt;
    if (t.value(2, 3, 1) != -(a + b) || t.value(1, 3, 2) != a + b) return std::nullopt;
    return std::make_pair(a, b);
}

GroupRingElement three_component_oracle(long long a, long long b) {
    GroupRingElement out(Coefficients::integers());
    out.add_term(0, 21);
    out.add_term(a, 1);
    out.add_term(-a, 1);
    out.add_term(b, 1);
    out.add_term(-b, 1);
    out.add_term(a + b, 1);
    out.add_term(-(a + b), 1);
    return out;
}

}  // namespace qlab
