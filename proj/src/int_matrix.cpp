#include "qlab/int_matrix.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <stdexcept>

namespace qlab {

IntMatrix IntMatrix::identity(int n) {
    IntMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::transposed() const {
    IntMatrix t(cols, rows);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) t.at(j, i) = at(i, j);
    return t;
}

bool IntMatrix::is_zero() const {
    return std::all_of(a.begin(), a.end(), [](const Int& x) { return x == 0; });
}

bool IntMatrix::is_diagonal() const {
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j)
            if (i != j && at(i, j) != 0) return false;
    return true;
}

std::vector<Int> IntMatrix::column(int j) const {
    std::vector<Int> v(rows);
    for (int i = 0; i < rows; ++i) v[i] = at(i, j);
    return v;
}

void IntMatrix::set_column(int j, const std::vector<Int>& v) {
    for (int i = 0; i < rows; ++i) at(i, j) = v[i];
}

IntMatrix mul(const IntMatrix& a, const IntMatrix& b) {
    if (a.cols != b.rows) throw std::invalid_argument("matrix product: dimension mismatch");
    IntMatrix c(a.rows, b.cols);
    for (int i = 0; i < a.rows; ++i)
        for (int k = 0; k < a.cols; ++k) {
            const Int& x = a.at(i, k);
            if (x == 0) continue;
            for (int j = 0; j < b.cols; ++j)
                if (b.at(k, j) != 0) c.at(i, j) += x * b.at(k, j);
        }
    return c;
}

std::vector<Int> mul(const IntMatrix& a, const std::vector<Int>& x) {
    if (a.cols != static_cast<int>(x.size())) throw std::invalid_argument("matrix*vector: dimension mismatch");
    std::vector<Int> y(a.rows);
    for (int i = 0; i < a.rows; ++i)
        for (int j = 0; j < a.cols; ++j)
            if (a.at(i, j) != 0 && x[j] != 0) y[i] += a.at(i, j) * x[j];
    return y;
}

IntMatrix hcat(const IntMatrix& a, const IntMatrix& b) {
    if (a.rows != b.rows) throw std::invalid_argument("hcat: row mismatch");
    IntMatrix c(a.rows, a.cols + b.cols);
    for (int i = 0; i < a.rows; ++i) {
        for (int j = 0; j < a.cols; ++j) c.at(i, j) = a.at(i, j);
        for (int j = 0; j < b.cols; ++j) c.at(i, a.cols + j) = b.at(i, j);
    }
    return c;
}

IntMatrix vcat(const IntMatrix& a, const IntMatrix& b) {
    if (a.cols != b.cols) throw std::invalid_argument("vcat: column mismatch");
    IntMatrix c(a.rows + b.rows, a.cols);
    std::copy(a.a.begin(), a.a.end(), c.a.begin());
    std::copy(b.a.begin(), b.a.end(), c.a.begin() + a.a.size());
    return c;
}

int SmithForm::rank() const {
    int r = 0;
    for (int i = 0; i < std::min(d.rows, d.cols); ++i)
        if (d.at(i, i) != 0) ++r;
    return r;
}

std::vector<Int> SmithForm::diagonal() const {
    std::vector<Int> v;
    for (int i = 0; i < std::min(d.rows, d.cols); ++i) v.push_back(d.at(i, i));
    return v;
}

namespace {

// Accumulates the elementary operations of the Smith reduction so that
// u * m0 * v = m holds at every step, together with the inverses.
struct SmithWork {
    IntMatrix m, u, uinv, v, vinv;

    explicit SmithWork(const IntMatrix& m0)
        : m(m0),
          u(IntMatrix::identity(m0.rows)),
          uinv(IntMatrix::identity(m0.rows)),
          v(IntMatrix::identity(m0.cols)),
          vinv(IntMatrix::identity(m0.cols)) {}

    void row_swap(int i, int j) {
        if (i == j) return;
        for (int c = 0; c < m.cols; ++c) std::swap(m.at(i, c), m.at(j, c));
        for (int c = 0; c < u.cols; ++c) std::swap(u.at(i, c), u.at(j, c));
        for (int r = 0; r < uinv.rows; ++r) std::swap(uinv.at(r, i), uinv.at(r, j));
    }
    void row_negate(int i) {
        for (int c = 0; c < m.cols; ++c) m.at(i, c) = -m.at(i, c);
        for (int c = 0; c < u.cols; ++c) u.at(i, c) = -u.at(i, c);
        for (int r = 0; r < uinv.rows; ++r) uinv.at(r, i) = -uinv.at(r, i);
    }
    // row_i += q * row_j
    void row_add(int i, int j, const Int& q) {
        if (q == 0) return;
        for (int c = 0; c < m.cols; ++c) m.at(i, c) += q * m.at(j, c);
        for (int c = 0; c < u.cols; ++c) u.at(i, c) += q * u.at(j, c);
        for (int r = 0; r < uinv.rows; ++r) uinv.at(r, j) -= q * uinv.at(r, i);
    }
    void col_swap(int i, int j) {
        if (i == j) return;
        for (int r = 0; r < m.rows; ++r) std::swap(m.at(r, i), m.at(r, j));
        for (int r = 0; r < v.rows; ++r) std::swap(v.at(r, i), v.at(r, j));
        for (int c = 0; c < vinv.cols; ++c) std::swap(vinv.at(i, c), vinv.at(j, c));
    }
    // col_i += q * col_j
    void col_add(int i, int j, const Int& q) {
        if (q == 0) return;
        for (int r = 0; r < m.rows; ++r) m.at(r, i) += q * m.at(r, j);
        for (int r = 0; r < v.rows; ++r) v.at(r, i) += q * v.at(r, j);
        for (int c = 0; c < vinv.cols; ++c) vinv.at(j, c) -= q * vinv.at(i, c);
    }
};

Int int_abs(const Int& x) { return x < 0 ? Int(-x) : x; }

}  // namespace

SmithForm smith_normal_form(const IntMatrix& m0) {
    SmithWork w(m0);
    const int n = std::min(m0.rows, m0.cols);
    for (int t = 0; t < n; ++t) {
        // minimal-absolute-value pivot, tie break by (row, col)
        int pr = -1, pc = -1;
        for (int i = t; i < w.m.rows; ++i)
            for (int j = t; j < w.m.cols; ++j) {
                if (w.m.at(i, j) == 0) continue;
                if (pr < 0 || int_abs(w.m.at(i, j)) < int_abs(w.m.at(pr, pc))) pr = i, pc = j;
            }
        if (pr < 0) break;
        w.row_swap(t, pr);
        w.col_swap(t, pc);

        for (;;) {
            bool swapped = true;
            while (swapped) {
                swapped = false;
                for (int i = t + 1; i < w.m.rows; ++i) {
                    if (w.m.at(i, t) == 0) continue;
                    Int q = w.m.at(i, t) / w.m.at(t, t);
                    w.row_add(i, t, -q);
                    if (w.m.at(i, t) != 0) {
                        w.row_swap(t, i);
                        swapped = true;
                    }
                }
                for (int j = t + 1; j < w.m.cols; ++j) {
                    if (w.m.at(t, j) == 0) continue;
                    Int q = w.m.at(t, j) / w.m.at(t, t);
                    w.col_add(j, t, -q);
                    if (w.m.at(t, j) != 0) {
                        w.col_swap(t, j);
                        swapped = true;
                    }
                }
            }
            // pivot must divide the rest of the submatrix
            bool chain_ok = true;
            for (int i = t + 1; i < w.m.rows && chain_ok; ++i)
                for (int j = t + 1; j < w.m.cols; ++j)
                    if (w.m.at(i, j) % w.m.at(t, t) != 0) {
                        w.row_add(t, i, 1);
                        chain_ok = false;
                        break;
                    }
            if (chain_ok) break;
        }
        if (w.m.at(t, t) < 0) w.row_negate(t);
    }
    return SmithForm{w.u, w.m, w.v, w.uinv, w.vinv};
}

IntMatrix integer_kernel(const IntMatrix& m) {
    SmithForm s = smith_normal_form(m);
    int r = s.rank();
    IntMatrix k(m.cols, m.cols - r);
    for (int j = r; j < m.cols; ++j)
        for (int i = 0; i < m.cols; ++i) k.at(i, j - r) = s.v.at(i, j);
    return k;
}

std::optional<std::vector<Int>> solve_integer(const IntMatrix& m, const std::vector<Int>& b) {
    if (static_cast<int>(b.size()) != m.rows) throw std::invalid_argument("solve_integer: size mismatch");
    SmithForm s = smith_normal_form(m);
    std::vector<Int> ub = mul(s.u, b);
    std::vector<Int> z(m.cols, Int(0));
    int dl = std::min(m.rows, m.cols);
    for (int i = 0; i < m.rows; ++i) {
        if (i < dl && s.d.at(i, i) != 0) {
            if (ub[i] % s.d.at(i, i) != 0) return std::nullopt;
            z[i] = ub[i] / s.d.at(i, i);
        } else if (ub[i] != 0) {
            return std::nullopt;
        }
    }
    return mul(s.v, z);
}

IntMatrix column_hermite(const IntMatrix& m0) {
    IntMatrix h = m0;
    std::vector<std::pair<int, int>> pivots;  // (row, col)
    int pc = 0;
    for (int r = 0; r < h.rows && pc < h.cols; ++r) {
        for (;;) {
            int best = -1;
            for (int j = pc; j < h.cols; ++j)
                if (h.at(r, j) != 0 && (best < 0 || int_abs(h.at(r, j)) < int_abs(h.at(r, best)))) best = j;
            if (best < 0) break;
            if (best != pc)
                for (int i = 0; i < h.rows; ++i) std::swap(h.at(i, pc), h.at(i, best));
            bool clean = true;
            for (int j = pc + 1; j < h.cols; ++j) {
                if (h.at(r, j) == 0) continue;
                Int q = h.at(r, j) / h.at(r, pc);
                for (int i = 0; i < h.rows; ++i) h.at(i, j) -= q * h.at(i, pc);
                if (h.at(r, j) != 0) clean = false;
            }
            if (clean) break;
        }
        if (h.at(r, pc) != 0) {
            if (h.at(r, pc) < 0)
                for (int i = 0; i < h.rows; ++i) h.at(i, pc) = -h.at(i, pc);
            pivots.emplace_back(r, pc);
            ++pc;
        }
    }
    // reduce entries left of each pivot into [0, pivot)
    for (auto [r, c] : pivots) {
        for (int j = 0; j < c; ++j) {
            Int q = h.at(r, j) / h.at(r, c);
            if (h.at(r, j) - q * h.at(r, c) < 0) q -= 1;  // floor division
            if (q != 0)
                for (int i = 0; i < h.rows; ++i) h.at(i, j) -= q * h.at(i, c);
        }
    }
    IntMatrix out(h.rows, static_cast<int>(pivots.size()));
    for (int j = 0; j < out.cols; ++j)
        for (int i = 0; i < h.rows; ++i) out.at(i, j) = h.at(i, j);
    return out;
}

std::vector<Int> reduce_mod_lattice(std::vector<Int> v, const IntMatrix& h) {
    int r = 0;
    for (int j = 0; j < h.cols; ++j) {
        while (r < h.rows && h.at(r, j) == 0) ++r;
        if (r >= h.rows) break;
        Int q = v[r] / h.at(r, j);
        if (v[r] - q * h.at(r, j) < 0) q -= 1;
        if (q != 0)
            for (int i = 0; i < h.rows; ++i) v[i] -= q * h.at(i, j);
        ++r;
    }
    return v;
}

QuotientStructure lattice_quotient(const IntMatrix& gens, const IntMatrix& rels) {
    const int k = gens.cols;
    QuotientStructure out;
    out.generators = IntMatrix(gens.rows, 0);
    if (k == 0) return out;
    SmithForm sg = smith_normal_form(gens);
    if (sg.rank() != k) throw std::invalid_argument("lattice_quotient: dependent generators");
    // express every relation in generator coordinates
    IntMatrix y(k, rels.cols);
    IntMatrix urels = mul(sg.u, rels);
    for (int j = 0; j < rels.cols; ++j) {
        std::vector<Int> z(k);
        for (int i = 0; i < gens.rows; ++i) {
            if (i < k) {
                if (urels.at(i, j) % sg.d.at(i, i) != 0)
                    throw std::invalid_argument("lattice_quotient: relation outside generator span");
                z[i] = urels.at(i, j) / sg.d.at(i, i);
            } else if (urels.at(i, j) != 0) {
                throw std::invalid_argument("lattice_quotient: relation outside generator span");
            }
        }
        y.set_column(j, mul(sg.v, z));
    }
    SmithForm sy = smith_normal_form(y);
    IntMatrix newgens = mul(gens, sy.u_inv);
    IntMatrix hnf = column_hermite(rels);
    int dl = std::min(y.rows, y.cols);
    std::vector<std::pair<Int, std::vector<Int>>> finite, free_part;
    for (int i = 0; i < k; ++i) {
        Int e = (i < dl) ? sy.d.at(i, i) : Int(0);
        if (e == 1) continue;
        std::vector<Int> g = reduce_mod_lattice(newgens.column(i), hnf);
        if (e == 0)
            free_part.emplace_back(e, std::move(g));
        else
            finite.emplace_back(e, std::move(g));
    }
    for (auto& lst : {std::ref(finite), std::ref(free_part)})
        for (auto& [e, g] : lst.get()) {
            out.orders.push_back(e);
            IntMatrix col(gens.rows, 1);
            col.set_column(0, g);
            out.generators = hcat(out.generators, col);
        }
    return out;
}

namespace {

long long mod_value(const Int& x, long long m) {
    Int r = x % m;
    if (r < 0) r += m;
    return r.convert_to<long long>();
}

// extended gcd: g = a*x + b*y, g >= 0
long long xgcd(long long a, long long b, long long& x, long long& y) {
    if (b == 0) {
        x = (a < 0) ? -1 : 1;
        y = 0;
        return std::llabs(a);
    }
    long long x1, y1;
    long long g = xgcd(b, a % b, x1, y1);
    x = y1;
    y = x1 - (a / b) * y1;
    return g;
}

long long mod_inverse(long long a, long long m) {
    long long x, y;
    long long g = xgcd(((a % m) + m) % m, m, x, y);
    if (g != 1) throw std::logic_error("mod_inverse: not invertible");
    return ((x % m) + m) % m;
}

// unit u of Z_m with u * v = gcd(v, m) mod m
long long unit_scaling(long long v, long long m) {
    long long g = std::gcd(v, m);
    long long vp = v / g, mg = m / g;
    long long u0 = (mg == 1) ? 1 : mod_inverse(vp % mg, mg);
    for (long long t = 0; t < g; ++t) {
        long long u = (u0 + t * mg) % m;
        if (u > 0 && std::gcd(u, m) == 1) return u;
    }
    throw std::logic_error("unit_scaling: no unit found");
}

// Row-style Hermite form (pivots at strictly increasing columns, entries above a
// pivot reduced into [0, pivot)) of the lattice spanned by the rows.
IntMatrix row_hermite(const IntMatrix& m) { return column_hermite(m.transposed()).transposed(); }

IntMatrix scaled_identity(int n, long long s) {
    IntMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = s;
    return m;
}

}  // namespace

IntMatrix howell_form(const IntMatrix& m, long long modulus) {
    if (modulus < 2) throw std::invalid_argument("howell_form: modulus must be >= 2");
    const int n = m.cols;
    // Hermite basis of the lifted lattice row-span(m) + modulus * Z^n; it has one
    // pivot in every column, and its rows taken mod the modulus give the Howell
    // form after unit normalization of the leading entries.
    IntMatrix h = row_hermite(vcat(m, scaled_identity(n, modulus)));
    std::vector<std::vector<long long>> rows;
    for (int i = 0; i < h.rows; ++i) {
        int j = 0;
        while (j < n && h.at(i, j) == 0) ++j;
        if (j == n || h.at(i, j) % modulus == 0) continue;  // leading entry vanishes mod m
        long long p = mod_value(h.at(i, j), modulus);
        long long u = unit_scaling(p, modulus);
        std::vector<long long> r(n);
        for (int c = 0; c < n; ++c) r[c] = (u * mod_value(h.at(i, c), modulus)) % modulus;
        rows.push_back(std::move(r));
    }
    // canonical reduction of entries sitting over later pivots, right to left
    for (int i = static_cast<int>(rows.size()) - 1; i >= 0; --i) {
        int j = 0;
        while (rows[i][j] == 0) ++j;
        for (int i2 = 0; i2 < i; ++i2) {
            long long q = rows[i2][j] / rows[i][j];
            if (q != 0)
                for (int c = j; c < n; ++c)
                    rows[i2][c] = ((rows[i2][c] - q * rows[i][c]) % modulus + modulus) % modulus;
        }
    }
    IntMatrix out(static_cast<int>(rows.size()), n);
    for (size_t i = 0; i < rows.size(); ++i)
        for (int j = 0; j < n; ++j) out.at(static_cast<int>(i), j) = rows[i][j];
    return out;
}

IntMatrix kernel_mod(const IntMatrix& m, long long modulus) {
    if (modulus < 2) throw std::invalid_argument("kernel_mod: modulus must be >= 2");
    const int s = m.rows, n = m.cols;
    IntMatrix stacked = hcat(m.transposed(), IntMatrix::identity(n));
    IntMatrix h = howell_form(stacked, modulus);
    std::vector<std::vector<Int>> gens;
    for (int i = 0; i < h.rows; ++i) {
        bool zero_prefix = true;
        for (int j = 0; j < s && zero_prefix; ++j) zero_prefix = h.at(i, j) == 0;
        if (!zero_prefix) continue;
        std::vector<Int> g(n);
        for (int j = 0; j < n; ++j) g[j] = h.at(i, s + j);
        gens.push_back(std::move(g));
    }
    IntMatrix out(n, static_cast<int>(gens.size()));
    for (size_t j = 0; j < gens.size(); ++j) out.set_column(static_cast<int>(j), gens[j]);
    return out;
}

std::optional<std::vector<long long>> solve_mod(const IntMatrix& m, const std::vector<long long>& b,
                                                long long modulus) {
    if (modulus < 2) throw std::invalid_argument("solve_mod: modulus must be >= 2");
    if (static_cast<int>(b.size()) != m.rows) throw std::invalid_argument("solve_mod: size mismatch");
    const int s = m.rows, n = m.cols;
    IntMatrix stacked = hcat(m.transposed(), IntMatrix::identity(n));
    IntMatrix h = howell_form(stacked, modulus);
    std::vector<long long> res(s + n, 0);
    for (int j = 0; j < s; ++j) res[j] = ((b[j] % modulus) + modulus) % modulus;
    for (int i = 0; i < h.rows; ++i) {
        int j = 0;
        while (j < s + n && h.at(i, j) == 0) ++j;
        if (j >= s) break;
        if (res[j] == 0) continue;
        long long p = h.at(i, j).convert_to<long long>();
        if (res[j] % p != 0) return std::nullopt;
        long long q = res[j] / p;
        for (int c = 0; c < s + n; ++c)
            res[c] = ((res[c] - q * h.at(i, c).convert_to<long long>()) % modulus + modulus) % modulus;
    }
    for (int j = 0; j < s; ++j)
        if (res[j] != 0) return std::nullopt;
    std::vector<long long> x(n);
    for (int i = 0; i < n; ++i) x[i] = (modulus - res[s + i]) % modulus;
    return x;
}

QuotientStructure quotient_mod(const IntMatrix& gens, const IntMatrix& rels, long long modulus) {
    if (modulus < 2) throw std::invalid_argument("quotient_mod: modulus must be >= 2");
    const int n = gens.rows;
    IntMatrix basis = column_hermite(hcat(gens, scaled_identity(n, modulus)));
    if (basis.cols != n) throw std::logic_error("quotient_mod: expected full-rank lifted lattice");
    IntMatrix lifted_rels = hcat(rels, scaled_identity(n, modulus));
    // forward substitution against the triangular basis
    IntMatrix y(n, lifted_rels.cols);
    for (int j = 0; j < lifted_rels.cols; ++j) {
        std::vector<Int> v = lifted_rels.column(j);
        for (int i = 0; i < n; ++i) {
            if (v[i] % basis.at(i, i) != 0) throw std::logic_error("quotient_mod: relation outside span");
            Int q = v[i] / basis.at(i, i);
            y.at(i, j) = q;
            if (q != 0)
                for (int r = i; r < n; ++r) v[r] -= q * basis.at(r, i);
        }
    }
    SmithForm sy = smith_normal_form(y);
    IntMatrix newgens = mul(basis, sy.u_inv);
    IntMatrix hnf = column_hermite(lifted_rels);
    QuotientStructure out;
    out.generators = IntMatrix(n, 0);
    int dl = std::min(y.rows, y.cols);
    for (int i = 0; i < n; ++i) {
        Int e = (i < dl) ? sy.d.at(i, i) : Int(0);
        if (e == 0) throw std::logic_error("quotient_mod: quotient must be finite");
        if (e == 1) continue;
        out.orders.push_back(e);
        std::vector<Int> g = reduce_mod_lattice(newgens.column(i), hnf);
        for (auto& val : g) {
            val %= modulus;
            if (val < 0) val += modulus;
        }
        IntMatrix col(n, 1);
        col.set_column(0, g);
        out.generators = hcat(out.generators, col);
    }
    return out;
}

}  // namespace qlab
