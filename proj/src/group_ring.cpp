#include "qlab/group_ring.hpp"

#include <stdexcept>

namespace qlab {

Coefficients Coefficients::mod(long long m) {
    if (m < 2) throw std::invalid_argument("coefficient modulus must be >= 2");
    return Coefficients{m};
}

long long Coefficients::reduce(long long e) const {
    if (!modulus) return e;
    long long r = e % *modulus;
    return r < 0 ? r + *modulus : r;
}

std::string Coefficients::str() const { return modulus ? "Z" + std::to_string(*modulus) : "Z"; }

void GroupRingElement::add_term(long long exponent, long long multiplicity) {
    if (multiplicity == 0) return;
    long long e = Coefficients{exponent_modulus}.reduce(exponent);
    auto it = terms.find(e);
    if (it == terms.end()) {
        terms.emplace(e, multiplicity);
    } else {
        it->second += multiplicity;
        if (it->second == 0) terms.erase(it);
    }
}

long long GroupRingElement::total_multiplicity() const {
    long long s = 0;
    for (const auto& [e, c] : terms) s += c;
    return s;
}

std::string GroupRingElement::str() const {
    if (terms.empty()) return "0";
    std::string out;
    for (const auto& [e, c] : terms) {
        if (!out.empty()) out += c < 0 ? " - " : " + ";
        else if (c < 0) out += "-";
        long long ac = c < 0 ? -c : c;
        if (e == 0) {
            out += std::to_string(ac);
        } else {
            if (ac != 1) out += std::to_string(ac);
            out += "t";
            if (e != 1) out += "^" + std::to_string(e);
        }
    }
    return out;
}

GroupRingElement group_ring_int(long long n, Coefficients a) {
    GroupRingElement x(a);
    x.add_term(0, n);
    return x;
}

GroupRingElement group_ring_t_power(long long exponent, Coefficients a) {
    GroupRingElement x(a);
    x.add_term(exponent, 1);
    return x;
}

static void require_same_coefficients(const GroupRingElement& a, const GroupRingElement& b) {
    if (a.exponent_modulus != b.exponent_modulus)
        throw std::invalid_argument("group ring: incompatible coefficient groups");
}

GroupRingElement group_ring_add(const GroupRingElement& a, const GroupRingElement& b) {
    require_same_coefficients(a, b);
    GroupRingElement c = a;
    for (const auto& [e, m] : b.terms) c.add_term(e, m);
    return c;
}

GroupRingElement group_ring_mul(const GroupRingElement& a, const GroupRingElement& b) {
    require_same_coefficients(a, b);
    GroupRingElement c(a.coefficients());
    for (const auto& [ea, ma] : a.terms)
        for (const auto& [eb, mb] : b.terms) c.add_term(ea + eb, ma * mb);
    return c;
}

bool group_ring_is_trivial(const GroupRingElement& a) {
    for (const auto& [e, m] : a.terms)
        if (e != 0) return false;
    return true;
}

}  // namespace qlab
