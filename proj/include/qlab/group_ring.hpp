#pragma once

#include <map>
#include <optional>
#include <string>

namespace qlab {

// Cyclic coefficient group written multiplicatively with generator t:
// no modulus = infinite cyclic (Laurent exponents), modulus m >= 2 = Z_m.
struct Coefficients {
    std::optional<long long> modulus;

    static Coefficients integers() { return {}; }
    static Coefficients mod(long long m);

    long long reduce(long long e) const;
    std::string str() const;  // "Z", "Z3", ...
    bool operator==(const Coefficients&) const = default;
};

// Element of the group ring Z[A] for A = <t> cyclic: finite sum of terms
// multiplicity * t^exponent, stored without zero multiplicities.
struct GroupRingElement {
    std::optional<long long> exponent_modulus;
    std::map<long long, long long> terms;

    GroupRingElement() = default;
    explicit GroupRingElement(Coefficients a) : exponent_modulus(a.modulus) {}

    Coefficients coefficients() const { return Coefficients{exponent_modulus}; }
    void add_term(long long exponent, long long multiplicity);
    long long total_multiplicity() const;
    std::string str() const;  // e.g. "3 + 6t^2"

    bool operator==(const GroupRingElement&) const = default;
};

GroupRingElement group_ring_int(long long n, Coefficients a);
GroupRingElement group_ring_t_power(long long exponent, Coefficients a);
GroupRingElement group_ring_add(const GroupRingElement& a, const GroupRingElement& b);
GroupRingElement group_ring_mul(const GroupRingElement& a, const GroupRingElement& b);
bool group_ring_is_trivial(const GroupRingElement& a);

}  // namespace qlab
