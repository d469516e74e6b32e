#pragma once

// Finite-order classification: element orders via the lcm formula, order
// spectra by height enumeration, closed forms, and the gcd/lcm oracle.

#include <map>
#include <optional>
#include <set>
#include <string>

#include "amodlab/trees.hpp"

#include "json.hpp"

namespace amod {

enum class PeriodicKind { Epsilon, Delta };

// rho^t composed with a power of the cyclic braid (epsilon on all h
// punctures, delta on h-1 of them), living in the stabiliser of a surface
// of height h with rotation order r.
struct PeriodicElement {
    long long t = 0;  // >= 0 after sign normalization
    long long s = 0;
    PeriodicKind kind = PeriodicKind::Epsilon;
    int h = 1;        // >= 1
    long long r = 0;  // >= 0
};

// Order of the element; nullopt = infinite order.
std::optional<long long> element_order(const PeriodicElement& e);

// { lcm(lcm(t,a)/t, lcm(s,b)/s) : 1 <= t,s <= bound, t*b == s*a };
// equals the divisor set of gcd(a, b).
std::set<long long> lcm_claim_set(long long a, long long b, long long bound);

std::set<long long> divisors_of(long long n);

struct OrderWitness {
    int height = 0;
    long long rotation = 0;
    long long gcd_value = 0;
};

class OrderSpectrum {
public:
    static OrderSpectrum bounded(std::set<long long> orders,
                                 std::map<long long, OrderWitness> witnesses);
    static OrderSpectrum all_orders();  // "element of every order"

    bool unbounded() const { return unbounded_; }
    bool contains(long long order) const;
    const std::set<long long>& orders() const;  // throws when unbounded
    const std::map<long long, OrderWitness>& witnesses() const { return witnesses_; }
    nlohmann::ordered_json to_json() const;

    bool operator==(const OrderSpectrum& o) const {
        return unbounded_ == o.unbounded_ && orders_ == o.orders_;
    }

private:
    bool unbounded_ = false;
    std::set<long long> orders_;
    std::map<long long, OrderWitness> witnesses_;
};

// Divisor closure of { gcd(r(S), h), gcd(r(S), h-1) } over surfaces up to
// height H_max with r(S) != 0, with gcd(x, 0) = x.
OrderSpectrum spectrum_enumerated(const TreeFamily& f, int h_max);

OrderSpectrum spectrum_closed_form(const TreeFamily& f);

struct DistinguishReport {
    bool distinguished = false;
    std::optional<long long> separating_order;
    std::vector<long long> only_in_first;   // truncated for unbounded spectra
    std::vector<long long> only_in_second;
    std::string note;
    nlohmann::ordered_json to_json() const;
};

DistinguishReport distinguish(const TreeFamily& f1, const TreeFamily& f2);

} // namespace amod
