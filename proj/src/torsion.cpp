#include "amodlab/torsion.hpp"

#include <algorithm>
#include <numeric>

namespace amod {

namespace {

long long gcd_ll(long long a, long long b) { return std::gcd(a, b); }

long long lcm_ll(long long a, long long b) { return std::lcm(a, b); }

// Representative spine surface of height h: the center plus a descending path.
AdmissibleSurface rep_center(const TreeFamily& f, int h) {
    std::set<PolygonAddress> p;
    PolygonAddress a;
    p.insert(a);
    for (int i = 1; i < h; ++i) {
        a = a.child(0);
        p.insert(a);
    }
    return AdmissibleSurface(f, std::move(p));
}

// Representative surface of height h avoiding the center: a path below child 0.
AdmissibleSurface rep_offcenter(const TreeFamily& f, int h) {
    std::set<PolygonAddress> p;
    PolygonAddress a = PolygonAddress{}.child(0);
    p.insert(a);
    for (int i = 1; i < h; ++i) {
        a = a.child(0);
        p.insert(a);
    }
    return AdmissibleSurface(f, std::move(p));
}

} // namespace

std::optional<long long> element_order(const PeriodicElement& e) {
    if (e.t < 0 || e.h < 1 || e.r < 0)
        throw Error(Errc::BadInput, "periodic element out of range");
    if (e.h == 1) {
        // stabiliser is the rotation group Z_r
        if (e.r == 0) return e.t == 0 ? std::optional<long long>(1) : std::nullopt;
        return e.r / gcd_ll(e.t, e.r);
    }
    long long cycle = e.kind == PeriodicKind::Epsilon ? e.h : e.h - 1;
    if (e.t == 0 && e.s == 0) return 1;
    if (e.t == 0 || e.s == 0) return std::nullopt;
    if (e.t * cycle + e.s * e.r != 0) return std::nullopt;
    long long s = std::abs(e.s);
    return lcm_ll(lcm_ll(e.t, e.r) / e.t, lcm_ll(s, cycle) / s);
}

std::set<long long> lcm_claim_set(long long a, long long b, long long bound) {
    if (a < 1 || b < 1 || bound < std::max(a, b))
        throw Error(Errc::BadInput, "need a, b >= 1 and bound >= max(a, b)");
    std::set<long long> out;
    for (long long t = 1; t <= bound; ++t) {
        for (long long s = 1; s <= bound; ++s) {
            if (t * b != s * a) continue;
            out.insert(lcm_ll(lcm_ll(t, a) / t, lcm_ll(s, b) / s));
        }
    }
    return out;
}

std::set<long long> divisors_of(long long n) {
    if (n < 1) throw Error(Errc::BadInput, "divisors of a nonpositive integer");
    std::set<long long> out;
    for (long long d = 1; d * d <= n; ++d) {
        if (n % d == 0) {
            out.insert(d);
            out.insert(n / d);
        }
    }
    return out;
}

OrderSpectrum OrderSpectrum::bounded(std::set<long long> orders,
                                     std::map<long long, OrderWitness> witnesses) {
    OrderSpectrum s;
    s.orders_ = std::move(orders);
    s.witnesses_ = std::move(witnesses);
    s.orders_.insert(1);
    return s;
}

OrderSpectrum OrderSpectrum::all_orders() {
    OrderSpectrum s;
    s.unbounded_ = true;
    return s;
}

bool OrderSpectrum::contains(long long order) const {
    if (order < 1) return false;
    return unbounded_ || orders_.count(order) > 0;
}

const std::set<long long>& OrderSpectrum::orders() const {
    if (unbounded_)
        throw Error(Errc::Unsupported, "spectrum contains elements of every order");
    return orders_;
}

nlohmann::ordered_json OrderSpectrum::to_json() const {
    nlohmann::ordered_json j;
    j["unbounded"] = unbounded_;
    if (!unbounded_) {
        j["orders"] = orders_;
        nlohmann::ordered_json w = nlohmann::ordered_json::array();
        for (const auto& [order, wit] : witnesses_) {
            nlohmann::ordered_json e;
            e["order"] = order;
            e["height"] = wit.height;
            e["rotation"] = wit.rotation;
            e["gcd"] = wit.gcd_value;
            w.push_back(e);
        }
        j["witnesses"] = w;
    }
    return j;
}

OrderSpectrum spectrum_enumerated(const TreeFamily& f, int h_max) {
    if (h_max < 1) throw Error(Errc::BadInput, "need h_max >= 1");
    std::set<long long> orders;
    std::map<long long, OrderWitness> witnesses;
    auto record = [&](long long r, int h) {
        // gcd(x, 0) = x covers the height-1 stabiliser Z_r
        for (long long g : {gcd_ll(r, h), gcd_ll(r, h - 1)}) {
            for (long long d : divisors_of(g)) {
                if (orders.insert(d).second)
                    witnesses[d] = OrderWitness{h, r, g};
            }
        }
    };
    for (int h = 1; h <= h_max; ++h) {
        // r(S) depends only on the height and on whether S holds the center.
        long long rc = rotation_order(rep_center(f, h));
        if (rc != 0) record(rc, h);
        long long ro = rotation_order(rep_offcenter(f, h));
        if (ro != 0) record(ro, h);
    }
    return OrderSpectrum::bounded(std::move(orders), std::move(witnesses));
}

OrderSpectrum spectrum_closed_form(const TreeFamily& f) {
    if (f.is_lamplighter())
        throw Error(Errc::Unsupported, "no closed-form spectrum for the lamplighter family");
    long long n = f.n(), m = f.m();
    if (m == n - 1) return OrderSpectrum::all_orders();

    std::set<long long> orders;
    std::map<long long, OrderWitness> witnesses;
    auto add_generator = [&](long long g, int h, long long r) {
        for (long long d : divisors_of(g)) {
            if (orders.insert(d).second) witnesses[d] = OrderWitness{h, r, g};
        }
    };
    if (m == n + 1) {
        add_generator(2, 2, 2 * n);
        add_generator(n + 1, static_cast<int>(n) + 2, n * (n + 1));
    } else {
        add_generator(m, static_cast<int>(m) + 1, m * n);
        long long d = std::abs(m - n + 1);
        add_generator(d, static_cast<int>(d), m + (d - 1) * (n - 1));
    }
    return OrderSpectrum::bounded(std::move(orders), std::move(witnesses));
}

nlohmann::ordered_json DistinguishReport::to_json() const {
    nlohmann::ordered_json j;
    j["verdict"] = distinguished ? "DISTINGUISHED" : "INCONCLUSIVE";
    if (separating_order) j["separating_order"] = *separating_order;
    j["only_in_first"] = only_in_first;
    j["only_in_second"] = only_in_second;
    j["note"] = note;
    return j;
}

DistinguishReport distinguish(const TreeFamily& f1, const TreeFamily& f2) {
    OrderSpectrum s1 = spectrum_closed_form(f1);
    OrderSpectrum s2 = spectrum_closed_form(f2);
    DistinguishReport rep;

    auto first_missing = [](const OrderSpectrum& sub, const OrderSpectrum& sup,
                            std::vector<long long>& out) {
        if (sub.unbounded()) {
            if (sup.unbounded()) return;  // nothing separates two full spectra
            long long l = 1;
            while (sup.contains(l)) ++l;
            out.push_back(l);
            return;
        }
        for (long long o : sub.orders())
            if (!sup.contains(o)) out.push_back(o);
    };
    first_missing(s1, s2, rep.only_in_first);
    first_missing(s2, s1, rep.only_in_second);

    if (rep.only_in_first.empty() && rep.only_in_second.empty()) {
        rep.distinguished = false;
        rep.note = s1.unbounded()
                       ? "both groups contain elements of every order; torsion cannot "
                         "distinguish them"
                       : "order spectra agree; torsion cannot distinguish these groups "
                         "(no isomorphism is claimed)";
        return rep;
    }
    rep.distinguished = true;
    rep.separating_order = rep.only_in_second.empty() ? rep.only_in_first.front()
                                                      : rep.only_in_second.front();
    rep.note = "an element of the separating order exists in exactly one group";
    return rep;
}

} // namespace amod
