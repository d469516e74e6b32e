#include "amodlab/presentations.hpp"

#include <algorithm>
#include <set>

namespace amod {

Word free_reduce(Word w) {
    Word out;
    for (const Letter& l : w) {
        if (!out.empty() && out.back().generator == l.generator &&
            out.back().sign == -l.sign) {
            out.pop_back();
        } else {
            out.push_back(l);
        }
    }
    return out;
}

Word inverse_word(const Word& w) {
    Word out;
    for (auto it = w.rbegin(); it != w.rend(); ++it)
        out.push_back(Letter{it->generator, -it->sign});
    return out;
}

Word conjugate_word(const Word& w, const Word& by) {
    Word out = by;
    out.insert(out.end(), w.begin(), w.end());
    Word inv = inverse_word(by);
    out.insert(out.end(), inv.begin(), inv.end());
    return free_reduce(out);
}

Presentation::Presentation(std::vector<std::string> generators, std::vector<Word> relators)
    : generators_(std::move(generators)) {
    std::set<std::string> seen(generators_.begin(), generators_.end());
    if (seen.size() != generators_.size())
        throw Error(Errc::BadInput, "generator names must be unique");
    for (Word& w : relators) {
        for (const Letter& l : w)
            if (l.generator < 0 || l.generator >= static_cast<int>(generators_.size()))
                throw Error(Errc::BadInput, "relator references unknown generator");
        relators_.push_back(free_reduce(std::move(w)));
    }
}

std::string Presentation::serialize() const {
    std::string out;
    for (const Word& w : relators_) {
        for (size_t i = 0; i < w.size(); ++i) {
            if (i) out.push_back(' ');
            out += generators_[w[i].generator];
            if (w[i].sign < 0) out += "^-1";
        }
        out.push_back('\n');
    }
    return out;
}

Presentation brh2_presentation(int n_max) {
    if (n_max < 2) throw Error(Errc::BadInput, "need n_max >= 2");
    const int T = 0, TAU = 1;
    auto power = [&](int gen, int e) {
        Word w;
        for (int i = 0; i < std::abs(e); ++i) w.push_back(Letter{gen, e > 0 ? 1 : -1});
        return w;
    };
    Word tau{Letter{TAU, 1}};
    Word tau_t = conjugate_word(tau, power(T, 1));

    auto concat = [](std::initializer_list<Word> parts) {
        Word w;
        for (const Word& p : parts) w.insert(w.end(), p.begin(), p.end());
        return free_reduce(w);
    };

    std::vector<Word> relators;
    // tau tau^t tau (tau^t tau tau^t)^-1
    relators.push_back(concat({tau, tau_t, tau,
                               inverse_word(concat({tau_t, tau, tau_t}))}));
    for (int n = 2; n <= n_max; ++n) {
        for (int sign : {1, -1}) {
            Word tau_tn = conjugate_word(tau, power(T, sign * n));
            relators.push_back(concat(
                {tau, tau_tn, inverse_word(tau), inverse_word(tau_tn)}));
        }
    }
    return Presentation({"t", "tau"}, std::move(relators));
}

void ShiftPermutation::set(long long x, long long y) {
    if (x == y)
        perm_.erase(x);
    else
        perm_[x] = y;
}

ShiftPermutation ShiftPermutation::translation(long long a) {
    ShiftPermutation s;
    s.shift_ = a;
    return s;
}

ShiftPermutation ShiftPermutation::transposition(long long i, long long j) {
    ShiftPermutation s;
    if (i != j) {
        s.perm_[i] = j;
        s.perm_[j] = i;
    }
    return s;
}

ShiftPermutation ShiftPermutation::from_cycle(const std::vector<long long>& cycle) {
    ShiftPermutation s;
    std::set<long long> seen(cycle.begin(), cycle.end());
    if (seen.size() != cycle.size())
        throw Error(Errc::BadInput, "cycle entries must be distinct");
    if (cycle.size() < 2) return s;
    for (size_t i = 0; i < cycle.size(); ++i)
        s.perm_[cycle[i]] = cycle[(i + 1) % cycle.size()];
    return s;
}

long long ShiftPermutation::apply(long long x) const {
    long long y = x + shift_;
    auto it = perm_.find(y);
    return it == perm_.end() ? y : it->second;
}

ShiftPermutation ShiftPermutation::operator*(const ShiftPermutation& o) const {
    ShiftPermutation out;
    out.shift_ = shift_ + o.shift_;
    // sigma o (x -> pi(x - a) + a) with (sigma, a) = *this, (pi, b) = o
    std::set<long long> domain;
    for (const auto& [x, y] : perm_) (void)y, domain.insert(x);
    for (const auto& [x, y] : o.perm_) (void)y, domain.insert(x + shift_);
    for (long long x : domain) {
        long long conj = x - shift_;
        auto it = o.perm_.find(conj);
        long long mid = (it == o.perm_.end() ? conj : it->second) + shift_;
        auto it2 = perm_.find(mid);
        out.set(x, it2 == perm_.end() ? mid : it2->second);
    }
    return out;
}

ShiftPermutation ShiftPermutation::inverse() const {
    ShiftPermutation out;
    out.shift_ = -shift_;
    // (sigma, a)^-1 = (x -> sigma^-1(x + a) - a, -a)
    for (const auto& [x, y] : perm_) out.set(y - shift_, x - shift_);
    return out;
}

ShiftPermutation evaluate_word(const Word& w, const std::vector<ShiftPermutation>& assignment) {
    ShiftPermutation acc;
    for (const Letter& l : w) {
        if (l.generator < 0 || l.generator >= static_cast<int>(assignment.size()))
            throw Error(Errc::UnassignedGenerator,
                        "generator index " + std::to_string(l.generator));
        const ShiftPermutation& g = assignment[l.generator];
        acc = acc * (l.sign > 0 ? g : g.inverse());
    }
    return acc;
}

RelatorCheck check_relators(const Presentation& p,
                            const std::vector<ShiftPermutation>& assignment) {
    if (assignment.size() != p.generators().size())
        throw Error(Errc::UnassignedGenerator, "assignment size mismatch");
    RelatorCheck out;
    for (const Word& w : p.relators()) {
        bool ok = evaluate_word(w, assignment).is_identity();
        out.holds.push_back(ok);
        out.all_hold = out.all_hold && ok;
    }
    return out;
}

} // namespace amod
