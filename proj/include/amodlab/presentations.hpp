#pragma once

// Group presentations and their verification against the exact model of
// finitely-supported permutations of Z extended by a translation.

#include <map>
#include <string>
#include <vector>

#include "amodlab/error.hpp"

namespace amod {

// One letter of a word: generator index with sign +1 / -1.
struct Letter {
    int generator = 0;
    int sign = 1;

    bool operator==(const Letter&) const = default;
};

using Word = std::vector<Letter>;

Word free_reduce(Word w);
Word inverse_word(const Word& w);
Word conjugate_word(const Word& w, const Word& by);  // by w by^-1

class Presentation {
public:
    Presentation(std::vector<std::string> generators, std::vector<Word> relators);

    const std::vector<std::string>& generators() const { return generators_; }
    const std::vector<Word>& relators() const { return relators_; }

    // One relator per line, letters with ^-1 suffixes.
    std::string serialize() const;

private:
    std::vector<std::string> generators_;
    std::vector<Word> relators_;
};

// <t, tau | tau tau^t tau = tau^t tau tau^t, [tau, tau^{t^n}] = 1 for
// 2 <= |n| <= n_max>.
Presentation brh2_presentation(int n_max);

// Finitely-supported permutation of Z composed with a translation.
// (sigma, a) * (pi, b) = (sigma o (x -> pi(x - a) + a), a + b).
class ShiftPermutation {
public:
    ShiftPermutation() = default;

    static ShiftPermutation identity() { return {}; }
    static ShiftPermutation translation(long long a);
    static ShiftPermutation transposition(long long i, long long j);
    static ShiftPermutation from_cycle(const std::vector<long long>& cycle);

    long long shift() const { return shift_; }
    const std::map<long long, long long>& support_map() const { return perm_; }
    long long apply(long long x) const;  // action on Z

    ShiftPermutation operator*(const ShiftPermutation& o) const;
    ShiftPermutation inverse() const;
    bool is_identity() const { return shift_ == 0 && perm_.empty(); }
    bool operator==(const ShiftPermutation&) const = default;

private:
    std::map<long long, long long> perm_;  // fixed points never stored
    long long shift_ = 0;

    void set(long long x, long long y);
};

// Left-to-right product of the word under the assignment (indexed by
// generator). Throws Errc::UnassignedGenerator on a missing generator.
ShiftPermutation evaluate_word(const Word& w, const std::vector<ShiftPermutation>& assignment);

struct RelatorCheck {
    std::vector<bool> holds;  // per relator
    bool all_hold = true;
};

RelatorCheck check_relators(const Presentation& p,
                            const std::vector<ShiftPermutation>& assignment);

} // namespace amod
