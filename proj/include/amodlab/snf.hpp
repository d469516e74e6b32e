#pragma once

// Exact integer matrices and Smith normal form.
//
// Boundary matrices are assembled as sparse column lists. Small matrices
// (< 64 columns) are eliminated densely; larger ones stay sparse. Pivoting
// is greedy on the minimal absolute entry and clears rows/columns with
// extended-gcd 2x2 unimodular transforms to keep coefficients small.

#include <cstdint>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace amod {

using Int = boost::multiprecision::cpp_int;

struct SparseColMatrix {
    int rows = 0;
    int cols = 0;
    // col_entries[j] = sorted (row, coefficient) pairs, coefficients nonzero.
    std::vector<std::vector<std::pair<int, Int>>> col_entries;

    static SparseColMatrix zero(int rows, int cols);
    void add_entry(int row, int col, Int value); // accumulates, keeps sorted
    long long nonzeros() const;
    bool is_zero() const;
};

// Composition a*b (applies b first); used to assert boundary-of-boundary = 0.
SparseColMatrix multiply(const SparseColMatrix& a, const SparseColMatrix& b);

// Nonzero diagonal of the Smith normal form: positive, d1 | d2 | ... | dk.
std::vector<Int> smith_invariant_factors(const SparseColMatrix& m);

int smith_rank(const SparseColMatrix& m);

} // namespace amod
