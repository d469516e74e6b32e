#include "amodlab/oracles.hpp"

#include <algorithm>

#include <boost/multiprecision/cpp_int.hpp>

namespace amod::oracle {

using Rational = boost::multiprecision::cpp_rational;

int rational_rank(const SparseColMatrix& m) {
    std::vector<std::vector<Rational>> a(m.rows, std::vector<Rational>(m.cols, 0));
    for (int j = 0; j < m.cols; ++j)
        for (const auto& [i, v] : m.col_entries[j]) a[i][j] = Rational(v);

    int rank = 0;
    int col = 0;
    for (int row = 0; row < m.rows && col < m.cols; ++col) {
        int pivot = -1;
        for (int i = row; i < m.rows; ++i) {
            if (a[i][col] != 0) {
                pivot = i;
                break;
            }
        }
        if (pivot < 0) continue;
        std::swap(a[row], a[pivot]);
        for (int i = row + 1; i < m.rows; ++i) {
            if (a[i][col] == 0) continue;
            Rational factor = a[i][col] / a[row][col];
            for (int j = col; j < m.cols; ++j) a[i][j] -= factor * a[row][j];
        }
        ++rank;
        ++row;
    }
    return rank;
}

namespace {

void grow_subtrees(const TreeFamily& f, const PolygonAddress& root,
                   std::set<PolygonAddress>& current, int max_height,
                   std::set<std::set<PolygonAddress>>& seen) {
    if (!seen.insert(current).second) return;
    if (static_cast<int>(current.size()) >= max_height) return;
    std::set<PolygonAddress> frontier;
    for (const auto& v : current) {
        int cc = child_count(f, v);
        for (int j = 0; j < cc; ++j) {
            PolygonAddress c = v.child(j);
            if (!current.count(c)) frontier.insert(c);
        }
    }
    (void)root;
    for (const auto& c : frontier) {
        current.insert(c);
        grow_subtrees(f, root, current, max_height, seen);
        current.erase(c);
    }
}

} // namespace

std::vector<std::set<PolygonAddress>> enumerate_subtrees(const TreeFamily& f,
                                                         const PolygonAddress& root,
                                                         int max_height) {
    std::set<std::set<PolygonAddress>> seen;
    std::set<PolygonAddress> start{root};
    grow_subtrees(f, root, start, max_height, seen);
    return {seen.begin(), seen.end()};
}

std::map<int, long long> census_by_enumeration(const TreeFamily& f, int max_height) {
    std::map<int, long long> counts;
    for (int h = 1; h <= max_height; ++h) counts[h] = 0;
    for (const auto& s : enumerate_subtrees(f, PolygonAddress{}, max_height))
        counts[static_cast<int>(s.size())] += 1;
    return counts;
}

std::optional<long long> lattice_order(long long t, long long s, long long a, long long b) {
    if (t == 0 && s == 0) return 1;
    // nu*(t,s) = k*(a,-b) for some integer k
    for (long long nu = 1; nu <= 4 * (std::abs(a) + 1) * (std::abs(b) + 1); ++nu) {
        long long xt = nu * t, xs = nu * s;
        if (a == 0) {
            if (xt == 0 && b != 0 && xs % b == 0) return nu;
            continue;
        }
        if (xt % a != 0) continue;
        long long k = xt / a;
        if (xs == -k * b) return nu;
    }
    return std::nullopt;
}

long long cyclic_order(long long t, long long r) {
    long long nu = 1;
    long long cur = ((t % r) + r) % r;
    while (cur != 0) {
        cur = (cur + t) % r;
        cur = ((cur % r) + r) % r;
        ++nu;
    }
    return nu;
}

} // namespace amod::oracle
