#pragma once

// Finite abstract simplicial complexes over integer vertex ids, with exact
// reduced integral homology via Smith normal form.

#include <iosfwd>
#include <set>
#include <string>
#include <vector>

#include "amodlab/error.hpp"
#include "amodlab/snf.hpp"

#include "json.hpp"

namespace amod {

struct HomologyReport {
    // Reduced homology ranks by dimension (index 0 = H~_0).
    std::vector<long long> betti;
    // Per-dimension invariant factors > 1, only dimensions with torsion.
    std::vector<std::pair<int, std::vector<long long>>> torsion;

    bool trivial() const;
    long long rank(int dim) const;
    bool torsion_free(int dim) const;
    nlohmann::ordered_json to_json() const;
    bool operator==(const HomologyReport&) const = default;
};

// Dimension-insensitive comparison: equal ranks and torsion in every degree.
bool same_homology(const HomologyReport& a, const HomologyReport& b);

// Reduced homology of a chain complex given by its boundary maps.
// boundaries[k] maps k-chains to (k-1)-chains; boundaries[0] is the
// augmentation onto the single (-1)-cell.
HomologyReport homology_from_boundaries(const std::vector<SparseColMatrix>& boundaries);

class SimplicialComplex;

// Augmented boundary matrices of the simplicial chain complex.
std::vector<SparseColMatrix> boundary_matrices(const SimplicialComplex& k);

class SimplicialComplex {
public:
    SimplicialComplex() = default;
    static SimplicialComplex from_facets(std::vector<std::vector<int>> facets);

    // File format: one facet per line, space-separated vertex ids,
    // lines starting with '#' ignored.
    static SimplicialComplex parse(const std::string& text);
    std::string serialize() const;

    const std::set<std::vector<int>>& facets() const { return facets_; }
    bool empty() const { return facets_.empty(); }
    int dimension() const;  // -1 when empty
    std::set<int> vertices() const;
    std::vector<std::vector<int>> faces_of_dim(int d) const;
    long long face_count(int d) const;
    bool contains(std::vector<int> simplex) const;
    long long euler_characteristic() const;

    SimplicialComplex link(const std::vector<int>& simplex) const;
    static SimplicialComplex join(const SimplicialComplex& a, const SimplicialComplex& b);
    bool is_flag() const;
    HomologyReport reduced_homology() const;
    bool homologically_connected(int d) const;

    bool operator==(const SimplicialComplex&) const = default;

private:
    std::set<std::vector<int>> facets_;  // sorted vertex lists, inclusion-maximal
};

} // namespace amod
