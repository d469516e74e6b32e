#pragma once

// Separated-arc combinatorics: separation relations on marked points,
// connectivity bounds, fundamental-domain independence complexes, and the
// explicit sphere witnesses.

#include <optional>
#include <vector>

#include "amodlab/simplicial.hpp"

namespace amod {

// Symmetric irreflexive relation on the q marked points of a cycle.
class SeparationRelation {
public:
    // distance in the q-cycle > r
    static SeparationRelation r_separation(int q, int r);
    static SeparationRelation from_matrix(std::vector<std::vector<bool>> related);

    int q() const { return q_; }
    bool related(int i, int j) const { return related_[i][j]; }

private:
    SeparationRelation(int q, std::vector<std::vector<bool>> rel)
        : q_(q), related_(std::move(rel)) {}
    int q_;
    std::vector<std::vector<bool>> related_;
};

// Minimum size of an inclusion-maximal set of pairwise-related points,
// by exhaustive maximal-clique enumeration.
int min_related(const SeparationRelation& rel);

// Closed form for the r-separation relation: floor(q / (r+1)).
int separation_min_formula(int q, int r);

// floor((p + floor(q/(r+1))) / 3) - 2; may be negative.
int connectivity_bound(int p, int q, int r);

// floor((P + min_related) / 3) - 2 for an arbitrary relation.
int general_bound(int p_count, const SeparationRelation& rel);

// Conjectured bouquet dimension min(p, floor(q/(r+1))) - 1 (not proven,
// exposed separately from the certified bound).
int conjectured_bouquet_dimension(int p, int q, int r);

// Independence complex of the circulant graph on Z_q with connections
// {1..r}; simplices capped at `cap` vertices when given.
SimplicialComplex fundamental_domain(int q, int r, std::optional<int> cap = std::nullopt);

struct SymbolicArc {
    int marked_point;  // 1..k
    int generation;    // >= 1

    // Arcs at distinct marked points are disjoint; canonical vertex id.
    int vertex_id(int k) const { return (generation - 1) * k + (marked_point - 1); }
};

// Full subcomplex on the arcs {(i,j), (i,j+1) : 1 <= i <= k}: the k-fold
// join of S^0, a triangulated (k-1)-sphere.
SimplicialComplex sphere_witness(int k, int j);

// True iff the generation sets {j1, j1+1} and {j2, j2+1} are disjoint.
bool witness_disjointness(int k, int j1, int j2);

// Minimal puncture count the bouquet construction needs: 2k.
int puncture_budget(int k);

} // namespace amod
