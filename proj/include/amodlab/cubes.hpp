#pragma once

// Finite fragments of the identity-marked skeleton of the cube complex:
// vertices are admissible surfaces, a k-cube is a surface together with k
// pairwise-distinct adjacent polygons. Fragments are full subcomplexes of
// the ambient complex: a cube is present exactly when all its vertices are.

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "amodlab/simplicial.hpp"
#include "amodlab/trees.hpp"

namespace amod {

struct Cube {
    AdmissibleSurface base;
    std::vector<PolygonAddress> additions;  // sorted, pairwise distinct

    int dim() const { return static_cast<int>(additions.size()); }
    AdmissibleSurface top() const;

    bool operator==(const Cube&) const = default;
    auto operator<=>(const Cube&) const = default;
};

class CubeFragment {
public:
    CubeFragment(TreeFamily family, std::set<AdmissibleSurface> vertices);

    const TreeFamily& family() const { return family_; }
    const std::set<AdmissibleSurface>& vertices() const { return vertices_; }
    bool has_vertex(const AdmissibleSurface& v) const { return vertices_.count(v) > 0; }
    bool has_cube(const AdmissibleSurface& base,
                  const std::vector<PolygonAddress>& additions) const;

    // Every cube of every dimension, deterministic order.
    std::vector<Cube> cubes() const;
    std::vector<Cube> cubes_among(const std::set<AdmissibleSurface>& subset) const;

    HomologyReport reduced_homology() const;

    // Text format: a vertex-id table (one serialized surface per line,
    // addresses joined by ';', id = line rank) followed by one line of
    // space-separated vertex ids per top cube.
    std::string serialize() const;

    bool operator==(const CubeFragment&) const = default;

private:
    TreeFamily family_;
    std::set<AdmissibleSurface> vertices_;
};

// The subcomplex spanned by all increasing paths from the dominated set to
// sigma: vertices {T : S <= T <= sigma for some S}. Throws NOT_DOMINATED.
CubeFragment build_interval(const std::vector<AdmissibleSurface>& dominated,
                            const AdmissibleSurface& sigma);

struct CollapseStep {
    AdmissibleSurface removed;
    int ascending_neighbors = 0;
};

// Repeatedly removes a minimal-height vertex (lexicographically least
// serialized surface on ties) after asserting that the cube spanned by its
// ascending neighbors is present; ends at {sigma}. Throws CLAIM_VIOLATION
// if the asserted cube is absent.
std::vector<CollapseStep> morse_collapse(CubeFragment x, const AdmissibleSurface& sigma);

// Closure of the vertex set under tau.
CubeFragment tau_closure(const CubeFragment& f);

// Retracts the tau-closure layer by layer onto the spine (central height 0).
// Requires a Higman family with m != n+1.
CubeFragment spine_retract(const CubeFragment& f);

struct DescendingLinkParams {
    int p = 0;  // punctures
    int q = 0;  // marked points
    int r = 0;  // separation radius
    bool operator==(const DescendingLinkParams&) const = default;
};

// (k, m + (k-1)(n-1), n-1); throws HEIGHT_TOO_SMALL when k <= m.
DescendingLinkParams descending_link_params(const TreeFamily& f, int k);

// Exact spine vertex counts per height 1..max_height.
std::vector<std::pair<int, unsigned long long>> spine_sublevel_census(const TreeFamily& f,
                                                                      int max_height);

// Identity-marked shadow of the descending link of a spine vertex: vertices
// are polygons whose removal keeps the surface admissible and in the spine,
// simplices are sets removable simultaneously.
SimplicialComplex skeleton_descending_link(const AdmissibleSurface& sigma);

// Link of the common corner of three squares pairwise sharing an edge; the
// hard-coded configuration witnessing a non-flag vertex link.
SimplicialComplex noflag_counterexample_link();

} // namespace amod
