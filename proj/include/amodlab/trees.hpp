#pragma once

// Parametric planar trees, polygon addresses and admissible subsurfaces.
//
// A family describes an infinite planar tree; a polygon corresponds to a
// tree vertex and is addressed by its child-index path from the central
// polygon. An admissible surface is a nonempty finite connected set of
// polygons. Frontier arcs are the tree edges leaving the set, listed in
// the cyclic order of the deterministic boundary walk.

#include <iosfwd>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "amodlab/error.hpp"

namespace amod {

// Planar tree family. Regular(n) normalizes to Higman(n, n+1) and Star(n)
// to Higman(1, n); normalized forms compare equal.
class TreeFamily {
public:
    enum class Kind { Higman, Lamplighter };

    static TreeFamily higman(int n, int m);
    static TreeFamily regular(int n);
    static TreeFamily star(int n);
    static TreeFamily lamplighter();

    Kind kind() const { return kind_; }
    bool is_lamplighter() const { return kind_ == Kind::Lamplighter; }

    // Branching parameter n: every non-central vertex has valence n+1.
    int n() const;
    // Central valence m.
    int m() const;

    // "higman n m" | "regular n" | "star n" | "lamplighter" (canonical form).
    std::string to_string() const;
    static TreeFamily parse(const std::string& text);
    // CLI flag syntax: higman:n:m | regular:n | star:n | lamplighter.
    static TreeFamily parse_flag(const std::string& text);

    bool operator==(const TreeFamily& o) const = default;
    auto operator<=>(const TreeFamily& o) const = default;

private:
    TreeFamily(Kind k, int n, int m) : kind_(k), n_(n), m_(m) {}
    Kind kind_;
    int n_;
    int m_;
};

// Child-index path from the central polygon; empty path = central polygon.
struct PolygonAddress {
    std::vector<int> path;

    int depth() const { return static_cast<int>(path.size()); }
    bool is_center() const { return path.empty(); }
    PolygonAddress parent() const;
    PolygonAddress child(int index) const;

    std::string to_string() const;                     // "0/1", "" for the center
    static PolygonAddress parse(const std::string&);

    bool operator==(const PolygonAddress&) const = default;
    auto operator<=>(const PolygonAddress&) const = default;
};

// Number of children of the polygon at `addr` (validates the address).
int child_count(const TreeFamily& f, const PolygonAddress& addr);
// Valence of the underlying tree vertex: child count plus the parent edge.
int valence(const TreeFamily& f, const PolygonAddress& addr);
bool address_valid(const TreeFamily& f, const PolygonAddress& addr);

class AdmissibleSurface {
public:
    AdmissibleSurface(TreeFamily family, std::set<PolygonAddress> polygons);

    const TreeFamily& family() const { return family_; }
    const std::set<PolygonAddress>& polygons() const { return polygons_; }

    int height() const { return static_cast<int>(polygons_.size()); }
    bool contains(const PolygonAddress& a) const { return polygons_.count(a) > 0; }
    bool contains_center() const { return contains(PolygonAddress{}); }
    // The polygon of the surface closest to the center.
    const PolygonAddress& root() const { return *polygons_.begin(); }

    AdmissibleSurface with_polygon(const PolygonAddress& a) const;
    AdmissibleSurface without_polygon(const PolygonAddress& a) const;
    bool subset_of(const AdmissibleSurface& other) const;

    // Polygons outside the surface sharing a frontier arc with it.
    std::vector<PolygonAddress> adjacent_polygons() const;
    bool is_adjacent(const PolygonAddress& a) const;

    // Sorted address paths, one per line.
    std::string serialize() const;
    static AdmissibleSurface parse(const TreeFamily& f, const std::string& text);

    bool operator==(const AdmissibleSurface&) const = default;
    auto operator<=>(const AdmissibleSurface&) const = default;

private:
    TreeFamily family_;
    std::set<PolygonAddress> polygons_;
};

struct FrontierArc {
    PolygonAddress owner;  // polygon of the surface the arc lies on
    int slot;              // port index in the owner's cyclic arc order
    int cyclic_position;   // position in the boundary walk

    bool operator==(const FrontierArc&) const = default;
    auto operator<=>(const FrontierArc&) const = default;
};

int height(const AdmissibleSurface& s);

// Frontier arcs in boundary-walk order, starting at the lexicographically
// least (owner, slot) pair. Length = sum of valences - 2(h-1).
std::vector<FrontierArc> frontier_arcs(const AdmissibleSurface& s);

// Order of the cyclic group of frontier rotations preserving the word of
// complement-component types; 0 when only the trivial rotation does (and
// the frontier has more than one arc). Throws Errc::Undecided when the
// lamplighter depth-bounded comparison cannot certify the answer.
long long rotation_order(const AdmissibleSurface& s, int lamplighter_depth = 32);

// Graph distance from the surface to the nearest surface containing the
// central polygon; 0 iff it already does.
int central_height(const AdmissibleSurface& s);

// Adds the adjacent polygon nearest the center; identity on the spine.
AdmissibleSurface tau_step(const AdmissibleSurface& s);

// Family-level edge collapse: Higman(n,m) -> Higman(n, m+n-1).
TreeFamily collapse_edge(const TreeFamily& f);

} // namespace amod
