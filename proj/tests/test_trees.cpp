#include "doctest.h"

#include <set>

#include "amodlab/trees.hpp"

using namespace amod;

namespace {

AdmissibleSurface surf(const TreeFamily& f, std::initializer_list<const char*> addrs) {
    std::set<PolygonAddress> p;
    for (const char* a : addrs) p.insert(PolygonAddress::parse(a));
    return AdmissibleSurface(f, std::move(p));
}

} // namespace

TEST_CASE("family normalization and parsing") {
    CHECK(TreeFamily::regular(2) == TreeFamily::higman(2, 3));
    CHECK(TreeFamily::star(3) == TreeFamily::higman(1, 3));
    CHECK(TreeFamily::parse("regular 2") == TreeFamily::parse("higman 2 3"));
    CHECK(TreeFamily::parse_flag("higman:2:4").to_string() == "higman 2 4");
    CHECK(TreeFamily::parse_flag("star:5").to_string() == "star 5");
    CHECK(TreeFamily::parse_flag("regular:3").to_string() == "regular 3");
    CHECK(TreeFamily::lamplighter().to_string() == "lamplighter");
    CHECK(TreeFamily::parse(TreeFamily::higman(1, 3).to_string()) == TreeFamily::star(3));
    CHECK_THROWS_AS(TreeFamily::parse("foo 1"), Error);
    CHECK_THROWS_AS(TreeFamily::regular(1), Error);
}

TEST_CASE("addresses round-trip and validate") {
    PolygonAddress a = PolygonAddress::parse("0/1/2");
    CHECK(a.depth() == 3);
    CHECK(a.to_string() == "0/1/2");
    CHECK(a.parent().to_string() == "0/1");
    CHECK(PolygonAddress::parse("").is_center());

    TreeFamily h23 = TreeFamily::higman(2, 3);
    CHECK(address_valid(h23, PolygonAddress::parse("2/1/0")));
    CHECK_FALSE(address_valid(h23, PolygonAddress::parse("3")));     // center has 3 children
    CHECK_FALSE(address_valid(h23, PolygonAddress::parse("0/2")));   // others have 2

    TreeFamily lamp = TreeFamily::lamplighter();
    CHECK(child_count(lamp, PolygonAddress{}) == 3);
    CHECK(child_count(lamp, PolygonAddress::parse("0")) == 2);   // line continues + ray
    CHECK(child_count(lamp, PolygonAddress::parse("2")) == 1);   // ray
    CHECK(valence(lamp, PolygonAddress::parse("2")) == 2);
    CHECK(valence(lamp, PolygonAddress::parse("0")) == 3);
    CHECK_FALSE(address_valid(lamp, PolygonAddress::parse("2/1")));
}

TEST_CASE("surface construction enforces connectivity") {
    TreeFamily h23 = TreeFamily::higman(2, 3);
    CHECK_NOTHROW(surf(h23, {"", "0", "0/1"}));
    CHECK_NOTHROW(surf(h23, {"0/1"}));  // need not contain the center
    CHECK_THROWS_AS(surf(h23, {"0", "1"}), Error);
    CHECK_THROWS_AS(surf(h23, {"0", "0/1", "1"}), Error);
    CHECK_THROWS_AS(AdmissibleSurface(h23, {}), Error);
}

TEST_CASE("height counts polygons") {
    TreeFamily h23 = TreeFamily::higman(2, 3);
    CHECK(height(surf(h23, {""})) == 1);
    CHECK(height(surf(h23, {"", "0"})) == 2);
    TreeFamily s3 = TreeFamily::star(3);
    CHECK(height(surf(s3, {"0", "0/0", "0/0/0", "0/0/0/0"})) == 4);
}

TEST_CASE("frontier arc counts") {
    TreeFamily h23 = TreeFamily::higman(2, 3);
    CHECK(frontier_arcs(surf(h23, {""})).size() == 3);
    CHECK(frontier_arcs(surf(h23, {"", "0"})).size() == 4);

    // Spine surfaces of Higman(2,4): m + (h-1)(n-1) = 3 + h arcs.
    TreeFamily h24 = TreeFamily::higman(2, 4);
    CHECK(frontier_arcs(surf(h24, {""})).size() == 4);
    CHECK(frontier_arcs(surf(h24, {"", "1"})).size() == 5);
    CHECK(frontier_arcs(surf(h24, {"", "1", "1/0", "3"})).size() == 7);
}

TEST_CASE("frontier arcs form the deterministic boundary walk") {
    TreeFamily h23 = TreeFamily::higman(2, 3);
    auto arcs = frontier_arcs(surf(h23, {"", "0"}));
    REQUIRE(arcs.size() == 4);
    CHECK(arcs[0].owner.is_center());
    CHECK(arcs[0].slot == 1);
    CHECK(arcs[0].cyclic_position == 0);
    CHECK(arcs[1].owner.is_center());
    CHECK(arcs[1].slot == 2);
    CHECK(arcs[2].owner == PolygonAddress::parse("0"));
    CHECK(arcs[2].slot == 1);
    CHECK(arcs[3].owner == PolygonAddress::parse("0"));
    CHECK(arcs[3].slot == 2);
}

TEST_CASE("rotation order closed cases") {
    // Regular(2): all complement components agree, r = 2 + h.
    TreeFamily r2 = TreeFamily::regular(2);
    CHECK(rotation_order(surf(r2, {""})) == 3);
    CHECK(rotation_order(surf(r2, {"", "0"})) == 4);
    CHECK(rotation_order(surf(r2, {"0/1"})) == 3);
    CHECK(rotation_order(surf(r2, {"", "0", "1", "2"})) == 6);

    TreeFamily s3 = TreeFamily::star(3);
    CHECK(rotation_order(surf(s3, {"0"})) == 0);
    CHECK(rotation_order(surf(s3, {"0", "0/0"})) == 0);
    CHECK(rotation_order(surf(s3, {""})) == 3);
    CHECK(rotation_order(surf(s3, {"", "0", "1", "2"})) == 3);

    TreeFamily s5 = TreeFamily::star(5);
    CHECK(rotation_order(surf(s5, {""})) == 5);

    // Higman(2,4), center inside: r = 4 + (h-1).
    TreeFamily h24 = TreeFamily::higman(2, 4);
    CHECK(rotation_order(surf(h24, {""})) == 4);
    CHECK(rotation_order(surf(h24, {"", "2"})) == 5);
    CHECK(rotation_order(surf(h24, {"0"})) == 0);

    // Degenerate single-arc frontier.
    CHECK(rotation_order(surf(TreeFamily::higman(1, 1), {""})) == 1);
}

TEST_CASE("rotation order divides the frontier size on small enumeration") {
    TreeFamily fams[] = {TreeFamily::higman(2, 3), TreeFamily::higman(2, 4),
                         TreeFamily::star(3)};
    for (const auto& f : fams) {
        std::vector<AdmissibleSurface> layer{surf(f, {""})};
        for (int h = 1; h <= 4; ++h) {
            std::vector<AdmissibleSurface> next;
            for (const auto& s : layer) {
                long long r = rotation_order(s);
                long long c = static_cast<long long>(frontier_arcs(s).size());
                CHECK((r == 0 || c % r == 0));
                for (const auto& p : s.adjacent_polygons()) next.push_back(s.with_polygon(p));
            }
            layer = std::move(next);
        }
    }
}

TEST_CASE("lamplighter rotation order") {
    TreeFamily lamp = TreeFamily::lamplighter();
    // Planar order distinguishes the west and east line components.
    CHECK(rotation_order(surf(lamp, {""})) == 0);
    CHECK(rotation_order(surf(lamp, {"", "0", "1"})) == 0);
    // A segment high up a ray: the line vertex is visible within depth 32...
    CHECK(rotation_order(surf(lamp, {"2/0/0"})) == 0);
    // ...but not from depth 40.
    std::set<PolygonAddress> deep;
    PolygonAddress a = PolygonAddress::parse("2");
    for (int i = 0; i < 40; ++i) a = a.child(0);
    deep.insert(a);
    CHECK_THROWS_AS(rotation_order(AdmissibleSurface(lamp, deep)), Error);
    CHECK(rotation_order(AdmissibleSurface(lamp, deep), 64) == 0);
}

TEST_CASE("central height and tau") {
    TreeFamily s3 = TreeFamily::star(3);
    CHECK(central_height(surf(s3, {"", "1"})) == 0);
    CHECK(central_height(surf(s3, {"0/0", "0/0/0"})) == 2);
    TreeFamily h24 = TreeFamily::higman(2, 4);
    CHECK(central_height(surf(h24, {"1/0"})) == 2);

    AdmissibleSurface spine = surf(s3, {""});
    CHECK(tau_step(spine) == spine);

    AdmissibleSurface seg = surf(s3, {"0/0", "0/0/0"});
    AdmissibleSurface up = tau_step(seg);
    CHECK(central_height(up) == 1);
    CHECK(up.height() == seg.height() + 1);

    // Iterating central_height times lands on the spine.
    AdmissibleSurface cur = surf(h24, {"1/0/1", "1/0/1/0"});
    int steps = central_height(cur);
    for (int i = 0; i < steps; ++i) cur = tau_step(cur);
    CHECK(central_height(cur) == 0);
    CHECK(tau_step(cur) == cur);
}

TEST_CASE("tau strictly decreases positive central height") {
    TreeFamily h23 = TreeFamily::higman(2, 3);
    AdmissibleSurface s = surf(h23, {"2/1/0"});
    while (central_height(s) > 0) {
        int before = central_height(s);
        AdmissibleSurface t = tau_step(s);
        CHECK(central_height(t) == before - 1);
        s = t;
    }
    CHECK(s.contains_center());
}

TEST_CASE("collapse edge") {
    CHECK(collapse_edge(TreeFamily::regular(2)) == TreeFamily::higman(2, 4));
    CHECK(collapse_edge(TreeFamily::regular(3)) == TreeFamily::higman(3, 6));
    CHECK(collapse_edge(TreeFamily::higman(2, 4)) == TreeFamily::higman(2, 5));
    CHECK(collapse_edge(collapse_edge(TreeFamily::regular(2))) ==
          collapse_edge(TreeFamily::higman(2, 4)));
    // Twice on Regular(n) = Higman(n, 3n-1).
    for (int n = 2; n <= 5; ++n)
        CHECK(collapse_edge(collapse_edge(TreeFamily::regular(n))) ==
              TreeFamily::higman(n, 3 * n - 1));
    CHECK_THROWS_AS(collapse_edge(TreeFamily::lamplighter()), Error);
}

TEST_CASE("surface serialization round-trips") {
    TreeFamily h23 = TreeFamily::higman(2, 3);
    AdmissibleSurface s = surf(h23, {"", "0", "0/1"});
    CHECK(s.serialize() == "\n0\n0/1\n");
    CHECK(AdmissibleSurface::parse(h23, s.serialize()) == s);

    AdmissibleSurface t = surf(h23, {"2/1"});
    CHECK(AdmissibleSurface::parse(h23, t.serialize()) == t);
}

TEST_CASE("adjacency") {
    TreeFamily h23 = TreeFamily::higman(2, 3);
    AdmissibleSurface s = surf(h23, {"", "0"});
    auto adj = s.adjacent_polygons();
    CHECK(adj.size() == 4);  // one per frontier arc
    CHECK(s.is_adjacent(PolygonAddress::parse("1")));
    CHECK(s.is_adjacent(PolygonAddress::parse("0/0")));
    CHECK_FALSE(s.is_adjacent(PolygonAddress::parse("1/0")));
    CHECK_FALSE(s.is_adjacent(PolygonAddress::parse("0")));

    AdmissibleSurface off = surf(h23, {"1/0"});
    CHECK(off.is_adjacent(PolygonAddress::parse("1")));
}

TEST_CASE("frontier count invariant across enumerated spine surfaces") {
    // |Fr| = m + (h-1)(n-1) for surfaces containing the center, h <= 8 layers
    // grown along a fixed path; full small enumeration is covered above.
    for (int n = 1; n <= 3; ++n) {
        for (int m = 1; m <= 4; ++m) {
            TreeFamily f = TreeFamily::higman(n, m);
            AdmissibleSurface s = surf(f, {""});
            for (int h = 1; h <= 8; ++h) {
                CHECK(static_cast<int>(frontier_arcs(s).size()) == m + (h - 1) * (n - 1));
                s = s.with_polygon(s.adjacent_polygons().front());
            }
        }
    }
}
