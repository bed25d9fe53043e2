#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cobord/complex.hpp"
#include "fixtures.hpp"

using namespace cobord;
using namespace fixtures;

TEST_CASE("validate_complex accepts standard complexes") {
  SurfaceComplex s2 = octahedron();
  CHECK(s2.edge_count() == 12);
  CHECK(s2.closed());

  SurfaceComplex c = circle_complex(12);
  CHECK(c.closed());

  SurfaceComplex cap = octahedron_cap();
  CHECK_FALSE(cap.closed());
  CHECK(cap.vertex_on_boundary[1]);
  CHECK_FALSE(cap.vertex_on_boundary[0]);

  CHECK(grid_torus(4).top_count() == 32);
}

TEST_CASE("validate_complex rejects bad gluings") {
  CHECK_THROWS_WITH_AS(mobius_band(6), doctest::Contains("NonOrientable"), Error);

  // Orientable but incoherently oriented: one torus triangle flipped.
  std::vector<std::array<int, 3>> tris;
  int G = 3;
  for (int y = 0; y < G; ++y)
    for (int x = 0; x < G; ++x) {
      int v00 = torus_vertex(G, x, y), v10 = torus_vertex(G, x + 1, y);
      int v11 = torus_vertex(G, x + 1, y + 1), v01 = torus_vertex(G, x, y + 1);
      if (x == 0 && y == 0)
        tris.push_back({v11, v10, v00});
      else
        tris.push_back({v00, v10, v11});
      tris.push_back({v00, v11, v01});
    }
  CHECK_THROWS_WITH_AS(validate_complex(2, G * G, tris, {}), doctest::Contains("Unglued"), Error);

  // Edge in three triangles.
  CHECK_THROWS_WITH_AS(validate_complex(2, 5, {{0, 1, 2}, {0, 2, 3}, {2, 0, 4}}, {}),
                       doctest::Contains("NonManifold"), Error);
  // Two fans meeting at a vertex.
  CHECK_THROWS_WITH_AS(validate_complex(2, 5, {{0, 1, 2}, {0, 3, 4}}, {}),
                       doctest::Contains("NonManifold"), Error);
  // Vertex in three segments.
  CHECK_THROWS_WITH_AS(validate_complex(1, 4, {}, {{0, 1}, {0, 2}, {0, 3}}),
                       doctest::Contains("NonManifold"), Error);
}

TEST_CASE("relative homology of the standard fixtures") {
  auto h_top_minus_1 = [](const SurfaceComplex& m) {
    auto [dn, dn1] = relative_boundary_matrices(m);
    return homology_group(dn1, dn);
  };
  HomologyGroup torus = h_top_minus_1(grid_torus(3));
  CHECK(torus.betti == 2);
  CHECK(torus.torsion.empty());

  HomologyGroup sphere = h_top_minus_1(octahedron());
  CHECK(sphere.betti == 0);
  CHECK(sphere.torsion.empty());

  HomologyGroup circle = h_top_minus_1(circle_complex(7));  // H_0 in dimension 1
  CHECK(circle.betti == 1);

  HomologyGroup disk = h_top_minus_1(octahedron_cap());  // H_1(D^2, boundary) = 0
  CHECK(disk.betti == 0);

  HomologyGroup interval = h_top_minus_1(interval_complex(4));  // H_0(I, dI) = 0
  CHECK(interval.betti == 0);

  HomologyGroup g2 = h_top_minus_1(genus2(4));
  CHECK(g2.betti == 4);
  CHECK(g2.torsion.empty());
}

TEST_CASE("validate_hypersurface accepts curves and rejects improper data") {
  SurfaceComplex t = grid_torus(4);
  Hypersurface mer = torus_meridian(t, 4, 0);
  CHECK(mer.cells.size() == 4);

  // Proper arc across the cap, through the pole.
  SurfaceComplex cap = octahedron_cap();
  Hypersurface arc;
  arc.cells = {cap.edge_id(0, 1), cap.edge_id(0, 3)};
  arc.positive = {cap.inducing_triangle(1, 0), cap.inducing_triangle(0, 3)};
  CHECK_NOTHROW(validate_hypersurface(cap, arc));

  // Free interior endpoint.
  Hypersurface dangling;
  dangling.cells = {cap.edge_id(0, 1)};
  dangling.positive = {cap.inducing_triangle(0, 1)};
  CHECK_THROWS_WITH_AS(validate_hypersurface(cap, dangling), doctest::Contains("NotProper"),
                       Error);

  // Boundary edge as a cell.
  Hypersurface onb;
  onb.cells = {cap.edge_id(1, 2)};
  onb.positive = {cap.inducing_triangle(1, 2)};
  CHECK_THROWS_WITH_AS(validate_hypersurface(cap, onb), doctest::Contains("CellOnBoundary"),
                       Error);

  // Inconsistent co-orientation: flip one cell of a meridian.
  Hypersurface bad = mer;
  int e0 = bad.cells[0];
  bad.positive[0] = t.edge_tri_inducing[e0] == bad.positive[0] ? t.edge_tri_anti[e0]
                                                               : t.edge_tri_inducing[e0];
  CHECK_THROWS_WITH_AS(validate_hypersurface(t, bad),
                       doctest::Contains("InconsistentCoorientation"), Error);

  // Empty hypersurface is valid.
  CHECK_NOTHROW(validate_hypersurface(t, Hypersurface{}));
}

TEST_CASE("complement components and sides on the sphere") {
  SurfaceComplex s2 = octahedron();
  // Equator walked 1->2->3->4; positive side is the northern cap.
  Hypersurface eq = curve_from_walk(s2, {1, 2, 3, 4});
  CutResult cut = complement_components(s2, eq);
  REQUIRE(cut.chambers.size() == 2);
  auto comps = hypersurface_components(s2, eq);
  REQUIRE(comps.size() == 1);
  SideIncidence ch0 = side_incidence(s2, eq, comps[0], cut, 0);
  SideIncidence ch1 = side_incidence(s2, eq, comps[0], cut, 1);
  CHECK(ch0.touches_positive != ch1.touches_positive);
  CHECK(ch0.touches_negative != ch1.touches_negative);
  CHECK(ch0.touches_positive != ch0.touches_negative);

  // Empty sigma: one chamber.
  CHECK(complement_components(s2, Hypersurface{}).chambers.size() == 1);
}

TEST_CASE("nonseparating torus curve leaves one chamber touching both sides") {
  SurfaceComplex t = grid_torus(4);
  Hypersurface mer = torus_meridian(t, 4, 0);
  CutResult cut = complement_components(t, mer);
  REQUIRE(cut.chambers.size() == 1);
  auto comps = hypersurface_components(t, mer);
  REQUIRE(comps.size() == 1);
  SideIncidence inc = side_incidence(t, mer, comps[0], cut, 0);
  CHECK(inc.touches_positive);
  CHECK(inc.touches_negative);

  // Two parallel meridians: two chambers, two components.
  Hypersurface two = mer;
  Hypersurface other = torus_meridian(t, 4, 2);
  two.cells.insert(two.cells.end(), other.cells.begin(), other.cells.end());
  two.positive.insert(two.positive.end(), other.positive.begin(), other.positive.end());
  two = validate_hypersurface(t, two);
  CHECK(complement_components(t, two).chambers.size() == 2);
  CHECK(hypersurface_components(t, two).size() == 2);
}

TEST_CASE("dimension-1 chambers: circle with marks") {
  SurfaceComplex c12 = circle_complex(12);
  Hypersurface six = marks(c12, {{0, 1}, {2, 1}, {4, 1}, {6, 1}, {8, 1}, {10, 1}});
  CHECK(complement_components(c12, six).chambers.size() == 6);
  CHECK(hypersurface_components(c12, six).size() == 6);

  Hypersurface one = marks(c12, {{3, 1}});
  CHECK(complement_components(c12, one).chambers.size() == 1);
  CHECK(hypersurface_components(c12, one).size() == 1);

  CHECK(complement_components(c12, Hypersurface{}).chambers.size() == 1);

  // Every segment marked on a small circle still cuts into n chambers.
  SurfaceComplex c3 = circle_complex(3);
  Hypersurface all = marks(c3, {{0, 1}, {1, 1}, {2, 1}});
  CHECK(complement_components(c3, all).chambers.size() == 3);

  // A single mark: the one chamber wraps around to touch both sides.
  CutResult cut = complement_components(c12, one);
  auto comps = hypersurface_components(c12, one);
  SideIncidence inc = side_incidence(c12, one, comps[0], cut, 0);
  CHECK(inc.touches_positive);
  CHECK(inc.touches_negative);

  // Partition: chamber sizes add up to the piece count.
  size_t total = 0;
  for (const auto& ch : complement_components(c12, six).chambers) total += ch.top_cells.size();
  CHECK(total == 18);  // 6 unmarked + 6 marked segments split in two
}

TEST_CASE("class_of: signs, reversal, units") {
  SurfaceComplex c = circle_complex(6);
  CHECK(class_of(c, Hypersurface{}).coeff ==
        std::vector<long long>(relative_basis(c).size(), 0));

  Hypersurface plus = marks(c, {{2, 1}});
  CycleVector z = class_of(c, plus);
  long long sum = 0;
  int nonzero = 0;
  for (long long v : z.coeff) {
    sum += v;
    nonzero += v != 0;
  }
  CHECK(nonzero == 1);
  CHECK(sum == 1);

  CycleVector zr = class_of(c, reverse_hypersurface(c, plus));
  for (size_t i = 0; i < z.coeff.size(); ++i) CHECK(zr.coeff[i] == -z.coeff[i]);

  SurfaceComplex t = grid_torus(4);
  Hypersurface mer = torus_meridian(t, 4, 1);
  CycleVector zm = class_of(t, mer);
  CycleVector zmr = class_of(t, reverse_hypersurface(t, mer));
  for (size_t i = 0; i < zm.coeff.size(); ++i) CHECK(zmr.coeff[i] == -zm.coeff[i]);
}

TEST_CASE("classes_equal agrees with the SNF route") {
  SurfaceComplex t = grid_torus(4);
  Hypersurface m0 = torus_meridian(t, 4, 0);
  Hypersurface m2 = torus_meridian(t, 4, 2);
  Hypersurface l0 = torus_longitude(t, 4, 0);

  auto snf_equal = [&](const Hypersurface& a, const Hypersurface& b) {
    auto [dn, dn1] = relative_boundary_matrices(t);
    (void)dn1;
    CycleVector z = cycle_sub(class_of(t, a), class_of(t, b));
    return is_relative_boundary(z.coeff, dn);
  };

  CHECK(classes_equal(t, m0, m2));
  CHECK(snf_equal(m0, m2));
  CHECK_FALSE(classes_equal(t, m0, l0));
  CHECK_FALSE(snf_equal(m0, l0));
  CHECK_FALSE(classes_equal(t, m0, reverse_hypersurface(t, m2)));
  CHECK_FALSE(snf_equal(m0, reverse_hypersurface(t, m2)));
  CHECK(classes_equal(t, m0, m0));

  // Circle marks: same-signed marks are homologous, opposite ones are not.
  SurfaceComplex c = circle_complex(8);
  CHECK(classes_equal(c, marks(c, {{1, 1}}), marks(c, {{5, 1}})));
  CHECK_FALSE(classes_equal(c, marks(c, {{1, 1}}), marks(c, {{5, -1}})));
  CHECK_FALSE(classes_equal(c, marks(c, {{1, 1}, {3, 1}}), marks(c, {{5, 1}})));

  // Null-homologous sphere curve: equator ~ empty.
  SurfaceComplex s2 = octahedron();
  Hypersurface eq = curve_from_walk(s2, {1, 2, 3, 4});
  CHECK(classes_equal(s2, eq, Hypersurface{}));
}

TEST_CASE("loop_intersection counts signed crossings") {
  SurfaceComplex t = grid_torus(4);
  Hypersurface mer = torus_meridian(t, 4, 1);
  auto loop = torus_row_triangle_loop(4, 0);
  long long c = loop_intersection(t, loop, mer);
  CHECK((c == 1 || c == -1));

  Hypersurface lon = torus_longitude(t, 4, 2);
  std::vector<int> vloop;
  for (int y = 0; y < 4; ++y) {
    vloop.push_back(2 * (y * 4 + 3));
    vloop.push_back(2 * (y * 4 + 3) + 1);
  }
  CHECK(loop_intersection(t, vloop, mer) == 0);
  long long lc = loop_intersection(t, vloop, lon);
  CHECK((lc == 1 || lc == -1));

  CHECK_THROWS_WITH_AS(loop_intersection(t, {0, 5}, mer), doctest::Contains("LoopNotClosed"),
                       Error);

  // Dimension 1: full circuit of the circle against marks of mixed signs.
  SurfaceComplex c12 = circle_complex(12);
  Hypersurface ab = marks(c12, {{0, 1}, {2, 1}, {4, 1}, {6, -1}, {8, -1}, {10, -1}});
  std::vector<int> circuit;
  for (int s = 0; s < 12; ++s) circuit.push_back(s);
  CHECK(loop_intersection(c12, circuit, ab) == 0);
  Hypersurface allplus = marks(c12, {{0, 1}, {2, 1}, {4, 1}, {6, 1}, {8, 1}, {10, 1}});
  long long full = loop_intersection(c12, circuit, allplus);
  CHECK((full == 6 || full == -6));
}

TEST_CASE("loop_intersection depends only on the loop's homology class") {
  // Homologous triangle loops (rows of the torus) cross the meridian with the
  // same signed count.
  SurfaceComplex t = grid_torus(4);
  Hypersurface mer = torus_meridian(t, 4, 1);
  long long c0 = loop_intersection(t, torus_row_triangle_loop(4, 0), mer);
  long long c1 = loop_intersection(t, torus_row_triangle_loop(4, 1), mer);
  long long c2 = loop_intersection(t, torus_row_triangle_loop(4, 2), mer);
  CHECK(c0 == c1);
  CHECK(c1 == c2);
  // A doubled row crosses twice as often.
  auto twice = torus_row_triangle_loop(4, 0);
  auto more = torus_row_triangle_loop(4, 0);
  twice.insert(twice.end(), more.begin(), more.end());
  CHECK(loop_intersection(t, twice, mer) == 2 * c0);
}

TEST_CASE("subhypersurface extracts components") {
  SurfaceComplex t = grid_torus(4);
  Hypersurface m0 = torus_meridian(t, 4, 0);
  Hypersurface m2 = torus_meridian(t, 4, 2);
  Hypersurface both = m0;
  both.cells.insert(both.cells.end(), m2.cells.begin(), m2.cells.end());
  both.positive.insert(both.positive.end(), m2.positive.begin(), m2.positive.end());
  both = validate_hypersurface(t, both);
  auto comps = hypersurface_components(t, both);
  REQUIRE(comps.size() == 2);
  Hypersurface back0 = subhypersurface(both, comps[0]);
  Hypersurface back1 = subhypersurface(both, comps[1]);
  CHECK((back0 == m0 || back0 == m2));
  CHECK((back1 == m0 || back1 == m2));
  CHECK_FALSE(back0 == back1);
}
