#include <random>

#include <catch_amalgamated.hpp>

#include "largeness/complex.hpp"
#include "largeness/homology.hpp"
#include "support.hpp"

using namespace largeness;

namespace {
  // One vertex, loops a and b, one cell a b a^-1 b^-1: the torus.
  TwoComplex torus() {
    TwoComplex k;
    k.add_vertex();
    k.add_edge(0, 0, "a");
    k.add_edge(0, 0, "b");
    k.add_cell({{0, 1}, {1, 1}, {0, -1}, {1, -1}});
    return k;
  }
}  // namespace

TEST_CASE("add_cell rejects open or empty paths", "[complex]") {
  TwoComplex k;
  k.add_vertex();
  k.add_vertex();
  k.add_edge(0, 1);
  CHECK_THROWS_AS(k.add_cell({}), std::invalid_argument);
  CHECK_THROWS_AS(k.add_cell({{0, 1}}), std::invalid_argument);
  CHECK_THROWS_AS(k.add_cell({{5, 1}}), std::invalid_argument);
  CHECK_NOTHROW(k.add_cell({{0, 1}, {0, -1}}));
  CHECK_THROWS_AS(k.add_edge(0, 9), std::out_of_range);
}

TEST_CASE("euler characteristic and components", "[complex]") {
  auto k = torus();
  CHECK(euler_characteristic(k) == 0);
  CHECK(components(k).count == 1);

  TwoComplex two;
  two.add_vertex();
  two.add_vertex();
  CHECK(components(two).count == 2);
  two.add_edge(1, 0);
  CHECK(components(two).count == 1);
}

TEST_CASE("subdivide_edge rewrites attaching paths", "[complex]") {
  auto const k = torus();
  auto const s = subdivide_edge(k, 0);
  auto const& x = s.complex;
  CHECK(x.num_vertices() == 2);
  CHECK(x.num_edges() == 3);
  CHECK(x.edge(0).src == 0);
  CHECK(x.edge(0).dst == 1);
  CHECK(x.edge(2).src == 1);
  CHECK(x.edge(2).dst == 0);
  EdgePath const expected{{0, 1}, {2, 1}, {1, 1}, {2, -1}, {0, -1}, {1, -1}};
  CHECK(x.cell(0).boundary == expected);
  CHECK(s.provenance.edge_image[0] == EdgePath{{0, 1}, {2, 1}});
  CHECK(s.provenance.new_vertices == std::vector<std::size_t>{1});
  CHECK(s.provenance.new_edges == std::vector<std::size_t>{2});
  CHECK_NOTHROW(x.validate());
}

TEST_CASE("subdivide_cell_radially", "[complex]") {
  auto const k = torus();
  CHECK_THROWS_AS(subdivide_cell_radially(k, 0, {}), std::invalid_argument);

  auto const  s = subdivide_cell_radially(k, 0, {0, 2});
  auto const& x = s.complex;
  CHECK(x.num_vertices() == 2);
  CHECK(x.num_edges() == 4);
  CHECK(x.num_cells() == 2);
  // sector 0: r0, a, b, r1^-1
  EdgePath const s0{{2, 1}, {0, 1}, {1, 1}, {3, -1}};
  EdgePath const s1{{3, 1}, {0, -1}, {1, -1}, {2, -1}};
  CHECK(x.cell(0).boundary == s0);
  CHECK(x.cell(1).boundary == s1);
  CHECK(s.provenance.cell_image[0] == std::vector<std::size_t>{0, 1});
  CHECK(euler_characteristic(x) == euler_characteristic(k));
}

TEST_CASE("subcomplex extraction", "[complex]") {
  auto const k   = torus();
  auto       sel = Subcomplex::one_skeleton(k);
  CHECK(sel.is_closed_in(k));
  auto const ex = subcomplex(k, sel);
  CHECK(ex.complex.num_edges() == 2);
  CHECK(ex.complex.num_cells() == 0);

  auto bad     = Subcomplex::none(k);
  bad.cells[0] = true;
  CHECK_FALSE(bad.is_closed_in(k));
  CHECK_THROWS_AS(subcomplex(k, bad), std::invalid_argument);
  bad.close_in(k);
  CHECK(bad == Subcomplex::all(k));
}

TEST_CASE("dump format", "[complex]") {
  auto const text = dump(torus());
  CHECK(text.find("V 0") != std::string::npos);
  CHECK(text.find("E 0 0 0 a") != std::string::npos);
  CHECK(text.find("C 0 (0,+1) (1,+1) (0,-1) (1,-1)") != std::string::npos);
}

TEST_CASE("subdivision preserves chi, components and d_p", "[complex][property]") {
  std::mt19937 rng(17);
  for (int trial = 0; trial < 200; ++trial) {
    auto const k = testing::random_complex(rng);
    if (k.num_edges() == 0) {
      continue;
    }
    auto const e = std::uniform_int_distribution<std::size_t>(0, k.num_edges() - 1)(rng);
    auto const s = subdivide_edge(k, e);
    CHECK_NOTHROW(s.complex.validate());
    CHECK(euler_characteristic(s.complex) == euler_characteristic(k));
    CHECK(components(s.complex).count == components(k).count);
    for (FpScalar p : {2, 3}) {
      CHECK(d_p(s.complex, p) == d_p(k, p));
    }

    if (k.num_cells() == 0) {
      continue;
    }
    auto const  c   = std::uniform_int_distribution<std::size_t>(0, k.num_cells() - 1)(rng);
    auto const& len = k.cell(c).boundary.size();
    std::vector<std::size_t> pos;
    for (std::size_t i = 0; i < len; ++i) {
      if (std::bernoulli_distribution(0.4)(rng)) {
        pos.push_back(i);
      }
    }
    if (pos.empty()) {
      pos.push_back(0);
    }
    auto const r = subdivide_cell_radially(k, c, pos);
    CHECK_NOTHROW(r.complex.validate());
    CHECK(r.complex.num_cells() == k.num_cells() + pos.size() - 1);
    CHECK(euler_characteristic(r.complex) == euler_characteristic(k));
    for (FpScalar p : {2, 3}) {
      CHECK(d_p(r.complex, p) == d_p(k, p));
      CHECK(h2_dim(r.complex, p) == h2_dim(k, p));
    }
  }
}

TEST_CASE("push_forward keeps selections closed", "[complex][property]") {
  std::mt19937 rng(23);
  for (int trial = 0; trial < 200; ++trial) {
    auto const k = testing::random_complex(rng);
    if (k.num_edges() == 0) {
      continue;
    }
    auto const sel = testing::random_subcomplex(rng, k);
    auto const e   = std::uniform_int_distribution<std::size_t>(0, k.num_edges() - 1)(rng);
    auto const s   = subdivide_edge(k, e);
    auto const img = push_forward(sel, k, s);
    CHECK(img.is_closed_in(s.complex));
    CHECK(img.num_vertices() == sel.num_vertices() + (sel.edges[e] ? 1 : 0));
    CHECK(img.num_edges() == sel.num_edges() + (sel.edges[e] ? 1 : 0));
    CHECK(img.num_cells() == sel.num_cells());
  }
}

TEST_CASE("union and intersection of closed subcomplexes are closed", "[complex][property]") {
  std::mt19937 rng(29);
  for (int trial = 0; trial < 200; ++trial) {
    auto const k = testing::random_complex(rng);
    auto const x = testing::random_subcomplex(rng, k);
    auto const y = testing::random_subcomplex(rng, k);
    auto const u = unite(x, y);
    auto const i = intersect(x, y);
    CHECK(u.is_closed_in(k));
    CHECK(i.is_closed_in(k));
    CHECK(is_subset(i, x));
    CHECK(is_subset(x, u));

    auto const ex = subcomplex(k, u);
    auto const pi = pullback(i, ex);
    CHECK(pi.is_closed_in(ex.complex));
    CHECK(pi.num_edges() == i.num_edges());
    CHECK(pi.num_cells() == i.num_cells());
  }
}
