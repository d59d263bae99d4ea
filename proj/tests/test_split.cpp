#include <random>

#include <catch_amalgamated.hpp>

#include "largeness/certify.hpp"
#include "largeness/homology.hpp"
#include "largeness/split.hpp"
#include "support.hpp"

using namespace largeness;

namespace {
  FreeGroupSpec const F2{2};

  QuotientComplex quotient(std::vector<char const*> const& words,
                           std::int64_t                    n,
                           FreeGroupSpec const&            spec  = F2,
                           bool                            dedup = true) {
    std::vector<Relator> rs;
    for (auto const* w : words) {
      rs.push_back({parse_word(w, spec), ExponentMode::sweep, 0});
    }
    return build_quotient_complex(spec, rs, WeightedHom::standard(spec.rank), n, dedup);
  }
}  // namespace

TEST_CASE("split of the bare cover", "[split]") {
  auto const d = build_split(quotient({}, 4));
  CHECK(d.half == 2);
  CHECK(d.a.is_closed_in(d.subdivided));
  CHECK(d.b.is_closed_in(d.subdivided));
  CHECK(unite(d.a, d.b) == Subcomplex::all(d.subdivided));
  // A∩B is the two cut points
  auto const i = d.intersection();
  CHECK(i.num_vertices() == 2);
  CHECK(i.num_edges() == 0);

  auto const c = check_largeness_criterion(d.subdivided, d.a, d.b, 2);
  CHECK(c.kernel_a == 2);
  CHECK(c.kernel_b == 2);
}

TEST_CASE("split rejects small n and non-standard phi", "[split]") {
  CHECK_THROWS_AS(build_split(quotient({"b"}, 2)), std::invalid_argument);
  std::vector<Relator> rs{{parse_word("b", F2), ExponentMode::sweep, 0}};
  auto const q = build_quotient_complex(F2, rs, WeightedHom({1, 1}), 4, true);
  CHECK_THROWS_AS(build_split(q), std::invalid_argument);
}

TEST_CASE("crossings of a^n and (a^2)^n", "[split]") {
  auto const d  = build_split(quotient({"a"}, 6));
  auto const cc = crossing_count(d);
  CHECK(cc.per_instance == std::vector<std::size_t>{2});
  CHECK(cc.total_non_trivial == 2);
  // Γ is the radial star: centre, two radial edges, both cut points
  CHECK(d.gamma.num_edges() == 2);
  CHECK(d.gamma.num_vertices() == 3);
  CHECK(d.gamma.is_closed_in(d.subdivided));

  auto const d2  = build_split(quotient({"aa"}, 6));
  auto const cc2 = crossing_count(d2);
  CHECK(cc2.per_instance == std::vector<std::size_t>{4, 4});
  CHECK(cc2.total_non_trivial == 8);
}

TEST_CASE("a phi-trivial relator away from P adds nothing to gamma", "[split]") {
  auto const d = build_split(quotient({"b"}, 8));
  CHECK(crossing_count(d).total == 0);
  CHECK(d.gamma.num_edges() == 0);
  CHECK(d.gamma.num_vertices() == 2);
}

TEST_CASE("a phi-trivial relator through P puts its X_n edges into gamma", "[split]") {
  // aba^-1b^-1 starting at sheet 0 crosses e_0 twice
  auto const d = build_split(quotient({"abAB"}, 4));
  auto const cc = crossing_count(d);
  CHECK(cc.total_non_trivial == 0);
  CHECK(cc.total > 0);
  CHECK(d.gamma.num_edges() > 0);
  CHECK(d.gamma.is_closed_in(d.subdivided));
  auto const r = verify_claims(d, 2);
  CHECK(r.all_hold());
}

TEST_CASE("crossing bound", "[split]") {
  // |phi|^2 (4 delta + 6) len
  CHECK(crossing_bound(quotient({"a"}, 6)) == 10);
  CHECK(crossing_bound(quotient({"aa"}, 6)) == 4 * 14 * 2);
  CHECK(crossing_bound(quotient({"b"}, 6)) == 0);
  CHECK(crossing_bound(quotient({"ab", "b"}, 6)) == 20);
}

TEST_CASE("claims for <a,b | (ab)^n, b^n>", "[split]") {
  for (std::int64_t n = 4; n <= 16; n += 2) {
    auto const d = build_split(quotient({"ab", "b"}, n));
    auto const r = verify_claims(d, 2);
    INFO("n = " << n);
    CHECK(r.all_hold());
    CHECK(r.components_intersection <= 2);
    CHECK(static_cast<std::int64_t>(r.dp_k_bar) >= r.c3_lower_bound());
  }
  auto const d = build_split(quotient({"ab"}, 6));
  CHECK_THROWS_AS(verify_claims(d, 4), std::invalid_argument);
  CHECK_THROWS_AS(verify_claims(d, 5), std::invalid_argument);
}

TEST_CASE("split invariants on random relators", "[split][property]") {
  std::mt19937 rng(67);
  for (int trial = 0; trial < 60; ++trial) {
    int const           d = std::uniform_int_distribution<int>(2, 3)(rng);
    FreeGroupSpec const spec{d};
    auto const n = std::uniform_int_distribution<std::int64_t>(3, 10)(rng);
    std::vector<Relator> rs;
    auto const r = std::uniform_int_distribution<int>(1, 2)(rng);
    for (int i = 0; i < r; ++i) {
      rs.push_back({testing::random_cyclic_word(rng, d, 4), ExponentMode::sweep, 0});
    }
    auto const q   = build_quotient_complex(spec, rs, WeightedHom::standard(d), n, true);
    auto const dec = build_split(q);
    INFO("trial " << trial << " n = " << n);

    CHECK_NOTHROW(dec.subdivided.validate());
    CHECK(dec.a.is_closed_in(dec.subdivided));
    CHECK(dec.b.is_closed_in(dec.subdivided));
    CHECK(dec.gamma.is_closed_in(dec.subdivided));
    CHECK(unite(dec.a, dec.b) == Subcomplex::all(dec.subdivided));
    CHECK(dec.gamma.num_cells() == 0);
    CHECK(dec.gamma.vertices[dec.cut_points[0]]);
    CHECK(dec.gamma.vertices[dec.cut_points[1]]);
    CHECK(euler_characteristic(dec.subdivided) == euler_characteristic(q.complex()));

    auto const cc     = crossing_count(dec);
    auto const traced = testing::traced_crossings(q);
    CHECK(cc.per_instance == traced);
    CHECK(static_cast<std::int64_t>(cc.total_non_trivial) <= crossing_bound(q));

    for (FpScalar p : {2, 3, 5}) {
      if (n % p != 0) {
        continue;
      }
      CHECK(d_p(dec.subdivided, p) == d_p(q.complex(), p));
      auto const report = verify_claims(dec, p);
      CHECK(report.all_hold());
      CHECK(report.kernel_a == restriction_kernel_dim_via_pair(
                                   subcomplex(dec.subdivided, dec.a).complex,
                                   pullback(dec.intersection(),
                                            subcomplex(dec.subdivided, dec.a)),
                                   p));
    }
  }
}

TEST_CASE("ClaimsReport::evaluate", "[split]") {
  ClaimsReport r;
  r.n                      = 6;
  r.p                      = 2;
  r.rank                   = 2;
  r.dp_k_bar               = 6;
  r.sum_abs_phi            = 1;
  r.crossing_bound         = 10;
  r.crossings_non_trivial  = 2;
  r.gamma_edges            = 2;
  r.kernel_a               = 3;
  r.kernel_b               = 3;
  r.kernel_to_intersection = 6;
  r.kernel_to_gamma        = 6;
  r.h0_intersection        = 1;
  r.components_intersection = 1;
  r.evaluate();
  CHECK(r.all_hold());
  r.kernel_a = 6;
  r.evaluate();
  CHECK_FALSE(r.c6);
  r.kernel_a = 3;
  r.dp_k_bar = 4;
  r.evaluate();
  CHECK_FALSE(r.c3);
}
