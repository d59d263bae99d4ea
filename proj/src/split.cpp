#include "largeness/split.hpp"

#include <stdexcept>
#include <string>

#include "largeness/homology.hpp"

namespace largeness {

  namespace {
    enum class Side { a, b, both };
  }  // namespace

  Decomposition build_split(QuotientComplex const& k) {
    if (!k.cover.phi.is_standard()) {
      throw std::invalid_argument(
          "the A/B decomposition needs the standard phi = (1, 0, ..., 0)");
    }
    auto const n = k.cover.n;
    if (n < 3) {
      throw std::invalid_argument("the A/B decomposition needs n >= 3");
    }
    auto const h  = (n + 1) / 2;
    auto const uh = static_cast<std::size_t>(h);

    Decomposition d;
    d.source = k;
    d.n      = n;
    d.half   = h;

    // Circle edge e_j is (generator 1, sheet j), which has id j.
    auto first  = subdivide_edge(k.complex(), 0);
    auto second = subdivide_edge(first.complex, uh);
    d.subdivided = std::move(second.complex);
    auto const m0 = first.provenance.new_vertices[0];
    auto const mh = second.provenance.new_vertices[0];
    d.cut_points  = {m0, mh};

    std::vector<Side> vertex_side(d.subdivided.num_vertices(), Side::b);
    for (std::size_t v = 1; v <= uh; ++v) {
      vertex_side[v] = Side::a;
    }
    vertex_side[m0] = Side::both;
    vertex_side[mh] = Side::both;
    auto const is_cut = [&](std::size_t v) { return v == m0 || v == mh; };

    std::vector<Side> cell_side(d.subdivided.num_cells(), Side::b);
    d.crossing_log.resize(k.instances.size());
    for (std::size_t i = 0; i < k.instances.size(); ++i) {
      auto const& inst = k.instances[i];
      auto&       log  = d.crossing_log[i];
      log.instance     = i;
      log.phi_trivial  = inst.phi_trivial();

      auto const               path = d.subdivided.cell(inst.cell).boundary;
      std::vector<std::size_t> positions;
      for (std::size_t j = 0; j < path.size(); ++j) {
        if (is_cut(d.subdivided.step_source(path[j]))) {
          positions.push_back(j);
        }
      }
      log.crossings = positions.size();
      if (positions.empty()) {
        cell_side[inst.cell] = vertex_side[d.subdivided.step_source(path[0])];
        log.sectors          = {inst.cell};
        continue;
      }
      auto sub = subdivide_cell_radially(d.subdivided, inst.cell, positions);
      d.subdivided     = std::move(sub.complex);
      log.centre       = sub.provenance.new_vertices[0];
      log.radial_edges = sub.provenance.new_edges;
      log.sectors      = sub.provenance.cell_image[inst.cell];
      vertex_side.push_back(Side::both);
      cell_side.resize(d.subdivided.num_cells(), Side::b);
      for (std::size_t j = 0; j < positions.size(); ++j) {
        // The arc of sector j leaves P along step positions[j].
        auto arc_vertex = d.subdivided.step_target(path[positions[j]]);
        cell_side[log.sectors[j]] = vertex_side[arc_vertex];
      }
    }

    d.a = Subcomplex::none(d.subdivided);
    d.b = Subcomplex::none(d.subdivided);
    for (std::size_t v = 0; v < d.subdivided.num_vertices(); ++v) {
      d.a.vertices[v] = vertex_side[v] != Side::b;
      d.b.vertices[v] = vertex_side[v] != Side::a;
    }
    for (std::size_t e = 0; e < d.subdivided.num_edges(); ++e) {
      auto const& edge = d.subdivided.edge(e);
      auto        side = vertex_side[edge.src] == Side::both
                             ? vertex_side[edge.dst]
                             : vertex_side[edge.src];
      d.a.edges[e] = side != Side::b;
      d.b.edges[e] = side != Side::a;
    }
    for (std::size_t c = 0; c < d.subdivided.num_cells(); ++c) {
      d.a.cells[c] = cell_side[c] == Side::a;
      d.b.cells[c] = cell_side[c] == Side::b;
    }
    if (!d.a.is_closed_in(d.subdivided) || !d.b.is_closed_in(d.subdivided)) {
      throw std::logic_error("A/B split produced a non-closed side");
    }
    d.gamma = build_gamma(d);
    return d;
  }

  CrossingCounts crossing_count(Decomposition const& d) {
    CrossingCounts out;
    for (auto const& log : d.crossing_log) {
      out.per_instance.push_back(log.crossings);
      out.total += log.crossings;
      if (!log.phi_trivial) {
        out.total_non_trivial += log.crossings;
      }
    }
    return out;
  }

  Subcomplex build_gamma(Decomposition const& d) {
    auto g = Subcomplex::none(d.subdivided);
    for (auto v : d.cut_points) {
      g.vertices[v] = true;
    }
    for (auto const& log : d.crossing_log) {
      if (log.crossings == 0) {
        continue;
      }
      if (!log.phi_trivial) {
        g.vertices[log.centre] = true;
        for (auto e : log.radial_edges) {
          g.edges[e] = true;
        }
      } else {
        // The sectors' boundaries minus the radial edges are exactly the
        // subdivided X_n edges the cell runs over.
        for (auto c : log.sectors) {
          for (auto const& s : d.subdivided.cell(c).boundary) {
            g.edges[s.edge] = true;
          }
        }
        for (auto e : log.radial_edges) {
          g.edges[e] = false;
        }
      }
    }
    g.close_in(d.subdivided);
    return g;
  }

  std::int64_t crossing_bound(QuotientComplex const& k) {
    std::int64_t total = 0;
    for (auto const& r : k.relators) {
      auto const f = phi_eval(k.cover.phi, r.word);
      if (f == 0) {
        continue;
      }
      auto const len = static_cast<std::int64_t>(r.word.size());
      total += f * f * (4 * delta(k.cover.phi, r.word) + 6) * len;
    }
    return total;
  }

  void ClaimsReport::evaluate() {
    c1 = static_cast<std::int64_t>(crossings_non_trivial) <= crossing_bound;
    c2 = dp_gamma <= gamma_edges;
    c3 = static_cast<std::int64_t>(dp_k_bar) >= c3_lower_bound();
    c4 = kernel_to_intersection >= kernel_to_gamma;
    c5 = components_intersection <= 2
         && kernel_to_intersection <= kernel_a + kernel_b + h0_intersection;
    c6 = static_cast<std::int64_t>(kernel_a) <= c6_upper_bound()
         && static_cast<std::int64_t>(kernel_b) <= c6_upper_bound();
  }

  ClaimsReport verify_claims(Decomposition const& d, FpScalar p) {
    if (!is_prime(p)) {
      throw std::invalid_argument(std::to_string(p) + " is not prime");
    }
    if (d.n % p != 0) {
      throw std::invalid_argument("p = " + std::to_string(p)
                                  + " does not divide n = "
                                  + std::to_string(d.n));
    }
    auto const& q = d.source;
    auto const& K = d.subdivided;

    ClaimsReport r;
    r.n    = d.n;
    r.p    = p;
    r.rank = q.cover.spec.rank;

    auto const x_n = subcomplex(q.complex(), Subcomplex::one_skeleton(q.complex()));
    r.dp_x_n   = d_p(x_n.complex, p);
    r.dp_k_bar = d_p(q.complex(), p);

    auto const gamma = subcomplex(K, d.gamma);
    r.dp_gamma    = d_p(gamma.complex, p);
    r.gamma_edges = gamma.complex.num_edges();

    r.crossings_non_trivial = crossing_count(d).total_non_trivial;
    r.crossing_bound        = crossing_bound(q);
    for (auto const& rel : q.relators) {
      auto f = phi_eval(q.cover.phi, rel.word);
      r.sum_abs_phi += f < 0 ? -f : f;
    }

    auto const meet  = d.intersection();
    auto const inter = subcomplex(K, meet);
    r.h0_intersection         = h0_dim(inter.complex, p);
    r.components_intersection = components(inter.complex).count;
    r.kernel_to_intersection  = restriction_kernel_dim(K, meet, p);
    r.kernel_to_gamma         = restriction_kernel_dim(K, d.gamma, p);

    auto const a = subcomplex(K, d.a);
    auto const b = subcomplex(K, d.b);
    r.kernel_a   = restriction_kernel_dim(a.complex, pullback(meet, a), p);
    r.kernel_b   = restriction_kernel_dim(b.complex, pullback(meet, b), p);

    r.evaluate();
    return r;
  }

}  // namespace largeness
