// Test-only generators and brute-force oracles. Nothing here calls into the
// elimination code it is used to check.

#ifndef LARGENESS_TESTS_SUPPORT_HPP_
#define LARGENESS_TESTS_SUPPORT_HPP_

#include <cstdint>
#include <deque>
#include <random>
#include <set>
#include <vector>

#include "largeness/complex.hpp"
#include "largeness/cover.hpp"
#include "largeness/fp_linalg.hpp"
#include "largeness/words.hpp"

namespace largeness::testing {

  inline Word random_word(std::mt19937& rng, int rank, std::size_t max_len) {
    std::uniform_int_distribution<int>         gen(1, rank);
    std::uniform_int_distribution<int>         sign(0, 1);
    std::uniform_int_distribution<std::size_t> len(0, max_len);
    std::vector<Letter>                         xs(len(rng));
    for (auto& x : xs) {
      x = {gen(rng), sign(rng) ? 1 : -1};
    }
    return Word::from_letters(xs);
  }

  inline Word random_cyclic_word(std::mt19937& rng, int rank, std::size_t max_len) {
    for (;;) {
      auto w = cyclic_reduce(random_word(rng, rank, max_len)).core;
      if (!w.empty()) {
        return w;
      }
    }
  }

  // Closed walk from a random vertex: a random walk followed by a shortest
  // path back to the start.
  inline EdgePath random_closed_walk(std::mt19937& rng, TwoComplex const& k) {
    std::vector<std::vector<PathStep>> out(k.num_vertices());
    for (std::size_t e = 0; e < k.num_edges(); ++e) {
      out[k.edge(e).src].push_back({e, 1});
      out[k.edge(e).dst].push_back({e, -1});
    }
    std::vector<std::size_t> starts;
    for (std::size_t v = 0; v < k.num_vertices(); ++v) {
      if (!out[v].empty()) {
        starts.push_back(v);
      }
    }
    if (starts.empty()) {
      return {};
    }
    auto const start = starts[std::uniform_int_distribution<std::size_t>(
        0, starts.size() - 1)(rng)];
    EdgePath    path;
    std::size_t v     = start;
    auto const  steps = std::uniform_int_distribution<int>(1, 5)(rng);
    for (int i = 0; i < steps; ++i) {
      auto const& choices = out[v];
      auto s = choices[std::uniform_int_distribution<std::size_t>(
          0, choices.size() - 1)(rng)];
      path.push_back(s);
      v = k.step_target(s);
    }
    // BFS back to start.
    std::vector<PathStep>  via(k.num_vertices());
    std::vector<bool>      seen(k.num_vertices(), false);
    std::deque<std::size_t> queue{v};
    seen[v] = true;
    while (!queue.empty() && !seen[start]) {
      auto u = queue.front();
      queue.pop_front();
      for (auto s : out[u]) {
        auto w = k.step_target(s);
        if (!seen[w]) {
          seen[w] = true;
          via[w]  = s;
          queue.push_back(w);
        }
      }
    }
    EdgePath back;
    for (auto w = start; w != v; w = k.step_source(via[w])) {
      back.push_back(via[w]);
    }
    path.insert(path.end(), back.rbegin(), back.rend());
    return path;
  }

  inline TwoComplex random_complex(std::mt19937& rng, std::size_t max_cells = 8) {
    TwoComplex k;
    auto const V = std::uniform_int_distribution<std::size_t>(1, 5)(rng);
    for (std::size_t v = 0; v < V; ++v) {
      k.add_vertex();
    }
    auto const                                  E = std::uniform_int_distribution<std::size_t>(0, 7)(rng);
    std::uniform_int_distribution<std::size_t> vert(0, V - 1);
    for (std::size_t e = 0; e < E; ++e) {
      k.add_edge(vert(rng), vert(rng));
    }
    auto const C = E == 0 ? 0 : std::uniform_int_distribution<std::size_t>(0, max_cells)(rng);
    for (std::size_t c = 0; c < C; ++c) {
      auto path = random_closed_walk(rng, k);
      if (!path.empty()) {
        k.add_cell(std::move(path));
      }
    }
    return k;
  }

  // Random closed subcomplex: random cells, edges and vertices, then closed.
  inline Subcomplex random_subcomplex(std::mt19937& rng, TwoComplex const& k) {
    std::bernoulli_distribution coin(0.5);
    auto                        s = Subcomplex::none(k);
    for (std::size_t i = 0; i < k.num_vertices(); ++i) {
      s.vertices[i] = coin(rng);
    }
    for (std::size_t i = 0; i < k.num_edges(); ++i) {
      s.edges[i] = coin(rng);
    }
    for (std::size_t i = 0; i < k.num_cells(); ++i) {
      s.cells[i] = coin(rng);
    }
    s.close_in(k);
    return s;
  }

  // Smallest closed subcomplex containing everything outside `a`.
  inline Subcomplex closed_complement(TwoComplex const& k, Subcomplex const& a) {
    auto b = Subcomplex::none(k);
    for (std::size_t i = 0; i < k.num_vertices(); ++i) {
      b.vertices[i] = !a.vertices[i];
    }
    for (std::size_t i = 0; i < k.num_edges(); ++i) {
      b.edges[i] = !a.edges[i];
    }
    for (std::size_t i = 0; i < k.num_cells(); ++i) {
      b.cells[i] = !a.cells[i];
    }
    b.close_in(k);
    return b;
  }

  // dim H^1(K; F_p) by enumerating every 1-cochain and 0-cochain. Only for
  // p^E and p^V in the low thousands.
  inline std::size_t brute_force_h1(TwoComplex const& k, std::int64_t p) {
    auto const E = k.num_edges();
    auto const V = k.num_vertices();
    auto       enumerate = [p](std::size_t len, auto&& visit) {
      std::vector<std::int64_t> x(len, 0);
      for (;;) {
        visit(x);
        std::size_t i = 0;
        while (i < len && ++x[i] == p) {
          x[i++] = 0;
        }
        if (i == len) {
          return;
        }
      }
    };
    std::size_t cocycles = 0;
    enumerate(E, [&](std::vector<std::int64_t> const& z) {
      for (auto const& cell : k.cells()) {
        std::int64_t s = 0;
        for (auto const& st : cell.boundary) {
          s += st.orientation * z[st.edge];
        }
        if (((s % p) + p) % p != 0) {
          return;
        }
      }
      ++cocycles;
    });
    std::set<std::vector<std::int64_t>> coboundaries;
    enumerate(V, [&](std::vector<std::int64_t> const& f) {
      std::vector<std::int64_t> d(E);
      for (std::size_t e = 0; e < E; ++e) {
        d[e] = (((f[k.edge(e).dst] - f[k.edge(e).src]) % p) + p) % p;
      }
      coboundaries.insert(std::move(d));
    });
    // |Z| / |B| = p^dim
    std::size_t dim   = 0;
    auto        ratio = cocycles / coboundaries.size();
    while (ratio > 1) {
      ratio /= static_cast<std::size_t>(p);
      ++dim;
    }
    return dim;
  }

  // Rank over F_p as log_p of the size of the row space, by enumeration.
  inline std::size_t brute_force_rank(FpMatrix const& m) {
    auto const p    = m.p();
    auto const rows = static_cast<std::size_t>(m.rows());
    std::set<std::vector<std::int64_t>> span;
    std::vector<std::int64_t>           coef(rows, 0);
    for (;;) {
      std::vector<std::int64_t> v(static_cast<std::size_t>(m.cols()), 0);
      for (std::size_t r = 0; r < rows; ++r) {
        for (Index c = 0; c < m.cols(); ++c) {
          v[static_cast<std::size_t>(c)]
              = (v[static_cast<std::size_t>(c)]
                 + coef[r] * m(static_cast<Index>(r), c))
                % p;
        }
      }
      span.insert(std::move(v));
      std::size_t i = 0;
      while (i < rows && ++coef[i] == p) {
        coef[i++] = 0;
      }
      if (i == rows) {
        break;
      }
    }
    std::size_t dim  = 0;
    auto        size = span.size();
    while (size > 1) {
      size /= static_cast<std::size_t>(p);
      ++dim;
    }
    return dim;
  }

  // Passages of each cell's lift through the midpoints of circle edges e_0
  // and e_{ceil(n/2)}, read straight off the unsubdivided attaching paths.
  inline std::vector<std::size_t> traced_crossings(QuotientComplex const& q) {
    auto const               h = static_cast<std::size_t>((q.cover.n + 1) / 2);
    std::vector<std::size_t> out;
    for (auto const& inst : q.instances) {
      std::size_t count = 0;
      for (auto const& s : q.complex().cell(inst.cell).boundary) {
        count += (s.edge == 0 || s.edge == h) ? 1 : 0;
      }
      out.push_back(count);
    }
    return out;
  }

  inline FpMatrix random_matrix(std::mt19937& rng, std::int64_t p, Index rows, Index cols) {
    std::uniform_int_distribution<std::int64_t> entry(0, p - 1);
    FpEntries                                   m(rows, cols);
    for (Index r = 0; r < rows; ++r) {
      for (Index c = 0; c < cols; ++c) {
        m(r, c) = entry(rng);
      }
    }
    return FpMatrix(p, std::move(m));
  }

}  // namespace largeness::testing

#endif  // LARGENESS_TESTS_SUPPORT_HPP_
