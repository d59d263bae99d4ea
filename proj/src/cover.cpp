#include "largeness/cover.hpp"

#include <map>
#include <numeric>
#include <stdexcept>
#include <string>

namespace largeness {

  TwoComplex build_bouquet(FreeGroupSpec const& spec) {
    if (spec.rank < 1) {
      throw std::invalid_argument("free group rank must be at least 1");
    }
    TwoComplex k;
    k.add_vertex("0");
    for (int j = 1; j <= spec.rank; ++j) {
      k.add_edge(0, 0, Word::from_letters(std::vector<Letter>{{j, 1}}).str());
    }
    return k;
  }

  CoverComplex build_cyclic_cover(FreeGroupSpec const& spec,
                                  WeightedHom const&   phi,
                                  std::int64_t         n,
                                  bool                 allow_disconnected) {
    if (spec.rank < 1) {
      throw std::invalid_argument("free group rank must be at least 1");
    }
    if (n < 1) {
      throw std::invalid_argument("number of sheets must be positive");
    }
    if (phi.rank() != spec.rank) {
      throw std::invalid_argument("phi has " + std::to_string(phi.rank())
                                  + " weights but rank is "
                                  + std::to_string(spec.rank));
    }
    if (!allow_disconnected && !phi.is_surjective()) {
      throw std::invalid_argument(
          "phi is not surjective (weights have gcd != 1); the cover would be "
          "disconnected");
    }
    CoverComplex out;
    out.n    = n;
    out.spec = spec;
    out.phi  = phi;
    for (std::int64_t v = 0; v < n; ++v) {
      out.complex.add_vertex(std::to_string(v));
    }
    for (int j = 1; j <= spec.rank; ++j) {
      auto const name = Word::from_letters(std::vector<Letter>{{j, 1}}).str();
      for (std::int64_t v = 0; v < n; ++v) {
        auto dst = floor_mod(v + phi.weight(j), n);
        out.complex.add_edge(static_cast<std::size_t>(v),
                             static_cast<std::size_t>(dst),
                             name + std::to_string(v));
        out.edge_labels.push_back({j, v});
      }
    }
    return out;
  }

  EdgePath lift_word(CoverComplex const& cover, Word const& w, std::int64_t start) {
    EdgePath     path;
    std::int64_t v = floor_mod(start, cover.n);
    path.reserve(w.size());
    for (auto const& x : w.letters()) {
      auto const wt = cover.phi.weight(x.generator);
      if (x.sign > 0) {
        path.push_back({cover.edge_id(x.generator, v), 1});
        v = floor_mod(v + wt, cover.n);
      } else {
        v = floor_mod(v - wt, cover.n);
        path.push_back({cover.edge_id(x.generator, v), -1});
      }
    }
    return path;
  }

  std::int64_t lift_end(CoverComplex const& cover, Word const& w, std::int64_t start) {
    return floor_mod(start + phi_eval(cover.phi, w), cover.n);
  }

  std::int64_t collection_count(std::int64_t phi_value, std::int64_t n) {
    return std::gcd(n, phi_value < 0 ? -phi_value : phi_value);
  }

  QuotientComplex build_quotient_complex(FreeGroupSpec const&     spec,
                                         std::span<Relator const> relators,
                                         WeightedHom const&       phi,
                                         std::int64_t             n,
                                         bool                     dedup) {
    QuotientComplex out;
    out.cover = build_cyclic_cover(spec, phi, n);
    out.dedup = dedup;

    for (std::size_t i = 0; i < relators.size(); ++i) {
      auto r = relators[i];
      for (auto const& x : r.word.letters()) {
        if (x.generator < 1 || x.generator > spec.rank) {
          throw std::invalid_argument("relator " + std::to_string(i)
                                      + " uses a generator outside the rank");
        }
      }
      r.word = cyclic_reduce(r.word).core;
      if (r.word.empty()) {
        throw std::invalid_argument("relator " + std::to_string(i)
                                    + " is the identity");
      }
      auto const phi_value = phi_eval(phi, r.word);
      auto const exponent  = r.exponent_for(n);
      if (r.mode == ExponentMode::fixed) {
        if (exponent < 2) {
          throw std::invalid_argument("relator " + std::to_string(i)
                                      + " has fixed exponent below 2");
        }
        if (floor_mod(phi_value * exponent, n) != 0) {
          throw std::invalid_argument(
              "relator " + std::to_string(i)
              + ": fixed-exponent power does not lift to a loop in X_n");
        }
      }
      out.relators.push_back(r);

      auto const powered = power(r.word, exponent);
      auto const starts  = dedup ? collection_count(phi_value, n) : n;
      for (std::int64_t s = 0; s < starts; ++s) {
        auto cell = out.cover.complex.add_cell(
            lift_word(out.cover, powered, s),
            "r" + std::to_string(i) + "@" + std::to_string(s));
        out.instances.push_back({i, exponent, s, cell, phi_value});
      }
    }
    return out;
  }

  std::vector<std::vector<std::size_t>> collection_partition(
      QuotientComplex const& k) {
    std::map<std::pair<std::size_t, std::int64_t>, std::size_t> index;
    std::vector<std::vector<std::size_t>>                       out;
    for (auto const& inst : k.instances) {
      auto const modulus = collection_count(inst.phi_value, k.cover.n);
      auto const key     = std::pair{inst.relator, floor_mod(inst.start_sheet, modulus)};
      auto [it, fresh]   = index.try_emplace(key, out.size());
      if (fresh) {
        out.emplace_back();
      }
      out[it->second].push_back(inst.cell);
    }
    return out;
  }

  bool same_cycle(EdgePath const& x, EdgePath const& y) {
    if (x.size() != y.size()) {
      return false;
    }
    auto const len = x.size();
    for (std::size_t shift = 0; shift < len; ++shift) {
      bool equal = true;
      for (std::size_t i = 0; i < len && equal; ++i) {
        equal = x[i] == y[(i + shift) % len];
      }
      if (equal) {
        return true;
      }
    }
    return len == 0;
  }

}  // namespace largeness
