#include "largeness/certify.hpp"

#include <algorithm>
#include <atomic>
#include <numeric>
#include <stdexcept>
#include <thread>

#include <nlohmann/json.hpp>

#include "largeness/homology.hpp"

namespace largeness {

  using json = nlohmann::ordered_json;

  std::string_view const criterion_citation
      = "Largeness criterion for K = A u B (finite connected cell complex, "
        "A, B subcomplexes, p prime): if both H^1(A;F_p) -> H^1(A n B;F_p) "
        "and H^1(B;F_p) -> H^1(A n B;F_p) have nonzero kernel, and for p = 2 "
        "one kernel has dimension > 1, then pi_1(K) is large. Used as an "
        "axiom; only its hypotheses are checked here.";

  std::string_view to_string(Verdict v) noexcept {
    return v == Verdict::certified_large ? "CERTIFIED_LARGE" : "INCONCLUSIVE";
  }

  std::string_view to_string(RowStatus s) noexcept {
    switch (s) {
      case RowStatus::certified_large:
        return "CERTIFIED_LARGE";
      case RowStatus::inconclusive:
        return "INCONCLUSIVE";
      default:
        return "SKIPPED";
    }
  }

  Verdict criterion_verdict(std::size_t kernel_a,
                            std::size_t kernel_b,
                            FpScalar    p) noexcept {
    bool ok = kernel_a >= 1 && kernel_b >= 1
              && (p != 2 || std::max(kernel_a, kernel_b) >= 2);
    return ok ? Verdict::certified_large : Verdict::inconclusive;
  }

  CriterionCheck check_largeness_criterion(TwoComplex const& k,
                                           Subcomplex const& a,
                                           Subcomplex const& b,
                                           FpScalar          p) {
    if (!is_prime(p)) {
      throw std::invalid_argument(std::to_string(p) + " is not prime");
    }
    if (!a.is_closed_in(k) || !b.is_closed_in(k)) {
      throw std::invalid_argument("A and B must be closed subcomplexes of K");
    }
    if (unite(a, b) != Subcomplex::all(k)) {
      throw std::invalid_argument("A and B do not cover K");
    }
    auto const meet = intersect(a, b);
    auto const ea   = subcomplex(k, a);
    auto const eb   = subcomplex(k, b);
    CriterionCheck out;
    out.kernel_a = restriction_kernel_dim(ea.complex, pullback(meet, ea), p);
    out.kernel_b = restriction_kernel_dim(eb.complex, pullback(meet, eb), p);
    out.verdict  = criterion_verdict(out.kernel_a, out.kernel_b, p);
    return out;
  }

  namespace {
    void check_pipeline_preconditions(FreeGroupSpec const&     spec,
                                      std::span<Relator const> relators,
                                      WeightedHom const&       phi,
                                      std::int64_t             n,
                                      FpScalar                 p) {
      auto fail = [](std::string const& msg) {
        throw std::invalid_argument(msg);
      };
      if (spec.rank < 2) {
        fail("rank must be at least 2 (F must be non-abelian)");
      }
      if (phi.rank() != spec.rank) {
        fail("phi has " + std::to_string(phi.rank()) + " weights, expected "
             + std::to_string(spec.rank));
      }
      if (!phi.is_standard()) {
        fail("certification needs the standard phi = (1, 0, ..., 0)");
      }
      if (!is_prime(p)) {
        fail("p = " + std::to_string(p) + " is not prime");
      }
      if (n < 3) {
        fail("n = " + std::to_string(n) + " is below 3");
      }
      if (n % p != 0) {
        fail("p = " + std::to_string(p) + " does not divide n = "
             + std::to_string(n));
      }
      for (std::size_t i = 0; i < relators.size(); ++i) {
        auto const& r   = relators[i];
        auto const  tag = "relator " + std::to_string(i) + " (\"" + r.word.str()
                         + "\")";
        if (r.word.empty()) {
          fail(tag + " is the identity");
        }
        if (r.mode == ExponentMode::fixed) {
          if (phi_eval(phi, r.word) != 0) {
            fail(tag + ": a fixed exponent is only allowed for phi-trivial "
                       "relators");
          }
          if (r.exponent < 2) {
            fail(tag + ": fixed exponent must be at least 2");
          }
          if (r.exponent % p != 0) {
            fail(tag + ": p = " + std::to_string(p)
                 + " does not divide the fixed exponent "
                 + std::to_string(r.exponent));
          }
        }
      }
    }

    json relator_json(Relator const& r, std::int64_t n) {
      return json{{"word", r.word.str()},
                  {"mode", r.mode == ExponentMode::sweep ? "sweep" : "fixed"},
                  {"exponent", r.exponent_for(n)}};
    }
  }  // namespace

  LargenessCertificate certify_power_quotient(FreeGroupSpec const&     spec,
                                              std::span<Relator const> relators,
                                              WeightedHom const&       phi,
                                              std::int64_t             n,
                                              FpScalar                 p,
                                              bool                     dedup) {
    check_pipeline_preconditions(spec, relators, phi, n, p);
    auto const quotient = build_quotient_complex(spec, relators, phi, n, dedup);
    auto const decomp   = build_split(quotient);

    LargenessCertificate cert;
    cert.spec     = spec;
    cert.phi      = phi;
    cert.relators = quotient.relators;
    cert.n        = n;
    cert.p        = p;
    cert.dedup    = dedup;
    cert.claims   = verify_claims(decomp, p);
    cert.dim_x_n   = cert.claims.dp_x_n;
    cert.dim_k_bar = cert.claims.dp_k_bar;
    cert.dim_gamma = cert.claims.dp_gamma;

    auto const check = check_largeness_criterion(decomp.subdivided, decomp.a, decomp.b, p);
    cert.kernel_a = check.kernel_a;
    cert.kernel_b = check.kernel_b;
    cert.verdict  = check.verdict;
    return cert;
  }

  std::string serialize(LargenessCertificate const& cert) {
    json relators = json::array();
    for (auto const& r : cert.relators) {
      relators.push_back(relator_json(r, cert.n));
    }
    auto const& c = cert.claims;
    json doc{
        {"group", {{"rank", cert.spec.rank}}},
        {"phi", cert.phi.weights()},
        {"relators", relators},
        {"n", cert.n},
        {"p", cert.p},
        {"dims",
         {{"x_n", cert.dim_x_n}, {"k_bar", cert.dim_k_bar}, {"gamma", cert.dim_gamma}}},
        {"kernels", {{"a", cert.kernel_a}, {"b", cert.kernel_b}}},
        {"claims",
         {{"c1", c.c1}, {"c2", c.c2}, {"c3", c.c3}, {"c4", c.c4}, {"c5", c.c5}, {"c6", c.c6}}},
        {"verdict", to_string(cert.verdict)},
        {"paper_citation", criterion_citation},
    };
    if (!cert.dedup) {
      doc["dedup"] = false;
    }
    return doc.dump(2) + "\n";
  }

  RecheckResult recheck_certificate(std::string_view json_text) {
    RecheckResult out;
    try {
      auto const doc  = json::parse(json_text);
      FreeGroupSpec spec{doc.at("group").at("rank").get<int>()};
      WeightedHom   phi(doc.at("phi").get<std::vector<std::int64_t>>());
      auto const    n = doc.at("n").get<std::int64_t>();
      auto const    p = doc.at("p").get<FpScalar>();
      std::vector<Relator> relators;
      for (auto const& r : doc.at("relators")) {
        Relator rel;
        rel.word = parse_word(r.at("word").get<std::string>(), spec);
        auto const mode = r.at("mode").get<std::string>();
        if (mode == "sweep") {
          rel.mode = ExponentMode::sweep;
        } else if (mode == "fixed") {
          rel.mode     = ExponentMode::fixed;
          rel.exponent = r.at("exponent").get<std::int64_t>();
        } else {
          throw std::invalid_argument("unknown relator mode \"" + mode + "\"");
        }
        relators.push_back(std::move(rel));
      }

      auto const dedup    = doc.value("dedup", true);
      auto const quotient = build_quotient_complex(spec, relators, phi, n, dedup);
      auto const decomp   = build_split(quotient);
      auto const meet     = decomp.intersection();
      auto const ea       = subcomplex(decomp.subdivided, decomp.a);
      auto const eb       = subcomplex(decomp.subdivided, decomp.b);
      out.kernel_a = restriction_kernel_dim_via_pair(ea.complex, pullback(meet, ea), p);
      out.kernel_b = restriction_kernel_dim_via_pair(eb.complex, pullback(meet, eb), p);
      out.verdict  = criterion_verdict(out.kernel_a, out.kernel_b, p);

      auto const claimed_a = doc.at("kernels").at("a").get<std::size_t>();
      auto const claimed_b = doc.at("kernels").at("b").get<std::size_t>();
      auto const claimed_v = doc.at("verdict").get<std::string>();
      out.ok = claimed_a == out.kernel_a && claimed_b == out.kernel_b
               && claimed_v == to_string(out.verdict);
      if (!out.ok) {
        out.message = "recomputed kernels (" + std::to_string(out.kernel_a) + ", "
                      + std::to_string(out.kernel_b) + ") verdict "
                      + std::string(to_string(out.verdict))
                      + " disagree with certificate (" + std::to_string(claimed_a)
                      + ", " + std::to_string(claimed_b) + ") " + claimed_v;
      }
    } catch (std::exception const& ex) {
      out.ok      = false;
      out.message = ex.what();
    }
    return out;
  }

  SweepSummary sweep(FreeGroupSpec const&          spec,
                     std::span<Relator const>      relators,
                     WeightedHom const&            phi,
                     std::span<std::int64_t const> ns,
                     FpScalar                      p,
                     unsigned                      threads,
                     bool                          dedup) {
    if (ns.empty()) {
      throw std::invalid_argument("sweep range is empty");
    }
    std::vector<std::int64_t> sorted(ns.begin(), ns.end());
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());

    SweepSummary summary;
    summary.rows.resize(sorted.size());
    for (std::size_t i = 0; i < sorted.size(); ++i) {
      summary.rows[i].n = sorted[i];
      summary.rows[i].p = p;
    }

    auto compute = [&](std::size_t i) {
      auto& row = summary.rows[i];
      if (row.n % p != 0) {
        return;
      }
      row.certificate = certify_power_quotient(spec, relators, phi, row.n, p, dedup);
      row.status      = row.certificate->verdict == Verdict::certified_large
                            ? RowStatus::certified_large
                            : RowStatus::inconclusive;
    };

    if (threads <= 1) {
      for (std::size_t i = 0; i < sorted.size(); ++i) {
        compute(i);
      }
    } else {
      std::atomic<std::size_t> next{0};
      std::exception_ptr       error;
      std::atomic<bool>        failed{false};
      std::vector<std::thread> pool;
      auto const workers = std::min<std::size_t>(threads, sorted.size());
      for (std::size_t t = 0; t < workers; ++t) {
        pool.emplace_back([&] {
          for (auto i = next++; i < sorted.size() && !failed; i = next++) {
            try {
              compute(i);
            } catch (...) {
              if (!failed.exchange(true)) {
                error = std::current_exception();
              }
            }
          }
        });
      }
      for (auto& th : pool) {
        th.join();
      }
      if (error) {
        std::rethrow_exception(error);
      }
    }

    for (auto const& row : summary.rows) {
      if (row.status == RowStatus::skipped) {
        continue;
      }
      ++summary.attempted;
      if (row.status == RowStatus::certified_large) {
        ++summary.certified;
        if (!summary.least_certified) {
          summary.least_certified = row.n;
        }
      }
    }
    // Scan downwards for the certified tail.
    for (auto it = summary.rows.rbegin(); it != summary.rows.rend(); ++it) {
      if (it->status == RowStatus::skipped) {
        continue;
      }
      if (it->status != RowStatus::certified_large) {
        break;
      }
      summary.certified_from = it->n;
    }
    summary.all_after_least_certified
        = summary.least_certified && summary.certified_from == summary.least_certified;
    return summary;
  }

  std::int64_t reduction_exponent_m(std::span<std::int64_t const> image_orders) {
    std::int64_t m = 1;
    for (auto o : image_orders) {
      if (o < 1) {
        throw std::invalid_argument("element orders must be positive");
      }
      m = std::lcm(m, o);
    }
    return m;
  }

}  // namespace largeness
