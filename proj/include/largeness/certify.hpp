#ifndef LARGENESS_CERTIFY_HPP_
#define LARGENESS_CERTIFY_HPP_

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "complex.hpp"
#include "cover.hpp"
#include "split.hpp"
#include "words.hpp"

namespace largeness {

  // The criterion only ever proves largeness; failing it says nothing.
  enum class Verdict { certified_large, inconclusive };

  std::string_view to_string(Verdict v) noexcept;

  // Statement of the largeness criterion recorded in every certificate.
  extern std::string_view const criterion_citation;

  struct CriterionCheck {
    std::size_t kernel_a = 0;
    std::size_t kernel_b = 0;
    Verdict     verdict  = Verdict::inconclusive;
  };

  // Verdict rule: both kernels nonzero, and for p = 2 one of them has
  // dimension at least 2.
  Verdict criterion_verdict(std::size_t kernel_a, std::size_t kernel_b, FpScalar p) noexcept;

  // K = A ∪ B with A, B closed subcomplexes. Computes
  // dim ker(H^1(A) -> H^1(A∩B)) and dim ker(H^1(B) -> H^1(A∩B)) over F_p.
  // Throws std::invalid_argument if A ∪ B != K or a side is not closed.
  CriterionCheck check_largeness_criterion(TwoComplex const& k,
                                           Subcomplex const& a,
                                           Subcomplex const& b,
                                           FpScalar          p);

  struct LargenessCertificate {
    FreeGroupSpec        spec;
    WeightedHom          phi;
    std::vector<Relator> relators;
    std::int64_t         n = 0;
    FpScalar             p = 2;
    bool                 dedup = true;
    std::size_t          dim_x_n   = 0;
    std::size_t          dim_k_bar = 0;
    std::size_t          dim_gamma = 0;
    std::size_t          kernel_a  = 0;
    std::size_t          kernel_b  = 0;
    ClaimsReport         claims;
    Verdict              verdict = Verdict::inconclusive;
  };

  // Runs cover -> dedup -> split -> claims -> criterion for
  // F / <<g_1^{e_1}, ..., g_r^{e_r}>> where e_i = n in sweep mode.
  //
  // Preconditions (std::invalid_argument with a diagnostic otherwise):
  // rank >= 2, phi standard, p prime, p | n, n >= 3, relators nonempty,
  // fixed-exponent relators phi-trivial with m >= 2 and p | m.
  LargenessCertificate certify_power_quotient(FreeGroupSpec const&     spec,
                                              std::span<Relator const> relators,
                                              WeightedHom const&       phi,
                                              std::int64_t             n,
                                              FpScalar                 p,
                                              bool                     dedup = true);

  // JSON document with the fields group, phi, relators, n, p, dims, kernels,
  // claims, verdict, paper_citation, in that order. A trailing
  // "dedup": false is added when the complex kept every lifted cell.
  std::string serialize(LargenessCertificate const& cert);

  struct RecheckResult {
    bool        ok       = false;
    std::size_t kernel_a = 0;
    std::size_t kernel_b = 0;
    Verdict     verdict  = Verdict::inconclusive;
    std::string message;
  };

  // Parses a serialized certificate, rebuilds the decomposition from its
  // group/phi/relators/n fields and recomputes both side kernels through the
  // relative long exact sequence (not the cocycle restriction used by
  // certify_power_quotient). ok iff kernels and verdict match exactly.
  RecheckResult recheck_certificate(std::string_view json_text);

  enum class RowStatus { certified_large, inconclusive, skipped };

  struct SweepRow {
    std::int64_t                        n = 0;
    FpScalar                            p = 2;
    RowStatus                           status = RowStatus::skipped;
    std::optional<LargenessCertificate> certificate;
  };

  struct SweepSummary {
    std::vector<SweepRow>       rows;  // ascending n
    std::size_t                 attempted = 0;
    std::size_t                 certified = 0;
    std::optional<std::int64_t> least_certified;
    // Least n such that every attempted row at or above it certified.
    std::optional<std::int64_t> certified_from;
    bool                        all_after_least_certified = false;
  };

  std::string_view to_string(RowStatus s) noexcept;

  // Rows with p not dividing n are skipped. Rows are computed on up to
  // `threads` worker threads (0 = serial) and returned in ascending n.
  // Throws std::invalid_argument on an empty range.
  SweepSummary sweep(FreeGroupSpec const&      spec,
                     std::span<Relator const>  relators,
                     WeightedHom const&        phi,
                     std::span<std::int64_t const> ns,
                     FpScalar                  p,
                     unsigned                  threads = 0,
                     bool                      dedup   = true);

  // lcm of the orders of the g_i in a finite quotient; 1 for an empty list.
  std::int64_t reduction_exponent_m(std::span<std::int64_t const> image_orders);

}  // namespace largeness

#endif  // LARGENESS_CERTIFY_HPP_
