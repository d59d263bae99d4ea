#ifndef LARGENESS_CLI_HPP_
#define LARGENESS_CLI_HPP_

#include <cstdint>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "cover.hpp"
#include "words.hpp"

namespace largeness {

  // A job file failed to parse or validate. `where` is a JSON-pointer-like
  // location such as "/relators/1/word", or "byte 17" for syntax errors.
  class JobError : public std::runtime_error {
   public:
    JobError(std::string where, std::string const& what)
        : std::runtime_error(where + ": " + what), _where(std::move(where)) {}

    std::string const& where() const noexcept {
      return _where;
    }

   private:
    std::string _where;
  };

  struct JobSpec {
    FreeGroupSpec             spec;
    WeightedHom               phi;
    std::vector<Relator>      relators;
    std::vector<std::int64_t> ns;  // single n or the expanded n_range
    std::vector<std::int64_t> primes;
    std::vector<std::int64_t> orders;  // for reduce-m
    bool                      dedup  = true;
    bool                      claims = false;
    std::vector<std::string>  warnings;
  };

  // Job document (JSON):
  //   {"rank": 2, "phi": [1, 0],
  //    "relators": [{"word": "b", "mode": "sweep"}, {"word": "a", "mode": 4}],
  //    "n": 8  or  "n_range": [lo, hi, step],
  //    "p": [2] or 2,
  //    "dedup": true, "claims": false, "orders": [2, 3]}
  // "phi" defaults to the standard (1, 0, ..., 0). A fixed mode may also be
  // written {"mode": "fixed", "exponent": 4}. Throws JobError.
  JobSpec parse_job(std::string_view text);

  struct RunOptions {
    std::optional<std::string>  out_dir;
    std::optional<std::int64_t> n;
    std::optional<std::int64_t> p;
    bool                        no_dedup = false;
    bool                        claims   = false;
    unsigned                    threads  = 0;
  };

  inline constexpr int exit_ok           = 0;
  inline constexpr int exit_error        = 1;
  inline constexpr int exit_inconclusive = 2;

  // Subcommands: build, homology, certify, sweep, claims, reduce-m.
  // Results go to `out`, warnings and errors to `err`.
  int run(std::string_view   subcommand,
          JobSpec const&     job,
          RunOptions const&  options,
          std::ostream&      out,
          std::ostream&      err);

  // Sweep parallelism from LARGENESS_THREADS (unset: hardware concurrency;
  // 0: serial).
  unsigned threads_from_environment();

}  // namespace largeness

#endif  // LARGENESS_CLI_HPP_
