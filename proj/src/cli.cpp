#include "largeness/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <sstream>
#include <thread>

#include <nlohmann/json.hpp>

#include "largeness/certify.hpp"
#include "largeness/complex.hpp"
#include "largeness/cover.hpp"
#include "largeness/fp_linalg.hpp"
#include "largeness/homology.hpp"
#include "largeness/split.hpp"

namespace largeness {

  using json = nlohmann::json;

  namespace {

    std::int64_t get_int(json const& j, std::string const& where) {
      if (!j.is_number_integer()) {
        throw JobError(where, "expected an integer");
      }
      return j.get<std::int64_t>();
    }

    std::vector<std::int64_t> get_int_list(json const& j, std::string const& where) {
      if (j.is_number_integer()) {
        return {j.get<std::int64_t>()};
      }
      if (!j.is_array()) {
        throw JobError(where, "expected an integer or a list of integers");
      }
      std::vector<std::int64_t> out;
      for (std::size_t i = 0; i < j.size(); ++i) {
        out.push_back(get_int(j[i], where + "/" + std::to_string(i)));
      }
      return out;
    }

    bool get_bool(json const& j, std::string const& where) {
      if (!j.is_boolean()) {
        throw JobError(where, "expected true or false");
      }
      return j.get<bool>();
    }

    Relator parse_relator(json const&          j,
                          FreeGroupSpec const& spec,
                          std::string const&   where) {
      if (!j.is_object()) {
        throw JobError(where, "expected an object with \"word\" and \"mode\"");
      }
      if (!j.contains("word") || !j["word"].is_string()) {
        throw JobError(where + "/word", "missing or not a string");
      }
      Relator     r;
      auto const  text = j["word"].get<std::string>();
      try {
        r.word = parse_word(text, spec);
      } catch (std::exception const& ex) {
        throw JobError(where + "/word", ex.what());
      }
      if (r.word.empty()) {
        throw JobError(where + "/word",
                       "\"" + text + "\" reduces to the identity");
      }
      r.word = cyclic_reduce(r.word).core;

      auto const mode = j.value("mode", json("sweep"));
      if (mode.is_string() && mode.get<std::string>() == "sweep") {
        r.mode = ExponentMode::sweep;
      } else if (mode.is_number_integer()) {
        r.mode     = ExponentMode::fixed;
        r.exponent = mode.get<std::int64_t>();
      } else if (mode.is_string() && mode.get<std::string>() == "fixed") {
        if (!j.contains("exponent")) {
          throw JobError(where + "/exponent", "fixed mode needs an exponent");
        }
        r.mode     = ExponentMode::fixed;
        r.exponent = get_int(j["exponent"], where + "/exponent");
      } else {
        throw JobError(where + "/mode",
                       "expected \"sweep\", \"fixed\" or an integer exponent");
      }
      if (r.mode == ExponentMode::fixed && r.exponent < 2) {
        throw JobError(where + "/mode", "fixed exponent must be at least 2");
      }
      return r;
    }

    std::string certificate_name(std::int64_t n, std::int64_t p) {
      return "certificate_n" + std::to_string(n) + "_p" + std::to_string(p)
             + ".json";
    }

    void write_certificate(std::string const&          dir,
                           LargenessCertificate const& cert) {
      std::filesystem::create_directories(dir);
      auto const path
          = std::filesystem::path(dir) / certificate_name(cert.n, cert.p);
      std::ofstream f(path, std::ios::binary);
      if (!f) {
        throw std::runtime_error("cannot write " + path.string());
      }
      f << serialize(cert);
    }

    void print_claims(std::ostream& out, ClaimsReport const& r) {
      auto yes = [](bool b) { return b ? "holds" : "FAILS"; };
      out << "claims n=" << r.n << " p=" << r.p << '\n'
          << "  d_p(X_n) = " << r.dp_x_n << ", d_p(K_bar) = " << r.dp_k_bar
          << ", d_p(Gamma) = " << r.dp_gamma << '\n'
          << "  C1 " << yes(r.c1) << ": phi-non-trivial crossings "
          << r.crossings_non_trivial << " <= " << r.crossing_bound << '\n'
          << "  C2 " << yes(r.c2) << ": d_p(Gamma) " << r.dp_gamma
          << " <= edges(Gamma) " << r.gamma_edges << '\n'
          << "  C3 " << yes(r.c3) << ": d_p(K_bar) " << r.dp_k_bar
          << " >= " << r.c3_lower_bound() << '\n'
          << "  C4 " << yes(r.c4) << ": ker(K->AnB) " << r.kernel_to_intersection
          << " >= ker(K->Gamma) " << r.kernel_to_gamma << '\n'
          << "  C5 " << yes(r.c5) << ": components(AnB) "
          << r.components_intersection << " <= 2, " << r.kernel_to_intersection
          << " <= " << r.kernel_a << " + " << r.kernel_b << " + "
          << r.h0_intersection << '\n'
          << "  C6 " << yes(r.c6) << ": kernels " << r.kernel_a << ", "
          << r.kernel_b << " <= " << r.c6_upper_bound() << '\n';
    }

    std::int64_t single_n(JobSpec const& job, std::string_view cmd) {
      if (job.ns.size() != 1) {
        throw std::invalid_argument(std::string(cmd)
                                    + " needs a single n (use --n or \"n\")");
      }
      return job.ns.front();
    }

    void require_group(JobSpec const& job) {
      if (job.spec.rank < 1) {
        throw std::invalid_argument("job has no \"rank\"");
      }
    }

    void require_primes(JobSpec const& job) {
      if (job.primes.empty()) {
        throw std::invalid_argument("no prime given (use --p or \"p\")");
      }
    }

    int run_build(JobSpec const& job, std::ostream& out) {
      require_group(job);
      auto const n = single_n(job, "build");
      auto const q = build_quotient_complex(job.spec, job.relators, job.phi, n, job.dedup);
      out << dump(q.complex());
      return exit_ok;
    }

    int run_homology(JobSpec const& job, std::ostream& out) {
      require_group(job);
      require_primes(job);
      if (job.ns.empty()) {
        throw std::invalid_argument("no n given");
      }
      out << std::setw(6) << "n" << std::setw(6) << "p" << std::setw(8) << "chi"
          << std::setw(10) << "d_p(X_n)" << std::setw(10)
          << (job.dedup ? "d_p(Kbar)" : "d_p(Ktil)") << '\n';
      auto primes = job.primes;
      std::sort(primes.begin(), primes.end());
      for (auto p : primes) {
        for (auto n : job.ns) {
          auto const q = build_quotient_complex(job.spec, job.relators, job.phi, n, job.dedup);
          auto const x = subcomplex(q.complex(), Subcomplex::one_skeleton(q.complex()));
          out << std::setw(6) << n << std::setw(6) << p << std::setw(8)
              << euler_characteristic(q.complex()) << std::setw(10)
              << d_p(x.complex, p) << std::setw(10) << d_p(q.complex(), p)
              << '\n';
        }
      }
      return exit_ok;
    }

    int run_certify(JobSpec const&    job,
                    RunOptions const& options,
                    std::ostream&     out) {
      require_group(job);
      require_primes(job);
      auto const n   = single_n(job, "certify");
      auto const dir = options.out_dir.value_or(".");
      bool       any = false;
      auto primes = job.primes;
      std::sort(primes.begin(), primes.end());
      for (auto p : primes) {
        auto const cert = certify_power_quotient(job.spec, job.relators, job.phi, n, p, job.dedup);
        write_certificate(dir, cert);
        if (job.claims) {
          print_claims(out, cert.claims);
        }
        out << "n=" << n << " p=" << p << " kernels " << cert.kernel_a << ' '
            << cert.kernel_b << '\n'
            << to_string(cert.verdict) << '\n';
        any = any || cert.verdict == Verdict::certified_large;
      }
      return any ? exit_ok : exit_inconclusive;
    }

    int run_sweep(JobSpec const&    job,
                  RunOptions const& options,
                  std::ostream&     out,
                  std::ostream&     err) {
      require_group(job);
      require_primes(job);
      if (job.ns.empty()) {
        throw std::invalid_argument("no n range given");
      }
      auto const dir = options.out_dir.value_or(".");
      auto primes = job.primes;
      std::sort(primes.begin(), primes.end());

      out << std::setw(6) << "n" << std::setw(6) << "p" << std::setw(18)
          << "verdict" << std::setw(8) << "ker_A" << std::setw(8) << "ker_B"
          << std::setw(10) << "d_p(Kbar)" << std::setw(10) << "crossings"
          << '\n';
      std::size_t certified = 0, attempted = 0;
      for (auto p : primes) {
        auto const summary = sweep(job.spec, job.relators, job.phi, job.ns, p,
                                   options.threads, job.dedup);
        for (auto const& row : summary.rows) {
          out << std::setw(6) << row.n << std::setw(6) << row.p << std::setw(18)
              << to_string(row.status);
          if (row.certificate) {
            auto const& c = *row.certificate;
            out << std::setw(8) << c.kernel_a << std::setw(8) << c.kernel_b
                << std::setw(10) << c.dim_k_bar << std::setw(10)
                << c.claims.crossings_non_trivial;
            write_certificate(dir, c);
            if (job.claims) {
              out << '\n';
              print_claims(out, c.claims);
              continue;
            }
          }
          out << '\n';
        }
        out << "p=" << p << ": " << summary.certified << " of "
            << summary.attempted << " attempted rows certified";
        if (summary.least_certified) {
          out << "; least certified n = " << *summary.least_certified
              << "; all attempted n >= " << *summary.least_certified
              << " certified: "
              << (summary.all_after_least_certified ? "yes" : "no");
          if (summary.certified_from) {
            out << "; certified from n = " << *summary.certified_from;
          }
        }
        out << '\n';
        if (summary.attempted == 0) {
          err << "warning: p = " << p << " divides no n in the range\n";
        }
        certified += summary.certified;
        attempted += summary.attempted;
      }
      if (attempted == 0) {
        err << "warning: no n was attempted\n";
      }
      return certified > 0 ? exit_ok : exit_inconclusive;
    }

    int run_claims(JobSpec const& job, std::ostream& out) {
      require_group(job);
      require_primes(job);
      auto const n = single_n(job, "claims");
      auto const q = build_quotient_complex(job.spec, job.relators, job.phi, n, job.dedup);
      auto const d = build_split(q);
      auto primes  = job.primes;
      std::sort(primes.begin(), primes.end());
      bool all = true;
      for (auto p : primes) {
        auto const r = verify_claims(d, p);
        print_claims(out, r);
        all = all && r.all_hold();
      }
      return all ? exit_ok : exit_inconclusive;
    }

  }  // namespace

  JobSpec parse_job(std::string_view text) {
    json doc;
    try {
      doc = json::parse(text);
    } catch (json::parse_error const& ex) {
      throw JobError("byte " + std::to_string(ex.byte), ex.what());
    }
    if (!doc.is_object()) {
      throw JobError("/", "job must be a JSON object");
    }
    JobSpec job;
    static constexpr std::string_view known[]
        = {"rank", "phi", "relators", "n", "n_range", "p", "dedup", "claims", "orders"};
    for (auto const& [key, value] : doc.items()) {
      if (std::find(std::begin(known), std::end(known), key) == std::end(known)) {
        job.warnings.push_back("ignoring unknown field \"" + key + "\"");
      }
    }

    job.spec.rank = 0;
    if (doc.contains("rank")) {
      auto rank = get_int(doc["rank"], "/rank");
      if (rank < 1 || rank > 26) {
        throw JobError("/rank", "rank must be between 1 and 26");
      }
      job.spec.rank = static_cast<int>(rank);
    } else if (doc.contains("relators") || doc.contains("phi")) {
      throw JobError("/rank", "missing");
    }

    if (job.spec.rank >= 1) {
      if (doc.contains("phi")) {
        auto weights = get_int_list(doc["phi"], "/phi");
        if (static_cast<int>(weights.size()) != job.spec.rank) {
          throw JobError("/phi", "expected " + std::to_string(job.spec.rank)
                                     + " weights");
        }
        job.phi = WeightedHom(std::move(weights));
        if (!job.phi.is_surjective()) {
          throw JobError("/phi", "weights must have gcd 1 (phi surjective)");
        }
      } else {
        job.phi = WeightedHom::standard(job.spec.rank);
      }
    }

    if (doc.contains("relators")) {
      auto const& rs = doc["relators"];
      if (!rs.is_array()) {
        throw JobError("/relators", "expected a list");
      }
      for (std::size_t i = 0; i < rs.size(); ++i) {
        job.relators.push_back(
            parse_relator(rs[i], job.spec, "/relators/" + std::to_string(i)));
      }
    }

    if (doc.contains("n") && doc.contains("n_range")) {
      throw JobError("/n_range", "give either \"n\" or \"n_range\", not both");
    }
    if (doc.contains("n")) {
      auto n = get_int(doc["n"], "/n");
      if (n < 1) {
        throw JobError("/n", "n must be positive");
      }
      job.ns = {n};
    } else if (doc.contains("n_range")) {
      auto r = get_int_list(doc["n_range"], "/n_range");
      if (r.size() < 2 || r.size() > 3) {
        throw JobError("/n_range", "expected [first, last] or [first, last, step]");
      }
      auto const step = r.size() == 3 ? r[2] : 1;
      if (r[0] < 1 || r[1] < r[0] || step < 1) {
        throw JobError("/n_range", "need 1 <= first <= last and step >= 1");
      }
      for (auto n = r[0]; n <= r[1]; n += step) {
        job.ns.push_back(n);
      }
    }

    if (doc.contains("p")) {
      job.primes = get_int_list(doc["p"], "/p");
      for (std::size_t i = 0; i < job.primes.size(); ++i) {
        if (!is_prime(job.primes[i])) {
          throw JobError("/p/" + std::to_string(i),
                         std::to_string(job.primes[i]) + " is not prime");
        }
      }
    }
    if (doc.contains("dedup")) {
      job.dedup = get_bool(doc["dedup"], "/dedup");
    }
    if (doc.contains("claims")) {
      job.claims = get_bool(doc["claims"], "/claims");
    }
    if (doc.contains("orders")) {
      job.orders = get_int_list(doc["orders"], "/orders");
      for (std::size_t i = 0; i < job.orders.size(); ++i) {
        if (job.orders[i] < 1) {
          throw JobError("/orders/" + std::to_string(i), "orders must be positive");
        }
      }
    }

    if (!job.ns.empty() && !job.primes.empty()) {
      bool any = false;
      for (auto n : job.ns) {
        for (auto p : job.primes) {
          any = any || n % p == 0;
        }
      }
      if (!any) {
        job.warnings.push_back("no n in the range is divisible by any given p");
      }
    }
    return job;
  }

  int run(std::string_view  subcommand,
          JobSpec const&    job_in,
          RunOptions const& options,
          std::ostream&     out,
          std::ostream&     err) {
    JobSpec job = job_in;
    if (options.n) {
      job.ns = {*options.n};
    }
    if (options.p) {
      job.primes = {*options.p};
    }
    if (options.no_dedup) {
      job.dedup = false;
    }
    if (options.claims) {
      job.claims = true;
    }
    for (auto const& w : job.warnings) {
      err << "warning: " << w << '\n';
    }
    try {
      for (auto p : job.primes) {
        if (!is_prime(p)) {
          throw std::invalid_argument(std::to_string(p) + " is not prime");
        }
      }
      if (subcommand == "build") {
        return run_build(job, out);
      }
      if (subcommand == "homology") {
        return run_homology(job, out);
      }
      if (subcommand == "certify") {
        return run_certify(job, options, out);
      }
      if (subcommand == "sweep") {
        return run_sweep(job, options, out, err);
      }
      if (subcommand == "claims") {
        return run_claims(job, out);
      }
      if (subcommand == "reduce-m") {
        out << reduction_exponent_m(job.orders) << '\n';
        return exit_ok;
      }
      err << "error: unknown subcommand \"" << subcommand << "\"\n";
      return exit_error;
    } catch (std::exception const& ex) {
      err << "error: " << ex.what() << '\n';
      return exit_error;
    }
  }

  unsigned threads_from_environment() {
    if (auto const* v = std::getenv("LARGENESS_THREADS")) {
      try {
        auto n = std::stol(v);
        return n <= 0 ? 0u : static_cast<unsigned>(n);
      } catch (std::exception const&) {
        return 0;
      }
    }
    return std::max(1u, std::thread::hardware_concurrency());
  }

}  // namespace largeness
