#include "largeness/words.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <stdexcept>
#include <string>

namespace largeness {

  namespace {
    void push_reduced(std::vector<Letter>& out, Letter x) {
      if (!out.empty() && out.back() == x.inverse()) {
        out.pop_back();
      } else {
        out.push_back(x);
      }
    }

    void check_rank(WeightedHom const& phi, Word const& w) {
      for (auto const& x : w.letters()) {
        if (x.generator < 1 || x.generator > phi.rank()) {
          throw std::invalid_argument("word uses generator "
                                      + std::to_string(x.generator)
                                      + " but phi has rank "
                                      + std::to_string(phi.rank()));
        }
      }
    }
  }  // namespace

  std::int64_t floor_mod(std::int64_t a, std::int64_t n) noexcept {
    auto r = a % n;
    return r < 0 ? r + n : r;
  }

  Word Word::from_letters(std::span<Letter const> letters) {
    Word w;
    w._letters.reserve(letters.size());
    for (auto const& x : letters) {
      push_reduced(w._letters, x);
    }
    return w;
  }

  Word Word::inverse() const {
    Word w;
    w._letters.reserve(_letters.size());
    for (auto it = _letters.rbegin(); it != _letters.rend(); ++it) {
      w._letters.push_back(it->inverse());
    }
    return w;
  }

  bool Word::is_cyclically_reduced() const noexcept {
    return _letters.size() < 2 || _letters.front() != _letters.back().inverse();
  }

  Word Word::rotated(std::size_t k) const {
    Word w = *this;
    if (!w._letters.empty()) {
      std::rotate(w._letters.begin(),
                  w._letters.begin()
                      + static_cast<std::ptrdiff_t>(k % w._letters.size()),
                  w._letters.end());
    }
    return w;
  }

  std::string Word::str() const {
    std::string s;
    s.reserve(_letters.size());
    for (auto const& x : _letters) {
      if (x.generator >= 1 && x.generator <= 26) {
        char c = static_cast<char>('a' + x.generator - 1);
        s.push_back(x.sign > 0 ? c
                               : static_cast<char>(std::toupper(
                                   static_cast<unsigned char>(c))));
      } else {
        s += (x.sign > 0 ? "x" : "X") + std::to_string(x.generator);
      }
    }
    return s;
  }

  Word operator*(Word const& u, Word const& v) {
    Word w = u;
    for (auto const& x : v._letters) {
      push_reduced(w._letters, x);
    }
    return w;
  }

  WeightedHom::WeightedHom(std::vector<std::int64_t> weights)
      : _weights(std::move(weights)) {}

  WeightedHom WeightedHom::standard(int rank) {
    if (rank < 1) {
      throw std::invalid_argument("rank must be positive");
    }
    std::vector<std::int64_t> w(static_cast<std::size_t>(rank), 0);
    w[0] = 1;
    return WeightedHom(std::move(w));
  }

  bool WeightedHom::is_surjective() const noexcept {
    std::int64_t g = 0;
    for (auto x : _weights) {
      g = std::gcd(g, x);
    }
    return g == 1;
  }

  bool WeightedHom::is_standard() const noexcept {
    if (_weights.empty() || _weights[0] != 1) {
      return false;
    }
    return std::all_of(
        _weights.begin() + 1, _weights.end(), [](auto x) { return x == 0; });
  }

  Word reduce(std::span<Letter const> letters, FreeGroupSpec const& spec) {
    for (auto const& x : letters) {
      if (x.generator < 1 || x.generator > spec.rank) {
        throw std::out_of_range("generator index "
                                + std::to_string(x.generator)
                                + " outside [1, "
                                + std::to_string(spec.rank) + "]");
      }
      if (x.sign != 1 && x.sign != -1) {
        throw std::invalid_argument("letter sign must be +1 or -1");
      }
    }
    return Word::from_letters(letters);
  }

  Word parse_word(std::string_view text, FreeGroupSpec const& spec) {
    std::vector<Letter> letters;
    letters.reserve(text.size());
    for (char c : text) {
      auto u = static_cast<unsigned char>(c);
      if (std::isspace(u)) {
        continue;
      }
      if (c >= 'a' && c <= 'z') {
        letters.push_back({c - 'a' + 1, 1});
      } else if (c >= 'A' && c <= 'Z') {
        letters.push_back({c - 'A' + 1, -1});
      } else {
        throw std::invalid_argument(std::string("invalid letter '") + c
                                    + "' in word \"" + std::string(text)
                                    + "\"");
      }
    }
    return reduce(letters, spec);
  }

  CyclicReduction cyclic_reduce(Word const& w) {
    auto const& xs = w.letters();
    std::size_t i = 0;
    std::size_t j = xs.size();
    while (j - i >= 2 && xs[i] == xs[j - 1].inverse()) {
      ++i;
      --j;
    }
    std::span<Letter const> all(xs);
    return {Word::from_letters(all.subspan(i, j - i)),
            Word::from_letters(all.subspan(0, i))};
  }

  Word power(Word const& w, std::int64_t k) {
    if (k < 1) {
      throw std::invalid_argument("power exponent must be at least 1");
    }
    std::vector<Letter> letters;
    letters.reserve(w.size() * static_cast<std::size_t>(k));
    for (std::int64_t i = 0; i < k; ++i) {
      letters.insert(letters.end(), w.letters().begin(), w.letters().end());
    }
    return Word::from_letters(letters);
  }

  std::int64_t phi_eval(WeightedHom const& phi, Word const& w) {
    check_rank(phi, w);
    std::int64_t s = 0;
    for (auto const& x : w.letters()) {
      s += x.sign * phi.weight(x.generator);
    }
    return s;
  }

  std::int64_t phi_mod_n(WeightedHom const& phi, Word const& w, std::int64_t n) {
    if (n < 1) {
      throw std::invalid_argument("modulus n must be positive");
    }
    return floor_mod(phi_eval(phi, w), n);
  }

  std::int64_t delta(WeightedHom const& phi, Word const& w) {
    check_rank(phi, w);
    std::int64_t s = 0, lo = 0, hi = 0;
    for (auto const& x : w.letters()) {
      s += x.sign * phi.weight(x.generator);
      lo = std::min(lo, s);
      hi = std::max(hi, s);
    }
    return hi - lo;
  }

  RelatorClasses classify(WeightedHom const& phi,
                          std::span<Word const> relators) {
    RelatorClasses out;
    for (std::size_t i = 0; i < relators.size(); ++i) {
      (phi_eval(phi, relators[i]) == 0 ? out.trivial : out.non_trivial)
          .push_back(i);
    }
    return out;
  }

}  // namespace largeness
