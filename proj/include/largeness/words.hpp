#ifndef LARGENESS_WORDS_HPP_
#define LARGENESS_WORDS_HPP_

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace largeness {

  // Rank of the free group F. Largeness pipelines need rank >= 2.
  struct FreeGroupSpec {
    int rank = 2;
  };

  struct Letter {
    int generator = 1;  // 1-based
    int sign      = 1;  // +1 or -1

    Letter inverse() const noexcept {
      return {generator, -sign};
    }
    bool operator==(Letter const&) const = default;
  };

  // A freely reduced word. The only way to obtain a Word is through a
  // reducing constructor, so every instance satisfies the invariant.
  class Word {
   public:
    Word() = default;

    // Freely reduces `letters`. No range check on generators; see reduce().
    static Word from_letters(std::span<Letter const> letters);

    std::vector<Letter> const& letters() const noexcept {
      return _letters;
    }
    std::size_t size() const noexcept {
      return _letters.size();
    }
    bool empty() const noexcept {
      return _letters.empty();
    }
    Letter const& operator[](std::size_t i) const {
      return _letters[i];
    }

    Word inverse() const;
    bool is_cyclically_reduced() const noexcept;
    // Rotation by `k` letters to the left; only meaningful for cyclically
    // reduced words, where it stays reduced.
    Word rotated(std::size_t k) const;

    // a-z for generators 1..26, A-Z for inverses.
    std::string str() const;

    bool operator==(Word const&) const = default;

    friend Word operator*(Word const& u, Word const& v);

   private:
    std::vector<Letter> _letters;
  };

  // phi: F -> Z given by one integer weight per generator.
  class WeightedHom {
   public:
    WeightedHom() = default;
    explicit WeightedHom(std::vector<std::int64_t> weights);

    // Projection onto the first free factor: weights (1, 0, ..., 0).
    static WeightedHom standard(int rank);

    int rank() const noexcept {
      return static_cast<int>(_weights.size());
    }
    std::int64_t weight(int generator) const {
      return _weights.at(static_cast<std::size_t>(generator - 1));
    }
    std::vector<std::int64_t> const& weights() const noexcept {
      return _weights;
    }
    // gcd of the weights is 1.
    bool is_surjective() const noexcept;
    bool is_standard() const noexcept;

   private:
    std::vector<std::int64_t> _weights;
  };

  // Validates generator indices against `spec` and freely reduces.
  // Throws std::out_of_range on a bad generator, std::invalid_argument on a
  // bad sign.
  Word reduce(std::span<Letter const> letters, FreeGroupSpec const& spec);

  // Parses the a/A letter syntax. Whitespace is ignored.
  Word parse_word(std::string_view text, FreeGroupSpec const& spec);

  struct CyclicReduction {
    Word core;
    Word conjugator;
  };

  // w = conjugator * core * conjugator^-1 with core cyclically reduced.
  CyclicReduction cyclic_reduce(Word const& w);

  // The reduced word w^k, k >= 1.
  Word power(Word const& w, std::int64_t k);

  std::int64_t phi_eval(WeightedHom const& phi, Word const& w);

  // phi(w) mod n, normalized into [0, n).
  std::int64_t phi_mod_n(WeightedHom const& phi, Word const& w, std::int64_t n);

  // Max minus min of the prefix sums of phi along w, i.e. the height range of
  // a lift of w to the infinite cyclic cover.
  std::int64_t delta(WeightedHom const& phi, Word const& w);

  struct RelatorClasses {
    std::vector<std::size_t> trivial;      // indices with phi = 0
    std::vector<std::size_t> non_trivial;  // indices with phi != 0
  };

  RelatorClasses classify(WeightedHom const& phi, std::span<Word const> relators);

  std::int64_t floor_mod(std::int64_t a, std::int64_t n) noexcept;

}  // namespace largeness

#endif  // LARGENESS_WORDS_HPP_
