#pragma once

// The free monoid over a finite alphabet: words, concatenation and the
// suffix machinery the extension product is built on.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <boost/container/small_vector.hpp>

namespace polyext {

  using Letter = std::uint32_t;

  // A finite alphabet {0, ..., size-1}.
  class Alphabet {
   public:
    explicit Alphabet(std::size_t size);

    std::size_t size() const noexcept {
      return _size;
    }
    bool contains(Letter x) const noexcept {
      return x < _size;
    }

    bool operator==(Alphabet const&) const = default;

   private:
    std::size_t _size;
  };

  // An immutable element of the free monoid. Ordering is shortlex (shorter
  // words first, lexicographic within a length), which is also the order
  // used by enumerate_words.
  class Word {
    using storage = boost::container::small_vector<Letter, 6>;

   public:
    Word() = default;
    Word(std::initializer_list<Letter> letters) : _letters(letters) {}
    explicit Word(std::span<Letter const> letters)
        : _letters(letters.begin(), letters.end()) {}

    std::size_t size() const noexcept {
      return _letters.size();
    }
    bool empty() const noexcept {
      return _letters.empty();
    }
    Letter operator[](std::size_t i) const {
      return _letters[i];
    }
    auto begin() const noexcept {
      return _letters.begin();
    }
    auto end() const noexcept {
      return _letters.end();
    }
    std::span<Letter const> letters() const noexcept {
      return {_letters.data(), _letters.size()};
    }

    // Largest letter + 1, or 0 for the empty word.
    std::size_t min_alphabet_size() const noexcept;
    bool fits(Alphabet const& alphabet) const noexcept {
      return min_alphabet_size() <= alphabet.size();
    }

    friend bool operator==(Word const& a, Word const& b) noexcept {
      return a._letters == b._letters;
    }
    friend std::strong_ordering operator<=>(Word const& a,
                                            Word const& b) noexcept;

    friend Word concat(Word const& a, Word const& b);

   private:
    storage _letters;
  };

  Word concat(Word const& a, Word const& b);
  Word concat(Word const& a, Word const& b, Word const& c);

  // b ∈ suff(a): there is some c with cb = a.
  bool is_suffix(Word const& b, Word const& a) noexcept;
  // b is a prefix of a.
  bool is_prefix(Word const& b, Word const& a) noexcept;

  // The unique u with concat(u, b) == a, if b is a suffix of a.
  std::optional<Word> strip_suffix(Word const& a, Word const& b);
  // The unique u with concat(b, u) == a, if b is a prefix of a.
  std::optional<Word> strip_prefix(Word const& a, Word const& b);

  // Longest first: a, ..., ε. Size |a| + 1.
  std::vector<Word> suffixes(Word const& a);
  // suffixes(a) without a itself.
  std::vector<Word> proper_suffixes(Word const& a);

  // Number of words of length <= maxlen over alphabet.
  std::size_t word_count(Alphabet const& alphabet, std::size_t maxlen);
  // All words of length <= maxlen in shortlex order.
  std::vector<Word> enumerate_words(Alphabet const& alphabet,
                                    std::size_t maxlen);

  // Throws Error if some letter of w is outside the alphabet.
  void check_word(Alphabet const& alphabet, Word const& w);

  // Text form: "[ab]" for letters below 26, "[0.27]" when some letter is 26
  // or larger, "[]" for ε.
  std::string to_string(Word const& w);
  Word parse_word(std::string_view text);

}  // namespace polyext
