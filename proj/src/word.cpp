#include "polyext/word.hpp"

#include <algorithm>

#include "polyext/error.hpp"
#include "text_cursor.hpp"

namespace polyext {

  Alphabet::Alphabet(std::size_t size) : _size(size) {
    if (size == 0) {
      throw Error("alphabet size must be at least 1");
    }
  }

  std::size_t Word::min_alphabet_size() const noexcept {
    if (_letters.empty()) {
      return 0;
    }
    return std::size_t(*std::max_element(_letters.begin(), _letters.end()))
           + 1;
  }

  std::strong_ordering operator<=>(Word const& a, Word const& b) noexcept {
    if (auto c = a.size() <=> b.size(); c != 0) {
      return c;
    }
    return std::lexicographical_compare_three_way(
        a._letters.begin(), a._letters.end(), b._letters.begin(),
        b._letters.end());
  }

  Word concat(Word const& a, Word const& b) {
    Word result;
    result._letters.reserve(a.size() + b.size());
    result._letters.insert(result._letters.end(), a.begin(), a.end());
    result._letters.insert(result._letters.end(), b.begin(), b.end());
    return result;
  }

  Word concat(Word const& a, Word const& b, Word const& c) {
    return concat(concat(a, b), c);
  }

  bool is_suffix(Word const& b, Word const& a) noexcept {
    return b.size() <= a.size()
           && std::equal(b.begin(), b.end(), a.end() - b.size());
  }

  bool is_prefix(Word const& b, Word const& a) noexcept {
    return b.size() <= a.size() && std::equal(b.begin(), b.end(), a.begin());
  }

  std::optional<Word> strip_suffix(Word const& a, Word const& b) {
    if (!is_suffix(b, a)) {
      return std::nullopt;
    }
    return Word(a.letters().first(a.size() - b.size()));
  }

  std::optional<Word> strip_prefix(Word const& a, Word const& b) {
    if (!is_prefix(b, a)) {
      return std::nullopt;
    }
    return Word(a.letters().subspan(b.size()));
  }

  std::vector<Word> suffixes(Word const& a) {
    std::vector<Word> result;
    result.reserve(a.size() + 1);
    for (std::size_t i = 0; i <= a.size(); ++i) {
      result.emplace_back(a.letters().subspan(i));
    }
    return result;
  }

  std::vector<Word> proper_suffixes(Word const& a) {
    auto result = suffixes(a);
    result.erase(result.begin());
    return result;
  }

  std::size_t word_count(Alphabet const& alphabet, std::size_t maxlen) {
    std::size_t total = 0, layer = 1;
    for (std::size_t len = 0; len <= maxlen; ++len) {
      total += layer;
      layer *= alphabet.size();
    }
    return total;
  }

  std::vector<Word> enumerate_words(Alphabet const& alphabet,
                                    std::size_t maxlen) {
    std::vector<Word> result;
    result.reserve(word_count(alphabet, maxlen));
    result.emplace_back();
    std::size_t layer_begin = 0;
    for (std::size_t len = 1; len <= maxlen; ++len) {
      std::size_t const layer_end = result.size();
      for (std::size_t i = layer_begin; i < layer_end; ++i) {
        for (Letter x = 0; x < alphabet.size(); ++x) {
          // copy first: emplace_back may reallocate
          Word const prefix = result[i];
          result.push_back(concat(prefix, Word{x}));
        }
      }
      layer_begin = layer_end;
    }
    return result;
  }

  void check_word(Alphabet const& alphabet, Word const& w) {
    if (!w.fits(alphabet)) {
      throw Error("word " + to_string(w) + " uses a letter outside the "
                  + std::to_string(alphabet.size()) + "-letter alphabet");
    }
  }

  std::string to_string(Word const& w) {
    std::string out = "[";
    if (w.min_alphabet_size() <= 26) {
      for (Letter x : w) {
        out += char('a' + x);
      }
    } else {
      for (std::size_t i = 0; i < w.size(); ++i) {
        if (i != 0) {
          out += '.';
        }
        out += std::to_string(w[i]);
      }
    }
    out += ']';
    return out;
  }

  Word parse_word(std::string_view text) {
    detail::TextCursor cursor(text);
    Word w = cursor.word();
    cursor.finish();
    return w;
  }

}  // namespace polyext
