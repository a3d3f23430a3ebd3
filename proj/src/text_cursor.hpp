#pragma once

// Hand-written recursive-descent helpers shared by the word, polycyclic and
// extension parsers.

#include <cctype>
#include <cstddef>
#include <string>
#include <string_view>

#include "polyext/error.hpp"
#include "polyext/word.hpp"

namespace polyext::detail {

  class TextCursor {
   public:
    explicit TextCursor(std::string_view text) : _text(text) {}

    std::size_t position() const noexcept {
      return _pos;
    }
    bool at_end() const noexcept {
      return _pos >= _text.size();
    }
    char peek() const noexcept {
      return at_end() ? '\0' : _text[_pos];
    }

    void skip_space() noexcept {
      while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) {
        ++_pos;
      }
    }

    bool consume(std::string_view token) noexcept {
      if (_text.substr(_pos, token.size()) == token) {
        _pos += token.size();
        return true;
      }
      return false;
    }

    void expect(std::string_view token) {
      if (!consume(token)) {
        fail("expected '" + std::string(token) + "'");
      }
    }

    [[noreturn]] void fail(std::string const& what) const {
      throw ParseError(what, _pos);
    }

    void finish() {
      skip_space();
      if (!at_end()) {
        fail("unexpected trailing input");
      }
    }

    std::size_t decimal() {
      std::size_t const start = _pos;
      std::size_t value       = 0;
      while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
        std::size_t const next = value * 10 + std::size_t(peek() - '0');
        if (next / 10 != value) {
          _pos = start;
          fail("integer too large");
        }
        value = next;
        ++_pos;
      }
      if (_pos == start) {
        fail("expected a decimal integer");
      }
      return value;
    }

    // identifier := [A-Za-z_][A-Za-z0-9_^']*
    std::string identifier() {
      std::size_t const start = _pos;
      auto is_first = [](char c) {
        return std::isalpha(static_cast<unsigned char>(c)) || c == '_';
      };
      auto is_rest = [&](char c) {
        return is_first(c) || std::isdigit(static_cast<unsigned char>(c))
               || c == '^' || c == '\'';
      };
      if (at_end() || !is_first(peek())) {
        fail("expected a name");
      }
      while (!at_end() && is_rest(peek())) {
        ++_pos;
      }
      return std::string(_text.substr(start, _pos - start));
    }

    // word := '[' ( letters | decimal ('.' decimal)* )? ']'
    Word word() {
      expect("[");
      std::vector<Letter> letters;
      if (std::isdigit(static_cast<unsigned char>(peek()))) {
        letters.push_back(letter_value(decimal()));
        while (consume(".")) {
          letters.push_back(letter_value(decimal()));
        }
      } else {
        while (!at_end() && peek() >= 'a' && peek() <= 'z') {
          letters.push_back(Letter(peek() - 'a'));
          ++_pos;
        }
      }
      expect("]");
      return Word(std::span<Letter const>(letters));
    }

   private:
    Letter letter_value(std::size_t v) const {
      if (v > 0xFFFFFFFFu) {
        fail("letter index too large");
      }
      return Letter(v);
    }

    std::string_view _text;
    std::size_t      _pos = 0;
  };

}  // namespace polyext::detail
