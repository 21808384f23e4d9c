// monvar - equational reasoning for monoid varieties
//
// Letters, words, and the textual word grammar.

#ifndef MONVAR_WORD_HPP_
#define MONVAR_WORD_HPP_

#include <algorithm>    // for equal, all_of
#include <compare>      // for strong_ordering
#include <cstddef>      // for size_t
#include <cstdint>      // for uint32_t
#include <functional>   // for hash
#include <initializer_list>
#include <ostream>      // for ostream
#include <span>         // for span
#include <stdexcept>    // for runtime_error
#include <string>       // for string
#include <string_view>  // for string_view
#include <vector>       // for vector

namespace monvar {

  //! Base class of every exception thrown by monvar.
  class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
  };

  //! Thrown when text fails to parse; carries the 0-based character offset.
  class ParseError : public Error {
   public:
    ParseError(std::string const& msg, std::size_t pos)
        : Error(msg + " (at position " + std::to_string(pos) + ")"),
          _msg(msg),
          _pos(pos) {}

    //! The message without the position suffix of what().
    [[nodiscard]] std::string const& message() const noexcept {
      return _msg;
    }

    [[nodiscard]] std::size_t position() const noexcept {
      return _pos;
    }

   private:
    std::string _msg;
    std::size_t _pos;
  };

  //! Thrown when an operation's precondition is violated.
  class PreconditionError : public Error {
   public:
    using Error::Error;
  };

  //! A letter of the (countably infinite) alphabet.
  //!
  //! A letter is named by one lowercase character optionally followed by a
  //! decimal index, e.g. `x`, `z1`, `t12`. The name is packed into a single
  //! 32-bit code so that letters are cheap to copy, hash and compare. The
  //! order is by character, then unindexed before indexed, then by index.
  class Letter {
   public:
    static constexpr std::uint32_t max_index = (1u << 24) - 2;

    constexpr Letter() noexcept = default;

    constexpr explicit Letter(char c) : Letter(c, npos) {}

    constexpr Letter(char c, std::uint32_t index) {
      if (c < 'a' || c > 'z') {
        throw Error(std::string("invalid letter character '") + c + "'");
      }
      if (index != npos && index > max_index) {
        throw Error("letter index out of range");
      }
      _code = (static_cast<std::uint32_t>(c - 'a') << 24)
              | (index == npos ? 0u : index + 1);
    }

    //! Parses a full letter name such as `z1`.
    static Letter from_name(std::string_view name) {
      if (name.empty() || name[0] < 'a' || name[0] > 'z') {
        throw ParseError("invalid letter name '" + std::string(name) + "'", 0);
      }
      if (name.size() == 1) {
        return Letter(name[0]);
      }
      std::uint32_t idx = 0;
      for (std::size_t i = 1; i < name.size(); ++i) {
        if (name[i] < '0' || name[i] > '9') {
          throw ParseError(
              "invalid letter name '" + std::string(name) + "'", i);
        }
        idx = idx * 10 + static_cast<std::uint32_t>(name[i] - '0');
        if (idx > max_index) {
          throw ParseError("letter index too large", i);
        }
      }
      return Letter(name[0], idx);
    }

    [[nodiscard]] constexpr char base() const noexcept {
      return static_cast<char>('a' + (_code >> 24));
    }

    [[nodiscard]] constexpr bool has_index() const noexcept {
      return (_code & 0xFFFFFFu) != 0;
    }

    [[nodiscard]] constexpr std::uint32_t index() const noexcept {
      return (_code & 0xFFFFFFu) - 1;
    }

    [[nodiscard]] std::string name() const {
      std::string out(1, base());
      if (has_index()) {
        out += std::to_string(index());
      }
      return out;
    }

    [[nodiscard]] constexpr std::uint32_t code() const noexcept {
      return _code;
    }

    constexpr auto operator<=>(Letter const&) const noexcept = default;

   private:
    static constexpr std::uint32_t npos = 0xFFFFFFFFu;
    std::uint32_t                  _code = ('x' - 'a') << 24;
  };

  inline std::ostream& operator<<(std::ostream& os, Letter a) {
    return os << a.name();
  }

  //! A finite word over Letter; the empty word is the identity of F^1.
  class Word {
   public:
    using value_type     = Letter;
    using const_iterator = std::vector<Letter>::const_iterator;

    Word() = default;
    explicit Word(std::vector<Letter> letters) : _letters(std::move(letters)) {}
    Word(std::initializer_list<Letter> il) : _letters(il) {}
    Word(const_iterator first, const_iterator last) : _letters(first, last) {}
    explicit Word(std::span<Letter const> s) : _letters(s.begin(), s.end()) {}

    [[nodiscard]] std::size_t size() const noexcept {
      return _letters.size();
    }
    [[nodiscard]] bool empty() const noexcept {
      return _letters.empty();
    }
    [[nodiscard]] Letter operator[](std::size_t i) const {
      return _letters[i];
    }
    [[nodiscard]] const_iterator begin() const noexcept {
      return _letters.begin();
    }
    [[nodiscard]] const_iterator end() const noexcept {
      return _letters.end();
    }
    [[nodiscard]] std::vector<Letter> const& letters() const noexcept {
      return _letters;
    }
    [[nodiscard]] std::span<Letter const> span() const noexcept {
      return _letters;
    }

    //! The factor of length `len` starting at `pos`.
    [[nodiscard]] Word sub(std::size_t pos, std::size_t len) const {
      return Word(_letters.begin() + pos, _letters.begin() + pos + len);
    }

    void push_back(Letter a) {
      _letters.push_back(a);
    }

    Word& operator*=(Word const& other) {
      _letters.insert(_letters.end(), other.begin(), other.end());
      return *this;
    }

    Word& operator*=(Letter a) {
      _letters.push_back(a);
      return *this;
    }

    //! Shortlex order: shorter first, then lexicographic on letters.
    friend std::strong_ordering operator<=>(Word const& a, Word const& b) {
      if (a.size() != b.size()) {
        return a.size() <=> b.size();
      }
      return a._letters <=> b._letters;
    }
    friend bool operator==(Word const&, Word const&) = default;

   private:
    std::vector<Letter> _letters;
  };

  inline Word operator*(Word a, Word const& b) {
    a *= b;
    return a;
  }

  inline Word operator*(Word a, Letter b) {
    a *= b;
    return a;
  }

  inline Word operator*(Letter a, Word const& b) {
    Word w{a};
    w *= b;
    return w;
  }

  //! The word a^k.
  inline Word power(Letter a, std::size_t k) {
    return Word(std::vector<Letter>(k, a));
  }

  //! The word w^k.
  inline Word power(Word const& w, std::size_t k) {
    Word out;
    for (std::size_t i = 0; i < k; ++i) {
      out *= w;
    }
    return out;
  }

  enum class WordSyntax { compact, tokens };

  namespace detail {
    inline std::size_t parse_exponent(std::string_view text, std::size_t& i) {
      std::size_t const start = i;
      ++i;  // skip '^'
      if (i >= text.size() || text[i] < '0' || text[i] > '9') {
        throw ParseError("malformed exponent", start);
      }
      std::size_t k = 0;
      while (i < text.size() && text[i] >= '0' && text[i] <= '9') {
        k = k * 10 + static_cast<std::size_t>(text[i] - '0');
        if (k > 1'000'000) {
          throw ParseError("exponent too large", start);
        }
        ++i;
      }
      if (k == 0) {
        throw ParseError("exponent must be at least 1", start);
      }
      return k;
    }

    inline bool is_space(char c) {
      return c == ' ' || c == '\t' || c == '\n' || c == '\r';
    }

    inline std::string_view trim(std::string_view s) {
      while (!s.empty() && is_space(s.front())) {
        s.remove_prefix(1);
      }
      while (!s.empty() && is_space(s.back())) {
        s.remove_suffix(1);
      }
      return s;
    }
  }  // namespace detail

  //! Parses a word.
  //!
  //! In compact syntax every lowercase character is a letter and `^k`
  //! repeats the preceding letter; in token syntax letters are whitespace
  //! separated names, each with an optional `^k`. In both syntaxes `1`
  //! denotes the empty word.
  inline Word parse_word(std::string_view text, WordSyntax syntax) {
    std::string_view const body = detail::trim(text);
    if (body == "1") {
      return Word();
    }
    if (body.empty()) {
      throw ParseError("empty input (use 1 for the empty word)", 0);
    }
    std::size_t const offset = static_cast<std::size_t>(body.data() - text.data());
    Word              w;
    std::size_t       i = 0;
    if (syntax == WordSyntax::compact) {
      while (i < body.size()) {
        char const c = body[i];
        if (c >= 'a' && c <= 'z') {
          w.push_back(Letter(c));
          ++i;
        } else if (c == '^') {
          if (w.empty() || (i > 0 && body[i - 1] == '^')) {
            throw ParseError("exponent without a preceding letter", offset + i);
          }
          std::size_t const k = detail::parse_exponent(body, i);
          Letter const      a = w[w.size() - 1];
          for (std::size_t j = 1; j < k; ++j) {
            w.push_back(a);
          }
          if (i < body.size() && body[i] == '^') {
            throw ParseError("repeated exponent", offset + i);
          }
        } else if (detail::is_space(c)) {
          ++i;
        } else {
          throw ParseError(std::string("unexpected character '") + c + "'",
                           offset + i);
        }
      }
      return w;
    }
    while (i < body.size()) {
      if (detail::is_space(body[i])) {
        ++i;
        continue;
      }
      std::size_t const start = i;
      if (body[i] < 'a' || body[i] > 'z') {
        throw ParseError(std::string("unexpected character '") + body[i] + "'",
                         offset + i);
      }
      ++i;
      while (i < body.size() && body[i] >= '0' && body[i] <= '9') {
        ++i;
      }
      Letter a;
      try {
        a = Letter::from_name(body.substr(start, i - start));
      } catch (ParseError const& e) {
        throw ParseError("invalid letter name", offset + start);
      }
      std::size_t k = 1;
      if (i < body.size() && body[i] == '^') {
        k = detail::parse_exponent(body, i);
      }
      if (i < body.size() && !detail::is_space(body[i])) {
        throw ParseError(std::string("unexpected character '") + body[i] + "'",
                         offset + i);
      }
      for (std::size_t j = 0; j < k; ++j) {
        w.push_back(a);
      }
    }
    return w;
  }

  //! Parses a word, choosing token syntax when the text contains whitespace
  //! between letters or an indexed letter name, and compact syntax otherwise.
  inline Word parse_word(std::string_view text) {
    std::string_view const body = detail::trim(text);
    bool                   tokens = false;
    for (std::size_t i = 0; i < body.size(); ++i) {
      if (detail::is_space(body[i])) {
        tokens = true;
        break;
      }
      if (body[i] >= '0' && body[i] <= '9' && i > 0 && body[i - 1] >= 'a'
          && body[i - 1] <= 'z') {
        tokens = true;
        break;
      }
    }
    return parse_word(text, tokens ? WordSyntax::tokens : WordSyntax::compact);
  }

  //! Renders a word, grouping maximal powers as `a^k`. Compact syntax is
  //! used when every letter name is a single character, token syntax
  //! otherwise; the empty word renders as `1`.
  inline std::string render(Word const& w) {
    if (w.empty()) {
      return "1";
    }
    bool const compact = std::all_of(
        w.begin(), w.end(), [](Letter a) { return !a.has_index(); });
    std::string out;
    for (std::size_t i = 0; i < w.size();) {
      std::size_t j = i;
      while (j < w.size() && w[j] == w[i]) {
        ++j;
      }
      if (!compact && !out.empty()) {
        out += ' ';
      }
      out += w[i].name();
      if (j - i > 1) {
        out += '^';
        out += std::to_string(j - i);
      }
      i = j;
    }
    return out;
  }

  inline std::ostream& operator<<(std::ostream& os, Word const& w) {
    return os << render(w);
  }

  namespace literals {
    //! `"xyx^2"_w` parses a word.
    inline Word operator""_w(char const* s, std::size_t n) {
      return parse_word(std::string_view(s, n));
    }
  }  // namespace literals

}  // namespace monvar

template <>
struct std::hash<monvar::Letter> {
  std::size_t operator()(monvar::Letter a) const noexcept {
    return std::hash<std::uint32_t>()(a.code());
  }
};

template <>
struct std::hash<monvar::Word> {
  std::size_t operator()(monvar::Word const& w) const noexcept {
    std::size_t h = 0xcbf29ce484222325ull;
    for (monvar::Letter a : w) {
      h ^= a.code();
      h *= 0x100000001b3ull;
    }
    return h;
  }
};

#endif  // MONVAR_WORD_HPP_
