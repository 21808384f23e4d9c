// monvar - equational reasoning for monoid varieties
//
// Finite monoids given by multiplication tables: Rees quotients S(W) of the
// free monoid, quotients S_ρ(W) for a congruence ρ (shipped: trivial and
// tau), structural predicates and brute-force identity satisfaction.

#ifndef MONVAR_MONOIDS_HPP_
#define MONVAR_MONOIDS_HPP_

#include <algorithm>      // for sort, find
#include <concepts>       // for same_as
#include <cstddef>        // for size_t
#include <cstdint>        // for uint32_t
#include <fstream>        // for ifstream, ofstream
#include <map>            // for map
#include <optional>       // for optional
#include <set>            // for set
#include <sstream>        // for ostringstream
#include <string>         // for string
#include <unordered_map>  // for unordered_map
#include <unordered_set>  // for unordered_set
#include <vector>         // for vector

#include "nlohmann/json.hpp"

#include "identities.hpp"
#include "word.hpp"
#include "words.hpp"

namespace monvar {

  using ElementSubstitution = std::map<Letter, std::size_t>;

  //! A finite monoid with elements 0 … n-1 and a full multiplication table.
  //!
  //! Instances are immutable once built. Construction does not validate;
  //! call `validate` (or use `deserialize`, which does).
  class FiniteMonoid {
   public:
    using element_type = std::uint32_t;

    FiniteMonoid() = default;

    FiniteMonoid(std::vector<std::string>         names,
                 std::size_t                      identity,
                 std::optional<std::size_t>       zero,
                 std::vector<element_type>        table)
        : _names(std::move(names)),
          _identity(identity),
          _zero(zero),
          _table(std::move(table)) {}

    [[nodiscard]] std::size_t size() const noexcept {
      return _names.size();
    }
    [[nodiscard]] std::size_t identity() const noexcept {
      return _identity;
    }
    [[nodiscard]] std::optional<std::size_t> zero() const noexcept {
      return _zero;
    }
    [[nodiscard]] std::vector<std::string> const& names() const noexcept {
      return _names;
    }
    [[nodiscard]] std::string const& name(std::size_t i) const {
      return _names.at(i);
    }
    [[nodiscard]] std::vector<element_type> const& table() const noexcept {
      return _table;
    }

    [[nodiscard]] element_type product(std::size_t a, std::size_t b) const {
      return _table[a * size() + b];
    }

    //! Index of the element with display name `nm`.
    [[nodiscard]] std::optional<std::size_t>
    find(std::string const& nm) const {
      auto it = std::find(_names.begin(), _names.end(), nm);
      if (it == _names.end()) {
        return std::nullopt;
      }
      return static_cast<std::size_t>(it - _names.begin());
    }

    friend bool operator==(FiniteMonoid const&, FiniteMonoid const&)
        = default;

   private:
    std::vector<std::string>   _names;
    std::size_t                _identity = 0;
    std::optional<std::size_t> _zero;
    std::vector<element_type>  _table;
  };

  struct ValidationReport {
    std::vector<std::string> problems;
    [[nodiscard]] bool ok() const noexcept {
      return problems.empty();
    }
  };

  //! Checks table shape, index ranges, the identity, the zero and
  //! associativity. The first non-associative triple is named.
  inline ValidationReport validate(FiniteMonoid const& M) {
    ValidationReport  r;
    std::size_t const n = M.size();
    if (n == 0) {
      r.problems.emplace_back("monoid has no elements");
      return r;
    }
    if (M.table().size() != n * n) {
      r.problems.emplace_back("table has " + std::to_string(M.table().size())
                              + " entries, expected "
                              + std::to_string(n * n));
      return r;
    }
    for (auto v : M.table()) {
      if (v >= n) {
        r.problems.emplace_back("table entry " + std::to_string(v)
                                + " out of range");
        return r;
      }
    }
    if (M.identity() >= n) {
      r.problems.emplace_back("identity index out of range");
      return r;
    }
    if (M.zero() && *M.zero() >= n) {
      r.problems.emplace_back("zero index out of range");
      return r;
    }
    std::size_t const e = M.identity();
    for (std::size_t a = 0; a < n; ++a) {
      if (M.product(e, a) != a || M.product(a, e) != a) {
        r.problems.emplace_back("identity " + M.name(e)
                                + " is not neutral for " + M.name(a));
        break;
      }
    }
    if (auto z = M.zero()) {
      for (std::size_t a = 0; a < n; ++a) {
        if (M.product(*z, a) != *z || M.product(a, *z) != *z) {
          r.problems.emplace_back("zero " + M.name(*z)
                                  + " is not absorbing for " + M.name(a));
          break;
        }
      }
    }
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        std::size_t const ab = M.product(a, b);
        for (std::size_t c = 0; c < n; ++c) {
          if (M.product(ab, c) != M.product(a, M.product(b, c))) {
            r.problems.emplace_back("not associative at (" + M.name(a) + ", "
                                    + M.name(b) + ", " + M.name(c) + ")");
            return r;
          }
        }
      }
    }
    return r;
  }

  ////////////////////////////////////////////////////////////////////////
  // Quotients S_ρ(W)
  ////////////////////////////////////////////////////////////////////////

  //! A congruence on F^1 given by a normal form map.
  template <typename C>
  concept WordCongruence = requires(C const& c, Word const& w) {
    { c.normal_form(w) } -> std::same_as<Word>;
  };

  struct TrivialCongruence {
    [[nodiscard]] Word normal_form(Word const& w) const {
      return w;
    }
  };

  struct TauCongruence {
    [[nodiscard]] Word normal_form(Word const& w) const {
      return reduce(w);
    }
  };

  //! The quotient monoid together with the word each element represents.
  struct WordQuotient {
    FiniteMonoid      monoid;
    std::vector<Word> words;  // words[i] for every non-zero element i

    [[nodiscard]] std::optional<std::size_t> index_of(Word const& w) const {
      auto it = std::lower_bound(words.begin(), words.end(), w);
      if (it == words.end() || *it != w) {
        return std::nullopt;
      }
      return static_cast<std::size_t>(it - words.begin());
    }
  };

  //! Builds S_ρ(W) from the ρ-normal forms of the words of W.
  //!
  //! `classes` must consist of normal forms and be closed under taking a
  //! factor and then its normal form; the empty word is always included.
  //! Elements are ordered shortlex with the zero last.
  template <WordCongruence Rho>
  WordQuotient s_rho_quotient(Rho const& rho, std::vector<Word> classes) {
    classes.push_back(Word());
    std::sort(classes.begin(), classes.end());
    classes.erase(std::unique(classes.begin(), classes.end()), classes.end());
    std::unordered_set<Word> const members(classes.begin(), classes.end());
    for (Word const& w : classes) {
      if (rho.normal_form(w) != w) {
        throw PreconditionError("element " + render(w)
                                + " is not in normal form");
      }
      for (std::size_t i = 0; i < w.size(); ++i) {
        for (std::size_t len = 1; i + len <= w.size(); ++len) {
          Word const f = rho.normal_form(w.sub(i, len));
          if (members.count(f) == 0) {
            throw PreconditionError(
                "set is not closed under factors: " + render(w)
                + " has factor " + render(w.sub(i, len)) + " with class "
                + render(f) + " outside the set");
          }
        }
      }
    }
    std::size_t const n = classes.size() + 1;
    std::size_t const z = classes.size();
    std::unordered_map<Word, std::size_t> index;
    for (std::size_t i = 0; i < classes.size(); ++i) {
      index.emplace(classes[i], i);
    }
    std::vector<FiniteMonoid::element_type> table(n * n, z);
    for (std::size_t i = 0; i < classes.size(); ++i) {
      for (std::size_t j = 0; j < classes.size(); ++j) {
        auto it = index.find(rho.normal_form(classes[i] * classes[j]));
        if (it != index.end()) {
          table[i * n + j] = static_cast<FiniteMonoid::element_type>(it->second);
        }
      }
    }
    std::vector<std::string> names;
    for (Word const& w : classes) {
      names.push_back(render(w));
    }
    names.emplace_back("0");
    return {FiniteMonoid(std::move(names), 0, z, std::move(table)),
            std::move(classes)};
  }

  //! The Rees quotient S(w_1, …, w_k) of F^1 over the ideal of words that
  //! are not factors of any w_i.
  inline WordQuotient rees_quotient_words(std::vector<Word> const& W) {
    if (W.empty()) {
      throw PreconditionError("rees_quotient needs at least one word");
    }
    std::unordered_set<Word> all;
    for (Word const& w : W) {
      if (w.empty()) {
        throw PreconditionError("rees_quotient words must be non-empty");
      }
      auto const f = factors(w);
      all.insert(f.begin(), f.end());
    }
    return s_rho_quotient(TrivialCongruence{},
                          std::vector<Word>(all.begin(), all.end()));
  }

  inline FiniteMonoid rees_quotient(std::vector<Word> const& W) {
    return rees_quotient_words(W).monoid;
  }

  //! S_τ(W) for a set of reduced words closed under "factor, then reduce".
  inline WordQuotient tau_quotient_words(std::vector<Word> const& W) {
    for (Word const& w : W) {
      if (!is_reduced(w)) {
        throw PreconditionError("word " + render(w) + " is not reduced");
      }
    }
    WordQuotient q = s_rho_quotient(TauCongruence{}, W);
    // closure under factors of reduced words does not cover factors of the
    // other members of a τ-class, and missing ones break associativity
    if (auto report = validate(q.monoid); !report.ok()) {
      throw PreconditionError("word set is not closed under τ: "
                              + report.problems.front());
    }
    return q;
  }

  inline FiniteMonoid tau_quotient(std::vector<Word> const& W) {
    return tau_quotient_words(W).monoid;
  }

  struct Saturation {
    std::vector<Word> words;  // shortlex sorted
    bool              stabilized = false;
  };

  namespace detail {
    inline std::vector<Word> j_generator_words(std::size_t k_max,
                                               std::size_t l_max) {
      Letter const             x('x'), y('y'), z('z'), t('t');
      std::unordered_set<Word> out;
      for (std::size_t k = 1; k <= k_max; ++k) {
        for (std::size_t l = 1; l <= l_max; ++l) {
          Word const w = Word{x, z, y} * power(x, k) * t * power(y, l);
          for (Word const& f : factors(w)) {
            out.insert(reduce(f));
          }
        }
      }
      std::vector<Word> v(out.begin(), out.end());
      std::sort(v.begin(), v.end());
      return v;
    }
  }  // namespace detail

  //! Reduced forms of all factors of x z y x^k t y^ℓ, k <= k_max, ℓ <= l_max;
  //! stabilized when the set equals the one for (k_max-1, l_max-1).
  inline Saturation saturate_j_generator(std::size_t k_max, std::size_t l_max) {
    if (k_max < 1 || l_max < 1) {
      throw PreconditionError("saturate_j_generator needs k_max, l_max >= 1");
    }
    Saturation s;
    s.words = detail::j_generator_words(k_max, l_max);
    if (k_max >= 2 && l_max >= 2) {
      s.stabilized = s.words == detail::j_generator_words(k_max - 1, l_max - 1);
    }
    return s;
  }

  ////////////////////////////////////////////////////////////////////////
  // Structure
  ////////////////////////////////////////////////////////////////////////

  inline std::vector<std::size_t> idempotents(FiniteMonoid const& M) {
    std::vector<std::size_t> out;
    for (std::size_t a = 0; a < M.size(); ++a) {
      if (M.product(a, a) == a) {
        out.push_back(a);
      }
    }
    return out;
  }

  inline bool idempotents_commute(FiniteMonoid const& M) {
    auto const E = idempotents(M);
    for (auto e : E) {
      for (auto f : E) {
        if (M.product(e, f) != M.product(f, e)) {
          return false;
        }
      }
    }
    return true;
  }

  //! For finite monoids: every a satisfies a^k = a^{k+1} for some k <= |M|.
  inline bool is_aperiodic(FiniteMonoid const& M) {
    for (std::size_t a = 0; a < M.size(); ++a) {
      std::size_t pw    = a;
      bool        found = false;
      for (std::size_t k = 1; k <= M.size(); ++k) {
        std::size_t const next = M.product(pw, a);
        if (next == pw) {
          found = true;
          break;
        }
        pw = next;
      }
      if (!found) {
        return false;
      }
    }
    return true;
  }

  ////////////////////////////////////////////////////////////////////////
  // Identity satisfaction
  ////////////////////////////////////////////////////////////////////////

  inline std::size_t evaluate(FiniteMonoid const&        M,
                              Word const&                w,
                              ElementSubstitution const& s) {
    std::size_t v = M.identity();
    for (Letter a : w) {
      auto it = s.find(a);
      if (it == s.end()) {
        throw PreconditionError("letter " + a.name()
                                + " has no value in the substitution");
      }
      v = M.product(v, it->second);
    }
    return v;
  }

  struct Satisfaction {
    bool                               holds = true;
    std::optional<ElementSubstitution> counterexample;
    std::size_t                        lhs_value = 0;
    std::size_t                        rhs_value = 0;
  };

  namespace detail {
    // Depth-first search over substitutions in mixed-radix order: letters
    // in order of first occurrence (left side, then right side), values in
    // increasing element index. A subtree is skipped when both sides
    // already contain a factor of assigned letters that evaluates to zero,
    // since every completion then agrees.
    class SatisfactionSearch {
     public:
      SatisfactionSearch(FiniteMonoid const& M, Identity const& id)
          : _M(M), _n(M.size()) {
        for (Letter a : id.lhs) {
          slot_of(a);
        }
        for (Letter a : id.rhs) {
          slot_of(a);
        }
        for (Letter a : id.lhs) {
          _lhs.push_back(slot_of(a));
        }
        for (Letter a : id.rhs) {
          _rhs.push_back(slot_of(a));
        }
        _values.assign(_order.size(), 0);
      }

      Satisfaction run() {
        Satisfaction result;
        if (search(0)) {
          return result;
        }
        result.holds = false;
        ElementSubstitution s;
        for (std::size_t i = 0; i < _order.size(); ++i) {
          s[_order[i]] = _values[i];
        }
        result.counterexample = std::move(s);
        result.lhs_value      = eval(_lhs);
        result.rhs_value      = eval(_rhs);
        return result;
      }

     private:
      std::size_t slot_of(Letter a) {
        for (std::size_t i = 0; i < _order.size(); ++i) {
          if (_order[i] == a) {
            return i;
          }
        }
        _order.push_back(a);
        return _order.size() - 1;
      }

      std::size_t eval(std::vector<std::size_t> const& side) const {
        std::size_t v = _M.identity();
        for (auto s : side) {
          v = _M.product(v, _values[s]);
        }
        return v;
      }

      // Whether some maximal run of slots < depth evaluates to zero.
      bool forced_zero(std::vector<std::size_t> const& side,
                       std::size_t                     depth) const {
        std::size_t const z   = *_M.zero();
        std::size_t       run = _M.identity();
        for (auto s : side) {
          if (s < depth) {
            run = _M.product(run, _values[s]);
            if (run == z) {
              return true;
            }
          } else {
            run = _M.identity();
          }
        }
        return false;
      }

      // Returns false on the first counterexample, leaving it in _values.
      bool search(std::size_t depth) {
        if (depth == _order.size()) {
          return eval(_lhs) == eval(_rhs);
        }
        for (std::size_t v = 0; v < _n; ++v) {
          _values[depth] = v;
          if (_M.zero() && depth + 1 < _order.size()
              && forced_zero(_lhs, depth + 1)
              && forced_zero(_rhs, depth + 1)) {
            continue;
          }
          if (!search(depth + 1)) {
            return false;
          }
        }
        return true;
      }

      FiniteMonoid const&      _M;
      std::size_t              _n;
      std::vector<Letter>      _order;
      std::vector<std::size_t> _lhs;
      std::vector<std::size_t> _rhs;
      std::vector<std::size_t> _values;
    };
  }  // namespace detail

  //! Whether M satisfies `id`, i.e. both sides agree under all |M|^k
  //! substitutions. On failure the first counterexample in the search order
  //! is returned.
  inline Satisfaction satisfies(FiniteMonoid const& M, Identity const& id) {
    if (id.trivial()) {
      return {};
    }
    return detail::SatisfactionSearch(M, id).run();
  }

  struct SatisfactionReport {
    std::vector<std::pair<Identity, Satisfaction>> results;
    [[nodiscard]] bool all_hold() const {
      return std::all_of(results.begin(), results.end(), [](auto const& r) {
        return r.second.holds;
      });
    }
  };

  inline SatisfactionReport satisfies_all(FiniteMonoid const&          M,
                                          std::vector<Identity> const& ids) {
    SatisfactionReport r;
    for (auto const& id : ids) {
      r.results.emplace_back(id, satisfies(M, id));
    }
    return r;
  }

  inline std::string describe(FiniteMonoid const&        M,
                              ElementSubstitution const& s) {
    std::string out;
    for (auto const& [a, v] : s) {
      out += (out.empty() ? "" : ", ") + a.name() + "->" + M.name(v);
    }
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // Serialization
  ////////////////////////////////////////////////////////////////////////

  //! Stable JSON text: element names, identity and zero indices, and the
  //! row-major table with one row per line.
  inline std::string serialize(FiniteMonoid const& M) {
    std::ostringstream os;
    os << "{\n  \"elements\": [";
    for (std::size_t i = 0; i < M.size(); ++i) {
      os << (i == 0 ? "" : ", ") << nlohmann::json(M.name(i)).dump();
    }
    os << "],\n  \"identity\": " << M.identity() << ",\n  \"zero\": ";
    if (M.zero()) {
      os << *M.zero();
    } else {
      os << "null";
    }
    os << ",\n  \"table\": [";
    for (std::size_t a = 0; a < M.size(); ++a) {
      os << (a == 0 ? "\n    [" : ",\n    [");
      for (std::size_t b = 0; b < M.size(); ++b) {
        os << (b == 0 ? "" : ", ") << M.product(a, b);
      }
      os << "]";
    }
    os << (M.size() == 0 ? "]\n}\n" : "\n  ]\n}\n");
    return os.str();
  }

  //! Parses and validates a serialized monoid; throws Error on schema or
  //! validation failures.
  inline FiniteMonoid deserialize(std::string const& text) {
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(text);
    } catch (nlohmann::json::parse_error const& e) {
      throw Error(std::string("monoid file is not valid JSON: ") + e.what());
    }
    auto require = [&](char const* key) -> nlohmann::json const& {
      if (!j.is_object() || !j.contains(key)) {
        throw Error(std::string("monoid file lacks field '") + key + "'");
      }
      return j.at(key);
    };
    auto const& elems = require("elements");
    auto const& ident = require("identity");
    auto const& zero  = require("zero");
    auto const& table = require("table");
    if (!elems.is_array()) {
      throw Error("'elements' must be an array of names");
    }
    std::vector<std::string> names;
    for (auto const& e : elems) {
      if (!e.is_string()) {
        throw Error("'elements' must be an array of names");
      }
      names.push_back(e.get<std::string>());
    }
    std::size_t const n = names.size();
    if (!ident.is_number_unsigned() || ident.get<std::size_t>() >= n) {
      throw Error("'identity' must be an element index");
    }
    std::optional<std::size_t> z;
    if (!zero.is_null()) {
      if (!zero.is_number_unsigned() || zero.get<std::size_t>() >= n) {
        throw Error("'zero' must be an element index or null");
      }
      z = zero.get<std::size_t>();
    }
    if (!table.is_array() || table.size() != n) {
      throw Error("'table' must have one row per element ("
                  + std::to_string(n) + ")");
    }
    std::vector<FiniteMonoid::element_type> flat;
    for (std::size_t a = 0; a < n; ++a) {
      auto const& row = table[a];
      if (!row.is_array() || row.size() != n) {
        throw Error("table row " + std::to_string(a) + " must have "
                    + std::to_string(n) + " entries");
      }
      for (auto const& v : row) {
        if (!v.is_number_unsigned() || v.get<std::size_t>() >= n) {
          throw Error("table row " + std::to_string(a)
                      + " has an invalid entry");
        }
        flat.push_back(v.get<FiniteMonoid::element_type>());
      }
    }
    FiniteMonoid M(std::move(names), ident.get<std::size_t>(), z,
                   std::move(flat));
    auto const report = validate(M);
    if (!report.ok()) {
      throw Error("invalid monoid: " + report.problems.front());
    }
    return M;
  }

  inline FiniteMonoid load_monoid(std::string const& path) {
    std::ifstream in(path);
    if (!in) {
      throw Error("cannot open monoid file '" + path + "'");
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return deserialize(ss.str());
  }

  inline void save_monoid(FiniteMonoid const& M, std::string const& path) {
    std::ofstream out(path);
    if (!out) {
      throw Error("cannot write monoid file '" + path + "'");
    }
    out << serialize(M);
  }

}  // namespace monvar

#endif  // MONVAR_MONOIDS_HPP_
