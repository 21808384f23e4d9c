// monvar - equational reasoning for monoid varieties
//
// Equational rewriting over F^1: substitution instances of identities
// (letters may map to the empty word), one-step rewriting, bounded
// bidirectional derivation search, derivation traces and their
// verification, and the relatively free monoid of a finitely based variety
// used as an exact oracle for identity checking.

#ifndef MONVAR_REWRITE_HPP_
#define MONVAR_REWRITE_HPP_

#include <algorithm>      // for min, max
#include <cstddef>        // for size_t
#include <cstdint>        // for uint32_t
#include <fstream>        // for ifstream
#include <map>            // for map
#include <numeric>        // for iota
#include <optional>       // for optional
#include <span>           // for span
#include <string>         // for string
#include <type_traits>    // for remove_reference_t
#include <unordered_map>  // for unordered_map
#include <utility>        // for pair
#include <vector>         // for vector

#include "nlohmann/json.hpp"

#include "identities.hpp"
#include "monoids.hpp"
#include "word.hpp"
#include "words.hpp"

namespace monvar {

  using WordSubstitution = std::map<Letter, Word>;

  //! σ(w); letters outside the domain of σ are an error.
  inline Word substitute(Word const& w, WordSubstitution const& sigma) {
    Word out;
    for (Letter a : w) {
      auto it = sigma.find(a);
      if (it == sigma.end()) {
        throw PreconditionError("substitution has no image for letter "
                                + a.name());
      }
      out *= it->second;
    }
    return out;
  }

  inline Identity substitute(Identity const& id, WordSubstitution const& s) {
    return Identity(substitute(id.lhs, s), substitute(id.rhs, s));
  }

  inline std::string describe(WordSubstitution const& s) {
    std::string out;
    for (auto const& [a, w] : s) {
      out += (out.empty() ? "" : ", ") + a.name() + "=" + render(w);
    }
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // Pattern matching
  ////////////////////////////////////////////////////////////////////////

  namespace detail {
    //! A pattern word with its letters numbered by first occurrence.
    struct CompiledPattern {
      std::vector<Letter>      letters;
      std::vector<std::size_t> seq;

      explicit CompiledPattern(Word const& w) {
        for (Letter a : w) {
          seq.push_back(slot(a));
        }
      }

      std::size_t slot(Letter a) {
        for (std::size_t i = 0; i < letters.size(); ++i) {
          if (letters[i] == a) {
            return i;
          }
        }
        letters.push_back(a);
        return letters.size() - 1;
      }

      //! Slots for another word; letters absent from the pattern get new
      //! slots (whose image is the empty word).
      std::vector<std::size_t> compile_other(Word const& w) {
        std::vector<std::size_t> out;
        for (Letter a : w) {
          out.push_back(slot(a));
        }
        return out;
      }
    };

    struct Binding {
      std::size_t start = 0;
      std::size_t len   = 0;
      bool        bound = false;
    };

    // Calls f(position, length, bindings) for every occurrence of an
    // instance of the pattern in `target`, in order of position and then
    // lexicographically on the images (taken in slot order). Stops early
    // when f returns false; returns false in that case.
    template <typename F>
    class Matcher {
     public:
      Matcher(CompiledPattern const& p, std::span<Letter const> t, F& f)
          : _p(p), _t(t), _f(f), _bind(p.letters.size()) {}

      bool run() {
        for (std::size_t pos = 0; pos <= _t.size(); ++pos) {
          _pos = pos;
          if (!step(0, pos)) {
            return false;
          }
        }
        return true;
      }

     private:
      bool step(std::size_t j, std::size_t q) {
        if (j == _p.seq.size()) {
          return _f(_pos, q - _pos, std::span<Binding const>(_bind));
        }
        Binding& b = _bind[_p.seq[j]];
        if (b.bound) {
          if (q + b.len > _t.size()) {
            return true;
          }
          for (std::size_t i = 0; i < b.len; ++i) {
            if (_t[q + i] != _t[b.start + i]) {
              return true;
            }
          }
          return step(j + 1, q + b.len);
        }
        b.bound = true;
        b.start = q;
        for (std::size_t len = 0; q + len <= _t.size(); ++len) {
          b.len = len;
          if (!step(j + 1, q + len)) {
            b.bound = false;
            return false;
          }
        }
        b.bound = false;
        return true;
      }

      CompiledPattern const&  _p;
      std::span<Letter const> _t;
      F&                      _f;
      std::vector<Binding>    _bind;
      std::size_t             _pos = 0;
    };

    template <typename F>
    bool for_each_match(CompiledPattern const&  p,
                        std::span<Letter const> target,
                        F&&                     f) {
      Matcher<std::remove_reference_t<F>> m(p, target, f);
      return m.run();
    }
  }  // namespace detail

  struct Match {
    WordSubstitution sigma;
    std::size_t      position = 0;
    std::size_t      length   = 0;
  };

  struct MatchResult {
    std::vector<Match> matches;
    bool               truncated = false;
  };

  inline constexpr std::size_t default_match_cap = 100'000;

  //! All ways to write target = p σ(pattern) q; images may be empty.
  inline MatchResult match_pattern(Word const& pattern,
                                   Word const& target,
                                   std::size_t cap = default_match_cap) {
    detail::CompiledPattern const cp(pattern);
    MatchResult                   r;
    detail::for_each_match(
        cp,
        target.span(),
        [&](std::size_t pos,
            std::size_t len,
            std::span<detail::Binding const> b) {
          if (r.matches.size() == cap) {
            r.truncated = true;
            return false;
          }
          Match m;
          m.position = pos;
          m.length   = len;
          for (std::size_t s = 0; s < cp.letters.size(); ++s) {
            m.sigma[cp.letters[s]] = target.sub(b[s].start, b[s].len);
          }
          r.matches.push_back(std::move(m));
          return true;
        });
    return r;
  }

  ////////////////////////////////////////////////////////////////////////
  // Rewrite steps
  ////////////////////////////////////////////////////////////////////////

  enum class Direction { lhs_to_rhs, rhs_to_lhs };

  inline Direction flip(Direction d) {
    return d == Direction::lhs_to_rhs ? Direction::rhs_to_lhs
                                      : Direction::lhs_to_rhs;
  }

  inline std::string to_string(Direction d) {
    return d == Direction::lhs_to_rhs ? "lhs->rhs" : "rhs->lhs";
  }

  //! Replace the factor σ(from) at `position` with σ(to), where (from, to)
  //! is (lhs, rhs) or (rhs, lhs) of `identity` according to `direction`.
  //! Letters of `to` absent from σ map to the empty word.
  struct RewriteStep {
    Identity         identity;
    Direction        direction = Direction::lhs_to_rhs;
    WordSubstitution sigma;
    std::size_t      position = 0;

    [[nodiscard]] Word const& from() const {
      return direction == Direction::lhs_to_rhs ? identity.lhs : identity.rhs;
    }
    [[nodiscard]] Word const& to() const {
      return direction == Direction::lhs_to_rhs ? identity.rhs : identity.lhs;
    }
  };

  namespace detail {
    inline WordSubstitution completed(WordSubstitution s, Identity const& id) {
      for (Letter a : id.letters()) {
        s.try_emplace(a);
      }
      return s;
    }
  }  // namespace detail

  inline Word apply_step(Word const& w, RewriteStep const& step) {
    WordSubstitution const s    = detail::completed(step.sigma, step.identity);
    Word const             from = substitute(step.from(), s);
    if (step.position + from.size() > w.size()
        || w.sub(step.position, from.size()) != from) {
      throw PreconditionError("step does not match " + render(w)
                              + " at position "
                              + std::to_string(step.position) + ": expected "
                              + render(from));
    }
    return w.sub(0, step.position) * substitute(step.to(), s)
           * w.sub(step.position + from.size(),
                   w.size() - step.position - from.size());
  }

  namespace detail {
    // Calls f(step, result) for each one-step rewrite of `w` by `basis` in
    // both directions whose result is distinct and has length <= max_len.
    template <typename F>
    bool for_each_successor(Word const&                  w,
                            std::vector<Identity> const& basis,
                            std::size_t                  max_len,
                            std::size_t                  match_cap,
                            F&&                          f,
                            bool*                        truncated = nullptr) {
      for (Identity const& id : basis) {
        for (Direction d : {Direction::lhs_to_rhs, Direction::rhs_to_lhs}) {
          Word const&     from = d == Direction::lhs_to_rhs ? id.lhs : id.rhs;
          Word const&     to   = d == Direction::lhs_to_rhs ? id.rhs : id.lhs;
          CompiledPattern cp(from);
          auto const      other = cp.compile_other(to);
          std::size_t     count = 0;
          bool            go_on = true;
          for_each_match(
              cp,
              w.span(),
              [&](std::size_t pos,
                  std::size_t len,
                  std::span<Binding const> b) {
                if (++count > match_cap) {
                  if (truncated != nullptr) {
                    *truncated = true;
                  }
                  return false;
                }
                std::size_t out_len = w.size() - len;
                for (auto s : other) {
                  out_len += s < b.size() ? b[s].len : 0;
                }
                if (out_len > max_len) {
                  return true;
                }
                std::vector<Letter> res(w.begin(), w.begin() + pos);
                for (auto s : other) {
                  if (s < b.size()) {
                    res.insert(res.end(),
                               w.begin() + b[s].start,
                               w.begin() + b[s].start + b[s].len);
                  }
                }
                res.insert(res.end(), w.begin() + pos + len, w.end());
                Word result(std::move(res));
                if (result == w) {
                  return true;
                }
                RewriteStep step;
                step.identity  = id;
                step.direction = d;
                step.position  = pos;
                for (std::size_t s = 0; s < cp.letters.size(); ++s) {
                  if (s < b.size()) {
                    step.sigma[cp.letters[s]] = w.sub(b[s].start, b[s].len);
                  }
                }
                go_on = f(step, result);
                return go_on;
              });
          if (!go_on) {
            return false;
          }
        }
      }
      return true;
    }
  }  // namespace detail

  ////////////////////////////////////////////////////////////////////////
  // Derivation traces
  ////////////////////////////////////////////////////////////////////////

  struct DerivationTrace {
    Word                     start;
    std::vector<RewriteStep> steps;
    Word                     end;
  };

  struct TraceCheck {
    bool                       ok = true;
    std::optional<std::size_t> failing_step;
    std::string                reason;
  };

  //! Replays every step; each step's identity must be one of `allowed`
  //! (compared as unordered identities).
  inline TraceCheck verify_trace(DerivationTrace const&       trace,
                                 std::vector<Identity> const& allowed) {
    Word cur = trace.start;
    for (std::size_t i = 0; i < trace.steps.size(); ++i) {
      RewriteStep const& st = trace.steps[i];
      if (std::find(allowed.begin(), allowed.end(), st.identity)
          == allowed.end()) {
        return {false, i, "identity " + st.identity.name() + " is not allowed"};
      }
      try {
        cur = apply_step(cur, st);
      } catch (Error const& e) {
        return {false, i, e.what()};
      }
    }
    if (cur != trace.end) {
      return {false,
              std::nullopt,
              "chain ends at " + render(cur) + ", not " + render(trace.end)};
    }
    return {};
  }

  //! Bounds for derivation search. A zero `max_word_len` means
  //! max(|u|, |v|) + 4.
  struct SearchBudget {
    std::size_t max_word_len = 0;
    std::size_t max_steps    = 12;
    std::size_t max_states   = 200'000;
    std::size_t max_matches  = default_match_cap;
  };

  struct DerivationResult {
    std::optional<DerivationTrace> trace;  // empty means unknown
    std::size_t                    states = 0;

    [[nodiscard]] bool found() const noexcept {
      return trace.has_value();
    }
  };

  //! Semi-decides whether u ≈ v follows from `basis` by bidirectional
  //! breadth-first search within `budget`. Exhausting the budget yields
  //! "unknown", never a negative answer.
  inline DerivationResult derivable(Word const&                  u,
                                    Word const&                  v,
                                    std::vector<Identity> const& basis,
                                    SearchBudget                 budget = {}) {
    DerivationResult result;
    if (u == v) {
      result.trace = DerivationTrace{u, {}, v};
      return result;
    }
    std::size_t const max_len = budget.max_word_len != 0
                                    ? budget.max_word_len
                                    : std::max(u.size(), v.size()) + 4;
    struct Node {
      std::optional<Word> link;  // parent (forward) or child (backward)
      RewriteStep         step;  // forward: link -> word; backward: word -> link
      std::size_t         depth = 0;
    };
    std::unordered_map<Word, Node> seen[2];
    std::vector<Word>              frontier[2];
    std::size_t                    depth[2] = {0, 0};
    seen[0].emplace(u, Node{});
    seen[1].emplace(v, Node{});
    frontier[0].push_back(u);
    frontier[1].push_back(v);

    auto build = [&](Word const& meet) {
      DerivationTrace          t{u, {}, v};
      std::vector<RewriteStep> fwd;
      Word                     cur = meet;
      while (true) {
        Node const& n = seen[0].at(cur);
        if (!n.link) {
          break;
        }
        fwd.push_back(n.step);
        cur = *n.link;
      }
      t.steps.assign(fwd.rbegin(), fwd.rend());
      cur = meet;
      while (true) {
        Node const& n = seen[1].at(cur);
        if (!n.link) {
          break;
        }
        RewriteStep back = n.step;
        t.steps.push_back(back);
        cur = *n.link;
      }
      return t;
    };

    while (!frontier[0].empty() && !frontier[1].empty()) {
      if (depth[0] + depth[1] >= budget.max_steps) {
        break;
      }
      int const         side = frontier[0].size() <= frontier[1].size() ? 0 : 1;
      std::vector<Word> next;
      std::optional<Word> meet;
      bool                over = false;
      for (Word const& w : frontier[side]) {
        detail::for_each_successor(
            w, basis, max_len, budget.max_matches,
            [&](RewriteStep const& step, Word const& s) {
              if (seen[side].count(s) != 0) {
                return true;
              }
              if (seen[0].size() + seen[1].size() >= budget.max_states) {
                over = true;
                return false;
              }
              Node n;
              n.link  = w;
              n.depth = depth[side] + 1;
              if (side == 0) {
                n.step = step;
              } else {
                // w -> s was found; the trace needs s -> w
                n.step           = step;
                n.step.direction = flip(step.direction);
              }
              seen[side].emplace(s, std::move(n));
              if (seen[1 - side].count(s) != 0) {
                meet = s;
                return false;
              }
              next.push_back(s);
              return true;
            });
        if (meet || over) {
          break;
        }
      }
      result.states = seen[0].size() + seen[1].size();
      if (meet) {
        result.trace = build(*meet);
        return result;
      }
      if (over) {
        break;
      }
      frontier[side] = std::move(next);
      ++depth[side];
    }
    result.states = seen[0].size() + seen[1].size();
    return result;
  }

  inline DerivationResult derivable(Identity const&              id,
                                    std::vector<Identity> const& basis,
                                    SearchBudget                 budget = {}) {
    return derivable(id.lhs, id.rhs, basis, budget);
  }

  ////////////////////////////////////////////////////////////////////////
  // Trace files
  ////////////////////////////////////////////////////////////////////////

  //! A trace together with the identities it may cite. Custom identities
  //! are named in `identities`; other handles resolve through the presets,
  //! and a handle containing `==` is read as an inline identity.
  struct TraceFile {
    std::string                     name;
    std::map<std::string, Identity> identities;
    std::vector<std::string>        allowed;
    DerivationTrace                 trace;

    [[nodiscard]] Identity resolve(std::string const& handle) const {
      if (auto it = identities.find(handle); it != identities.end()) {
        return it->second;
      }
      if (auto id = find_identity(handle)) {
        return *id;
      }
      if (handle.find("==") != std::string::npos) {
        return parse_identity(handle);
      }
      throw Error("unknown identity handle '" + handle + "' in trace");
    }

    [[nodiscard]] std::vector<Identity> allowed_identities() const {
      std::vector<Identity> out;
      for (auto const& h : allowed) {
        out.push_back(resolve(h));
      }
      return out;
    }
  };

  inline nlohmann::ordered_json to_json(RewriteStep const& s) {
    nlohmann::ordered_json j;
    j["identity"]  = s.identity.name();
    j["direction"] = to_string(s.direction);
    nlohmann::ordered_json sub = nlohmann::ordered_json::object();
    for (auto const& [a, w] : s.sigma) {
      sub[a.name()] = render(w);
    }
    j["substitution"] = sub;
    j["position"]     = s.position;
    return j;
  }

  inline nlohmann::ordered_json to_json(DerivationTrace const& t) {
    nlohmann::ordered_json j;
    j["start"] = render(t.start);
    j["steps"] = nlohmann::ordered_json::array();
    for (auto const& s : t.steps) {
      j["steps"].push_back(to_json(s));
    }
    j["end"] = render(t.end);
    return j;
  }

  inline nlohmann::ordered_json to_json(TraceFile const& f) {
    nlohmann::ordered_json j;
    j["name"]       = f.name;
    j["identities"] = nlohmann::ordered_json::object();
    for (auto const& [h, id] : f.identities) {
      j["identities"][h] = id.text();
    }
    j["allowed"] = f.allowed;
    auto t       = to_json(f.trace);
    for (auto it = t.begin(); it != t.end(); ++it) {
      j[it.key()] = it.value();
    }
    return j;
  }

  inline TraceFile trace_from_json(nlohmann::json const& j) {
    try {
      TraceFile f;
      f.name = j.value("name", "");
      if (j.contains("identities")) {
        for (auto const& [h, text] : j.at("identities").items()) {
          Identity id = parse_identity(text.get<std::string>());
          id.label    = h;
          f.identities.emplace(h, std::move(id));
        }
      }
      if (j.contains("allowed")) {
        f.allowed = j.at("allowed").get<std::vector<std::string>>();
      }
      f.trace.start = parse_word(j.at("start").get<std::string>());
      f.trace.end   = parse_word(j.at("end").get<std::string>());
      for (auto const& s : j.at("steps")) {
        RewriteStep st;
        st.identity      = f.resolve(s.at("identity").get<std::string>());
        auto const dir   = s.at("direction").get<std::string>();
        if (dir == "lhs->rhs") {
          st.direction = Direction::lhs_to_rhs;
        } else if (dir == "rhs->lhs") {
          st.direction = Direction::rhs_to_lhs;
        } else {
          throw Error("unknown direction '" + dir + "'");
        }
        for (auto const& [a, w] : s.at("substitution").items()) {
          st.sigma[Letter::from_name(a)] = parse_word(w.get<std::string>());
        }
        st.position = s.at("position").get<std::size_t>();
        f.trace.steps.push_back(std::move(st));
      }
      return f;
    } catch (nlohmann::json::exception const& e) {
      throw Error(std::string("malformed trace file: ") + e.what());
    }
  }

  inline TraceFile load_trace(std::string const& path) {
    std::ifstream in(path);
    if (!in) {
      throw Error("cannot open trace file '" + path + "'");
    }
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(in);
    } catch (nlohmann::json::parse_error const& e) {
      throw Error("trace file '" + path + "' is not valid JSON: " + e.what());
    }
    return trace_from_json(j);
  }

  ////////////////////////////////////////////////////////////////////////
  // Relatively free monoids
  ////////////////////////////////////////////////////////////////////////

  struct FreeObjectCaps {
    std::size_t max_len     = 8;
    std::size_t max_classes = 20'000;
    std::size_t max_words   = 2'000'000;
    std::size_t max_matches = default_match_cap;
  };

  //! The relatively free monoid on `letters`; elements are named by their
  //! shortest (then least) representative.
  struct FreeObjectResult {
    bool                stable = false;
    std::string         reason;  // why not stable
    FiniteMonoid        monoid;
    std::vector<Word>   representatives;
    std::vector<Letter> letters;
    std::vector<std::size_t> generator;  // element of each letter
    FreeObjectCaps      caps;

    //! The element represented by `w`, or nothing when `w` uses a letter
    //! outside the generating set or the object is not stable.
    [[nodiscard]] std::optional<std::size_t> element_of(Word const& w) const {
      if (!stable) {
        return std::nullopt;
      }
      std::size_t e = monoid.identity();
      for (Letter a : w) {
        auto it = std::find(letters.begin(), letters.end(), a);
        if (it == letters.end()) {
          return std::nullopt;
        }
        e = monoid.product(e, generator[it - letters.begin()]);
      }
      return e;
    }
  };

  namespace detail {
    class UnionFind {
     public:
      explicit UnionFind(std::size_t n) : _parent(n) {
        std::iota(_parent.begin(), _parent.end(), std::size_t(0));
      }
      std::size_t find(std::size_t x) {
        while (_parent[x] != x) {
          _parent[x] = _parent[_parent[x]];
          x          = _parent[x];
        }
        return x;
      }
      // The smaller index becomes the root, so roots are shortlex-least.
      bool unite(std::size_t a, std::size_t b) {
        a = find(a);
        b = find(b);
        if (a == b) {
          return false;
        }
        if (b < a) {
          std::swap(a, b);
        }
        _parent[b] = a;
        return true;
      }

     private:
      std::vector<std::size_t> _parent;
    };

    // Dense shortlex numbering of the words of length <= L over k letters.
    class WordIndex {
     public:
      WordIndex(std::size_t k, std::size_t L) : _k(k), _offset(L + 2, 0) {
        std::size_t count = 1;
        for (std::size_t len = 0; len <= L; ++len) {
          _offset[len + 1] = _offset[len] + count;
          count *= k;
        }
      }
      [[nodiscard]] std::size_t size() const {
        return _offset.back();
      }
      [[nodiscard]] std::size_t index(std::vector<std::size_t> const& digits)
          const {
        std::size_t v = 0;
        for (auto d : digits) {
          v = v * _k + d;
        }
        return _offset[digits.size()] + v;
      }
      [[nodiscard]] std::vector<std::size_t> digits(std::size_t idx) const {
        std::size_t len = 0;
        while (_offset[len + 1] <= idx) {
          ++len;
        }
        std::size_t              v = idx - _offset[len];
        std::vector<std::size_t> d(len);
        for (std::size_t i = len; i-- > 0;) {
          d[i] = v % _k;
          v /= _k;
        }
        return d;
      }

     private:
      std::size_t              _k;
      std::vector<std::size_t> _offset;
    };
  }  // namespace detail

  //! Computes the relatively free monoid of var(basis) on `letters`.
  //!
  //! All words of length <= max_len are merged under one-step rewriting and
  //! then under the congruence closure within that length. The result is
  //! stable when every class has a representative shorter than max_len,
  //! the class count is below max_classes, the induced table is
  //! associative, and the table satisfies every basis identity. Since every
  //! merge is a consequence of the basis and the table lies in the variety,
  //! a stable result is exactly the relatively free object.
  inline FreeObjectResult free_object(std::vector<Identity> const& basis,
                                      LetterSet const&             letters,
                                      FreeObjectCaps               caps = {}) {
    FreeObjectResult r;
    r.caps    = caps;
    r.letters = std::vector<Letter>(letters.begin(), letters.end());
    std::size_t const k = r.letters.size();
    std::size_t const L = caps.max_len;
    if (k == 0) {
      r.stable = true;
      r.monoid = FiniteMonoid({"1"}, 0, std::nullopt, {0});
      r.representatives = {Word()};
      return r;
    }
    detail::WordIndex const ix(k, L);
    if (ix.size() > caps.max_words) {
      r.reason = "too many words of length <= " + std::to_string(L);
      return r;
    }
    std::size_t const N = ix.size();
    auto              word_of = [&](std::size_t i) {
      Word w;
      for (auto d : ix.digits(i)) {
        w.push_back(r.letters[d]);
      }
      return w;
    };
    detail::UnionFind uf(N);
    // One direction suffices: both sides of every instance within the
    // length bound are enumerated.
    std::vector<Identity> oriented;
    for (auto const& id : basis) {
      oriented.push_back(id);
    }
    bool truncated = false;
    for (std::size_t i = 0; i < N; ++i) {
      Word const w = word_of(i);
      for (Identity const& id : oriented) {
        detail::CompiledPattern cp(id.lhs);
        auto const              other = cp.compile_other(id.rhs);
        std::size_t             count = 0;
        detail::for_each_match(
            cp,
            w.span(),
            [&](std::size_t pos,
                std::size_t len,
                std::span<detail::Binding const> b) {
              if (++count > caps.max_matches) {
                truncated = true;
                return false;
              }
              std::size_t out_len = w.size() - len;
              for (auto s : other) {
                out_len += s < b.size() ? b[s].len : 0;
              }
              if (out_len > L) {
                return true;
              }
              std::vector<std::size_t> d;
              d.reserve(out_len);
              auto push = [&](std::size_t from, std::size_t n) {
                for (std::size_t q = from; q < from + n; ++q) {
                  d.push_back(static_cast<std::size_t>(
                      std::lower_bound(
                          r.letters.begin(), r.letters.end(), w[q])
                      - r.letters.begin()));
                }
              };
              push(0, pos);
              for (auto s : other) {
                if (s < b.size()) {
                  push(b[s].start, b[s].len);
                }
              }
              push(pos + len, w.size() - pos - len);
              uf.unite(i, ix.index(d));
              return true;
            });
      }
    }
    if (truncated) {
      r.reason = "match enumeration cap exceeded";
      return r;
    }
    // congruence closure within the length bound
    bool changed = true;
    while (changed) {
      changed = false;
      for (std::size_t i = 0; i < N; ++i) {
        std::size_t const root = uf.find(i);
        if (root == i) {
          continue;
        }
        auto const dw = ix.digits(i);
        auto const dr = ix.digits(root);
        if (dw.size() + 1 > L) {
          continue;
        }
        for (std::size_t a = 0; a < k; ++a) {
          auto right_w = dw, right_r = dr;
          right_w.push_back(a);
          right_r.push_back(a);
          changed |= uf.unite(ix.index(right_w), ix.index(right_r));
          std::vector<std::size_t> left_w{a}, left_r{a};
          left_w.insert(left_w.end(), dw.begin(), dw.end());
          left_r.insert(left_r.end(), dr.begin(), dr.end());
          changed |= uf.unite(ix.index(left_w), ix.index(left_r));
        }
      }
    }
    std::vector<std::size_t>                     roots;
    std::unordered_map<std::size_t, std::size_t> element_of_root;
    for (std::size_t i = 0; i < N; ++i) {
      if (uf.find(i) == i) {
        element_of_root.emplace(i, roots.size());
        roots.push_back(i);
        if (roots.size() >= caps.max_classes) {
          r.reason = "class count reached max_classes";
          return r;
        }
      }
    }
    for (auto root : roots) {
      if (ix.digits(root).size() >= L) {
        r.reason = "a class has no representative shorter than max_len "
                   + std::to_string(L);
        return r;
      }
    }
    std::size_t const n = roots.size();
    // right action of letters on classes, then fold representatives
    std::vector<std::size_t> act(n * k);
    for (std::size_t c = 0; c < n; ++c) {
      auto d = ix.digits(roots[c]);
      d.push_back(0);
      for (std::size_t a = 0; a < k; ++a) {
        d.back()       = a;
        act[c * k + a] = element_of_root.at(uf.find(ix.index(d)));
      }
    }
    std::vector<FiniteMonoid::element_type> table(n * n);
    for (std::size_t c = 0; c < n; ++c) {
      for (std::size_t e = 0; e < n; ++e) {
        std::size_t cur = c;
        for (auto a : ix.digits(roots[e])) {
          cur = act[cur * k + a];
        }
        table[c * n + e] = static_cast<FiniteMonoid::element_type>(cur);
      }
    }
    std::vector<std::string> names;
    for (auto root : roots) {
      Word const w = word_of(root);
      r.representatives.push_back(w);
      names.push_back(render(w));
    }
    for (std::size_t a = 0; a < k; ++a) {
      r.generator.push_back(element_of_root.at(uf.find(ix.index({a}))));
    }
    r.monoid = FiniteMonoid(std::move(names), 0, std::nullopt, std::move(table));
    // Light's test: associativity need only be checked with a generator in
    // the middle.
    for (std::size_t g : r.generator) {
      for (std::size_t a = 0; a < n; ++a) {
        std::size_t const ag = r.monoid.product(a, g);
        for (std::size_t b = 0; b < n; ++b) {
          if (r.monoid.product(ag, b)
              != r.monoid.product(a, r.monoid.product(g, b))) {
            r.reason = "induced table is not associative";
            return r;
          }
        }
      }
    }
    for (auto const& id : basis) {
      if (!satisfies(r.monoid, id).holds) {
        r.reason = "induced monoid violates " + id.name()
                   + " (length bound too small)";
        return r;
      }
    }
    r.stable = true;
    return r;
  }

  enum class Verdict { holds, fails, unknown };

  inline std::string to_string(Verdict v) {
    switch (v) {
      case Verdict::holds:
        return "holds";
      case Verdict::fails:
        return "fails";
      case Verdict::unknown:
        return "unknown";
    }
    return "unknown";
  }

  //! Decides u ≈ v in var(basis) through the free object on its letters.
  inline Verdict holds_in(FreeObjectResult const& fo, Identity const& id) {
    if (id.trivial()) {
      return Verdict::holds;
    }
    auto const a = fo.element_of(id.lhs);
    auto const b = fo.element_of(id.rhs);
    if (!a || !b) {
      return Verdict::unknown;
    }
    return *a == *b ? Verdict::holds : Verdict::fails;
  }

  inline Verdict holds_in_variety(Identity const&              id,
                                  std::vector<Identity> const& basis,
                                  FreeObjectCaps               caps = {}) {
    if (id.trivial()) {
      return Verdict::holds;
    }
    return holds_in(free_object(basis, id.letters(), caps), id);
  }

}  // namespace monvar

#endif  // MONVAR_REWRITE_HPP_
