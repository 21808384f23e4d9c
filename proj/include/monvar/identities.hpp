// monvar - equational reasoning for monoid varieties
//
// Identities, named identities and varieties, identity families, the
// decision procedure for the join of the varieties F and E, aligned
// decompositions, well-balancedness and invertibility chains.

#ifndef MONVAR_IDENTITIES_HPP_
#define MONVAR_IDENTITIES_HPP_

#include <algorithm>    // for is_permutation, next_permutation
#include <cstddef>      // for size_t
#include <fstream>      // for ifstream
#include <istream>      // for istream
#include <map>          // for map
#include <numeric>      // for iota
#include <optional>     // for optional
#include <sstream>      // for istringstream
#include <string>       // for string
#include <string_view>  // for string_view
#include <utility>      // for pair
#include <vector>       // for vector

#include "word.hpp"
#include "words.hpp"

namespace monvar {

  //! An identity u ≈ v. Identities are unordered: u ≈ v equals v ≈ u, and
  //! the label takes no part in comparisons.
  struct Identity {
    Word        lhs;
    Word        rhs;
    std::string label;

    Identity() = default;
    Identity(Word l, Word r, std::string lab = {})
        : lhs(std::move(l)), rhs(std::move(r)), label(std::move(lab)) {}

    [[nodiscard]] bool trivial() const {
      return lhs == rhs;
    }

    [[nodiscard]] Identity flipped() const {
      return Identity(rhs, lhs, label);
    }

    [[nodiscard]] LetterSet letters() const {
      LetterSet s = content(lhs);
      for (Letter a : rhs) {
        s.insert(a);
      }
      return s;
    }

    //! `u == v`, the format of identity files.
    [[nodiscard]] std::string text() const {
      return render(lhs) + " == " + render(rhs);
    }

    [[nodiscard]] std::string name() const {
      return label.empty() ? text() : label;
    }

    friend bool operator==(Identity const& a, Identity const& b) {
      return (a.lhs == b.lhs && a.rhs == b.rhs)
             || (a.lhs == b.rhs && a.rhs == b.lhs);
    }
  };

  inline std::ostream& operator<<(std::ostream& os, Identity const& id) {
    return os << id.text();
  }

  //! Parses `u == v`.
  inline Identity parse_identity(std::string_view text) {
    auto const pos = text.find("==");
    if (pos == std::string_view::npos) {
      throw ParseError("identity must have the form 'u == v'", 0);
    }
    if (text.find("==", pos + 2) != std::string_view::npos) {
      throw ParseError("more than one '==' in identity",
                       text.find("==", pos + 2));
    }
    Word l, r;
    try {
      l = parse_word(text.substr(0, pos));
    } catch (ParseError const& e) {
      throw ParseError("left side: " + e.message(), e.position());
    }
    try {
      r = parse_word(text.substr(pos + 2));
    } catch (ParseError const& e) {
      throw ParseError("right side: " + e.message(), pos + 2 + e.position());
    }
    return Identity(std::move(l), std::move(r));
  }

  //! Reads one identity per line; blank lines and `#` comments are skipped.
  inline std::vector<Identity> read_identities(std::istream& in) {
    std::vector<Identity> out;
    std::string           line;
    std::size_t           lineno = 0;
    while (std::getline(in, line)) {
      ++lineno;
      if (auto h = line.find('#'); h != std::string::npos) {
        line.erase(h);
      }
      if (detail::trim(line).empty()) {
        continue;
      }
      try {
        out.push_back(parse_identity(line));
      } catch (ParseError const& e) {
        throw ParseError("line " + std::to_string(lineno) + ": " + e.message(),
                         e.position());
      }
    }
    return out;
  }

  inline std::vector<Identity> read_identity_file(std::string const& path) {
    std::ifstream in(path);
    if (!in) {
      throw Error("cannot open identity file '" + path + "'");
    }
    return read_identities(in);
  }

  ////////////////////////////////////////////////////////////////////////
  // Named identities and varieties
  ////////////////////////////////////////////////////////////////////////

  namespace detail {
    inline Identity named(std::string_view l,
                          std::string_view r,
                          std::string      label) {
      return Identity(parse_word(l), parse_word(r), std::move(label));
    }
  }  // namespace detail

  namespace ids {
    // xyx ≈ xyx²
    inline Identity A() {
      return detail::named("xyx", "xyx^2", "ID-A");
    }
    // x²y² ≈ y²x²
    inline Identity B() {
      return detail::named("x^2y^2", "y^2x^2", "ID-B");
    }
    // xyzxy ≈ yxzxy
    inline Identity C() {
      return detail::named("xyzxy", "yxzxy", "ID-C");
    }
    // xyxztx ≈ xyxzxtx
    inline Identity D() {
      return detail::named("xyxztx", "xyxzxtx", "ID-D");
    }
    // xzxyxty ≈ xzyxty
    inline Identity E() {
      return detail::named("xzxyxty", "xzyxty", "ID-E");
    }
    // xyx ≈ x²yx
    inline Identity F() {
      return detail::named("xyx", "x^2yx", "ID-F");
    }
    // x² ≈ x³
    inline Identity G() {
      return detail::named("x^2", "x^3", "ID-G");
    }
    // xtyzxy ≈ xtyzyx
    inline Identity H() {
      return detail::named("xtyzxy", "xtyzyx", "ID-H");
    }
    // x²yzx² ≈ x²yxzx²
    inline Identity I() {
      return detail::named("x^2yzx^2", "x^2yxzx^2", "ID-I");
    }
    // yx²txy ≈ xyxtxy
    inline Identity K() {
      return detail::named("yx^2txy", "xyxtxy", "ID-K");
    }
    // x²ytxy ≈ xyxtxy
    inline Identity L() {
      return detail::named("x^2ytxy", "xyxtxy", "ID-L");
    }
    // x²y ≈ x²yx, third basis identity of K and F
    inline Identity x2y() {
      return detail::named("x^2y", "x^2yx", "");
    }
    // yx² ≈ xyx, third basis identity of E
    inline Identity yx2() {
      return detail::named("yx^2", "xyx", "");
    }
  }  // namespace ids

  //! The identity x z_{1π}…z_{nπ} x ∏ t_i z_i ≈ x² z_{1π}…z_{nπ} ∏ t_i z_i,
  //! where `perm[i-1]` is the image iπ of i.
  inline Identity j_identity(std::vector<std::size_t> const& perm) {
    std::size_t const n = perm.size();
    if (n == 0) {
      throw PreconditionError("j_identity requires n >= 1");
    }
    std::vector<std::size_t> sorted(n);
    std::iota(sorted.begin(), sorted.end(), 1);
    if (!std::is_permutation(perm.begin(), perm.end(), sorted.begin())) {
      throw PreconditionError("invalid permutation of {1, ..., "
                              + std::to_string(n) + "}");
    }
    Letter const x('x');
    Word         zs, tail;
    for (std::size_t i = 0; i < n; ++i) {
      zs *= Letter('z', static_cast<std::uint32_t>(perm[i]));
      tail *= Letter('t', static_cast<std::uint32_t>(i + 1));
      tail *= Letter('z', static_cast<std::uint32_t>(i + 1));
    }
    std::string label = "J_" + std::to_string(n) + "[";
    for (std::size_t i = 0; i < n; ++i) {
      label += (i == 0 ? "" : ",") + std::to_string(perm[i]);
    }
    label += "]";
    return Identity(x * zs * x * tail, power(x, 2) * zs * tail, label);
  }

  enum class Family { alpha, beta, gamma, gamma_prime };

  inline std::string family_name(Family k) {
    switch (k) {
      case Family::alpha:
        return "alpha";
      case Family::beta:
        return "beta";
      case Family::gamma:
        return "gamma";
      case Family::gamma_prime:
        return "gammap";
    }
    return "";
  }

  //! Members of the families α_n, β_n, γ_n and γ'_n.
  //!
  //! With e_i = x for odd i and y for even i:
  //!   α_n : xy  ∏_{1}^{n+1} t_i e_i ≈ yx  ∏_{1}^{n+1} t_i e_i
  //!   β_n : yx² ∏_{2}^{n+1} t_i e_i ≈ xyx ∏_{2}^{n+1} t_i e_i
  //!   γ_n : x²y ∏_{1}^{n+1} t_i e_i ≈ xyx ∏_{1}^{n+1} t_i e_i
  //!   γ'_n: x²y ∏_{2}^{n+1} t_i e_i ≈ xyx ∏_{2}^{n+1} t_i e_i
  inline Identity family(Family kind, std::size_t n) {
    if (n < 1) {
      throw PreconditionError("family index must be at least 1");
    }
    Letter const x('x'), y('y');
    auto         tail = [&](std::size_t from, std::size_t to) {
      Word w;
      for (std::size_t i = from; i <= to; ++i) {
        w *= Letter('t', static_cast<std::uint32_t>(i));
        w *= (i % 2 == 1 ? x : y);
      }
      return w;
    };
    std::string const label = family_name(kind) + "_" + std::to_string(n);
    Word const        xyx{x, y, x};
    switch (kind) {
      case Family::alpha:
        return Identity(Word{x, y} * tail(1, n + 1),
                        Word{y, x} * tail(1, n + 1),
                        label);
      case Family::beta:
        return Identity(Word{y, x, x} * tail(2, n + 1),
                        xyx * tail(2, n + 1),
                        label);
      case Family::gamma:
        return Identity(Word{x, x, y} * tail(1, n + 1),
                        xyx * tail(1, n + 1),
                        label);
      case Family::gamma_prime:
        return Identity(Word{x, x, y} * tail(2, n + 1),
                        xyx * tail(2, n + 1),
                        label);
    }
    throw PreconditionError("unknown family");
  }

  inline Identity dual_identity(Identity const& id) {
    std::string label = id.label.empty() ? "" : "dual(" + id.label + ")";
    return Identity(reverse(id.lhs), reverse(id.rhs), std::move(label));
  }

  inline std::vector<Identity> dual_preset(std::vector<Identity> const& ids) {
    std::vector<Identity> out;
    for (auto const& id : ids) {
      out.push_back(dual_identity(id));
    }
    return out;
  }

  namespace presets {
    inline std::vector<Identity> K() {
      return {ids::A(), ids::B(), ids::x2y()};
    }
    inline std::vector<Identity> Q() {
      return {ids::A(), ids::B(), ids::F()};
    }
    inline std::vector<Identity> E() {
      return {ids::B(), ids::G(), ids::yx2()};
    }
    inline std::vector<Identity> F() {
      return {ids::A(), ids::B(), ids::C(), ids::x2y()};
    }
    inline std::vector<Identity> O() {
      return {ids::B(), ids::E()};
    }
    //! The basis of J truncated to the permutation identities with n <= N.
    inline std::vector<Identity> J(std::size_t N = 2) {
      if (N < 1) {
        throw PreconditionError("J truncation bound must be at least 1");
      }
      std::vector<Identity> out = {ids::A(), ids::B(), ids::C(), ids::D()};
      for (std::size_t n = 1; n <= N; ++n) {
        std::vector<std::size_t> perm(n);
        std::iota(perm.begin(), perm.end(), 1);
        do {
          out.push_back(j_identity(perm));
        } while (std::next_permutation(perm.begin(), perm.end()));
      }
      return out;
    }
  }  // namespace presets

  namespace detail {
    inline std::optional<std::size_t> parse_index(std::string_view s) {
      if (s.empty() || s.size() > 6) {
        return std::nullopt;
      }
      std::size_t n = 0;
      for (char c : s) {
        if (c < '0' || c > '9') {
          return std::nullopt;
        }
        n = n * 10 + static_cast<std::size_t>(c - '0');
      }
      return n;
    }
  }  // namespace detail

  //! Resolves an identity handle: `ID-A` … `ID-L`, `alpha_n`, `beta_n`,
  //! `gamma_n`, `gammap_n` (also `gamma'_n`), `J_n[i1,...,in]`, and
  //! `dual(<handle>)`.
  inline std::optional<Identity> find_identity(std::string_view handle) {
    if (handle.starts_with("dual(") && handle.ends_with(")")) {
      auto inner = find_identity(handle.substr(5, handle.size() - 6));
      if (!inner) {
        return std::nullopt;
      }
      return dual_identity(*inner);
    }
    static std::map<std::string, Identity (*)(), std::less<>> const named
        = {{"ID-A", ids::A},
           {"ID-B", ids::B},
           {"ID-C", ids::C},
           {"ID-D", ids::D},
           {"ID-E", ids::E},
           {"ID-F", ids::F},
           {"ID-G", ids::G},
           {"ID-H", ids::H},
           {"ID-I", ids::I},
           {"ID-K", ids::K},
           {"ID-L", ids::L}};
    if (auto it = named.find(handle); it != named.end()) {
      return it->second();
    }
    static std::map<std::string, Family, std::less<>> const families
        = {{"alpha", Family::alpha},
           {"beta", Family::beta},
           {"gamma", Family::gamma},
           {"gammap", Family::gamma_prime},
           {"gamma'", Family::gamma_prime}};
    if (auto u = handle.rfind('_'); u != std::string_view::npos) {
      auto const head = handle.substr(0, u);
      if (auto it = families.find(head); it != families.end()) {
        auto n = detail::parse_index(handle.substr(u + 1));
        if (n && *n >= 1) {
          return family(it->second, *n);
        }
        return std::nullopt;
      }
    }
    if (handle.starts_with("J_") && handle.ends_with("]")) {
      auto const open = handle.find('[');
      if (open == std::string_view::npos) {
        return std::nullopt;
      }
      auto n = detail::parse_index(handle.substr(2, open - 2));
      std::vector<std::size_t> perm;
      std::string_view body = handle.substr(open + 1, handle.size() - open - 2);
      while (!body.empty()) {
        auto const comma = body.find(',');
        auto       v     = detail::parse_index(body.substr(0, comma));
        if (!v) {
          return std::nullopt;
        }
        perm.push_back(*v);
        body = comma == std::string_view::npos ? std::string_view()
                                               : body.substr(comma + 1);
      }
      if (!n || *n != perm.size()) {
        return std::nullopt;
      }
      try {
        return j_identity(perm);
      } catch (PreconditionError const&) {
        return std::nullopt;
      }
    }
    return std::nullopt;
  }

  inline Identity identity_by_name(std::string_view handle) {
    if (auto id = find_identity(handle)) {
      return *id;
    }
    throw Error("unknown identity handle '" + std::string(handle) + "'");
  }

  //! Resolves a variety name (`K`, `Q`, `E`, `F`, `O`, `J`, `J<N>`,
  //! `dual(<name>)`), an identity handle or an inline `u == v` to a list of
  //! identities.
  inline std::vector<Identity> preset(std::string_view name) {
    if (name.starts_with("dual(") && name.ends_with(")")) {
      return dual_preset(preset(name.substr(5, name.size() - 6)));
    }
    if (name == "K") {
      return presets::K();
    } else if (name == "Q") {
      return presets::Q();
    } else if (name == "E") {
      return presets::E();
    } else if (name == "F") {
      return presets::F();
    } else if (name == "O") {
      return presets::O();
    } else if (name.starts_with("J") && !name.starts_with("J_")) {
      if (name == "J") {
        return presets::J();
      }
      auto n = detail::parse_index(name.substr(1));
      if (!n) {
        throw Error("malformed J truncation '" + std::string(name) + "'");
      }
      return presets::J(*n);
    }
    if (auto id = find_identity(name)) {
      return {*id};
    }
    if (name.find("==") != std::string_view::npos) {
      return {parse_identity(name)};
    }
    throw Error("unknown preset or identity '" + std::string(name) + "'");
  }

  //! Comma separated list of preset names and identity handles.
  inline std::vector<Identity> preset_list(std::string_view names) {
    std::vector<Identity> out;
    while (!names.empty()) {
      // commas inside J_n[...] belong to the handle
      std::size_t depth = 0, cut = names.size();
      for (std::size_t i = 0; i < names.size(); ++i) {
        if (names[i] == '[' || names[i] == '(') {
          ++depth;
        } else if ((names[i] == ']' || names[i] == ')') && depth > 0) {
          --depth;
        } else if (names[i] == ',' && depth == 0) {
          cut = i;
          break;
        }
      }
      auto const item = detail::trim(names.substr(0, cut));
      if (!item.empty()) {
        for (auto& id : preset(item)) {
          if (std::find(out.begin(), out.end(), id) == out.end()) {
            out.push_back(std::move(id));
          }
        }
      }
      names = cut == names.size() ? std::string_view() : names.substr(cut + 1);
    }
    return out;
  }

  //! Consistently renames letters to x, y, z, t, then x1, y1, … in order of
  //! first occurrence, choosing the orientation whose renaming is smaller.
  //! Used for deduplication only; nothing renames implicitly.
  inline Identity canonicalize(Identity const& id) {
    auto rename = [](Word const& a, Word const& b) {
      std::map<Letter, Letter> m;
      char const               bases[] = {'x', 'y', 'z', 't'};
      auto                     next    = [&m, &bases]() {
        std::size_t const k = m.size();
        return k < 4 ? Letter(bases[k])
                     : Letter(bases[k % 4], static_cast<std::uint32_t>(k / 4));
      };
      auto map_word = [&](Word const& w) {
        Word out;
        for (Letter c : w) {
          auto it = m.find(c);
          if (it == m.end()) {
            it = m.emplace(c, next()).first;
          }
          out.push_back(it->second);
        }
        return out;
      };
      Word l = map_word(a);
      Word r = map_word(b);
      return std::pair(std::move(l), std::move(r));
    };
    auto p = rename(id.lhs, id.rhs);
    auto q = rename(id.rhs, id.lhs);
    auto best = std::min(p, q);
    return Identity(best.first, best.second, id.label);
  }

  ////////////////////////////////////////////////////////////////////////
  // Decision procedure for F ∨ E
  ////////////////////////////////////////////////////////////////////////

  //! One per-letter comparison of dividers; a side is empty when the query
  //! is undefined there.
  struct DividerComparison {
    Letter                    letter;
    std::optional<DividerRef> lhs;
    std::optional<DividerRef> rhs;

    [[nodiscard]] bool agree() const {
      return lhs.has_value() && rhs.has_value() && *lhs == *rhs;
    }
  };

  struct Claims {
    bool                           c_sim = false;
    std::vector<DividerComparison> c_h1;
    std::vector<DividerComparison> c_h2;
    std::vector<DividerComparison> c_t;
    bool                           trivial = false;

    static bool all_agree(std::vector<DividerComparison> const& v) {
      return std::all_of(
          v.begin(), v.end(), [](auto const& c) { return c.agree(); });
    }

    [[nodiscard]] bool h1() const {
      return all_agree(c_h1);
    }
    [[nodiscard]] bool h2() const {
      return all_agree(c_h2);
    }
    [[nodiscard]] bool t() const {
      return all_agree(c_t);
    }
    [[nodiscard]] bool holds() const {
      return trivial || (c_sim && h1() && h2() && t());
    }
  };

  //! Evaluates the four claims (sim/mul equality, h_1, h_2, t) for `id`.
  //! h_2 is compared only for letters occurring at least twice.
  inline Claims claims_check(Identity const& id) {
    Claims            c;
    LetterStats const su = letter_stats(id.lhs);
    LetterStats const sv = letter_stats(id.rhs);
    c.trivial            = id.trivial();
    c.c_sim              = su.simple == sv.simple && su.multiple == sv.multiple;
    auto query = [](Word const& w,
                    LetterStats const& s,
                    Letter             x,
                    std::size_t        i) -> std::optional<DividerRef> {
      std::size_t const n = s.occurrences(x);
      if (n == 0 || i > n) {
        return std::nullopt;
      }
      return divider_query(w, x, i == 0 ? n : i);
    };
    for (Letter x : su.content) {
      c.c_h1.push_back({x, query(id.lhs, su, x, 1), query(id.rhs, sv, x, 1)});
      if (su.occurrences(x) >= 2) {
        c.c_h2.push_back(
            {x, query(id.lhs, su, x, 2), query(id.rhs, sv, x, 2)});
      }
      // i = 0 selects the last occurrence
      c.c_t.push_back({x, query(id.lhs, su, x, 0), query(id.rhs, sv, x, 0)});
    }
    return c;
  }

  //! Whether `id` holds in the join of the varieties F and E.
  inline bool fve_holds(Identity const& id) {
    return claims_check(id).holds();
  }

  //! Decompositions of both sides sharing the divider sequence t_0 … t_m.
  inline std::pair<Decomposition, Decomposition>
  aligned_decompositions(Identity const& id) {
    Decomposition du = decompose(id.lhs);
    Decomposition dv = decompose(id.rhs);
    if (du.dividers != dv.dividers) {
      throw PreconditionError("decompositions of " + render(id.lhs) + " and "
                              + render(id.rhs)
                              + " have different divider sequences");
    }
    return {std::move(du), std::move(dv)};
  }

  struct BalanceReport {
    bool                                      balanced = true;
    std::optional<std::pair<Letter, size_t>> offender;  // (letter, block)
  };

  //! Well-balanced: aligned blocks have equal occurrence counts for every
  //! letter. The offender reported is the first letter (by first occurrence
  //! in the left side) that is unbalanced, at its leftmost unbalanced block.
  inline BalanceReport is_well_balanced(Identity const& id) {
    auto const [du, dv] = aligned_decompositions(id);
    std::vector<Letter> order = letters_by_first_occurrence(id.lhs);
    for (Letter a : letters_by_first_occurrence(id.rhs)) {
      if (std::find(order.begin(), order.end(), a) == order.end()) {
        order.push_back(a);
      }
    }
    for (Letter a : order) {
      for (std::size_t i = 0; i < du.blocks.size(); ++i) {
        if (occurrences(du.blocks[i], a) != occurrences(dv.blocks[i], a)) {
          return {false, std::pair(a, i)};
        }
      }
    }
    return {};
  }

  ////////////////////////////////////////////////////////////////////////
  // Invertibility
  ////////////////////////////////////////////////////////////////////////

  //! One adjacent transposition moving `v` towards `u` for a well-balanced
  //! identity u ≈ v with u != v.
  //!
  //! With i the first block where u_i != v_i and p their greatest common
  //! prefix, u_i = p x u_i' and v_i = p a y x b with x not in con(a y). The
  //! step rewrites v = v' a yx b v'' into w = v' a xy b v'' where v' ends
  //! with p.
  struct SwapStep {
    std::size_t block = 0;
    Word        p;
    Letter      x;
    Letter      y;
    Word        a;
    Word        b;
    Word        v_prefix;  // v' = v_0 t_1 … v_{i-1} t_i p
    Word        v_suffix;  // v'' = t_{i+1} v_{i+1} … t_m v_m
    Word        w;
  };

  inline SwapStep swap_towards(Decomposition const& du,
                               Decomposition const& dv) {
    SwapStep    s;
    std::size_t i = 0;
    while (i < du.blocks.size() && du.blocks[i] == dv.blocks[i]) {
      ++i;
    }
    if (i == du.blocks.size()) {
      throw PreconditionError("swap_towards called on a trivial identity");
    }
    s.block       = i;
    Word const& ui = du.blocks[i];
    Word const& vi = dv.blocks[i];
    std::size_t k  = 0;
    while (k < ui.size() && k < vi.size() && ui[k] == vi[k]) {
      ++k;
    }
    if (k == ui.size() || k == vi.size()) {
      throw PreconditionError("identity is not well-balanced");
    }
    s.p = ui.sub(0, k);
    s.x = ui[k];
    std::size_t j = k + 1;
    while (j < vi.size() && vi[j] != s.x) {
      ++j;
    }
    if (j == vi.size()) {
      throw PreconditionError("identity is not well-balanced");
    }
    s.y = vi[j - 1];
    s.a = vi.sub(k, j - 1 - k);
    s.b = vi.sub(j + 1, vi.size() - j - 1);
    for (std::size_t q = 0; q < i; ++q) {
      s.v_prefix *= dv.blocks[q];
      s.v_prefix *= dv.dividers[q];
    }
    s.v_prefix *= s.p;
    for (std::size_t q = i + 1; q < dv.blocks.size(); ++q) {
      s.v_suffix *= dv.dividers[q - 1];
      s.v_suffix *= dv.blocks[q];
    }
    s.w = s.v_prefix * s.a * Word{s.x, s.y} * s.b * s.v_suffix;
    return s;
  }

  struct InvertibilityChain {
    bool              found = false;  // false means "unknown"
    std::vector<Word> chain;          // u = w_0, …, w_k = v when found
  };

  //! A chain u = w_0, …, w_k = v of 1-invertible steps, built by adjacent
  //! transpositions inside blocks. Its length is the total number of
  //! inversions between aligned blocks. Exceeding `max_steps` yields an
  //! unfound (unknown) result.
  inline InvertibilityChain invertibility_chain(Identity const& id,
                                                std::size_t max_steps) {
    auto const report = is_well_balanced(id);
    if (!report.balanced) {
      throw PreconditionError("identity " + id.text()
                              + " is not well-balanced");
    }
    Decomposition const du = decompose(id.lhs);
    std::vector<Word>   rev{id.rhs};
    Word                cur = id.rhs;
    while (cur != id.lhs) {
      if (rev.size() > max_steps) {
        return {false, {}};
      }
      SwapStep s = swap_towards(du, decompose(cur));
      cur        = s.w;
      rev.push_back(cur);
    }
    std::reverse(rev.begin(), rev.end());
    return {true, std::move(rev)};
  }

}  // namespace monvar

#endif  // MONVAR_IDENTITIES_HPP_
