// monvar - equational reasoning for monoid varieties
//
// Command-line driver. Exit codes: 0 success / property holds, 1 property
// fails, 2 unknown (search budget or caps exhausted), 3 usage or input
// error.

#include <algorithm>  // for max
#include <cstdlib>    // for getenv
#include <filesystem> // for path, exists
#include <iostream>   // for cout, cerr
#include <optional>   // for optional
#include <string>     // for string
#include <vector>     // for vector

#include "CLI11.hpp"
#include "nlohmann/json.hpp"

#include "monvar/acceptance.hpp"
#include "monvar/monvar.hpp"

namespace {

  using json = nlohmann::ordered_json;
  using namespace monvar;

  enum Exit : int { ok = 0, fails = 1, unknown = 2, usage = 3 };

  struct UsageError : Error {
    using Error::Error;
  };

  bool g_json = false;

  ////////////////////////////////////////////////////////////////////////
  // Output
  ////////////////////////////////////////////////////////////////////////

  std::string scalar_text(json const& v) {
    if (v.is_string()) {
      return v.get<std::string>();
    }
    if (v.is_null()) {
      return "-";
    }
    return v.dump();
  }

  bool all_scalars(json const& v) {
    return std::all_of(v.begin(), v.end(), [](json const& e) {
      return e.is_primitive();
    });
  }

  // Text mode prints one aligned `key: value` line per field; arrays of
  // scalars are comma separated, anything nested gets one line per item.
  void print_text(json const& j) {
    std::size_t width = 0;
    for (auto it = j.begin(); it != j.end(); ++it) {
      width = std::max(width, it.key().size());
    }
    for (auto it = j.begin(); it != j.end(); ++it) {
      std::string const key = it.key() + ":" + std::string(
                                  width - it.key().size() + 1, ' ');
      json const& v = it.value();
      if (v.is_array() && all_scalars(v)) {
        std::string line;
        for (auto const& e : v) {
          line += (line.empty() ? "" : ", ") + scalar_text(e);
        }
        std::cout << key << line << "\n";
      } else if (v.is_array() || v.is_object()) {
        std::cout << key << "\n";
        for (auto e = v.begin(); e != v.end(); ++e) {
          std::string prefix = v.is_object() ? e.key() + ": " : "";
          if (e.value().is_object()) {
            std::string line;
            for (auto f = e.value().begin(); f != e.value().end(); ++f) {
              line += (line.empty() ? "" : "  ") + f.key() + "="
                      + (f.value().is_primitive() ? scalar_text(f.value())
                                                  : f.value().dump());
            }
            std::cout << "  " << prefix << line << "\n";
          } else {
            std::cout << "  " << prefix
                      << (e.value().is_primitive() ? scalar_text(e.value())
                                                   : e.value().dump())
                      << "\n";
          }
        }
      } else {
        std::cout << key << scalar_text(v) << "\n";
      }
    }
  }

  void emit(json const& j) {
    if (g_json) {
      std::cout << j.dump(2) << "\n";
    } else {
      print_text(j);
    }
  }

  // Errors go to stderr; in JSON mode they are also written to stdout so
  // that scripted callers always get a document.
  int report(int code, std::string const& kind, std::string const& message,
             std::optional<std::size_t> position = std::nullopt) {
    std::cerr << (kind == "parse" ? "parse error" : "error");
    if (position) {
      std::cerr << " at position " << *position;
    }
    std::cerr << ": " << message << "\n";
    if (g_json) {
      json j;
      j["error"] = message;
      j["kind"]  = kind;
      if (position) {
        j["position"] = *position;
      }
      std::cout << j.dump(2) << "\n";
    }
    return code;
  }

  ////////////////////////////////////////////////////////////////////////
  // Argument resolution
  ////////////////////////////////////////////////////////////////////////

  Identity identity_arg(std::string const& text) {
    if (text.find("==") != std::string::npos) {
      return parse_identity(text);
    }
    if (auto id = find_identity(text)) {
      return *id;
    }
    throw UsageError("not an identity or identity handle: '" + text + "'");
  }

  std::vector<Identity> basis_arg(std::string const& list,
                                  std::vector<std::string> const& files) {
    std::vector<Identity> out = preset_list(list);
    for (auto const& f : files) {
      for (auto& id : read_identity_file(f)) {
        out.push_back(std::move(id));
      }
    }
    return out;
  }

  std::vector<Word> word_list(std::string const& text) {
    std::vector<Word> out;
    std::size_t       start = 0;
    while (start <= text.size()) {
      auto const comma = text.find(',', start);
      auto const item  = text.substr(
          start, comma == std::string::npos ? std::string::npos
                                            : comma - start);
      if (!detail::trim(item).empty()) {
        out.push_back(parse_word(item));
      }
      if (comma == std::string::npos) {
        break;
      }
      start = comma + 1;
    }
    return out;
  }

  LetterSet letters_arg(std::string const& text) {
    LetterSet out;
    if (text.find(',') != std::string::npos
        || text.find(' ') != std::string::npos) {
      for (auto const& w : word_list(text)) {
        out.insert(w.begin(), w.end());
      }
    } else {
      Word const w = parse_word(text);
      out.insert(w.begin(), w.end());
    }
    return out;
  }

  std::vector<std::string> names(std::vector<Letter> const& v) {
    std::vector<std::string> out;
    for (Letter a : v) {
      out.push_back(a.name());
    }
    return out;
  }

  std::vector<std::string> names(LetterSet const& s) {
    return names(std::vector<Letter>(s.begin(), s.end()));
  }

  // S(w1,...), Stau(saturate:k,l), Stau(w1,...), trivial, or a cache file.
  FiniteMonoid build_monoid(std::string const& spec) {
    auto inner = [&](std::size_t open) {
      if (spec.back() != ')') {
        throw UsageError("malformed monoid '" + spec + "'");
      }
      return spec.substr(open, spec.size() - open - 1);
    };
    if (spec == "trivial") {
      return FiniteMonoid({"1"}, 0, std::nullopt, {0});
    }
    if (spec.starts_with("S(")) {
      return rees_quotient(word_list(inner(2)));
    }
    if (spec.starts_with("Stau(")) {
      std::string const body = inner(5);
      if (body.starts_with("saturate:")) {
        auto const rest  = body.substr(9);
        auto const comma = rest.find(',');
        if (comma == std::string::npos) {
          throw UsageError("expected Stau(saturate:k,l)");
        }
        auto const k = std::stoul(rest.substr(0, comma));
        auto const l = std::stoul(rest.substr(comma + 1));
        return tau_quotient(saturate_j_generator(k, l).words);
      }
      return tau_quotient(word_list(body));
    }
    if (std::filesystem::exists(spec)) {
      return load_monoid(spec);
    }
    throw UsageError("unknown monoid '" + spec
                     + "' (expected S(...), Stau(...), trivial or a file)");
  }

  std::string cache_name(std::string const& spec) {
    std::string out;
    for (char c : spec) {
      out += std::isalnum(static_cast<unsigned char>(c)) ? c : '_';
    }
    return out + ".json";
  }

  //! Inline constructors are cached under $MONVAR_CACHE_DIR when it is set.
  FiniteMonoid monoid_arg(std::string const& spec) {
    char const* dir = std::getenv("MONVAR_CACHE_DIR");
    if (dir == nullptr || *dir == '\0' || std::filesystem::exists(spec)) {
      return build_monoid(spec);
    }
    auto const path = std::filesystem::path(dir) / cache_name(spec);
    if (std::filesystem::exists(path)) {
      return load_monoid(path.string());
    }
    FiniteMonoid m = build_monoid(spec);
    std::filesystem::create_directories(dir);
    save_monoid(m, path.string());
    return m;
  }

  json monoid_json(FiniteMonoid const& m, bool table) {
    json j;
    j["size"]     = m.size();
    j["elements"] = m.names();
    j["identity"] = m.name(m.identity());
    j["zero"]     = m.zero() ? json(m.name(*m.zero())) : json(nullptr);
    auto const v  = validate(m);
    j["valid"]    = v.ok();
    if (!v.ok()) {
      j["problems"] = v.problems;
    }
    std::vector<std::string> idem;
    for (auto e : idempotents(m)) {
      idem.push_back(m.name(e));
    }
    j["idempotents"]         = idem;
    j["idempotents_commute"] = idempotents_commute(m);
    j["aperiodic"]           = is_aperiodic(m);
    if (table) {
      json rows = json::array();
      for (std::size_t a = 0; a < m.size(); ++a) {
        std::vector<std::string> row;
        for (std::size_t b = 0; b < m.size(); ++b) {
          row.push_back(m.name(m.product(a, b)));
        }
        rows.push_back(row);
      }
      j["table"] = rows;
    }
    return j;
  }

  json step_json(RewriteStep const& s) {
    json j = to_json(s);
    return j;
  }

  ////////////////////////////////////////////////////////////////////////
  // Commands
  ////////////////////////////////////////////////////////////////////////

  int cmd_analyze(std::string const& text) {
    Word const        w = parse_word(text);
    LetterStats const s = letter_stats(w);
    json              j;
    j["word"]     = render(w);
    j["length"]   = w.size();
    j["content"]  = names(s.content);
    j["simple"]   = names(s.simple);
    j["multiple"] = names(s.multiple);
    json occ      = json::object();
    for (auto const& [a, n] : s.occ) {
      occ[a.name()] = n;
    }
    j["occurrences"]  = occ;
    auto const d      = decompose(w);
    std::vector<std::string> dividers{"⊥"};
    for (Letter t : d.dividers) {
      dividers.push_back(t.name());
    }
    std::vector<std::string> blocks;
    for (auto const& b : d.blocks) {
      blocks.push_back(render(b));
    }
    j["dividers"]   = dividers;
    j["blocks"]     = blocks;
    j["reduced"]    = render(reduce(w));
    j["is_reduced"] = is_reduced(w);
    emit(j);
    return Exit::ok;
  }

  json comparisons(std::vector<DividerComparison> const& v) {
    json out = json::array();
    for (auto const& c : v) {
      json e;
      e["letter"] = c.letter.name();
      e["lhs"]    = c.lhs ? json(c.lhs->to_string()) : json(nullptr);
      e["rhs"]    = c.rhs ? json(c.rhs->to_string()) : json(nullptr);
      e["agree"]  = c.agree();
      out.push_back(e);
    }
    return out;
  }

  int cmd_fve(std::string const& text) {
    Identity const id = identity_arg(text);
    Claims const   c  = claims_check(id);
    json           j;
    j["identity"] = id.text();
    j["holds"]    = c.holds();
    j["trivial"]  = c.trivial;
    j["sim_mul"]  = c.c_sim;
    j["h1"]       = c.h1();
    j["h2"]       = c.h2();
    j["t"]        = c.t();
    if (g_json) {
      j["h1_detail"] = comparisons(c.c_h1);
      j["h2_detail"] = comparisons(c.c_h2);
      j["t_detail"]  = comparisons(c.c_t);
    }
    emit(j);
    return c.holds() ? Exit::ok : Exit::fails;
  }

  int cmd_rees(std::string const& words, std::string const& out, bool table) {
    FiniteMonoid const m = rees_quotient(word_list(words));
    if (!out.empty()) {
      save_monoid(m, out);
    }
    emit(monoid_json(m, table));
    return Exit::ok;
  }

  int cmd_tau_rees(std::string const& saturate,
                   std::string const& words,
                   std::string const& out,
                   bool               table) {
    json         extra;
    FiniteMonoid m;
    if (!saturate.empty()) {
      auto const comma = saturate.find(',');
      if (comma == std::string::npos) {
        throw UsageError("--saturate expects k,l");
      }
      auto const sat = saturate_j_generator(
          std::stoul(saturate.substr(0, comma)),
          std::stoul(saturate.substr(comma + 1)));
      extra["stabilized"] = sat.stabilized;
      m                   = tau_quotient(sat.words);
    } else if (!words.empty()) {
      m = tau_quotient(word_list(words));
    } else {
      throw UsageError("tau-rees needs --saturate or --words");
    }
    if (!out.empty()) {
      save_monoid(m, out);
    }
    json j = monoid_json(m, table);
    for (auto it = extra.begin(); it != extra.end(); ++it) {
      j[it.key()] = it.value();
    }
    emit(j);
    return Exit::ok;
  }

  int cmd_check(std::string const&              monoid,
                std::string const&              id_text,
                std::string const&              basis,
                std::vector<std::string> const& files) {
    FiniteMonoid const    m = monoid_arg(monoid);
    std::vector<Identity> ids;
    if (!id_text.empty()) {
      ids.push_back(identity_arg(id_text));
    }
    auto more = basis_arg(basis, files);
    ids.insert(ids.end(), more.begin(), more.end());
    if (ids.empty()) {
      throw UsageError("check needs --id or --basis");
    }
    json results = json::array();
    bool all     = true;
    for (auto const& id : ids) {
      auto const s = satisfies(m, id);
      json       e;
      e["identity"] = id.name();
      e["holds"]    = s.holds;
      if (!s.holds) {
        e["witness"] = describe(m, *s.counterexample);
        e["lhs"]     = m.name(s.lhs_value);
        e["rhs"]     = m.name(s.rhs_value);
      }
      all &= s.holds;
      results.push_back(e);
    }
    json j;
    j["monoid_size"] = m.size();
    j["holds"]       = all;
    if (ids.size() == 1) {
      for (auto it = results[0].begin(); it != results[0].end(); ++it) {
        j[it.key()] = it.value();
      }
    } else {
      j["results"] = results;
    }
    emit(j);
    return all ? Exit::ok : Exit::fails;
  }

  int cmd_derive(std::string const&              basis,
                 std::vector<std::string> const& files,
                 std::string const&              from,
                 std::string const&              to,
                 SearchBudget                    budget,
                 std::string const&              trace_out) {
    auto const b = basis_arg(basis, files);
    Word const u = parse_word(from);
    Word const v = parse_word(to);
    auto const r = derivable(u, v, b, budget);
    json       j;
    j["from"]   = render(u);
    j["to"]     = render(v);
    j["status"] = r.found() ? "derivable" : "unknown";
    j["states"] = r.states;
    if (r.found()) {
      j["length"] = r.trace->steps.size();
      json steps  = json::array();
      Word cur    = u;
      for (auto const& s : r.trace->steps) {
        json e  = step_json(s);
        cur     = apply_step(cur, s);
        e["result"] = render(cur);
        steps.push_back(e);
      }
      j["steps"] = steps;
      if (!trace_out.empty()) {
        TraceFile f;
        f.name  = render(u) + " == " + render(v);
        f.trace = *r.trace;
        for (auto const& id : b) {
          std::string const h = id.name();
          if (!id.label.empty() && find_identity(h)) {
            f.allowed.push_back(h);
          } else {
            f.allowed.push_back(id.text());
          }
        }
        std::ofstream out(trace_out);
        out << to_json(f).dump(2) << "\n";
      }
    }
    emit(j);
    return r.found() ? Exit::ok : Exit::unknown;
  }

  int cmd_verify_trace(std::string const& file, std::string const& allow) {
    TraceFile const f = load_trace(file);
    std::vector<Identity> allowed
        = allow.empty() ? f.allowed_identities() : std::vector<Identity>{};
    if (!allow.empty()) {
      std::size_t start = 0;
      while (start <= allow.size()) {
        auto const comma = allow.find(',', start);
        auto const h     = std::string(detail::trim(allow.substr(
            start,
            comma == std::string::npos ? std::string::npos : comma - start)));
        if (!h.empty()) {
          allowed.push_back(f.resolve(h));
        }
        if (comma == std::string::npos) {
          break;
        }
        start = comma + 1;
      }
    }
    TraceCheck const c = verify_trace(f.trace, allowed);
    json             j;
    j["trace"] = f.name;
    j["start"] = render(f.trace.start);
    j["end"]   = render(f.trace.end);
    j["steps"] = f.trace.steps.size();
    j["ok"]    = c.ok;
    if (!c.ok) {
      j["failing_step"]
          = c.failing_step ? json(*c.failing_step) : json(nullptr);
      j["reason"] = c.reason;
    }
    emit(j);
    return c.ok ? Exit::ok : Exit::fails;
  }

  int cmd_free_object(std::string const&              basis,
                      std::vector<std::string> const& files,
                      std::string const&              letters,
                      std::string const&              id_text,
                      FreeObjectCaps                  caps,
                      bool                            table) {
    auto const            b = basis_arg(basis, files);
    std::optional<Identity> id;
    LetterSet             abc;
    if (!id_text.empty()) {
      id  = identity_arg(id_text);
      abc = id->letters();
    }
    if (!letters.empty()) {
      auto const more = letters_arg(letters);
      abc.insert(more.begin(), more.end());
    }
    auto const fo = free_object(b, abc, caps);
    json       j;
    j["letters"] = names(abc);
    j["stable"]  = fo.stable;
    if (!fo.stable) {
      j["reason"] = fo.reason;
    } else {
      j["size"]     = fo.monoid.size();
      j["elements"] = fo.monoid.names();
      if (table) {
        j["table"] = json::parse(serialize(fo.monoid))["table"];
      }
    }
    if (id) {
      Verdict const v = holds_in(fo, *id);
      j["identity"]   = id->text();
      j["verdict"]    = to_string(v);
      emit(j);
      return v == Verdict::holds   ? Exit::ok
             : v == Verdict::fails ? Exit::fails
                                   : Exit::unknown;
    }
    emit(j);
    return fo.stable ? Exit::ok : Exit::unknown;
  }

  int cmd_balance(std::string const& text) {
    Identity const id = identity_arg(text);
    if (!fve_holds(id)) {
      json j;
      j["identity"] = id.text();
      j["error"]    = "identity does not hold in F ∨ E";
      emit(j);
      return Exit::fails;
    }
    auto const r = well_balance(id);
    json       j;
    j["input"]    = id.text();
    j["identity"] = r.identity.text();
    j["used_D"]   = r.used_D;
    j["log"]      = r.log;
    emit(j);
    return Exit::ok;
  }

  int cmd_phi_basis(std::string const& text, std::size_t max_steps) {
    Identity const id = identity_arg(text);
    if (!is_well_balanced(id).balanced) {
      json j;
      j["identity"] = id.text();
      j["error"]    = "identity is not well-balanced";
      emit(j);
      return Exit::fails;
    }
    auto const r = phi_basis(id, max_steps);
    json       j;
    j["identity"] = id.text();
    j["complete"] = r.complete;
    std::vector<std::string> members;
    for (auto const& m : r.members) {
      members.push_back(m.name());
    }
    j["members"] = members;
    json steps   = json::array();
    for (auto const& s : r.log) {
      json e;
      e["block"]    = s.block;
      e["x"]        = s.x.name();
      e["y"]        = s.y.name();
      e["case"]     = s.label;
      e["mirrored"] = s.mirrored;
      e["member"]   = s.member ? json(s.member->name()) : json(nullptr);
      e["w"]        = render(s.w);
      steps.push_back(e);
    }
    j["steps"] = steps;
    emit(j);
    return r.complete ? Exit::ok : Exit::unknown;
  }

  int cmd_subvariety_basis(std::vector<std::string> const& texts,
                           std::vector<std::string> const& files,
                           std::size_t                     max_steps) {
    std::vector<Identity> ids;
    for (auto const& t : texts) {
      ids.push_back(identity_arg(t));
    }
    for (auto const& f : files) {
      for (auto& id : read_identity_file(f)) {
        ids.push_back(std::move(id));
      }
    }
    for (auto const& id : ids) {
      if (!fve_holds(id)) {
        json j;
        j["identity"] = id.text();
        j["error"]    = "identity fails in F ∨ E; the subvariety excludes E "
                        "or F and is based by the presets K or Q";
        emit(j);
        return Exit::fails;
      }
    }
    auto const r = subvariety_basis(ids, max_steps);
    json       basis = json::array();
    for (auto const& id : r.basis) {
      basis.push_back(id.name() + ": " + id.text());
    }
    json j;
    j["complete"] = r.complete;
    j["used_D"]   = r.used_D;
    j["basis"]    = basis;
    j["log"]      = r.log;
    emit(j);
    return r.complete ? Exit::ok : Exit::unknown;
  }

  int cmd_tau_witness(std::string const& word,
                      std::string const& monoid,
                      TauSearchBudget    budget) {
    Word const         w = parse_word(word);
    FiniteMonoid const m = monoid_arg(monoid);
    auto const         r = tau_term_violation(w, m, budget);
    json               j;
    j["word"]    = render(w);
    j["status"]  = r ? "witness" : "none-found";
    j["witness"] = r ? json(render(*r)) : json(nullptr);
    emit(j);
    return r ? Exit::ok : Exit::unknown;
  }

  int cmd_presets(std::string const& name) {
    json j;
    if (name.empty()) {
      for (auto const* n : {"K", "Q", "E", "F", "O", "J"}) {
        std::vector<std::string> items;
        for (auto const& id : preset(n)) {
          items.push_back(id.name());
        }
        j[n] = items;
      }
      j["families"] = std::vector<std::string>{
          "alpha_n", "beta_n", "gamma_n", "gammap_n", "J_n[perm]"};
    } else {
      for (auto const& id : preset_list(name)) {
        j[id.name()] = id.text();
      }
    }
    emit(j);
    return Exit::ok;
  }

  int cmd_accept(std::string const& traces) {
    AcceptanceOptions o;
    o.traces_dir = traces;
    bool all     = true;
    json results = json::array();
    run_acceptance(o, [&](CriterionResult const& r) {
      all &= r.passed;
      if (g_json) {
        json e;
        e["criterion"] = r.number;
        e["title"]     = r.title;
        e["passed"]    = r.passed;
        e["seconds"]   = r.seconds;
        e["detail"]    = r.detail;
        results.push_back(e);
      } else {
        std::cout << format(r) << std::endl;
      }
    });
    if (g_json) {
      json j;
      j["passed"]   = all;
      j["criteria"] = results;
      std::cout << j.dump(2) << "\n";
    }
    return all ? Exit::ok : Exit::fails;
  }

  std::string default_traces_dir() {
    if (char const* d = std::getenv("MONVAR_TRACES_DIR")) {
      return d;
    }
#ifdef MONVAR_DATA_DIR
    return std::string(MONVAR_DATA_DIR) + "/traces";
#else
    return "data/traces";
#endif
  }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"monvar: equational reasoning for monoid varieties"};
  app.require_subcommand(1);
  std::string format = "text";
  app.add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();

  std::string  word, id, basis = "", monoid, from, to, out, letters;
  std::string  saturate, words, file, allow, traces = default_traces_dir();
  std::vector<std::string> basis_files, ids, id_files;
  bool         table = false;
  SearchBudget budget;
  FreeObjectCaps caps;
  TauSearchBudget tau_budget;
  std::size_t  max_steps = 10'000;

  auto* analyze = app.add_subcommand("analyze", "Letter statistics, "
                                                "decomposition and reduced form");
  analyze->add_option("--word,word", word, "Word")->required();

  auto* fve = app.add_subcommand("fve", "Decide an identity in F ∨ E");
  fve->add_option("--id,id", id, "Identity 'u == v' or handle")->required();

  auto* rees = app.add_subcommand("rees", "Build the Rees quotient S(W)");
  rees->add_option("--words,words", words, "Comma separated words")
      ->required();
  rees->add_option("--out", out, "Write the monoid to a JSON file");
  rees->add_flag("--table", table, "Print the multiplication table");

  auto* tau_rees = app.add_subcommand("tau-rees", "Build S_tau(W)");
  tau_rees->add_option("--saturate", saturate,
                       "k,l: reduced factors of xzyx^k t y^l");
  tau_rees->add_option("--words", words, "Comma separated reduced words");
  tau_rees->add_option("--out", out, "Write the monoid to a JSON file");
  tau_rees->add_flag("--table", table, "Print the multiplication table");

  auto add_basis = [&](CLI::App* c) {
    c->add_option("--basis", basis,
                  "Comma separated presets, handles or 'u == v'");
    c->add_option("--basis-file", basis_files, "Identity file(s)");
  };

  auto* check = app.add_subcommand("check", "Check identities in a monoid");
  check->add_option("--monoid", monoid,
                    "S(w1,...), Stau(saturate:k,l), trivial or a JSON file")
      ->required();
  check->add_option("--id", id, "Identity 'u == v' or handle");
  add_basis(check);

  auto add_budget = [&](CLI::App* c) {
    c->add_option("--max-steps", budget.max_steps, "Derivation length bound")
        ->capture_default_str();
    c->add_option("--max-len", budget.max_word_len,
                  "Word length bound (0: longest side + 4)")
        ->capture_default_str();
    c->add_option("--max-states", budget.max_states, "Visited word bound")
        ->capture_default_str();
  };

  auto* derive = app.add_subcommand("derive", "Search for a derivation");
  add_basis(derive);
  derive->add_option("--from", from, "Start word")->required();
  derive->add_option("--to", to, "Target word")->required();
  derive->add_option("--trace-out", out, "Write the trace as a JSON file");
  add_budget(derive);

  auto* verify = app.add_subcommand("verify-trace", "Replay a trace file");
  verify->add_option("file", file, "Trace file")->required();
  verify->add_option("--allow", allow,
                     "Comma separated handles replacing the file's list");

  auto* fo = app.add_subcommand("free-object",
                                "Relatively free monoid of a finite basis");
  add_basis(fo);
  fo->add_option("--letters", letters, "Generating letters, e.g. xyz");
  fo->add_option("--id", id, "Decide this identity in the variety");
  fo->add_option("--max-len", caps.max_len, "Word length explored")
      ->capture_default_str();
  fo->add_option("--max-classes", caps.max_classes, "Class count bound")
      ->capture_default_str();
  fo->add_flag("--table", table, "Print the multiplication table");

  auto* balance = app.add_subcommand("balance",
                                     "Well-balance an identity of F ∨ E");
  balance->add_option("--id,id", id, "Identity")->required();

  auto* phi = app.add_subcommand("phi-basis",
                                 "Phi-members for a well-balanced identity");
  phi->add_option("--id,id", id, "Identity")->required();
  phi->add_option("--max-steps", max_steps, "Transposition bound")
      ->capture_default_str();

  auto* sub = app.add_subcommand("subvariety-basis",
                                 "Finite basis of a subvariety of O");
  sub->add_option("--id", ids, "Identity (repeatable)");
  sub->add_option("--file", id_files, "Identity file(s)");
  sub->add_option("--max-steps", max_steps, "Transposition bound")
      ->capture_default_str();

  auto* tw = app.add_subcommand("tau-witness",
                                "Search for a word showing w is no tau-term");
  tw->add_option("--word", word, "Word")->required();
  tw->add_option("--monoid", monoid, "Monoid")->required();
  tw->add_option("--max-len", tau_budget.max_len, "Candidate length bound")
      ->capture_default_str();
  tw->add_option("--extension", tau_budget.extension, "Fresh letters allowed")
      ->capture_default_str();

  std::string preset_name;
  auto* presets = app.add_subcommand("presets", "List or expand presets");
  presets->add_option("name", preset_name, "Preset or handle list");

  auto* accept = app.add_subcommand("accept", "Run the acceptance suite");
  accept->add_option("--traces", traces, "Directory of golden traces")
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (CLI::CallForHelp const& e) {
    return app.exit(e);
  } catch (CLI::CallForAllHelp const& e) {
    return app.exit(e);
  } catch (CLI::ParseError const& e) {
    app.exit(e);
    return Exit::usage;
  }
  g_json = format == "json";

  try {
    if (*analyze) {
      return cmd_analyze(word);
    } else if (*fve) {
      return cmd_fve(id);
    } else if (*rees) {
      return cmd_rees(words, out, table);
    } else if (*tau_rees) {
      return cmd_tau_rees(saturate, words, out, table);
    } else if (*check) {
      return cmd_check(monoid, id, basis, basis_files);
    } else if (*derive) {
      return cmd_derive(basis, basis_files, from, to, budget, out);
    } else if (*verify) {
      return cmd_verify_trace(file, allow);
    } else if (*fo) {
      return cmd_free_object(basis, basis_files, letters, id, caps, table);
    } else if (*balance) {
      return cmd_balance(id);
    } else if (*phi) {
      return cmd_phi_basis(id, max_steps);
    } else if (*sub) {
      return cmd_subvariety_basis(ids, id_files, max_steps);
    } else if (*tw) {
      return cmd_tau_witness(word, monoid, tau_budget);
    } else if (*presets) {
      return cmd_presets(preset_name);
    } else if (*accept) {
      return cmd_accept(traces);
    }
  } catch (ParseError const& e) {
    return report(Exit::usage, "parse", e.message(), e.position());
  } catch (PreconditionError const& e) {
    return report(Exit::fails, "precondition", e.what());
  } catch (std::exception const& e) {
    return report(Exit::usage, "usage", e.what());
  }
  return Exit::usage;
}
