#pragma once

// The `semimod` command line: argument parsing, dispatch and rendering.
// run() never touches std::cout/std::cerr directly so it can be tested.

#include <cstdint>
#include <cstdlib>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "congruence.hpp"
#include "error.hpp"
#include "io.hpp"
#include "monoid.hpp"
#include "nat_coeq.hpp"
#include "semiideal.hpp"
#include "tensor.hpp"
#include "verify.hpp"

namespace semimod::cli {

enum class Exit : int { Ok = 0, InputError = 1, LimitExceeded = 2 };

/// Larger cyclic quotients are described by (index, period) only, in text and JSON.
inline constexpr std::size_t kMaxRenderedTable = 64;

enum class LabelStyle { Overline, Plain };

inline std::string label(std::size_t i, LabelStyle s) {
  return s == LabelStyle::Plain ? "c" + std::to_string(i) : std::to_string(i) + "\u0304";
}

/// Terminal columns taken by a UTF-8 string; combining marks take none.
inline std::size_t display_width(std::string const& s) {
  std::size_t w = 0;
  for (std::size_t i = 0; i < s.size();) {
    auto c = static_cast<unsigned char>(s[i]);
    std::size_t len = c < 0x80 ? 1 : c < 0xE0 ? 2 : c < 0xF0 ? 3 : 4;
    std::uint32_t cp = c;
    if (len == 2) cp = ((c & 0x1Fu) << 6) | (static_cast<unsigned char>(s[i + 1]) & 0x3Fu);
    if (len == 3)
      cp = ((c & 0x0Fu) << 12) | ((static_cast<unsigned char>(s[i + 1]) & 0x3Fu) << 6) |
           (static_cast<unsigned char>(s[i + 2]) & 0x3Fu);
    if (cp < 0x300 || cp > 0x36F) ++w;
    i += len;
  }
  return w;
}

inline std::string pad(std::string const& s, std::size_t width) {
  auto w = display_width(s);
  return std::string(width > w ? width - w : 0, ' ') + s;
}

inline std::vector<std::string> element_names(FiniteCommMonoid const& M, LabelStyle s) {
  std::vector<std::string> names;
  for (Element m = 0; m < M.size(); ++m) names.push_back(M.has_labels() ? M.label(m) : label(m, s));
  return names;
}

/// Aligned grid with row/column headers; cells[r][c] index into `cell_names`.
inline void render_grid(std::ostream& out, std::string const& corner,
                        std::vector<std::string> const& rows, std::vector<std::string> const& cols,
                        std::vector<std::vector<Element>> const& cells,
                        std::vector<std::string> const& cell_names) {
  std::size_t w = display_width(corner);
  for (auto const& s : rows) w = std::max(w, display_width(s));
  for (auto const& s : cols) w = std::max(w, display_width(s));
  for (auto const& s : cell_names) w = std::max(w, display_width(s));
  out << pad(corner, w) << " |";
  for (auto const& c : cols) out << ' ' << pad(c, w);
  out << '\n' << std::string(w + 1, '-') << '+' << std::string(cols.size() * (w + 1), '-') << '\n';
  for (std::size_t r = 0; r < rows.size(); ++r) {
    out << pad(rows[r], w) << " |";
    for (auto x : cells[r]) out << ' ' << pad(cell_names[x], w);
    out << '\n';
  }
}

inline void render_table(std::ostream& out, FiniteCommMonoid const& M, LabelStyle s) {
  auto names = element_names(M, s);
  render_grid(out, "+", names, names, M.table(), names);
}

namespace detail {

inline std::string join(std::vector<std::uint64_t> const& v, char const* sep = " ") {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? sep : "") + std::to_string(v[i]);
  return s;
}

inline std::size_t env_budget(std::size_t fallback) {
  char const* raw = std::getenv("SEMIMOD_BUDGET");
  if (!raw) return fallback;
  try {
    std::size_t used = 0;
    auto v = std::stoull(raw, &used);
    if (used == std::string(raw).size() && v > 0) return v;
  } catch (std::exception const&) {
  }
  fail(ErrorKind::InvalidInput, {}, "SEMIMOD_BUDGET must be a positive integer");
}

inline std::vector<ElementPair> read_pairs(std::string const& arg) {
  auto first = arg.find_first_not_of(" \t\n");
  if (first != std::string::npos && arg[first] == '[') return io::pairs_from_json(io::parse(arg));
  return io::pairs_from_json(io::read_file(arg));
}

}  // namespace detail

struct Options {
  bool json = false;
  bool plain = false;
  bool naive = false;
  bool coherence = false;
  std::uint64_t bound_cap = NatCoeqOptions{}.bound_cap;
  std::uint64_t probe_limit = 20;
  std::size_t budget = 0;  // 0: SEMIMOD_BUDGET or the built-in default
  std::vector<std::uint64_t> generators;
  std::uint64_t a = 0, b = 0;
  std::string file, file2, pairs, suite;

  LabelStyle style() const { return plain ? LabelStyle::Plain : LabelStyle::Overline; }
};

// --- commands ----------------------------------------------------------------

inline Exit cmd_semiideal(Options const& o, std::ostream& out) {
  Semiideal M(o.generators);
  auto r = io::report(M);
  if (o.json) {
    out << io::to_json(r).dump() << '\n';
    return Exit::Ok;
  }
  out << "generators:         " << detail::join(r.generators) << '\n'
      << "period:             " << r.period << '\n'
      << "footing:            " << r.footing << '\n'
      << "perc:               {0} ∪ {" << r.footing << " + " << r.period << "n | n ≥ 0}\n"
      << "minimal generators: " << detail::join(r.minimal_generators) << '\n'
      << "cyclic:             " << (r.cyclic ? "yes" : "no") << '\n'
      << "quotient:           ℕ₀/M ≅ ℤ/" << r.period << '\n';
  return Exit::Ok;
}

inline Exit cmd_coeq(Options const& o, std::ostream& out) {
  NatCoeqOptions opt;
  opt.bound_cap = o.bound_cap;
  auto q = coequalizer_nat(o.a, o.b, opt);
  std::optional<NaiveCensus> census;
  if (o.naive) census = naive_nat_classes(o.a, o.b, o.probe_limit);
  if (o.json) {
    auto j = io::to_json(q);
    if (!q.is_natural() && q.cyclic().size() > kMaxRenderedTable) j.erase("table");
    if (census) j["naive"] = io::to_json(*census);
    out << j.dump() << '\n';
    return Exit::Ok;
  }
  out << "coequalizer of " << o.a << "·, " << o.b << "·: ℕ₀ -> ℕ₀\n";
  if (q.is_natural()) {
    out << "quotient: ℕ₀ (the maps agree)\n";
  } else {
    auto const& c = q.cyclic();
    out << "quotient: C(" << c.index << ", " << c.period << "), " << c.size() << " elements\n";
    if (c.size() <= kMaxRenderedTable) {
      out << '\n';
      render_table(out, c.monoid(), o.style());
      out << '\n';
    } else {
      out << "(table omitted, more than " << kMaxRenderedTable << " elements)\n";
    }
    out << "certificate A: " << (q.certificate_a ? "ok" : "FAILED") << '\n'
        << "certificate B: " << c.index << " ~ " << c.index + c.period << " via "
        << q.certificate_b.size() << " step(s), bound " << q.bound_used << '\n';
    for (auto const& st : q.certificate_b) {
      auto const& s = q.seeds[st.seed];
      out << "  " << st.from << " ~ " << st.to << "  (" << s.a << " ~ " << s.b << ") + " << st.shift
          << '\n';
    }
  }
  if (census) {
    out << "naive relation on 0.." << census->probe_limit << ": " << census->classes.size()
        << " class(es)\n";
    for (auto const& cl : census->classes) {
      out << "  {";
      for (std::size_t i = 0; i < cl.size() && i < 8; ++i) out << (i ? ", " : "") << cl[i];
      out << (cl.size() > 8 ? ", ...}" : "}") << '\n';
    }
  }
  return Exit::Ok;
}

inline Exit cmd_quotient(Options const& o, std::ostream& out) {
  auto M = io::monoid_from_json(io::read_file(o.file));
  auto C = congruence_closure(M, detail::read_pairs(o.pairs));
  auto Q = quotient(C);
  if (o.json) {
    out << nlohmann::json{{"classes", C.classes()}, {"quotient", io::to_json(Q.monoid)}}.dump()
        << '\n';
    return Exit::Ok;
  }
  auto names = element_names(M, o.style());
  out << C.class_count() << " class(es)\n";
  auto classes = C.classes();
  for (std::size_t k = 0; k < classes.size(); ++k) {
    out << "  " << label(k, o.style()) << " = {";
    for (std::size_t i = 0; i < classes[k].size(); ++i)
      out << (i ? ", " : "") << names[classes[k][i]];
    out << "}\n";
  }
  out << '\n';
  render_table(out, Q.monoid, o.style());
  return Exit::Ok;
}

inline Exit cmd_tensor(Options const& o, std::size_t budget, std::ostream& out) {
  auto M = io::monoid_from_json(io::read_file(o.file));
  auto N = io::monoid_from_json(io::read_file(o.file2));
  TensorOptions opt;
  if (o.budget || std::getenv("SEMIMOD_BUDGET")) opt.budget = budget;
  auto T = tensor_product(M, N, opt);

  std::vector<CheckResult> checks;
  if (o.coherence) {
    auto check = [&](std::string name, auto&& body) {
      checks.push_back(semimod::detail::run_check(std::move(name), body));
    };
    check("symmetry M⊗N ≅ N⊗M", [&] {
      return symmetry_iso(M, N, opt).tau.verified ? std::string() : "not inverse";
    });
    check("associativity (M⊗N)⊗M ≅ M⊗(N⊗M)", [&] {
      return associativity_iso(M, N, M, opt).alpha.verified ? std::string() : "not inverse";
    });
    check("triangle", [&] { return triangle_commutes(M, N, opt) ? std::string() : "differs"; });
    check("Hom(M⊗N, N) ≅ Hom(M, Hom(N, N))", [&] {
      auto r = hom_adjunction_check(M, N, N, budget, opt);
      return r.ok() ? std::string()
                    : std::to_string(r.lhs_count) + " vs " + std::to_string(r.rhs_count);
    });
  }
  bool ok = true;
  for (auto const& c : checks) ok = ok && c.passed;

  if (o.json) {
    auto j = io::to_json(T);
    if (o.coherence) {
      auto arr = nlohmann::json::array();
      for (auto const& c : checks) arr.push_back({{"name", c.name}, {"passed", c.passed}});
      j["coherence"] = arr;
    }
    out << j.dump() << '\n';
    return ok ? Exit::Ok : Exit::InputError;
  }
  out << "M ⊗ N has " << T.monoid.size() << " element(s)\n\n";
  render_table(out, T.monoid, o.style());
  out << "\nm ⊗ n:\n";
  render_grid(out, "⊗", element_names(M, o.style()), element_names(N, o.style()), T.bilinear,
              element_names(T.monoid, o.style()));
  for (auto const& c : checks)
    out << (c.passed ? "ok    " : "FAIL  ") << c.name << (c.passed ? "" : ": " + c.detail) << '\n';
  return ok ? Exit::Ok : Exit::InputError;
}

inline Exit cmd_monoid_check(Options const& o, std::ostream& out) {
  auto M = io::monoid_from_json(io::read_file(o.file));
  if (o.json) {
    auto orbits = nlohmann::json::array();
    for (Element m = 0; m < M.size(); ++m) orbits.push_back({M.orbit(m).index, M.orbit(m).period});
    out << nlohmann::json{{"valid", true}, {"size", M.size()}, {"orbits", orbits}}.dump() << '\n';
    return Exit::Ok;
  }
  auto names = element_names(M, o.style());
  out << "valid commutative monoid with " << M.size() << " element(s)\n";
  for (Element m = 0; m < M.size(); ++m)
    out << "  orbit of " << names[m] << ": index " << M.orbit(m).index << ", period "
        << M.orbit(m).period << '\n';
  return Exit::Ok;
}

inline Exit cmd_verify(Options const& o, std::ostream& out) {
  auto rep = verify_suite(o.suite);
  if (o.json) {
    auto arr = nlohmann::json::array();
    for (auto const& c : rep.checks)
      arr.push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
    out << nlohmann::json{{"suite", rep.suite}, {"passed", rep.passed()}, {"checks", arr}}.dump()
        << '\n';
  } else {
    for (auto const& c : rep.checks)
      out << (c.passed ? "PASS  " : "FAIL  ") << c.name << "  (" << c.detail << ")\n";
  }
  return rep.passed() ? Exit::Ok : Exit::InputError;
}

// --- entry point ---------------------------------------------------------------

/// `args` excludes the program name.
inline int run(std::vector<std::string> const& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Semimodules over ℕ₀: coequalizers, semiideals and tensor products", "semimod"};
  app.require_subcommand(1);
  Options o;

  auto json_flag = [&](CLI::App* c) {
    c->add_flag("--json", o.json, "machine-readable output");
    c->add_flag("--plain", o.plain, "label elements c0, c1, ... instead of 0̄, 1̄, ...");
    c->add_option("--budget", o.budget, "work budget (default from SEMIMOD_BUDGET)")
        ->check(CLI::PositiveNumber);
  };

  auto* si = app.add_subcommand("semiideal", "period, footing and canonical generators of ⟨g…⟩");
  si->add_option("generators", o.generators, "generators in ℕ₀")->required();
  json_flag(si);

  auto* co = app.add_subcommand("coeq", "coequalizer of a·, b·: ℕ₀ -> ℕ₀");
  co->add_option("a", o.a)->required();
  co->add_option("b", o.b)->required();
  co->add_flag("--naive", o.naive, "also list the classes of the naive relation");
  co->add_option("--probe-limit", o.probe_limit, "window for --naive (default 20)");
  co->add_option("--bound-cap", o.bound_cap, "saturation bound cap (default 1000000)")
      ->check(CLI::PositiveNumber);
  json_flag(co);

  auto* qu = app.add_subcommand("quotient", "quotient of a monoid by the congruence of seed pairs");
  qu->add_option("monoid", o.file, "monoid JSON file")->required();
  qu->add_option("pairs", o.pairs, "[[a,b],...] inline or a JSON file")->required();
  json_flag(qu);

  auto* te = app.add_subcommand("tensor", "tensor product of two finite commutative monoids");
  te->add_option("M", o.file, "monoid JSON file")->required();
  te->add_option("N", o.file2, "monoid JSON file")->required();
  te->add_flag("--check-coherence", o.coherence, "check symmetry, associativity and adjunction");
  json_flag(te);

  auto* mc = app.add_subcommand("monoid-check", "validate a monoid JSON file");
  mc->add_option("file", o.file)->required();
  json_flag(mc);

  auto* ve = app.add_subcommand("verify", "run a self-check suite");
  ve->add_option("suite", o.suite, "paper-tables | oracles | coherence")
      ->required()
      ->check(CLI::IsMember({"paper-tables", "oracles", "coherence"}));
  json_flag(ve);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (CLI::CallForHelp const&) {
    out << app.help();
    return 0;
  } catch (CLI::CallForAllHelp const&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (CLI::ParseError const& e) {
    err << "error: " << e.what() << "\n\n";
    CLI::App const* ctx = &app;
    for (auto* sub : app.get_subcommands()) ctx = sub;
    err << ctx->help();
    return static_cast<int>(Exit::InputError);
  }

  try {
    std::size_t budget = o.budget ? o.budget : detail::env_budget(Budget::kDefault);
    Exit code = Exit::Ok;
    if (si->parsed()) code = cmd_semiideal(o, out);
    if (co->parsed()) code = cmd_coeq(o, out);
    if (qu->parsed()) code = cmd_quotient(o, out);
    if (te->parsed()) code = cmd_tensor(o, budget, out);
    if (mc->parsed()) code = cmd_monoid_check(o, out);
    if (ve->parsed()) code = cmd_verify(o, out);
    return static_cast<int>(code);
  } catch (Error const& e) {
    if (o.json) {
      out << nlohmann::json{{"error", to_string(e.kind())},
                            {"witness", e.witness()},
                            {"message", e.what()}}
                 .dump()
          << '\n';
    }
    err << "error: " << e.what() << '\n';
    return static_cast<int>(is_resource_limit(e.kind()) ? Exit::LimitExceeded : Exit::InputError);
  }
}

}  // namespace semimod::cli
