#pragma once

// JSON interchange: monoid files, congruences, seed pairs and the result
// records printed by the command-line tool. Every writer has a reader.

#include <cstdint>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "congruence.hpp"
#include "error.hpp"
#include "monoid.hpp"
#include "nat_coeq.hpp"
#include "semiideal.hpp"
#include "tensor.hpp"

namespace semimod::io {

using nlohmann::json;

namespace detail {
template <typename T>
T get(json const& j, char const* key) {
  if (!j.is_object() || !j.contains(key))
    fail(ErrorKind::InvalidInput, {}, std::string("missing key \"") + key + "\"");
  try {
    return j.at(key).get<T>();
  } catch (json::exception const& e) {
    fail(ErrorKind::InvalidInput, {}, std::string("bad value for \"") + key + "\": " + e.what());
  }
}
}  // namespace detail

inline json parse(std::string const& text) {
  try {
    return json::parse(text);
  } catch (json::exception const& e) {
    fail(ErrorKind::InvalidInput, {}, std::string("malformed JSON: ") + e.what());
  }
}

inline json read_file(std::string const& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorKind::InvalidInput, {}, "cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse(ss.str());
}

// --- monoids ---------------------------------------------------------------

/// {"size": n, "add": [[...]], "labels": [...]} with identity at index 0.
inline json to_json(FiniteCommMonoid const& M) {
  json j{{"size", M.size()}, {"add", M.table()}};
  if (M.has_labels()) j["labels"] = M.labels();
  return j;
}

inline FiniteCommMonoid monoid_from_json(json const& j) {
  auto const size = detail::get<std::int64_t>(j, "size");
  auto const raw = detail::get<std::vector<std::vector<std::int64_t>>>(j, "add");
  if (size <= 0 || raw.size() != static_cast<std::size_t>(size))
    fail(ErrorKind::InvalidInput, {}, "\"size\" does not match the table");
  Table t(raw.size());
  for (std::size_t a = 0; a < raw.size(); ++a)
    for (std::size_t b = 0; b < raw[a].size(); ++b) {
      if (raw[a][b] < 0 || raw[a][b] >= size) fail(ErrorKind::OutOfRange, {a, b});
      t[a].push_back(static_cast<Element>(raw[a][b]));
    }
  std::vector<std::string> labels;
  if (j.contains("labels")) labels = detail::get<std::vector<std::string>>(j, "labels");
  return validate_monoid(t, std::move(labels));
}

// --- congruences and seed pairs ---------------------------------------------

inline json to_json(Congruence const& C) { return json{{"classes", C.classes()}}; }

inline Congruence congruence_from_json(FiniteCommMonoid const& M, json const& j) {
  return Congruence::from_classes(M, detail::get<std::vector<Subset>>(j, "classes"));
}

/// [[a, b], ...]
inline json pairs_to_json(std::vector<ElementPair> const& pairs) {
  json j = json::array();
  for (auto [a, b] : pairs) j.push_back({a, b});
  return j;
}

inline std::vector<ElementPair> pairs_from_json(json const& j) {
  if (!j.is_array()) fail(ErrorKind::InvalidInput, {}, "seed pairs must be an array");
  std::vector<ElementPair> out;
  for (auto const& p : j) {
    if (!p.is_array() || p.size() != 2 || !p[0].is_number_unsigned() ||
        !p[1].is_number_unsigned())
      fail(ErrorKind::InvalidInput, {}, "each seed pair must be [a, b] with a, b ≥ 0");
    out.emplace_back(p[0].get<Element>(), p[1].get<Element>());
  }
  return out;
}

// --- coequalizers on ℕ₀ ------------------------------------------------------

/// {"index", "period", "table", "certA", "certB": [steps], "seeds", "bound_used"},
/// or {"natural": true, ...} when the quotient is ℕ₀.
inline json to_json(NatQuotient const& q) {
  json seeds = json::array();
  for (auto const& s : q.seeds) seeds.push_back({s.a, s.b});
  json chain = json::array();
  for (auto const& st : q.certificate_b)
    chain.push_back({{"from", st.from}, {"to", st.to}, {"seed", st.seed}, {"shift", st.shift}});
  json j{{"seeds", seeds}, {"certA", q.certificate_a}, {"certB", chain},
         {"bound_used", q.bound_used}};
  if (q.is_natural()) {
    j["natural"] = true;
  } else {
    j["natural"] = false;
    j["index"] = q.cyclic().index;
    j["period"] = q.cyclic().period;
    j["table"] = q.cyclic().monoid().table();
  }
  return j;
}

inline NatQuotient nat_quotient_from_json(json const& j) {
  NatQuotient q;
  for (auto const& p : detail::get<std::vector<std::vector<std::uint64_t>>>(j, "seeds")) {
    if (p.size() != 2) fail(ErrorKind::InvalidInput, {}, "seed must be [a, b]");
    q.seeds.push_back(NatPair{p[0], p[1]});
  }
  q.certificate_a = detail::get<bool>(j, "certA");
  q.bound_used = detail::get<std::uint64_t>(j, "bound_used");
  for (auto const& st : detail::get<json>(j, "certB"))
    q.certificate_b.push_back(ChainStep{detail::get<std::uint64_t>(st, "from"),
                                        detail::get<std::uint64_t>(st, "to"),
                                        detail::get<std::size_t>(st, "seed"),
                                        detail::get<std::uint64_t>(st, "shift")});
  if (detail::get<bool>(j, "natural")) {
    q.result = SymbolicNat{};
  } else {
    CyclicMonoid c{detail::get<std::uint64_t>(j, "index"), detail::get<std::uint64_t>(j, "period")};
    if (c.period == 0) fail(ErrorKind::InvalidInput, {}, "period must be positive");
    if (j.contains("table") && detail::get<Table>(j, "table") != c.monoid().table())
      fail(ErrorKind::InvalidInput, {}, "table does not match C(index, period)");
    q.result = c;
  }
  return q;
}

inline json to_json(NaiveCensus const& c) {
  return json{{"probe_limit", c.probe_limit}, {"classes", c.classes}};
}

inline NaiveCensus naive_census_from_json(json const& j) {
  return NaiveCensus{detail::get<std::uint64_t>(j, "probe_limit"),
                     detail::get<std::vector<std::vector<std::uint64_t>>>(j, "classes")};
}

// --- semiideals --------------------------------------------------------------

struct SemiidealReport {
  std::vector<std::uint64_t> generators;
  std::uint64_t period = 0;
  std::uint64_t footing = 0;
  std::vector<std::uint64_t> minimal_generators;
  bool cyclic = false;

  friend bool operator==(SemiidealReport const&, SemiidealReport const&) = default;
};

inline SemiidealReport report(Semiideal const& M) {
  SemiidealReport r;
  r.generators = M.generators();
  r.period = M.period();
  r.footing = M.footing();
  r.minimal_generators = minimal_generators(M);
  r.cyclic = r.minimal_generators.size() == 1;
  return r;
}

/// {"generators", "period", "footing", "perc", "minimal_generators", "cyclic",
///  "quotient_order"}; ℕ₀/M ≅ ℤ/(quotient_order).
inline json to_json(SemiidealReport const& r) {
  return json{{"generators", r.generators},
              {"period", r.period},
              {"footing", r.footing},
              {"perc", {{"footing", r.footing}, {"period", r.period}}},
              {"minimal_generators", r.minimal_generators},
              {"cyclic", r.cyclic},
              {"quotient_order", r.period}};
}

inline SemiidealReport semiideal_report_from_json(json const& j) {
  SemiidealReport r;
  r.generators = detail::get<std::vector<std::uint64_t>>(j, "generators");
  r.period = detail::get<std::uint64_t>(j, "period");
  r.footing = detail::get<std::uint64_t>(j, "footing");
  r.minimal_generators = detail::get<std::vector<std::uint64_t>>(j, "minimal_generators");
  r.cyclic = detail::get<bool>(j, "cyclic");
  return r;
}

// --- tensor products ---------------------------------------------------------

/// {"left", "right", "monoid": monoid JSON, "bilinear": [[m ⊗ n]]}
inline json to_json(TensorProduct const& T) {
  return json{{"left", to_json(T.left)},
              {"right", to_json(T.right)},
              {"monoid", to_json(T.monoid)},
              {"bilinear", T.bilinear}};
}

struct TensorRecord {
  FiniteCommMonoid left, right, monoid;
  std::vector<std::vector<Element>> bilinear;
};

inline TensorRecord tensor_record_from_json(json const& j) {
  TensorRecord r{monoid_from_json(detail::get<json>(j, "left")),
                 monoid_from_json(detail::get<json>(j, "right")),
                 monoid_from_json(detail::get<json>(j, "monoid")),
                 detail::get<std::vector<std::vector<Element>>>(j, "bilinear")};
  auto v = balanced_check(r.left, r.right, r.monoid, r.bilinear);
  if (!v.balanced) fail(ErrorKind::NotBalanced, v.witness, "bilinear table");
  return r;
}

}  // namespace semimod::io
