#pragma once

#include <json.hpp>

#include <charconv>
#include <fstream>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "powclass/commutators.hpp"
#include "powclass/constructors.hpp"
#include "powclass/powerful.hpp"
#include "powclass/psylow.hpp"

namespace powclass {

struct CorpusEntry {
  GroupPtr group;
  std::vector<unsigned> primes_of_interest;
  std::set<std::string> tags;
  /// Constructor call that produced the generators, or "generators".
  std::string provenance;
  std::map<std::string, std::string> metadata;

  const std::string& label() const { return group->label(); }
};

/// Tags derived from the group itself; input files cannot set them.
inline std::set<std::string> compute_tags(const GroupPtr& g) {
  std::set<std::string> tags;
  const auto cls = nilpotency_class(g);
  if (derived_subgroup(g).is_trivial()) tags.insert("abelian");
  if (cls) tags.insert("nilpotent");
  for (unsigned p : prime_divisors(g->order())) {
    const std::string ps = std::to_string(p);
    if (is_power_of(g->order(), p)) {
      tags.insert(ps + "-group");
      int n = 0;
      for (std::size_t m = g->order(); m > 1; m /= p) ++n;
      if (n >= 3 && cls && *cls == n - 1) tags.insert("maximal-class");
      if (is_powerfully_embedded(whole(g), g, p)) tags.insert("powerful");
    }
    if (upper_p_series(g, p).p_solvable) tags.insert(ps + "-solvable");
    if (is_p_nilpotent(g, p)) tags.insert(ps + "-nilpotent");
  }
  return tags;
}

inline CorpusEntry make_entry(GroupPtr g, std::string provenance = "generators",
                              std::map<std::string, std::string> metadata = {}) {
  CorpusEntry e;
  e.primes_of_interest = prime_divisors(g->order());
  e.tags = compute_tags(g);
  e.group = std::move(g);
  e.provenance = std::move(provenance);
  e.metadata = std::move(metadata);
  return e;
}

namespace detail {

inline std::optional<unsigned long> parse_uint(std::string_view s) {
  unsigned long v = 0;
  if (s.empty()) return std::nullopt;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size()) return std::nullopt;
  return v;
}

inline bool starts_with(std::string_view s, std::string_view prefix, std::string_view& rest) {
  if (!s.starts_with(prefix)) return false;
  rest = s.substr(prefix.size());
  return true;
}

/// Splits "AxB" at the last top-level 'x' that separates two names.
inline std::optional<std::pair<std::string, std::string>> split_product(std::string_view name) {
  int depth = 0;
  for (std::size_t i = name.size(); i-- > 0;) {
    const char c = name[i];
    if (c == ')') ++depth;
    if (c == '(') --depth;
    if (c == 'x' && depth == 0 && i > 0 && i + 1 < name.size()) {
      return std::make_pair(std::string(name.substr(0, i)), std::string(name.substr(i + 1)));
    }
  }
  return std::nullopt;
}

}  // namespace detail

/// Built-in names: C<n>, C<p>^<k>, D<2n>, Q8, Q16, SD16, He<p>, M<p^3>,
/// C<p>wrC<p>, S<n>, A<n>, AGL1_<q>, SL(2,3), GL(2,3), reg(<name>) and
/// products <name>x<name>.
inline std::optional<GroupPtr> resolve_builtin(std::string_view name, const Limits& limits = {}) {
  std::string_view rest;
  if (name == "SL(2,3)") return sl23();
  if (name == "GL(2,3)") return gl23();
  if (name == "SD16") return semidihedral(16);
  if (name == "Q8") return quaternion(8);
  if (name == "Q16") return quaternion(16);
  if (detail::starts_with(name, "reg(", rest) && rest.ends_with(")")) {
    auto inner = resolve_builtin(rest.substr(0, rest.size() - 1), limits);
    if (!inner) return std::nullopt;
    return regular_embedding(*inner);
  }
  if (auto wr = name.find("wr"); wr != std::string_view::npos && name.starts_with("C")) {
    auto a = detail::parse_uint(name.substr(1, wr - 1));
    auto b = name.substr(wr + 2);
    if (a && b == "C" + std::to_string(*a) && is_prime(*a)) return wreath_cpcp(*a, limits);
  }
  if (auto parts = detail::split_product(name)) {
    auto a = resolve_builtin(parts->first, limits);
    auto b = resolve_builtin(parts->second, limits);
    if (a && b) return direct_product(*a, *b, limits);
    return std::nullopt;
  }
  if (detail::starts_with(name, "AGL1_", rest)) {
    if (auto q = detail::parse_uint(rest); q && is_prime(*q) && *q >= 3) {
      return affine_frobenius(static_cast<unsigned>(*q));
    }
    return std::nullopt;
  }
  if (detail::starts_with(name, "He", rest)) {
    if (auto p = detail::parse_uint(rest); p && is_prime(*p) && *p % 2 == 1) {
      return extraspecial_p3(static_cast<unsigned>(*p), static_cast<unsigned>(*p));
    }
    return std::nullopt;
  }
  if (detail::starts_with(name, "M", rest)) {
    auto n = detail::parse_uint(rest);
    for (unsigned p : {3u, 5u, 7u}) {
      if (n && *n == static_cast<unsigned long>(p) * p * p) return extraspecial_p3(p, p * p);
    }
    return std::nullopt;
  }
  if (detail::starts_with(name, "C", rest)) {
    if (auto caret = rest.find('^'); caret != std::string_view::npos) {
      auto p = detail::parse_uint(rest.substr(0, caret));
      auto k = detail::parse_uint(rest.substr(caret + 1));
      if (p && k && is_prime(*p) && *k >= 1 && *k <= 8) {
        return elementary_abelian(static_cast<unsigned>(*p), static_cast<unsigned>(*k));
      }
      return std::nullopt;
    }
    if (auto n = detail::parse_uint(rest); n && *n >= 1 && *n <= limits.max_order) return cyclic(*n);
    return std::nullopt;
  }
  if (detail::starts_with(name, "D", rest)) {
    if (auto n = detail::parse_uint(rest); n && *n >= 6 && *n % 2 == 0 && *n <= 2000) return dihedral(*n);
    return std::nullopt;
  }
  if (detail::starts_with(name, "S", rest)) {
    if (auto n = detail::parse_uint(rest); n && *n >= 1 && *n <= 7) return symmetric(*n);
    return std::nullopt;
  }
  if (detail::starts_with(name, "A", rest)) {
    if (auto n = detail::parse_uint(rest); n && *n >= 1 && *n <= 7) return alternating(*n);
    return std::nullopt;
  }
  return std::nullopt;
}

namespace detail {

inline std::string line_column(const std::string& text, std::size_t byte) {
  std::size_t line = 1, col = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return "line " + std::to_string(line) + ", column " + std::to_string(col);
}

[[noreturn]] inline void parse_fail(const std::string& where, const std::string& what) {
  throw Error(ErrorKind::ParseError, where + ": " + what);
}

inline CorpusEntry entry_from_json(const nlohmann::json& j, const std::string& path, const Limits& limits) {
  if (!j.is_object()) parse_fail(path, "expected an object");
  if (!j.contains("label") || !j["label"].is_string()) parse_fail(path + ".label", "expected a string");
  if (!j.contains("degree") || !j["degree"].is_number_unsigned() || j["degree"].get<std::size_t>() == 0) {
    parse_fail(path + ".degree", "expected a positive integer");
  }
  const auto degree = j["degree"].get<std::size_t>();
  if (!j.contains("generators") || !j["generators"].is_array()) {
    parse_fail(path + ".generators", "expected an array of image arrays");
  }
  std::vector<Permutation> gens;
  for (std::size_t i = 0; i < j["generators"].size(); ++i) {
    const auto& g = j["generators"][i];
    const std::string where = path + ".generators[" + std::to_string(i) + "]";
    if (!g.is_array() || g.size() != degree) {
      parse_fail(where, "expected " + std::to_string(degree) + " images");
    }
    std::vector<Point> images;
    for (const auto& x : g) {
      if (!x.is_number_unsigned()) parse_fail(where, "images must be non-negative integers");
      images.push_back(x.get<Point>());
    }
    try {
      gens.emplace_back(std::move(images));
    } catch (const Error& e) {
      parse_fail(where, e.what());
    }
  }
  std::map<std::string, std::string> metadata;
  if (j.contains("metadata")) {
    if (!j["metadata"].is_object()) parse_fail(path + ".metadata", "expected a string map");
    for (const auto& [k, v] : j["metadata"].items()) {
      if (!v.is_string()) parse_fail(path + ".metadata." + k, "expected a string");
      metadata[k] = v.get<std::string>();
    }
  }
  GroupPtr group = from_generators(j["label"].get<std::string>(), degree, std::move(gens), limits);
  auto it = metadata.find("constructor");
  std::string provenance = it == metadata.end() ? "generators" : it->second;
  return make_entry(std::move(group), std::move(provenance), std::move(metadata));
}

}  // namespace detail

/// Parses a corpus document: {"schema": 1, "groups": [{label, degree,
/// generators, metadata?}, ...]}.
inline std::vector<CorpusEntry> parse_corpus(const std::string& text, const Limits& limits = {}) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorKind::ParseError, detail::line_column(text, e.byte == 0 ? 0 : e.byte - 1) +
                                           ": malformed JSON");
  }
  if (!doc.is_object()) detail::parse_fail("document", "expected an object");
  if (!doc.contains("schema") || doc["schema"] != 1) detail::parse_fail("schema", "expected 1");
  if (!doc.contains("groups") || !doc["groups"].is_array()) {
    detail::parse_fail("groups", "expected an array");
  }
  std::vector<CorpusEntry> entries;
  std::set<std::string> labels;
  for (std::size_t i = 0; i < doc["groups"].size(); ++i) {
    const std::string path = "groups[" + std::to_string(i) + "]";
    entries.push_back(detail::entry_from_json(doc["groups"][i], path, limits));
    if (!labels.insert(entries.back().label()).second) {
      detail::parse_fail(path + ".label", "duplicate label " + entries.back().label());
    }
  }
  return entries;
}

inline std::vector<CorpusEntry> load_corpus(const std::string& path, const Limits& limits = {}) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::ParseError, path + ": cannot open file");
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_corpus(buf.str(), limits);
}

/// One group per block and one generator array per line, in construction order.
inline std::string serialize_corpus(const std::vector<CorpusEntry>& entries) {
  std::ostringstream out;
  out << "{\n  \"schema\": 1,\n  \"groups\": [";
  for (std::size_t i = 0; i < entries.size(); ++i) {
    const auto& g = *entries[i].group;
    out << (i ? ",\n" : "\n") << "    {\n";
    out << "      \"label\": " << nlohmann::json(g.label()).dump() << ",\n";
    out << "      \"degree\": " << g.degree() << ",\n";
    out << "      \"generators\": [";
    for (std::size_t k = 0; k < g.generators().size(); ++k) {
      out << (k ? ",\n" : "\n") << "        [";
      const auto& perm = g.generators()[k];
      for (std::size_t x = 0; x < perm.degree(); ++x) out << (x ? ", " : "") << perm[x];
      out << "]";
    }
    out << (g.generators().empty() ? "]" : "\n      ]");
    if (!entries[i].metadata.empty()) {
      out << ",\n      \"metadata\": " << nlohmann::json(entries[i].metadata).dump();
    }
    out << "\n    }";
  }
  out << (entries.empty() ? "]\n}\n" : "\n  ]\n}\n");
  return out.str();
}

inline void save_corpus(const std::vector<CorpusEntry>& entries, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorKind::ParseError, path + ": cannot write file");
  out << serialize_corpus(entries);
}

/// Entry named `ref` in the corpus, else a built-in name.
inline CorpusEntry resolve_group(std::string_view ref, const std::vector<CorpusEntry>& corpus,
                                 const Limits& limits = {}) {
  for (const auto& e : corpus) {
    if (e.label() == ref) return e;
  }
  if (auto g = resolve_builtin(ref, limits)) {
    return make_entry(*g, std::string(ref), {{"constructor", std::string(ref)}});
  }
  throw Error(ErrorKind::UnknownGroup, "no group named " + std::string(ref));
}

/// The corpus shipped in data/corpus.json, by built-in name, plus explicit
/// generator entries for groups without a constructor.
inline std::vector<std::string> default_corpus_names() {
  return {"C2wrC2", "Q8",      "C4xC2",   "C2^3",   "C2^4",   "D16",     "Q16",     "SD16",
          "C4xC4",  "D8xC2",   "Q8xC2",   "C3wrC3", "He3",    "M27",     "C9xC3",   "C3^3",
          "C5wrC5", "He5",     "C25xC5",  "S3",     "S4",     "A4",      "SL(2,3)", "GL(2,3)",
          "A5",     "S5",      "AGL1_5",  "AGL1_7", "S3xC3",  "C2xS4",   "D8xC3",   "S6",
          "AGL1_11", "C5xS3",  "A4xC2"};
}

inline std::vector<CorpusEntry> build_default_corpus(const Limits& limits = {}) {
  std::vector<CorpusEntry> out;
  for (const auto& name : default_corpus_names()) {
    auto g = resolve_builtin(name, limits);
    if (!g) throw Error(ErrorKind::UnknownGroup, "no built-in group named " + name);
    // Relabel so the file label is the short name, not the constructor label.
    GroupPtr named = (*g)->label() == name
                         ? *g
                         : from_generators(name, (*g)->degree(), (*g)->generators(), limits);
    out.push_back(make_entry(std::move(named), name, {{"constructor", name}}));
  }
  // Dic12 = C3 ⋊ C4 on 7 points: a = (0 1 2), b = (1 2)(3 4 5 6).
  GroupPtr dic12 = from_generators("Dic12", 7,
                                   {Permutation::from_cycles(7, {{0, 1, 2}}),
                                    Permutation::from_cycles(7, {{1, 2}, {3, 4, 5, 6}})},
                                   limits);
  out.push_back(make_entry(dic12, "generators", {{"note", "C3 semidirect C4"}}));
  return out;
}

}  // namespace powclass
