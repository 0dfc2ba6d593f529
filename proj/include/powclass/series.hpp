#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "powclass/subgroup.hpp"

namespace powclass {

enum class SeriesKind { eta_ascending, potent_descending, central_upper, central_lower, p_upper };

inline std::string_view to_string(SeriesKind kind) {
  switch (kind) {
    case SeriesKind::eta_ascending: return "eta_ascending";
    case SeriesKind::potent_descending: return "potent_descending";
    case SeriesKind::central_upper: return "central_upper";
    case SeriesKind::central_lower: return "central_lower";
    case SeriesKind::p_upper: return "p_upper";
  }
  return "unknown";
}

/// A chain of subgroups of one ambient group. Ascending kinds start at the
/// trivial subgroup, descending kinds end there.
struct SeriesChain {
  SeriesKind kind = SeriesKind::eta_ascending;
  std::vector<Subgroup> terms;
  std::optional<int> type_t;

  std::size_t size() const noexcept { return terms.size(); }
  const Subgroup& operator[](std::size_t i) const { return terms[i]; }

  std::vector<std::size_t> orders() const {
    std::vector<std::size_t> out;
    out.reserve(terms.size());
    for (const auto& t : terms) out.push_back(t.order());
    return out;
  }

  bool is_ascending() const {
    return kind == SeriesKind::eta_ascending || kind == SeriesKind::central_upper ||
           kind == SeriesKind::p_upper;
  }

  /// Consecutive terms nested in the direction the kind dictates.
  bool is_nested() const {
    for (std::size_t i = 0; i + 1 < terms.size(); ++i) {
      const bool ok = is_ascending() ? terms[i].is_subgroup_of(terms[i + 1])
                                     : terms[i + 1].is_subgroup_of(terms[i]);
      if (!ok) return false;
    }
    return true;
  }
};

}  // namespace powclass
