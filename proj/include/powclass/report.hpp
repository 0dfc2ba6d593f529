#pragma once

#include <json.hpp>

#include <cstdio>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace powclass {

enum class Status { verified, vacuous, FAILED };

inline std::string_view to_string(Status s) {
  switch (s) {
    case Status::verified: return "verified";
    case Status::vacuous: return "vacuous";
    case Status::FAILED: return "FAILED";
  }
  return "?";
}

struct ReportRow {
  std::string group;
  unsigned prime = 0;
  std::string theorem;
  bool hypothesis = false;
  bool conclusion = false;
  /// Ordered key/value witnesses; part of the deterministic body.
  std::vector<std::pair<std::string, std::string>> details;
  double wall_ms = 0.0;

  /// FAILED exactly when the hypothesis holds and the conclusion does not.
  Status status() const {
    if (!hypothesis) return Status::vacuous;
    return conclusion ? Status::verified : Status::FAILED;
  }

  std::string details_string() const {
    std::string out;
    for (const auto& [k, v] : details) {
      if (!out.empty()) out += "; ";
      out += k + "=" + v;
    }
    return out;
  }
};

struct ReportSummary {
  std::size_t verified = 0;
  std::size_t vacuous = 0;
  std::size_t failed = 0;
  std::size_t total() const { return verified + vacuous + failed; }
};

struct VerificationReport {
  std::vector<ReportRow> rows;
  /// Per-group wall time, in corpus order.
  std::vector<std::pair<std::string, double>> group_ms;
  double total_ms = 0.0;

  ReportSummary summary() const {
    ReportSummary s;
    for (const auto& r : rows) {
      switch (r.status()) {
        case Status::verified: ++s.verified; break;
        case Status::vacuous: ++s.vacuous; break;
        case Status::FAILED: ++s.failed; break;
      }
    }
    return s;
  }
};

inline std::string summary_line(const ReportSummary& s) {
  return "rows=" + std::to_string(s.total()) + " verified=" + std::to_string(s.verified) +
         " vacuous=" + std::to_string(s.vacuous) + " FAILED=" + std::to_string(s.failed);
}

namespace detail {

inline std::string fixed_ms(double ms) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.1f", ms);
  return buf;
}

inline std::string csv_field(std::string_view s) {
  if (s.find_first_of(",\"\r\n") == std::string_view::npos) return std::string(s);
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

/// Timing lines start with '#' and follow the body.
inline void timing_footer(std::ostringstream& out, const VerificationReport& report) {
  for (const auto& [label, ms] : report.group_ms) out << "# wall_ms " << label << " " << fixed_ms(ms) << "\n";
  out << "# wall_ms total " << fixed_ms(report.total_ms) << "\n";
}

}  // namespace detail

inline std::string format_text(const VerificationReport& report) {
  std::size_t wg = 5, wt = 7;
  for (const auto& r : report.rows) {
    wg = std::max(wg, r.group.size());
    wt = std::max(wt, r.theorem.size());
  }
  auto pad = [](std::string s, std::size_t w) {
    s.resize(std::max(w, s.size()), ' ');
    return s;
  };
  std::ostringstream out;
  out << pad("group", wg) << "  p  " << pad("theorem", wt) << "  hyp  concl  " << pad("status", 8)
      << "  details\n";
  for (const auto& r : report.rows) {
    out << pad(r.group, wg) << "  " << pad(std::to_string(r.prime), 2) << " " << pad(r.theorem, wt)
        << "  " << (r.hypothesis ? "yes" : "no ") << "  " << (r.conclusion ? "yes  " : "no   ") << "  "
        << pad(std::string(to_string(r.status())), 8) << "  " << r.details_string() << "\n";
  }
  out << summary_line(report.summary()) << "\n";
  detail::timing_footer(out, report);
  return out.str();
}

inline std::string format_csv(const VerificationReport& report) {
  std::ostringstream out;
  out << "group,prime,theorem,hypothesis,conclusion,status,details\n";
  for (const auto& r : report.rows) {
    out << detail::csv_field(r.group) << "," << r.prime << "," << detail::csv_field(r.theorem) << ","
        << (r.hypothesis ? "true" : "false") << "," << (r.conclusion ? "true" : "false") << ","
        << to_string(r.status()) << "," << detail::csv_field(r.details_string()) << "\n";
  }
  detail::timing_footer(out, report);
  return out.str();
}

inline nlohmann::ordered_json to_json(const VerificationReport& report) {
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (const auto& r : report.rows) {
    nlohmann::ordered_json details = nlohmann::ordered_json::object();
    for (const auto& [k, v] : r.details) details[k] = v;
    rows.push_back({{"group", r.group},
                    {"prime", r.prime},
                    {"theorem", r.theorem},
                    {"hypothesis", r.hypothesis},
                    {"conclusion", r.conclusion},
                    {"status", std::string(to_string(r.status()))},
                    {"witnesses", details},
                    {"wall_time_ms", r.wall_ms}});
  }
  const auto s = report.summary();
  return {{"schema", 1},
          {"rows", rows},
          {"summary", {{"rows", s.total()}, {"verified", s.verified}, {"vacuous", s.vacuous}, {"failed", s.failed}}},
          {"wall_time_ms", report.total_ms}};
}

inline std::string format_json(const VerificationReport& report) { return to_json(report).dump(2) + "\n"; }

/// Report text without the '#' timing footer; equal across identical runs.
inline std::string deterministic_body(const std::string& formatted) {
  std::istringstream in(formatted);
  std::string line, out;
  while (std::getline(in, line)) {
    if (!line.starts_with("#")) out += line + "\n";
  }
  return out;
}

}  // namespace powclass
