// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails. Runtime limits are part of each criterion.
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>

#include "support/oracles.hpp"

#ifndef POWCLASS_TEST_CORPUS
#error "POWCLASS_TEST_CORPUS must point at the shipped corpus file"
#endif
#ifndef POWCLASS_CLI_PATH
#error "POWCLASS_CLI_PATH must point at the powclass executable"
#endif

using namespace powclass;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;
};

/// Counts checks and violations; the first violation goes on the report line.
struct Tally {
  std::size_t checks = 0;
  std::size_t violations = 0;
  std::string first;

  void expect(bool cond, const std::string& what) {
    ++checks;
    if (cond) return;
    if (violations++ == 0) first = what;
  }
  Outcome outcome(const std::string& extra = {}) const {
    std::string d = std::to_string(checks) + " checks, " + std::to_string(violations) + " violations";
    if (!extra.empty()) d += ", " + extra;
    if (violations) d += "; first: " + first;
    return {violations == 0, d};
  }
};

const std::vector<CorpusEntry>& corpus() {
  static const auto entries = load_corpus(POWCLASS_TEST_CORPUS);
  return entries;
}

std::vector<std::pair<GroupPtr, unsigned>> corpus_p_groups(std::size_t max2, std::size_t max_odd) {
  std::vector<std::pair<GroupPtr, unsigned>> out;
  for (const auto& e : corpus()) {
    if (e.primes_of_interest.size() != 1) continue;
    const unsigned p = e.primes_of_interest.front();
    if (e.group->order() <= (p == 2 ? max2 : max_odd)) out.emplace_back(e.group, p);
  }
  return out;
}

const ReportRow* find_detail_row(const VerificationReport& r, const std::function<bool(const ReportRow&)>& pred) {
  for (const auto& row : r.rows) {
    if (pred(row)) return &row;
  }
  return nullptr;
}

std::string detail(const ReportRow& row, const std::string& key) {
  for (const auto& [k, v] : row.details) {
    if (k == key) return v;
  }
  return {};
}

Outcome wreath_reproduction() {
  Tally t;
  for (unsigned p : {2u, 3u}) {
    const auto w = wreath_cpcp(p);
    const auto prof = upper_eta_series(w, p);
    const auto z = upper_central_series(w);
    t.expect(prof.eta_series.size() == z.size(), "series lengths differ for p=" + std::to_string(p));
    for (std::size_t i = 0; i < std::max(prof.eta_series.size(), z.size()); ++i) {
      t.expect(prof.eta_term(i).members() == z[std::min(i, z.size() - 1)].members(),
               "eta_" + std::to_string(i) + " != Z_" + std::to_string(i) + " for p=" + std::to_string(p));
    }
    t.expect(prof.pwc == static_cast<int>(p), "pwc(CpwrCp) != p for p=" + std::to_string(p));
  }
  return t.outcome();
}

Outcome transfer_suite() {
  Tally t;
  std::set<unsigned> primes;
  for (const auto& e : corpus()) primes.insert(e.primes_of_interest.begin(), e.primes_of_interest.end());
  t.expect(corpus().size() >= 25, "corpus has fewer than 25 groups");
  for (unsigned p : {2u, 3u, 5u}) t.expect(primes.contains(p), "corpus misses prime " + std::to_string(p));
  HarnessOptions opts;
  opts.jobs = 4;
  const auto r = run_verification(corpus(), {"thm1.1"}, opts);
  const auto s = r.summary();
  t.expect(s.failed == 0, std::to_string(s.failed) + " FAILED rows");
  t.expect(s.verified >= 5, "only " + std::to_string(s.verified) + " nonvacuous rows");
  return t.outcome(summary_line(s));
}

Outcome p_length_suite() {
  Tally t;
  HarnessOptions opts;
  opts.jobs = 4;
  const auto r = run_verification(corpus(), {"thm1.2"}, opts);
  const auto s = r.summary();
  t.expect(s.failed == 0, std::to_string(s.failed) + " FAILED rows");
  std::size_t solvable = 0;
  for (const auto& e : corpus()) {
    for (unsigned p : e.primes_of_interest) {
      if (e.tags.contains(std::to_string(p) + "-solvable")) ++solvable;
    }
  }
  t.expect(s.verified == solvable, "verified rows do not cover every p-solvable entry");
  for (unsigned p : {2u, 3u, 5u}) {
    // Powerful Sylow in a group that is not itself a p-group: l_p <= 1.
    const auto* k = find_detail_row(r, [&](const ReportRow& row) {
      const auto& e = resolve_group(row.group, corpus());
      return row.prime == p && row.hypothesis && detail(row, "powerful") == "yes" &&
             e.primes_of_interest.size() > 1 && detail(row, "l_p") == "1";
    });
    t.expect(k != nullptr, "no nonvacuous powerful-Sylow witness for p=" + std::to_string(p));
  }
  for (unsigned p : {2u, 3u}) {
    const auto* eq = find_detail_row(r, [&](const ReportRow& row) {
      return row.prime == p && row.hypothesis && detail(row, "l_p") == detail(row, "bound");
    });
    t.expect(eq != nullptr, "bound never attained for p=" + std::to_string(p));
  }
  const auto* s4 = find_detail_row(r, [](const ReportRow& row) { return row.group == "S4" && row.prime == 2; });
  t.expect(s4 && detail(*s4, "l_p") == "2" && detail(*s4, "pwc") == "2", "S4 does not give l_2 = 2 = pwc");
  return t.outcome(summary_line(s));
}

Outcome potent_constructions() {
  Tally t;
  std::size_t two_instances = 0;
  for (const auto& [g, p] : corpus_p_groups(1u << 20, 0)) {
    const EtaLattice lattice(g, 2);
    for (std::size_t n = 0; n < lattice.size(); ++n) {
      if (!lattice.is_pe(n)) continue;
      ++two_instances;
      t.expect(static_cast<bool>(verify_potent_filtration(potent_filtration_p2(lattice.node(n), g), g, 2, 1)),
               g->label() + ": type-1 filtration fails");
    }
  }
  const auto w5 = wreath_cpcp(5);
  const EtaLattice lattice(w5, 5);
  std::size_t five_instances = 0;
  for (std::size_t n = 0; n < lattice.size(); ++n) {
    if (lattice.powerful_height(n) >= 4) continue;
    ++five_instances;
    const auto chain = potent_filtration_prop43(lattice.node(n), lattice);
    t.expect(static_cast<bool>(verify_potent_filtration(chain, w5, 5, 3)),
             "C5wrC5: type-3 filtration fails at |N|=" + std::to_string(lattice.node(n).order()));
  }
  t.expect(five_instances >= 3, "fewer than 3 C5wrC5 instances");
  return t.outcome(std::to_string(two_instances) + " p=2 and " + std::to_string(five_instances) + " p=5 instances");
}

Outcome greedy_oracle_agreement() {
  Tally t;
  for (const auto& [g, p] : corpus_p_groups(64, 243)) {
    if (p > 3) continue;
    const EtaLattice lattice(g, p);
    for (std::size_t n = 0; n < lattice.size(); ++n) {
      t.expect(lattice.powerful_height(n) == lattice.brute_force_pwh(n),
               g->label() + " |N|=" + std::to_string(lattice.node(n).order()));
    }
  }
  return t.outcome();
}

Outcome height_monotonicity() {
  Tally t;
  for (const auto& [g, p] : corpus_p_groups(0, 243)) {
    const EtaLattice lattice(g, p);
    const Subgroup all = whole(g);
    std::vector<int> h(lattice.size());
    for (std::size_t n = 0; n < lattice.size(); ++n) h[n] = lattice.powerful_height(n);
    auto height = [&](const Subgroup& s) { return h[lattice.index_of(s)]; };
    const int top = upper_eta_series(lattice).pwc;
    for (std::size_t n = 0; n < lattice.size(); ++n) {
      const Subgroup& nn = lattice.node(n);
      const std::string where = g->label() + " |N|=" + std::to_string(nn.order());
      t.expect(height(commutator_subgroup(nn, all)) <= h[n], where + ": pwh [N,P] > pwh N");
      t.expect(height(power_subgroup(nn, p)) <= h[n], where + ": pwh N^p > pwh N");
      for (std::size_t m = 0; m < lattice.size(); ++m) {
        t.expect(height(join(lattice.node(m), nn)) <= std::max(h[m], h[n]), where + ": pwh MN too large");
      }
      for (int j = std::max(1, h[n]); j <= top; ++j) {
        t.expect(iterated_commutator(nn, all, j).is_subgroup_of(power_subgroup(nn, p)),
                 where + ": [N,_j P] not in N^p, j=" + std::to_string(j));
      }
    }
  }
  return t.outcome();
}

Outcome engine_oracles() {
  Tally t;
  for (const auto& e : corpus()) {
    const auto& g = e.group;
    if (g->order() <= 200) {
      const Subgroup all = whole(g);
      for (const auto& n : normal_subgroups(g)) {
        t.expect(oracle::elements(commutator_subgroup(n, all)) ==
                     oracle::commutator(g, oracle::elements(n), oracle::all(g)),
                 g->label() + ": [N,G] methods differ");
      }
    }
    if (g->order() <= 64) {
      std::set<oracle::Set> lib, ref;
      for (const auto& n : normal_subgroups(g)) lib.insert(oracle::elements(n));
      for (const auto& n : oracle::normal_subgroups(g)) ref.insert(n);
      t.expect(lib == ref, g->label() + ": normal subgroups differ");
    }
    if (g->order() > 2000) continue;
    for (unsigned p : e.primes_of_interest) {
      const Subgroup syl = sylow_p(g, p);
      t.expect(focal_by_fusion(syl, g) == intersection(syl, derived_subgroup(g)), g->label() + ": focal forms differ");
      t.expect(transfer_map(syl, false).values == transfer_map(syl, true).values,
               g->label() + ": transfer depends on the transversal");
    }
  }
  return t.outcome();
}

Outcome structural_invariants() {
  Tally t;
  for (const auto& e : corpus()) {
    const auto& g = e.group;
    for (unsigned p : e.primes_of_interest) {
      const bool p_group = e.primes_of_interest.size() == 1;
      if (!p_group && g->order() > 2000) continue;
      const Subgroup syl = sylow_p(g, p);
      const GroupPtr pg = p_group ? g : syl.as_group(g->label() + "-syl");
      const std::string where = g->label() + " p=" + std::to_string(p);
      const EtaLattice lattice(pg, p);
      const auto prof = upper_eta_series(lattice);
      t.expect(prof.pwc <= nilpotency_class(pg).value_or(0), where + ": pwc > class");
      for (std::size_t k = 0; k < lattice.size(); ++k) {
        t.expect(lattice.powerful_class_mod(k) <= prof.pwc, where + ": pwc(P/K) > pwc(P)");
      }
      // Every η-series of length <= 4 is dominated by the upper η-series.
      if (lattice.size() <= 40) {
        std::vector<std::size_t> chain{lattice.trivial()};
        std::function<void()> walk = [&] {
          for (std::size_t i = 0; i < chain.size(); ++i) {
            t.expect(lattice.node(chain[i]).is_subgroup_of(prof.eta_term(i)), where + ": dominance fails");
          }
          if (chain.size() > 4) return;
          for (std::size_t y = chain.back() + 1; y < lattice.size(); ++y) {
            if (lattice.leq(chain.back(), y) && lattice.is_pe_mod(y, chain.back())) {
              chain.push_back(y);
              walk();
              chain.pop_back();
            }
          }
        };
        walk();
      }
      if (g->order() > 2000) continue;
      for (const auto& w : all_subgroups(syl)) {
        if (is_strongly_closed(w, syl, g).holds) {
          t.expect(is_weakly_closed(w, syl, g).holds, where + ": strong without weak closure");
        }
      }
    }
  }
  return t.outcome();
}

std::string run_cli_csv() {
  const std::string cmd = std::string("\"") + POWCLASS_CLI_PATH + "\" verify --suite all --format csv --jobs 4 --corpus \"" +
                          POWCLASS_TEST_CORPUS + "\" 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) throw std::runtime_error("cannot start " + cmd);
  std::string out;
  char buf[4096];
  while (std::size_t n = std::fread(buf, 1, sizeof buf, pipe)) out.append(buf, n);
  const int status = pclose(pipe);
  if (status != 0) throw std::runtime_error("cli exited with status " + std::to_string(status));
  return out;
}

Outcome determinism() {
  const std::string a = deterministic_body(run_cli_csv());
  const std::string b = deterministic_body(run_cli_csv());
  const auto lines = std::count(a.begin(), a.end(), '\n');
  return {a == b && lines > 1, std::to_string(lines) + " body lines, " + (a == b ? "identical" : "different")};
}

struct Criterion {
  int id;
  const char* name;
  double limit_s;
  Outcome (*run)();
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "eta series equals upper central series for CpwrCp, p=2,3", 10, wreath_reproduction},
      {2, "suite thm1.1 over the corpus", 300, transfer_suite},
      {3, "suite thm1.2, powerful-Sylow witnesses, bound attained", 300, p_length_suite},
      {4, "potent filtrations (p=2 type 1, C5wrC5 type 3)", 600, potent_constructions},
      {5, "greedy powerful height equals exhaustive search", 300, greedy_oracle_agreement},
      {6, "height monotonicity for odd p", 300, height_monotonicity},
      {7, "engine oracles (commutators, normal subgroups, focal, transfer)", 300, engine_oracles},
      {8, "structural invariants", 300, structural_invariants},
      {9, "two verify runs give identical csv bodies", 300, determinism},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("error: ") + e.what()};
    }
    const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    const bool in_time = s < c.limit_s;
    const bool pass = o.ok && in_time;
    if (!pass) ++failures;
    std::ostringstream line;
    line.setf(std::ios::fixed);
    line.precision(2);
    line << (pass ? "PASS" : "FAIL") << " criterion " << c.id << ": " << c.name << " [" << o.detail << "; " << s
         << " s, limit " << c.limit_s << " s" << (in_time ? "" : ", TIME EXCEEDED") << "]";
    std::cout << line.str() << std::endl;
  }
  std::cout << (failures ? "acceptance: " + std::to_string(failures) + " criteria failed" : "acceptance: all criteria passed")
            << std::endl;
  return failures ? 1 : 0;
}
