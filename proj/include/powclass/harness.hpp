#pragma once

#include <algorithm>
#include <atomic>
#include <chrono>
#include <exception>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "powclass/corpus.hpp"
#include "powclass/fusion.hpp"
#include "powclass/powerful.hpp"
#include "powclass/psylow.hpp"
#include "powclass/report.hpp"

namespace powclass {

/// Stable theorem ids, in report order.
inline const std::vector<std::string>& suite_ids() {
  static const std::vector<std::string> ids{"thm1.1",  "thm1.2",  "prop3.2",  "prop3.3",
                                            "prop3.5", "cor-eta-transfer", "prop4.2", "prop4.3",
                                            "cor4.4",  "lemma2.1", "lemma2.2", "lemma3.1"};
  return ids;
}

struct HarnessOptions {
  Limits limits;
  /// Rows that scan all of G run only for |G| up to this bound.
  std::size_t max_g_order = 2000;
  unsigned jobs = 1;
};

/// Everything the rows need about one (G, p), computed on first use.
class PrimeContext {
 public:
  PrimeContext(GroupPtr g, unsigned p, const Limits& limits)
      : g_(std::move(g)), p_(p), limits_(limits), sylow_(sylow_p(g_, p_)) {
    p_group_ = sylow_.as_group();
  }

  const GroupPtr& group() const { return g_; }
  unsigned prime() const { return p_; }
  const Subgroup& sylow() const { return sylow_; }
  /// The Sylow subgroup as a standalone group (G itself for p-groups).
  const GroupPtr& p_group() const { return p_group_; }

  const EtaLattice& lattice() {
    if (!lattice_) lattice_ = std::make_unique<EtaLattice>(p_group_, p_, limits_);
    return *lattice_;
  }

  const EtaProfile& profile() {
    if (!profile_) profile_ = upper_eta_series(lattice());
    return *profile_;
  }

  /// η(P) as a subgroup of G.
  const Subgroup& eta_in_g() {
    if (!eta_g_) eta_g_ = transport(profile().eta_term(1), g_);
    return *eta_g_;
  }

  const PSeriesResult& p_series() {
    if (!pseries_) pseries_ = upper_p_series(g_, p_);
    return *pseries_;
  }

  const Subgroup& o_pprime_p_g() {
    if (!oppp_) oppp_ = o_pprime_p(g_, p_);
    return *oppp_;
  }

  const Subgroup& sylow_normalizer() {
    if (!ngp_) ngp_ = normalizer(g_, sylow_);
    return *ngp_;
  }

  /// pwh_P of every lattice node.
  const std::vector<int>& heights() {
    if (heights_.empty()) {
      const auto& l = lattice();
      for (std::size_t i = 0; i < l.size(); ++i) heights_.push_back(l.powerful_height(i));
    }
    return heights_;
  }

  bool small_pwc() { return profile().pwc < static_cast<int>(p_); }

 private:
  GroupPtr g_;
  unsigned p_;
  Limits limits_;
  Subgroup sylow_;
  GroupPtr p_group_;
  std::unique_ptr<EtaLattice> lattice_;
  std::optional<EtaProfile> profile_;
  std::optional<Subgroup> eta_g_;
  std::optional<PSeriesResult> pseries_;
  std::optional<Subgroup> oppp_;
  std::optional<Subgroup> ngp_;
  std::vector<int> heights_;
};

namespace detail {

inline std::string yes_no(bool b) { return b ? "yes" : "no"; }

inline std::string orders_string(const SeriesChain& chain) {
  std::string out = "[";
  for (auto o : chain.orders()) out += (out.size() > 1 ? " " : "") + std::to_string(o);
  return out + "]";
}

inline ReportRow make_row(PrimeContext& ctx, const std::string& theorem) {
  ReportRow row;
  row.group = ctx.group()->label();
  row.prime = ctx.prime();
  row.theorem = theorem;
  return row;
}

inline ReportRow row_thm11(PrimeContext& ctx) {
  auto row = make_row(ctx, "thm1.1");
  const auto& g = ctx.group();
  const Subgroup& w = ctx.eta_in_g();
  const Subgroup& syl = ctx.sylow();
  if (!verify_gruen_first(g, ctx.prime())) {
    throw Error(ErrorKind::InternalConsistency, "Gruen's first identity fails on " + g->label());
  }
  const Subgroup focal = focal_subgroup(syl, g, ctx.prime());
  const Subgroup local = intersection(syl, derived_subgroup(normalizer(g, w)));
  row.hypothesis = is_weakly_closed(w, syl, g).holds;
  row.conclusion = focal == local;
  row.details = {{"|P|", std::to_string(syl.order())},
                 {"|eta(P)|", std::to_string(w.order())},
                 {"focal", std::to_string(focal.order())},
                 {"local_focal", std::to_string(local.order())}};
  return row;
}

inline ReportRow row_cor_eta(PrimeContext& ctx) {
  auto row = make_row(ctx, "cor-eta-transfer");
  const auto& g = ctx.group();
  const Subgroup& w = ctx.eta_in_g();
  const Subgroup n = normalizer(g, w);
  row.hypothesis = is_weakly_closed(w, ctx.sylow(), g).holds;
  row.conclusion = controls_transfer(n, g, ctx.prime());
  row.details = {{"|N_G(eta)|", std::to_string(n.order())}};
  return row;
}

inline ReportRow row_prop32(PrimeContext& ctx) {
  auto row = make_row(ctx, "prop3.2");
  const unsigned p = ctx.prime();
  row.hypothesis = ctx.small_pwc();
  const bool controls = controls_transfer(ctx.sylow_normalizer(), ctx.group(), p);
  row.details = {{"pwc", std::to_string(ctx.profile().pwc)},
                 {"|N_G(P)|", std::to_string(ctx.sylow_normalizer().order())},
                 {"controls", yes_no(controls)}};
  bool mechanism = true;
  if (p == 2 || p == 3) {
    const bool wreath_quotient = has_cpwrcp_quotient(ctx.p_group(), p);
    row.details.emplace_back("wreath_quotient", yes_no(wreath_quotient));
    mechanism = !row.hypothesis || !wreath_quotient;
  }
  row.conclusion = controls && mechanism;
  return row;
}

inline ReportRow row_prop33(PrimeContext& ctx) {
  auto row = make_row(ctx, "prop3.3");
  const bool n_nil = is_p_nilpotent(ctx.sylow_normalizer(), ctx.prime());
  row.hypothesis = ctx.small_pwc() && n_nil;
  row.conclusion = is_p_nilpotent(ctx.group(), ctx.prime());
  row.details = {{"pwc", std::to_string(ctx.profile().pwc)}, {"N_G(P)_p_nilpotent", yes_no(n_nil)}};
  return row;
}

inline ReportRow row_prop35(PrimeContext& ctx, const Limits& limits) {
  auto row = make_row(ctx, "prop3.5");
  const auto& g = ctx.group();
  const Subgroup& w = ctx.eta_in_g();
  const Subgroup& syl = ctx.sylow();
  const auto strong = is_strongly_closed(w, syl, g);
  const auto weak = is_weakly_closed(w, syl, g);
  if (strong.holds && !weak.holds) {
    throw Error(ErrorKind::InternalConsistency, "strong closure without weak closure");
  }
  bool powers_weak = true;
  int levels = 0;
  for (Subgroup q = w; !q.is_trivial(); q = power_subgroup(q, ctx.prime()), ++levels) {
    if (!is_weakly_closed(q, syl, g).holds) {
      powers_weak = false;
      break;
    }
  }
  row.hypothesis = strong.holds && powers_weak;
  row.conclusion = strongly_controls_fusion(w, syl, g, limits);
  row.details = {{"strongly_closed", yes_no(strong.holds)},
                 {"powers_weakly_closed", yes_no(powers_weak)},
                 {"power_levels", std::to_string(levels)}};
  return row;
}

inline int ceil_div(int a, int b) { return (a + b - 1) / b; }

inline ReportRow row_thm12(PrimeContext& ctx) {
  auto row = make_row(ctx, "thm1.2");
  const unsigned p = ctx.prime();
  const auto& ps = ctx.p_series();
  const int pwc = ctx.profile().pwc;
  const int bound = p == 2 ? pwc : ceil_div(pwc, static_cast<int>(p) - 2);
  row.hypothesis = ps.p_solvable;
  row.conclusion = ps.p_solvable && ps.p_length && *ps.p_length <= bound;
  row.details = {{"pwc", std::to_string(pwc)},
                 {"bound", std::to_string(bound)},
                 {"l_p", ps.p_length ? std::to_string(*ps.p_length) : "undefined"},
                 {"powerful", yes_no(ctx.profile().is_powerful)}};
  return row;
}

inline ReportRow row_prop42(PrimeContext& ctx) {
  auto row = make_row(ctx, "prop4.2");
  const unsigned p = ctx.prime();
  const auto& l = ctx.lattice();
  row.hypothesis = ctx.p_series().p_solvable;
  const Subgroup& core = ctx.o_pprime_p_g();
  std::size_t instances = 0, contained = 0, filtrations = 0;
  for (std::size_t i = 0; i < l.size(); ++i) {
    if (!l.is_pe(i)) continue;
    ++instances;
    if (row.hypothesis && transport(l.node(i), ctx.group()).is_subgroup_of(core)) ++contained;
    if (p == 2) {
      try {
        potent_filtration_p2(l.node(i), ctx.p_group());
        ++filtrations;
      } catch (const Error& e) {
        if (e.kind() != ErrorKind::InternalConsistency) throw;
      }
    }
  }
  row.conclusion = contained == instances && (p != 2 || filtrations == instances);
  row.details = {{"pe_subgroups", std::to_string(instances)}, {"contained", std::to_string(contained)}};
  if (p == 2) row.details.emplace_back("type1_filtrations", std::to_string(filtrations));
  return row;
}

inline ReportRow row_prop43(PrimeContext& ctx) {
  auto row = make_row(ctx, "prop4.3");
  const unsigned p = ctx.prime();
  const auto& l = ctx.lattice();
  const auto& h = ctx.heights();
  row.hypothesis = ctx.p_series().p_solvable;
  const Subgroup& core = ctx.o_pprime_p_g();
  std::size_t instances = 0, filtrations = 0, contained = 0;
  for (std::size_t i = 0; i < l.size(); ++i) {
    if (h[i] >= static_cast<int>(p) - 1) continue;
    ++instances;
    try {
      potent_filtration_prop43(l.node(i), l);
      ++filtrations;
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::InternalConsistency) throw;
    }
    if (row.hypothesis && transport(l.node(i), ctx.group()).is_subgroup_of(core)) ++contained;
  }
  row.conclusion = filtrations == instances && contained == instances;
  row.details = {{"instances", std::to_string(instances)},
                 {"type_p-2_filtrations", std::to_string(filtrations)},
                 {"contained", std::to_string(contained)}};
  return row;
}

inline ReportRow row_cor44(PrimeContext& ctx) {
  auto row = make_row(ctx, "cor4.4");
  const auto& prof = ctx.profile();
  const Subgroup eta = transport(prof.eta_term(ctx.prime() - 2), ctx.group());
  row.hypothesis = ctx.p_series().p_solvable;
  row.conclusion = eta.is_subgroup_of(ctx.o_pprime_p_g());
  row.details = {{"|eta_p-2(P)|", std::to_string(eta.order())},
                 {"|O_p'p(G)|", std::to_string(ctx.o_pprime_p_g().order())}};
  return row;
}

inline ReportRow row_lemma21(PrimeContext& ctx) {
  auto row = make_row(ctx, "lemma2.1");
  const auto& l = ctx.lattice();
  const auto& h = ctx.heights();
  row.hypothesis = true;
  std::size_t violations = 0;
  for (std::size_t n = 0; n < l.size(); ++n) {
    if (h[l.commutator_with_group(n)] > h[n]) ++violations;
    if (h[l.pth_power(n)] > h[n]) ++violations;
    for (std::size_t m = 0; m < l.size(); ++m) {
      if (h[l.join(m, n)] > std::max(h[m], h[n])) ++violations;
    }
  }
  row.conclusion = violations == 0;
  row.details = {{"normal_subgroups", std::to_string(l.size())}, {"violations", std::to_string(violations)}};
  return row;
}

inline ReportRow row_lemma22(PrimeContext& ctx) {
  auto row = make_row(ctx, "lemma2.2");
  const auto& l = ctx.lattice();
  const auto& h = ctx.heights();
  row.hypothesis = true;
  std::size_t checks = 0, violations = 0;
  const int top = std::max(1, ctx.profile().pwc);
  for (std::size_t n = 0; n < l.size(); ++n) {
    for (int j = std::max(1, h[n]); j <= top; ++j) {
      ++checks;
      if (!l.leq(l.iterated_commutator(n, j), l.pth_power(n))) ++violations;
    }
  }
  row.conclusion = violations == 0;
  row.details = {{"checks", std::to_string(checks)}, {"violations", std::to_string(violations)}};
  return row;
}

inline ReportRow row_lemma31(PrimeContext& ctx, const Limits& limits) {
  auto row = make_row(ctx, "lemma3.1");
  const unsigned p = ctx.prime();
  row.hypothesis = is_isomorphic(ctx.group(), wreath_cpcp_reference(p), limits);
  const auto& eta = ctx.profile().eta_series;
  const auto z = upper_central_series(ctx.group());
  const std::size_t len = std::max(eta.size(), z.size());
  bool equal = true;
  for (std::size_t i = 0; i < len; ++i) {
    const Subgroup& a = eta[std::min(i, eta.size() - 1)];
    const Subgroup& b = z[std::min(i, z.size() - 1)];
    equal = equal && a == b;
  }
  row.conclusion = equal;
  row.details = {{"eta_orders", orders_string(eta)}, {"Z_orders", orders_string(z)},
                 {"pwc", std::to_string(ctx.profile().pwc)}};
  return row;
}

}  // namespace detail

/// Rows for one corpus entry, primes ascending, theorems in suite_ids() order.
inline std::vector<ReportRow> verify_entry(const CorpusEntry& entry, const std::vector<std::string>& suites,
                                           const HarnessOptions& opts) {
  auto wants = [&](const std::string& id) {
    return std::find(suites.begin(), suites.end(), id) != suites.end();
  };
  const auto& g = entry.group;
  const bool g_level = g->order() <= opts.max_g_order;
  std::vector<ReportRow> rows;
  for (unsigned p : entry.primes_of_interest) {
    PrimeContext ctx(g, p, opts.limits);
    const bool p_group = is_power_of(g->order(), p);
    auto emit = [&](const std::string& id, bool applies, const std::function<ReportRow()>& make) {
      if (!wants(id) || !applies) return;
      const auto t0 = std::chrono::steady_clock::now();
      ReportRow row = make();
      row.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
      rows.push_back(std::move(row));
    };
    std::size_t wreath_order = p;
    for (unsigned i = 0; i < p; ++i) wreath_order *= p;
    for (const auto& id : suite_ids()) {
      if (id == "thm1.1") emit(id, g_level, [&] { return detail::row_thm11(ctx); });
      if (id == "thm1.2") emit(id, true, [&] { return detail::row_thm12(ctx); });
      if (id == "prop3.2") emit(id, g_level, [&] { return detail::row_prop32(ctx); });
      if (id == "prop3.3") emit(id, g_level, [&] { return detail::row_prop33(ctx); });
      if (id == "prop3.5") emit(id, g_level, [&] { return detail::row_prop35(ctx, opts.limits); });
      if (id == "cor-eta-transfer") emit(id, g_level, [&] { return detail::row_cor_eta(ctx); });
      if (id == "prop4.2") emit(id, true, [&] { return detail::row_prop42(ctx); });
      if (id == "prop4.3") emit(id, p > 3, [&] { return detail::row_prop43(ctx); });
      if (id == "cor4.4") emit(id, p > 2, [&] { return detail::row_cor44(ctx); });
      if (id == "lemma2.1") emit(id, p > 2, [&] { return detail::row_lemma21(ctx); });
      if (id == "lemma2.2") emit(id, p > 2, [&] { return detail::row_lemma22(ctx); });
      if (id == "lemma3.1") {
        emit(id, (p == 2 || p == 3) && p_group && g->order() == wreath_order,
             [&] { return detail::row_lemma31(ctx, opts.limits); });
      }
    }
  }
  return rows;
}

/// Runs `suites` over the corpus, parallel across entries only. Row order
/// follows corpus order regardless of `jobs`. The first error (in corpus
/// order) is rethrown after all workers finish.
inline VerificationReport run_verification(const std::vector<CorpusEntry>& corpus,
                                           const std::vector<std::string>& suites,
                                           const HarnessOptions& opts = {}) {
  const auto t0 = std::chrono::steady_clock::now();
  std::vector<std::vector<ReportRow>> per_entry(corpus.size());
  std::vector<double> ms(corpus.size(), 0.0);
  std::vector<std::exception_ptr> errors(corpus.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < corpus.size(); i = next++) {
      const auto start = std::chrono::steady_clock::now();
      try {
        per_entry[i] = verify_entry(corpus[i], suites, opts);
      } catch (...) {
        errors[i] = std::current_exception();
      }
      ms[i] = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    }
  };
  const unsigned jobs = std::max(1u, std::min<unsigned>(opts.jobs, static_cast<unsigned>(corpus.size())));
  if (jobs <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned j = 0; j < jobs; ++j) pool.emplace_back(worker);
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  VerificationReport report;
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    for (auto& r : per_entry[i]) report.rows.push_back(std::move(r));
    report.group_ms.emplace_back(corpus[i].label(), ms[i]);
  }
  report.total_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  return report;
}

}  // namespace powclass
