#include <gtest/gtest.h>

#include "support/fixtures.hpp"
#include "support/oracles.hpp"

using namespace powclass;

namespace {

template <typename F>
void for_small_entries(std::size_t max_order, F&& f) {
  for (const auto& e : fixtures::corpus()) {
    if (e.group->order() > max_order) continue;
    for (unsigned p : e.primes_of_interest) f(e, p);
  }
}

/// Focal subgroup straight from the definition: <x^-1 x^g : x, x^g ∈ P>.
oracle::Set focal_oracle(const GroupPtr& g, const oracle::Set& p) {
  oracle::Set seeds;
  for (ElementId x : p) {
    for (ElementId y = 0; y < g->order(); ++y) {
      const ElementId c = g->mul(g->mul(g->inv(y), x), y);
      if (p.contains(c)) seeds.insert(g->mul(g->inv(x), c));
    }
  }
  return oracle::closure(g, seeds);
}

}  // namespace

TEST(Closure, Examples) {
  auto s4 = symmetric(4);
  const Subgroup p = sylow_p(s4, 2);
  const Subgroup v4 = p_core(s4, 2);
  EXPECT_TRUE(is_strongly_closed(v4, p, s4).holds);
  EXPECT_TRUE(is_weakly_closed(v4, p, s4).holds);
  EXPECT_TRUE(is_weakly_closed(p, p, s4).holds);
  EXPECT_TRUE(is_strongly_closed(trivial_subgroup(s4), p, s4).holds);

  // Z(D8) in S4 is conjugate to other double transpositions inside P.
  const Subgroup z = transport(center(p.as_group("P")), s4);
  const auto weak = is_weakly_closed(z, p, s4);
  EXPECT_EQ(weak.holds, oracle::weakly_closed(s4, oracle::elements(z), oracle::elements(p)));
  EXPECT_FALSE(weak.holds);
  ASSERT_TRUE(weak.witness.has_value());
  const auto strong = is_strongly_closed(z, p, s4);
  EXPECT_FALSE(strong.holds);
  ASSERT_TRUE(strong.witness.has_value());
  const auto [y, c] = *strong.witness;
  EXPECT_TRUE(conjugate(z, y).contains(c));
  EXPECT_TRUE(p.contains(c));
  EXPECT_FALSE(z.contains(c));
}

TEST(Closure, PGroupNormalSubgroupsAreWeaklyClosed) {
  auto w3 = wreath_cpcp(3);
  for (const auto& n : normal_subgroups(w3)) {
    EXPECT_TRUE(is_weakly_closed(n, whole(w3), w3).holds);
    EXPECT_TRUE(is_strongly_closed(n, whole(w3), w3).holds);
  }
}

TEST(Closure, MatchesOraclesAndStrongImpliesWeak) {
  for_small_entries(200, [](const CorpusEntry& e, unsigned p) {
    const auto& g = e.group;
    const Subgroup syl = sylow_p(g, p);
    const auto ps = oracle::elements(syl);
    for (const auto& w : all_subgroups(syl)) {
      const auto ws = oracle::elements(w);
      const bool weak = is_weakly_closed(w, syl, g).holds;
      const bool strong = is_strongly_closed(w, syl, g).holds;
      EXPECT_EQ(weak, oracle::weakly_closed(g, ws, ps)) << g->label();
      EXPECT_EQ(strong, oracle::strongly_closed(g, ws, ps)) << g->label();
      if (strong) EXPECT_TRUE(weak) << g->label();
    }
  });
}

TEST(Closure, PNilpotentGroupsCloseNormalSubgroupsStrongly) {
  std::size_t seen = 0;
  for_small_entries(2000, [&](const CorpusEntry& e, unsigned p) {
    if (!e.tags.contains(std::to_string(p) + "-nilpotent")) return;
    const auto& g = e.group;
    const Subgroup syl = sylow_p(g, p);
    for (const auto& n : normal_subgroups(syl.as_group("P"))) {
      EXPECT_TRUE(is_strongly_closed(transport(n, g), syl, g).holds) << g->label();
      ++seen;
    }
  });
  EXPECT_GT(seen, 20u);
}

TEST(Closure, Errors) {
  auto s4 = symmetric(4);
  const Subgroup p = sylow_p(s4, 2);
  const Subgroup p3 = sylow_p(s4, 3);
  try {
    is_weakly_closed(p3, p, s4);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotMember);
  }
  auto d8 = dihedral(8);
  EXPECT_THROW(is_strongly_closed(whole(d8), p, s4), Error);
}

TEST(Focal, Examples) {
  auto c12 = cyclic(12);
  EXPECT_TRUE(focal_subgroup(sylow_p(c12, 2), c12, 2).is_trivial());
  auto s4 = symmetric(4);
  EXPECT_EQ(focal_subgroup(sylow_p(s4, 2), s4, 2).order(), 4u);
  EXPECT_EQ(focal_subgroup(sylow_p(s4, 3), s4, 3).order(), 3u);
  auto s3 = symmetric(3);
  EXPECT_EQ(focal_subgroup(sylow_p(s3, 2), s3, 2).order(), 1u);
  auto q8 = quaternion(8);
  EXPECT_EQ(focal_subgroup(whole(q8), q8, 2), center(q8));
  try {
    focal_subgroup(sylow_p(s4, 3), s4, 2);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotSylow);
  }
}

TEST(Focal, FusionFormEqualsDerivedIntersection) {
  for_small_entries(2000, [](const CorpusEntry& e, unsigned p) {
    const auto& g = e.group;
    const Subgroup syl = sylow_p(g, p);
    const Subgroup f = focal_subgroup(syl, g, p);
    EXPECT_EQ(f, intersection(syl, derived_subgroup(g))) << g->label();
    if (g->order() <= 200) EXPECT_EQ(oracle::elements(f), focal_oracle(g, oracle::elements(syl))) << g->label();
  });
}

TEST(Transfer, CyclicExample) {
  // G = C6 and P = C2: V(x) = x^3, so the generator maps onto P.
  auto c6 = cyclic(6);
  const Subgroup p = sylow_p(c6, 2);
  const ElementId gen = c6->generator_ids().front();
  const ElementId v = transfer(p, gen);
  EXPECT_EQ(v, oracle::power(c6, gen, 3));
  EXPECT_NE(v, Group::identity());
}

TEST(Transfer, KillsCommutators) {
  auto s4 = symmetric(4);
  const auto data = transfer_map(sylow_p(s4, 2));
  const Subgroup d = derived_subgroup(s4);
  for (ElementId x : d.elements()) {
    EXPECT_EQ(data.values[x], detail::coset_canonical(*s4, data.p_derived, Group::identity()));
  }
}

TEST(Transfer, HomomorphismAndTransversalIndependence) {
  for_small_entries(2000, [](const CorpusEntry& e, unsigned p) {
    const auto& g = e.group;
    const Subgroup syl = sylow_p(g, p);
    const auto first = transfer_map(syl, false);
    const auto last = transfer_map(syl, true);
    EXPECT_EQ(first.values, last.values) << g->label();
    EXPECT_TRUE(first.is_homomorphism()) << g->label();
    if (g->order() <= 200) {
      // Full pair scan for small groups; is_homomorphism checks generators only.
      for (ElementId x = 0; x < g->order(); ++x) {
        for (ElementId y = 0; y < g->order(); ++y) {
          const ElementId rhs = detail::coset_canonical(*g, first.p_derived, g->mul(first.values[x], first.values[y]));
          ASSERT_EQ(first.values[g->mul(x, y)], rhs) << g->label();
        }
      }
    }
    // The kernel meets P exactly in the focal subgroup.
    const ElementId one = detail::coset_canonical(*g, first.p_derived, Group::identity());
    ElementSet kernel_in_p(g->order());
    for (ElementId x : syl.elements()) {
      if (first.values[x] == one) kernel_in_p.set(x);
    }
    EXPECT_EQ(kernel_in_p, intersection(syl, derived_subgroup(g)).members()) << g->label();
  });
}

TEST(ControlsTransfer, Examples) {
  auto s4 = symmetric(4);
  const Subgroup p = sylow_p(s4, 2);
  EXPECT_TRUE(controls_transfer(whole(s4), s4, 2));
  EXPECT_EQ(normalizer(s4, p), p);
  EXPECT_FALSE(controls_transfer(p, s4, 2));
  auto s3 = symmetric(3);
  EXPECT_TRUE(controls_transfer(normalizer(s3, sylow_p(s3, 3)), s3, 3));
  try {
    controls_transfer(sylow_p(s4, 3), s4, 2);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::SylowNotInside);
  }
}

TEST(ControlsTransfer, PNilpotentGroups) {
  for_small_entries(2000, [](const CorpusEntry& e, unsigned p) {
    if (!e.tags.contains(std::to_string(p) + "-nilpotent")) return;
    const auto& g = e.group;
    EXPECT_TRUE(controls_transfer(normalizer(g, sylow_p(g, p)), g, p)) << g->label();
  });
}

TEST(WreathQuotient, Examples) {
  EXPECT_TRUE(has_cpwrcp_quotient(dihedral(8), 2));
  EXPECT_TRUE(has_cpwrcp_quotient(wreath_cpcp(3), 3));
  EXPECT_FALSE(has_cpwrcp_quotient(quaternion(8), 2));
  EXPECT_FALSE(has_cpwrcp_quotient(fixtures::entry("C4xC4").group, 2));
  EXPECT_FALSE(has_cpwrcp_quotient(fixtures::entry("He3").group, 3));
  EXPECT_TRUE(has_cpwrcp_quotient(dihedral(16), 2));
  try {
    has_cpwrcp_quotient(fixtures::entry("He5").group, 5);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::UnsupportedPrime);
  }
}

TEST(WreathQuotient, SmallClassExcludesIt) {
  for (const auto& e : fixtures::corpus()) {
    if (e.primes_of_interest.size() != 1) continue;
    const unsigned p = e.primes_of_interest.front();
    if (p > 3) continue;
    const auto prof = upper_eta_series(e.group, p);
    if (prof.small_powerful_class) EXPECT_FALSE(has_cpwrcp_quotient(e.group, p)) << e.label();
  }
}

TEST(StrongFusion, PGroupControlsItself) {
  auto d8 = dihedral(8);
  EXPECT_TRUE(strongly_controls_fusion(center(d8), whole(d8), d8));
  auto s4 = symmetric(4);
  const Subgroup p = sylow_p(s4, 2);
  EXPECT_TRUE(strongly_controls_fusion(p_core(s4, 2), p, s4));
  EXPECT_FALSE(strongly_controls_fusion(transport(center(p.as_group("P")), s4), p, s4));
}

TEST(GruenFirst, Examples) {
  EXPECT_TRUE(verify_gruen_first(cyclic(12), 2));
  EXPECT_TRUE(verify_gruen_first(symmetric(4), 2));
  EXPECT_TRUE(verify_gruen_first(sl23(), 2));
  for_small_entries(2000, [](const CorpusEntry& e, unsigned p) {
    EXPECT_TRUE(verify_gruen_first(e.group, p)) << e.label();
  });
}

TEST(Harness, SmallClassRows) {
  auto s3 = make_entry(symmetric(3), "symmetric(3)");
  const auto rows = verify_entry(s3, {"prop3.2", "prop3.3"}, {});
  const auto find = [&](unsigned p, const std::string& id) {
    for (const auto& r : rows) {
      if (r.prime == p && r.theorem == id) return r;
    }
    throw std::logic_error("row not found");
  };
  EXPECT_EQ(find(3, "prop3.2").status(), Status::verified);
  EXPECT_EQ(find(3, "prop3.3").status(), Status::vacuous);
}

TEST(Harness, GruenPipelineRows) {
  for (const char* label : {"S4", "SL(2,3)", "A5", "Dic12"}) {
    const auto rows = verify_entry(fixtures::entry(label), {"thm1.1", "cor-eta-transfer"}, {});
    EXPECT_FALSE(rows.empty());
    for (const auto& r : rows) EXPECT_NE(r.status(), Status::FAILED) << label << " " << r.theorem;
  }
}
