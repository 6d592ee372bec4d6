#include <random>
#include <tuple>
#include <utility>

#include <gtest/gtest.h>

#include "support/generators.hpp"
#include "termclone/termclone.hpp"

using namespace termclone;

namespace {

// The laws as term pairs, evaluated through eval_in_model rather than by
// direct table lookups as in check_laws.
bool satisfies_laws_by_terms(const FiniteModel& m) {
  static const std::vector<std::pair<Term, Term>> laws = {
      {parse_term("0*x1"), parse_term("0")},
      {parse_term("x1*0"), parse_term("0")},
      {parse_term("x1*x2*x3"), parse_term("x1*x3*x2")},
      {parse_term("x1*(x2*x3)"), parse_term("0")},
      {parse_term("x1*x2*x2"), parse_term("0")},
  };
  for (const Assignment& a : all_assignments(3, m.size()))
    for (const auto& [lhs, rhs] : laws)
      if (eval_in_model(lhs, m, a) != eval_in_model(rhs, m, a)) return false;
  return true;
}

std::size_t count_models_by_terms(std::size_t k) {
  std::size_t count = 0;
  std::vector<carrier> table(k * k, 0);
  for (;;) {
    for (carrier z = 0; z < k; ++z)
      for (carrier p = 0; p < k; ++p)
        if (satisfies_laws_by_terms(FiniteModel(k, table, z, p))) ++count;
    std::size_t i = table.size();
    while (i > 0 && table[i - 1] == k - 1) table[--i] = 0;
    if (i == 0) return count;
    ++table[i - 1];
  }
}

FiniteModel f0_table() {
  // carrier {0, p, pp}: only p*p is nonzero
  return FiniteModel::from_rows({{0, 0, 0}, {0, 2, 0}, {0, 0, 0}}, 0, 1);
}

}  // namespace

TEST(FiniteModel, RejectsMalformedTables) {
  EXPECT_THROW(FiniteModel(0, {}, 0, 0), precondition_error);
  EXPECT_THROW(FiniteModel(2, {0, 0, 0}, 0, 0), precondition_error);
  EXPECT_THROW(FiniteModel(2, {0, 0, 0, 2}, 0, 0), precondition_error);
  EXPECT_THROW(FiniteModel(2, {0, 0, 0, 0}, 2, 0), precondition_error);
  EXPECT_THROW(FiniteModel::from_rows({{0, 0}, {0}}, 0, 0), precondition_error);
}

TEST(CheckLaws, Singleton) { EXPECT_TRUE(check_laws(FiniteModel(1, {0}, 0, 0)).pass); }

TEST(CheckLaws, EmptyGeneratorFreeAlgebra) {
  EXPECT_TRUE(check_laws(f0_table()).pass);
  EXPECT_EQ(free_model(0).model, f0_table());
}

TEST(CheckLaws, ConstantProductFailsZeroLaw) {
  const LawReport r = check_laws(FiniteModel(2, {1, 1, 1, 1}, 0, 1));
  ASSERT_FALSE(r.pass);
  EXPECT_EQ(r.counterexample->law, "0*x = 0");
}

TEST(CheckLaws, ReportsEachLaw) {
  // p*p = p breaks both x*(y*z) = 0 and x*y*y = 0; laws are checked in order
  const LawReport r = check_laws(FiniteModel::from_rows({{0, 0}, {0, 1}}, 0, 1));
  ASSERT_FALSE(r.pass);
  EXPECT_EQ(r.counterexample->law, "x*(y*z) = 0");
  EXPECT_EQ(r.counterexample->tuple, (std::vector<carrier>{1, 1, 1}));
}

TEST(CheckLaws, AgreesWithTermEvaluation) {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 3000; ++i) {
    std::vector<carrier> table(9);
    for (carrier& c : table) c = std::uniform_int_distribution<carrier>(0, 2)(rng);
    const FiniteModel m(3, table, i % 3, (i / 3) % 3);
    ASSERT_EQ(check_laws(m).pass, satisfies_laws_by_terms(m));
  }
}

TEST(EnumerateModels, Counts) {
  EXPECT_EQ(enumerate_models(1).size(), 1u);
  EXPECT_EQ(count_models_by_terms(2), 4u);
  EXPECT_EQ(enumerate_models(2).size(), 4u);
  EXPECT_EQ(count_models_by_terms(3), 27u);
  EXPECT_EQ(enumerate_models(3).size(), 27u);
}

TEST(EnumerateModels, AllPassAndAreOrdered) {
  const auto models = enumerate_models(3);
  for (std::size_t i = 0; i < models.size(); ++i) {
    EXPECT_TRUE(check_laws(models[i]).pass);
    if (i > 0) {
      const auto& a = models[i - 1];
      const auto& b = models[i];
      EXPECT_TRUE(std::make_tuple(a.table(), a.zero(), a.p()) < std::make_tuple(b.table(), b.zero(), b.p()));
    }
  }
}

TEST(EnumerateModels, Guard) {
  EXPECT_THROW(enumerate_models(4), guard_error);
  EXPECT_THROW(enumerate_models(0), precondition_error);
}

TEST(EnumerateModels, IsomorphismClasses) {
  EXPECT_EQ(dedup_isomorphic(enumerate_models(2)).size(), 2u);
  const auto classes = dedup_isomorphic(enumerate_models(3));
  EXPECT_EQ(classes.size(), 5u);
  for (std::size_t i = 0; i < classes.size(); ++i)
    for (std::size_t j = i + 1; j < classes.size(); ++j)
      EXPECT_NE(canonical_form(classes[i]), canonical_form(classes[j]));
}

TEST(EvalInModel, LawsHoldInEveryModel) {
  for (std::size_t k = 1; k <= 3; ++k)
    for (const FiniteModel& m : enumerate_models(k))
      for (const Assignment& a : all_assignments(2, k)) {
        EXPECT_EQ(eval_in_model(parse_term("0*x1"), m, a), m.zero());
        EXPECT_EQ(eval_in_model(parse_term("p"), m, a), m.p());
        EXPECT_EQ(eval_in_model(parse_term("x1*x2*x2"), m, a), m.zero());
      }
}

TEST(EvalInModel, UnboundVariable) {
  try {
    eval_in_model(parse_term("x1*x4"), f0_table(), Assignment{{1, 0}});
    FAIL();
  } catch (const error& e) {
    EXPECT_NE(std::string(e.what()).find("x4"), std::string::npos);
  }
  EXPECT_THROW(eval_in_model(parse_term("x1"), f0_table(), Assignment{{1, 3}}), error);
}

TEST(InducedMap, IdentityOnF0) {
  const InducedMap h = induced_map(0, f0_table(), {});
  EXPECT_TRUE(h.report.pass);
  const FreeModel f = free_model(0);
  for (carrier i = 0; i < f.labels.size(); ++i) EXPECT_EQ(h(f.labels[i]), i);
}

TEST(InducedMap, HomomorphismIntoEverySmallModel) {
  for (std::size_t k = 1; k <= 3; ++k)
    for (const FiniteModel& m : enumerate_models(k))
      for (std::size_t n = 0; n <= 2; ++n)
        for (const Assignment& a : all_assignments(n, k)) {
          const InducedMap h = induced_map(n, m, a);
          ASSERT_TRUE(h.report.pass);
          EXPECT_EQ(h(Element::word(Letter::p(), {Letter::p()})), m.op(m.p(), m.p()));
        }
}

TEST(InducedMap, DetectsNonModels) {
  // not a model: p*p*p = p
  const FiniteModel bad = FiniteModel::from_rows({{0, 0}, {0, 1}}, 0, 1);
  EXPECT_FALSE(induced_map(0, bad, {}).report.pass);
}

TEST(InducedMap, RequiresTotalAssignment) {
  EXPECT_THROW(induced_map(2, f0_table(), Assignment{{1, 0}}), error);
}

TEST(CheckGeneration, SmallFreeAlgebras) {
  for (std::size_t n = 0; n <= 4; ++n) EXPECT_TRUE(check_generation(n));
  EXPECT_EQ(generated_by_letters(0).size(), 3u);
  EXPECT_EQ(generated_by_letters(1).size(), 9u);
  EXPECT_EQ(generated_by_letters(3).size(), 65u);
}

TEST(Separation, DistinctNormalFormsAreDistinctTermFunctions) {
  // Evaluating in F_n under the identity assignment recovers each element,
  // so distinct normal forms differ as functions on F_n.
  for (std::size_t n = 0; n <= 2; ++n) {
    const FreeModel f = free_model(n);
    Assignment identity;
    for (std::size_t i = 1; i <= n; ++i) {
      const Element xi = Element::letter(Letter::var(i));
      identity[i] = static_cast<carrier>(std::lower_bound(f.labels.begin(), f.labels.end(), xi) - f.labels.begin());
    }
    std::set<carrier> images;
    for (const Element& e : f.labels) {
      const carrier c = eval_in_model(canonical_term(e), f.model, identity);
      EXPECT_EQ(f.labels[c], e);
      images.insert(c);
    }
    EXPECT_EQ(images.size(), f.labels.size());
  }
}

TEST(Soundness, EquivalentTermsAgreeInEveryModel) {
  std::mt19937_64 rng(8);
  std::vector<std::pair<Term, Term>> pairs;
  while (pairs.size() < 200) {
    const Term a = check::random_letter_term(rng, 1 + rng() % 4, 2);
    const Term b = check::random_letter_term(rng, 1 + rng() % 4, 2);
    if (equivalent(a, b)) pairs.emplace_back(a, b);
  }
  for (std::size_t k = 1; k <= 3; ++k)
    for (const FiniteModel& m : enumerate_models(k))
      for (const Assignment& a : all_assignments(2, k))
        for (const auto& [s, t] : pairs) ASSERT_EQ(eval_in_model(s, m, a), eval_in_model(t, m, a));
}
