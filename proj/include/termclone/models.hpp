#pragma once

// Finite models of the variety: law checking, brute-force enumeration,
// term evaluation, and the desk-scale freeness check (induced maps out of
// F_n are homomorphisms, and F_n is generated by its letters).

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <functional>
#include <tuple>
#include <vector>

#include "termclone/element.hpp"
#include "termclone/error.hpp"
#include "termclone/free_algebra.hpp"
#include "termclone/report.hpp"
#include "termclone/term.hpp"

namespace termclone {

using carrier = std::uint32_t;

/// A finite algebra (carrier {0..k-1}, *, p, 0) given by its table.
class FiniteModel {
 public:
  FiniteModel(std::size_t size, std::vector<carrier> table, carrier zero, carrier p)
      : size_(size), table_(std::move(table)), zero_(zero), p_(p) {
    if (size_ == 0) throw precondition_error("a model needs at least one element");
    if (table_.size() != size_ * size_)
      throw precondition_error("table has " + std::to_string(table_.size()) + " entries, expected " +
                               std::to_string(size_ * size_));
    for (carrier c : table_)
      if (c >= size_) throw precondition_error("table entry " + std::to_string(c) + " out of range");
    if (zero_ >= size_) throw precondition_error("zero element out of range");
    if (p_ >= size_) throw precondition_error("p element out of range");
  }

  /// From a row-major k x k table.
  static FiniteModel from_rows(const std::vector<std::vector<carrier>>& rows, carrier zero, carrier p) {
    std::vector<carrier> flat;
    for (const auto& row : rows) {
      if (row.size() != rows.size()) throw precondition_error("table is not square");
      flat.insert(flat.end(), row.begin(), row.end());
    }
    return FiniteModel(rows.size(), std::move(flat), zero, p);
  }

  std::size_t size() const noexcept { return size_; }
  carrier zero() const noexcept { return zero_; }
  carrier p() const noexcept { return p_; }
  carrier op(carrier a, carrier b) const noexcept { return table_[a * size_ + b]; }
  const std::vector<carrier>& table() const noexcept { return table_; }

  friend bool operator==(const FiniteModel&, const FiniteModel&) = default;

 private:
  std::size_t size_;
  std::vector<carrier> table_;
  carrier zero_;
  carrier p_;
};

struct LawWitness {
  std::string law;
  std::vector<carrier> tuple;
};

using LawReport = Report<LawWitness>;

inline const std::vector<std::string>& law_names() {
  static const std::vector<std::string> names = {"0*x = 0", "x*0 = 0", "x*y*z = x*z*y", "x*(y*z) = 0",
                                                 "x*y*y = 0"};
  return names;
}

/// Checks the defining identities over every tuple of the carrier, law by
/// law in the order of law_names(), stopping at the first violation.
inline LawReport check_laws(const FiniteModel& m) {
  LawReport r;
  const carrier k = static_cast<carrier>(m.size());
  const carrier z = m.zero();
  for (carrier x = 0; x < k; ++x, ++r.checked)
    if (m.op(z, x) != z) return r.fail({"0*x = 0", {x}});
  for (carrier x = 0; x < k; ++x, ++r.checked)
    if (m.op(x, z) != z) return r.fail({"x*0 = 0", {x}});
  for (carrier x = 0; x < k; ++x)
    for (carrier y = 0; y < k; ++y)
      for (carrier w = 0; w < k; ++w, ++r.checked)
        if (m.op(m.op(x, y), w) != m.op(m.op(x, w), y)) return r.fail({"x*y*z = x*z*y", {x, y, w}});
  for (carrier x = 0; x < k; ++x)
    for (carrier y = 0; y < k; ++y)
      for (carrier w = 0; w < k; ++w, ++r.checked)
        if (m.op(x, m.op(y, w)) != z) return r.fail({"x*(y*z) = 0", {x, y, w}});
  for (carrier x = 0; x < k; ++x)
    for (carrier y = 0; y < k; ++y, ++r.checked)
      if (m.op(m.op(x, y), y) != z) return r.fail({"x*y*y = 0", {x, y}});
  return r;
}

/// Every model on {0..k-1}, ordered lexicographically by row-major table
/// and then by (zero, p). Constants may coincide.
inline std::vector<FiniteModel> enumerate_models(std::size_t k, const Guard& guard = {}) {
  if (k == 0) throw precondition_error("model size must be at least 1");
  if (k > guard.max_model_size)
    throw guard_error("refusing to enumerate models of size " + std::to_string(k) + ": there are k^(k*k) tables; the limit is " +
                      std::to_string(guard.max_model_size));
  const std::size_t cells = k * k;
  std::vector<carrier> table(cells, 0);
  std::vector<FiniteModel> out;
  for (;;) {
    for (carrier z = 0; z < k; ++z)
      for (carrier p = 0; p < k; ++p) {
        FiniteModel m(k, table, z, p);
        if (check_laws(m).pass) out.push_back(std::move(m));
      }
    // odometer increment, last cell least significant
    std::size_t i = cells;
    while (i > 0 && table[i - 1] == k - 1) table[--i] = 0;
    if (i == 0) break;
    ++table[i - 1];
  }
  return out;
}

/// The isomorphic copy with the lexicographically least (table, zero, p).
inline FiniteModel canonical_form(const FiniteModel& m) {
  const std::size_t k = m.size();
  std::vector<carrier> perm(k);
  std::iota(perm.begin(), perm.end(), carrier{0});
  std::optional<FiniteModel> best;
  do {
    // perm maps old labels to new labels
    std::vector<carrier> table(k * k);
    for (carrier a = 0; a < k; ++a)
      for (carrier b = 0; b < k; ++b) table[perm[a] * k + perm[b]] = perm[m.op(a, b)];
    FiniteModel candidate(k, std::move(table), perm[m.zero()], perm[m.p()]);
    auto key = [](const FiniteModel& f) { return std::make_tuple(std::cref(f.table()), f.zero(), f.p()); };
    if (!best || key(candidate) < key(*best)) best = std::move(candidate);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return *best;
}

/// Keeps the first model of each isomorphism class, preserving order.
inline std::vector<FiniteModel> dedup_isomorphic(const std::vector<FiniteModel>& models) {
  std::vector<FiniteModel> seen;
  std::vector<FiniteModel> out;
  for (const FiniteModel& m : models) {
    FiniteModel c = canonical_form(m);
    if (std::find(seen.begin(), seen.end(), c) == seen.end()) {
      seen.push_back(std::move(c));
      out.push_back(m);
    }
  }
  return out;
}

/// F_n as a finite model; labels[i] is the element behind carrier index i.
struct FreeModel {
  FiniteModel model;
  std::vector<Element> labels;
};

inline FreeModel free_model(std::size_t n, const Guard& guard = {}) {
  std::vector<Element> labels = enumerate_free(n, guard);
  auto index = [&](const Element& e) {
    return static_cast<carrier>(std::lower_bound(labels.begin(), labels.end(), e) - labels.begin());
  };
  std::vector<carrier> table;
  table.reserve(labels.size() * labels.size());
  for (const Element& a : labels)
    for (const Element& b : labels) table.push_back(index(star(a, b)));
  FiniteModel m(labels.size(), std::move(table), index(Element::zero()), index(Element::letter(Letter::p())));
  return {std::move(m), std::move(labels)};
}

/// Values for the variables x1..xn.
using Assignment = std::map<var_index, carrier>;

inline carrier eval_in_model(const Term& t, const FiniteModel& m, const Assignment& a) {
  switch (t.kind()) {
    case Term::Kind::zero: return m.zero();
    case Term::Kind::p: return m.p();
    case Term::Kind::var: {
      auto it = a.find(t.index());
      if (it == a.end()) throw error("variable x" + std::to_string(t.index()) + " is unbound");
      if (it->second >= m.size())
        throw error("x" + std::to_string(t.index()) + " is assigned " + std::to_string(it->second) +
                    ", outside the carrier");
      return it->second;
    }
    case Term::Kind::star: return m.op(eval_in_model(t.left(), m, a), eval_in_model(t.right(), m, a));
  }
  return m.zero();
}

/// Every assignment of x1..xn into a k-element carrier, x1 varying slowest.
inline std::vector<Assignment> all_assignments(std::size_t n, std::size_t k) {
  std::vector<Assignment> out;
  std::vector<carrier> digits(n, 0);
  for (;;) {
    Assignment a;
    for (std::size_t i = 0; i < n; ++i) a[i + 1] = digits[i];
    out.push_back(std::move(a));
    std::size_t i = n;
    while (i > 0 && digits[i - 1] == k - 1) digits[--i] = 0;
    if (i == 0) break;
    ++digits[i - 1];
  }
  return out;
}

struct HomomorphismWitness {
  std::string condition;
  std::vector<Element> elements;
  carrier expected = 0;
  carrier actual = 0;
};

using HomomorphismReport = Report<HomomorphismWitness>;

/// The evaluation map h: F_n -> M extending an assignment, with the
/// outcome of checking that h preserves *, p, 0 and the generators.
struct InducedMap {
  std::map<Element, carrier> mapping;
  HomomorphismReport report;

  carrier operator()(const Element& e) const { return mapping.at(e); }
};

inline InducedMap induced_map(std::size_t n, const FiniteModel& m, const Assignment& a, const Guard& guard = {}) {
  for (std::size_t i = 1; i <= n; ++i)
    if (!a.contains(i)) throw error("assignment leaves x" + std::to_string(i) + " unbound");
  const std::vector<Element> carrier_n = enumerate_free(n, guard);

  InducedMap out;
  for (const Element& e : carrier_n) out.mapping.emplace(e, eval_in_model(canonical_term(e), m, a));
  auto& r = out.report;

  auto expect = [&](std::string what, std::vector<Element> els, carrier want, carrier got) {
    ++r.checked;
    if (want != got) r.fail({std::move(what), std::move(els), want, got});
  };
  expect("h(0) = zero", {Element::zero()}, m.zero(), out(Element::zero()));
  expect("h(p) = p", {Element::letter(Letter::p())}, m.p(), out(Element::letter(Letter::p())));
  for (std::size_t i = 1; i <= n; ++i) {
    const Element x = Element::letter(Letter::var(i));
    expect("h(x" + std::to_string(i) + ") = a(x" + std::to_string(i) + ")", {x}, a.at(i), out(x));
  }
  for (const Element& e1 : carrier_n)
    for (const Element& e2 : carrier_n) {
      if (!r.pass) return out;
      expect("h(a*b) = h(a)*h(b)", {e1, e2}, m.op(out(e1), out(e2)), out(star(e1, e2)));
    }
  return out;
}

/// Closure of {0, p, x1..xn} under the product, by worklist.
inline std::set<Element> generated_by_letters(std::size_t n, const Guard& guard = {}) {
  check_vars_guard(n, guard);
  std::set<Element> seen;
  std::vector<Element> all;
  auto add = [&](Element e) {
    if (seen.insert(e).second) all.push_back(std::move(e));
  };
  add(Element::zero());
  for (Letter l : letters_of(n)) add(Element::letter(l));
  // every pair (i, j) with max(i, j) >= done has not been multiplied yet
  for (std::size_t done = 0; done < all.size(); ++done) {
    for (std::size_t j = 0; j <= done; ++j) {
      add(star(all[done], all[j]));
      if (j != done) add(star(all[j], all[done]));
    }
  }
  return seen;
}

/// True iff the letters and constants generate all of F_n.
inline bool check_generation(std::size_t n, const Guard& guard = {}) {
  const std::set<Element> closure = generated_by_letters(n, guard);
  const std::vector<Element> full = enumerate_free(n, guard);
  return std::equal(closure.begin(), closure.end(), full.begin(), full.end());
}

}  // namespace termclone
