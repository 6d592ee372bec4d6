#pragma once

// Term clones as subsets of the free algebra F_m: substitution, closure,
// clone verification, and the S(A) family indexed by sets of word lengths.

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <functional>
#include <iterator>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "termclone/element.hpp"
#include "termclone/error.hpp"
#include "termclone/free_algebra.hpp"
#include "termclone/report.hpp"
#include "termclone/term.hpp"

namespace termclone {

/// Finite map from variable indices to elements; identity elsewhere.
/// Constants are never substituted.
class Substitution {
 public:
  Substitution() = default;

  Substitution& bind(var_index index, Element value) {
    if (index == 0) throw precondition_error("variable indices start at 1");
    bindings_.insert_or_assign(index, std::move(value));
    return *this;
  }

  Element image(Letter l) const {
    if (l.is_p()) return Element::letter(l);
    auto it = bindings_.find(l.index());
    return it == bindings_.end() ? Element::letter(l) : it->second;
  }

  const std::map<var_index, Element>& bindings() const noexcept { return bindings_; }

  friend bool operator==(const Substitution&, const Substitution&) = default;

 private:
  std::map<var_index, Element> bindings_;
};

/// Image of `w` under `s`: the head's image multiplied by the images of
/// the tail letters in canonical order.
inline Element substitute(const Element& w, const Substitution& s) {
  if (w.is_zero()) return w;
  Element acc = s.image(w.head());
  for (Letter l : w.tail()) {
    if (acc.is_zero()) break;
    acc = star(acc, s.image(l));
  }
  return acc;
}

/// (s;r)(i) = substitute(s(i), r), defined on the union of both supports.
inline Substitution compose(const Substitution& s, const Substitution& r) {
  Substitution out;
  for (const auto& [i, v] : s.bindings()) out.bind(i, substitute(v, r));
  for (const auto& [i, v] : r.bindings())
    if (!s.bindings().contains(i)) out.bind(i, v);
  return out;
}

inline std::string to_string(const Substitution& s) {
  std::string out;
  for (const auto& [i, v] : s.bindings()) {
    if (!out.empty()) out += "; ";
    out += "x" + std::to_string(i) + "=" + to_string(v);
  }
  return out.empty() ? "identity" : out;
}

/// Parses "x1=p*x2; x2=0". Right-hand sides are normalized.
inline Substitution parse_substitution(std::string_view text) {
  Substitution s;
  std::set<var_index> seen;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find(';', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view part = text.substr(start, end - start);
    while (!part.empty() && std::isspace(static_cast<unsigned char>(part.front()))) part.remove_prefix(1);
    while (!part.empty() && std::isspace(static_cast<unsigned char>(part.back()))) part.remove_suffix(1);
    if (!part.empty()) {
      const auto eq = part.find('=');
      if (eq == std::string_view::npos) throw error("binding without '=': '" + std::string(part) + "'");
      std::string name(part.substr(0, eq));
      while (!name.empty() && std::isspace(static_cast<unsigned char>(name.back()))) name.pop_back();
      const Letter l = Letter::from_string(name);
      if (l.is_p()) throw error("the constant p cannot be substituted");
      if (!seen.insert(l.index()).second) throw error("variable bound twice: " + name);
      s.bind(l.index(), eval_term(parse_term(part.substr(eq + 1))));
    }
    start = end + 1;
  }
  return s;
}

/// A finite set A of admissible word lengths, all >= 2, together with the
/// largest length the description speaks about.
class LengthSet {
 public:
  LengthSet() = default;

  explicit LengthSet(std::set<std::size_t> lengths, std::optional<std::size_t> bound = std::nullopt)
      : lengths_(std::move(lengths)) {
    bound_ = bound.value_or(lengths_.empty() ? 0 : *lengths_.rbegin());
    for (std::size_t n : lengths_) {
      if (n < 2) throw precondition_error("word lengths start at 2, got " + std::to_string(n));
      if (n > bound_)
        throw precondition_error("length " + std::to_string(n) + " exceeds the bound " + std::to_string(bound_));
    }
  }

  const std::set<std::size_t>& lengths() const noexcept { return lengths_; }
  std::size_t bound() const noexcept { return bound_; }
  bool contains(std::size_t n) const { return lengths_.contains(n); }

  friend bool operator==(const LengthSet& a, const LengthSet& b) { return a.lengths_ == b.lengths_; }

 private:
  std::set<std::size_t> lengths_;
  std::size_t bound_ = 0;
};

/// Parses "2,4,5"; the empty string is the empty set.
inline LengthSet parse_length_set(std::string_view text) {
  std::set<std::size_t> out;
  std::size_t start = 0;
  bool any = false;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) any = true;
  if (!any) return LengthSet{};
  while (start <= text.size()) {
    std::size_t end = text.find(',', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view part = text.substr(start, end - start);
    while (!part.empty() && std::isspace(static_cast<unsigned char>(part.front()))) part.remove_prefix(1);
    while (!part.empty() && std::isspace(static_cast<unsigned char>(part.back()))) part.remove_suffix(1);
    if (part.empty() || part.size() > 9 ||
        !std::all_of(part.begin(), part.end(), [](char c) { return c >= '0' && c <= '9'; }))
      throw error("bad length list entry '" + std::string(part) + "'");
    out.insert(std::stoul(std::string(part)));
    start = end + 1;
  }
  return LengthSet{std::move(out)};
}

inline std::string to_string(const LengthSet& a) {
  std::string out;
  for (std::size_t n : a.lengths()) {
    if (!out.empty()) out += ',';
    out += std::to_string(n);
  }
  return "{" + out + "}";
}

/// A finite subset of F_m. `closed` records that membership of the
/// generators and closure under substitution have been established.
struct CloneSet {
  std::set<Element> members;
  std::size_t var_bound = 0;
  bool closed = false;

  bool contains(const Element& e) const { return members.contains(e); }
};

/// One failing case of a clone or family check.
struct CloneWitness {
  Element member;
  Substitution substitution;
  Element result;
  std::string reason;
};

using CloneReport = Report<CloneWitness>;

namespace detail {

inline std::uint64_t saturating_pow(std::uint64_t base, std::size_t exp) {
  std::uint64_t out = 1;
  for (std::size_t i = 0; i < exp; ++i)
    if (__builtin_mul_overflow(out, base, &out)) return UINT64_MAX;
  return out;
}

}  // namespace detail

/// Visits substitute(w, s) for every s mapping the variables of `w` into
/// `values`, as `visit(result, s, multiplicity)`.
///
/// Variables are assigned in the order they are consumed by the product
/// fold. Once the partial product is zero the remaining choices cannot
/// change the result, so the whole subtree is reported in one call with
/// its multiplicity and the unassigned variables bound to values[0].
/// `visit` returns false to stop early.
template <class Visit>
void for_each_substitution(const Element& w, const std::vector<Element>& values, Visit&& visit) {
  if (w.is_zero()) {
    visit(w, Substitution{}, std::uint64_t{1});
    return;
  }
  std::vector<Letter> sequence;
  sequence.push_back(w.head());
  sequence.insert(sequence.end(), w.tail().begin(), w.tail().end());

  std::vector<var_index> order;
  for (Letter l : sequence)
    if (l.is_var() && std::find(order.begin(), order.end(), l.index()) == order.end()) order.push_back(l.index());

  std::map<var_index, const Element*> chosen;
  bool stop = false;

  auto current_substitution = [&] {
    Substitution s;
    for (var_index v : order) {
      auto it = chosen.find(v);
      s.bind(v, it != chosen.end() ? *it->second : values.front());
    }
    return s;
  };

  // pos: next letter of `sequence` to multiply in; acc: product so far
  std::function<void(std::size_t, const Element&)> descend = [&](std::size_t pos, const Element& acc) {
    if (stop) return;
    if (pos > 0 && acc.is_zero()) {
      const std::uint64_t mult = detail::saturating_pow(values.size(), order.size() - chosen.size());
      if (mult > 0 && !visit(acc, current_substitution(), mult)) stop = true;
      return;
    }
    if (pos == sequence.size()) {
      if (!visit(acc, current_substitution(), std::uint64_t{1})) stop = true;
      return;
    }
    const Letter l = sequence[pos];
    auto step = [&](const Element& image) { return pos == 0 ? image : star(acc, image); };
    if (l.is_p()) {
      descend(pos + 1, step(Element::letter(l)));
      return;
    }
    if (auto it = chosen.find(l.index()); it != chosen.end()) {
      descend(pos + 1, step(*it->second));
      return;
    }
    for (const Element& v : values) {
      chosen[l.index()] = &v;
      descend(pos + 1, step(v));
      chosen.erase(l.index());
      if (stop) return;
    }
  };
  descend(0, Element::zero());
}

inline void require_in_free(const Element& e, std::size_t m) {
  const auto vars = variables_of(e);
  if (!vars.empty() && *vars.rbegin() > m)
    throw precondition_error(to_string(e) + " does not lie in F_" + std::to_string(m));
}

/// The least subset of F_m containing `generators` and x1..xm that is
/// closed under substituting its own members for variables.
inline CloneSet clone_closure(const std::set<Element>& generators, std::size_t m, const Guard& guard = {}) {
  check_vars_guard(m, guard);
  CloneSet out;
  out.var_bound = m;
  for (const Element& g : generators) {
    require_in_free(g, m);
    out.members.insert(g);
  }
  for (std::size_t i = 1; i <= m; ++i) out.members.insert(Element::letter(Letter::var(i)));

  for (bool changed = true; changed;) {
    changed = false;
    const std::vector<Element> snapshot(out.members.begin(), out.members.end());
    for (const Element& w : snapshot) {
      for_each_substitution(w, snapshot, [&](const Element& result, const Substitution&, std::uint64_t) {
        if (out.members.insert(result).second) changed = true;
        return true;
      });
    }
  }
  out.closed = true;
  return out;
}

/// Exhaustively checks that `s` contains x1..xm and is closed under
/// substitution with values drawn from itself.
inline CloneReport is_clone(const CloneSet& s) {
  for (const Element& e : s.members) require_in_free(e, s.var_bound);
  CloneReport report;
  for (std::size_t i = 1; i <= s.var_bound; ++i) {
    const Element gen = Element::letter(Letter::var(i));
    ++report.checked;
    if (!s.contains(gen)) {
      report.fail({gen, Substitution{}, gen, "generator x" + std::to_string(i) + " missing"});
      return report;
    }
  }
  const std::vector<Element> values(s.members.begin(), s.members.end());
  for (const Element& w : values) {
    for_each_substitution(w, values, [&](const Element& result, const Substitution& sub, std::uint64_t mult) {
      report.checked += mult;
      if (!s.contains(result)) {
        report.fail({w, sub, result, "result not in set"});
        return false;
      }
      return true;
    });
    if (!report.pass) break;
  }
  return report;
}

/// S(A) within F_m: zero plus every p-headed word whose length lies in A.
inline CloneSet s_of(const LengthSet& a, std::size_t m, const Guard& guard = {}) {
  check_vars_guard(m, guard);
  CloneSet out;
  out.var_bound = m;
  out.members.insert(Element::zero());
  const std::vector<Letter> letters = letters_of(m);
  const std::size_t k = letters.size();
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << k); ++mask) {
    const auto tail_size = static_cast<std::size_t>(__builtin_popcountll(mask));
    if (!a.contains(tail_size + 1)) continue;
    std::vector<Letter> tail;
    for (std::size_t i = 0; i < k; ++i)
      if (mask & (std::uint64_t{1} << i)) tail.push_back(letters[i]);
    out.members.insert(Element::word(Letter::p(), std::move(tail)));
  }
  return out;
}

/// S(A) with the generators x1..xm adjoined; `closed` is set from an
/// exhaustive is_clone run.
inline CloneSet t_of(const LengthSet& a, std::size_t m, const Guard& guard = {}) {
  CloneSet out = s_of(a, m, guard);
  for (std::size_t i = 1; i <= m; ++i) out.members.insert(Element::letter(Letter::var(i)));
  out.closed = is_clone(out).pass;
  return out;
}

/// Checks that t_of(A, m) is a clone and that every substitution into a
/// member of S(A) yields zero or an element of the same length.
inline CloneReport verify_family_closed(const LengthSet& a, std::size_t m, const Guard& guard = {}) {
  CloneSet t = s_of(a, m, guard);
  const std::set<Element> raw = t.members;
  for (std::size_t i = 1; i <= m; ++i) t.members.insert(Element::letter(Letter::var(i)));

  CloneReport report = is_clone(t);
  if (!report.pass) return report;

  const std::vector<Element> values(t.members.begin(), t.members.end());
  for (const Element& w : raw) {
    for_each_substitution(w, values, [&](const Element& result, const Substitution& sub, std::uint64_t mult) {
      report.checked += mult;
      if (!result.is_zero() && length(result) != length(w)) {
        report.fail({w, sub, result, "length changed from " + std::to_string(length(w)) + " to " +
                                         std::to_string(length(result))});
        return false;
      }
      return true;
    });
    if (!report.pass) break;
  }
  return report;
}

/// A word lying in exactly one of S(A), S(B) inside F_m, or nullopt when
/// A and B are equal. Needs both bounds <= m + 2.
inline std::optional<Element> distinguish(const LengthSet& a, const LengthSet& b, std::size_t m) {
  const std::size_t need = std::max(a.bound(), b.bound());
  if (need > m + 2)
    throw precondition_error("distinguishing lengths up to " + std::to_string(need) + " requires m >= " +
                             std::to_string(need - 2));
  std::vector<std::size_t> diff;
  std::set_symmetric_difference(a.lengths().begin(), a.lengths().end(), b.lengths().begin(), b.lengths().end(),
                                std::back_inserter(diff));
  if (diff.empty()) return std::nullopt;
  const std::size_t n = diff.front();
  std::vector<Letter> tail;
  if (n - 1 > m) tail.push_back(Letter::p());
  for (std::size_t i = 1; tail.size() < n - 1; ++i) tail.push_back(Letter::var(i));
  return Element::word(Letter::p(), std::move(tail));
}

/// Lengths of the p-headed words in `s`.
inline std::set<std::size_t> length_spectrum(const CloneSet& s) {
  std::set<std::size_t> out;
  for (const Element& e : s.members)
    if (e.is_word() && e.head().is_p()) out.insert(length(e));
  return out;
}

}  // namespace termclone
