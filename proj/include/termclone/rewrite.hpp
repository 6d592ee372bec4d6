#pragma once

// Normalization by rewriting with the defining laws, oriented as
//
//   0*x -> 0        x*0 -> 0        x*(y*z) -> 0        x*y*y -> 0
//   x*y*z -> x*z*y  when y and z are letters and z precedes y
//
// The last rule sorts word tails into canonical order. This is an
// independent route to the normal form: it never calls star().

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "termclone/element.hpp"
#include "termclone/error.hpp"
#include "termclone/term.hpp"

namespace termclone {

namespace detail {

inline bool is_leaf_letter(const Term& t) {
  return t.kind() == Term::Kind::p || t.kind() == Term::Kind::var;
}

inline Letter leaf_letter(const Term& t) {
  return t.kind() == Term::Kind::p ? Letter::p() : Letter::var(t.index());
}

// One leftmost-innermost rewrite step, or nullopt at a fixpoint.
inline std::optional<Term> rewrite_step(const Term& t) {
  if (!t.is_star()) return std::nullopt;
  const Term lhs = t.left();
  const Term rhs = t.right();
  if (auto l = rewrite_step(lhs)) return Term::star(*l, rhs);
  if (auto r = rewrite_step(rhs)) return Term::star(lhs, *r);

  if (lhs.kind() == Term::Kind::zero || rhs.kind() == Term::Kind::zero) return Term::zero();
  if (rhs.is_star()) return Term::zero();
  if (lhs.is_star()) {
    const Term y = lhs.right();
    if (y == rhs) return Term::zero();
    if (is_leaf_letter(y) && is_leaf_letter(rhs) && leaf_letter(rhs) < leaf_letter(y))
      return Term::star(Term::star(lhs.left(), rhs), y);
  }
  return std::nullopt;
}

// Reads an irreducible term back as an Element.
inline Element read_normal_form(const Term& t) {
  if (t.kind() == Term::Kind::zero) return Element::zero();
  std::vector<Letter> tail;
  Term spine = t;
  while (spine.is_star()) {
    if (!is_leaf_letter(spine.right()))
      throw error("rewrite fixpoint is not canonical: " + to_string(t));
    tail.push_back(leaf_letter(spine.right()));
    spine = spine.left();
  }
  if (!is_leaf_letter(spine)) throw error("rewrite fixpoint is not canonical: " + to_string(t));
  if (tail.empty()) return Element::letter(leaf_letter(spine));
  // collected right to left; the fixpoint must be strictly ascending
  std::vector<Letter> ordered(tail.rbegin(), tail.rend());
  for (std::size_t i = 1; i < ordered.size(); ++i)
    if (!(ordered[i - 1] < ordered[i]))
      throw error("rewrite fixpoint is not canonical: " + to_string(t));
  return Element::word(leaf_letter(spine), std::move(ordered));
}

}  // namespace detail

/// Rewrites `t` to its canonical term and returns the corresponding
/// Element. Throws if more than `max_steps` rewrite steps are needed.
inline Element rewrite_normalize(const Term& t, std::size_t max_steps) {
  Term current = t;
  std::size_t steps = 0;
  while (auto next = detail::rewrite_step(current)) {
    if (++steps > max_steps)
      throw error("rewriting did not reach a fixpoint within " + std::to_string(max_steps) + " steps for " +
                  to_string(t));
    current = std::move(*next);
  }
  return detail::read_normal_form(current);
}

/// Budget of 10*size(t)^2 steps; exceeding it means a bug, since the rule
/// set terminates.
inline Element rewrite_normalize(const Term& t) {
  const std::size_t n = size(t);
  return rewrite_normalize(t, 10 * n * n);
}

}  // namespace termclone
