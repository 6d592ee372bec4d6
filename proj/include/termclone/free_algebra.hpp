#pragma once

// Evaluation of terms in the free algebra and enumeration of F_n.

#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

#include "termclone/element.hpp"
#include "termclone/error.hpp"
#include "termclone/term.hpp"

namespace termclone {

/// Size limits for the brute-force enumerations. Every guarded operation
/// takes one of these; callers raise the limits explicitly.
struct Guard {
  std::size_t max_vars = 16;  // F_16 has about 2.2M elements
  std::size_t max_model_size = 3;
};

/// Normal form of `t`.
inline Element eval_term(const Term& t) {
  switch (t.kind()) {
    case Term::Kind::zero: return Element::zero();
    case Term::Kind::p: return Element::letter(Letter::p());
    case Term::Kind::var: return Element::letter(Letter::var(t.index()));
    case Term::Kind::star: return star(eval_term(t.left()), eval_term(t.right()));
  }
  return Element::zero();
}

/// A representative term: the head multiplied by the tail letters in
/// canonical order, left-associated. eval_term(canonical_term(e)) == e.
inline Term canonical_term(const Element& e) {
  if (e.is_zero()) return Term::zero();
  Term t = Term::of(e.head());
  for (Letter l : e.tail()) t = Term::star(std::move(t), Term::of(l));
  return t;
}

/// True iff both terms have the same normal form.
inline bool equivalent(const Term& a, const Term& b) { return eval_term(a) == eval_term(b); }

/// |F_n| = 1 + (n+1) * 2^(n+1). Throws overflow_error past 64 bits.
inline std::uint64_t free_size(std::uint64_t n) {
  const std::uint64_t letters = n + 1;
  if (letters == 0 || letters >= 64) throw overflow_error("free_size(" + std::to_string(n) + ") exceeds 64 bits");
  const std::uint64_t subsets = std::uint64_t{1} << letters;
  std::uint64_t product = 0;
  if (__builtin_mul_overflow(letters, subsets, &product) || product == UINT64_MAX)
    throw overflow_error("free_size(" + std::to_string(n) + ") exceeds 64 bits");
  return product + 1;
}

/// The letters of F_n: p, x1, ..., xn.
inline std::vector<Letter> letters_of(std::size_t n) {
  std::vector<Letter> out;
  out.reserve(n + 1);
  out.push_back(Letter::p());
  for (std::size_t i = 1; i <= n; ++i) out.push_back(Letter::var(i));
  return out;
}

inline void check_vars_guard(std::size_t n, const Guard& guard) {
  if (n > guard.max_vars)
    throw guard_error("refusing to enumerate F_" + std::to_string(n) + ": the carrier has 1 + (n+1)*2^(n+1) elements and the limit is n = " +
                      std::to_string(guard.max_vars));
}

/// Every element of F_n, sorted ascending.
inline std::vector<Element> enumerate_free(std::size_t n, const Guard& guard = {}) {
  check_vars_guard(n, guard);
  const std::vector<Letter> letters = letters_of(n);
  const std::size_t k = letters.size();

  std::vector<Element> out;
  out.reserve(free_size(n));
  out.push_back(Element::zero());
  for (Letter l : letters) out.push_back(Element::letter(l));
  for (Letter head : letters) {
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << k); ++mask) {
      std::vector<Letter> tail;
      for (std::size_t i = 0; i < k; ++i)
        if (mask & (std::uint64_t{1} << i)) tail.push_back(letters[i]);
      out.push_back(Element::word(head, std::move(tail)));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace termclone
