#pragma once

// Normal forms of the free algebra: the zero element, letters and words.

#include <algorithm>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "termclone/error.hpp"

namespace termclone {

using var_index = std::uint64_t;

/// The constant letter p or a variable x_i (i >= 1).
///
/// Letters are ordered canonically: p first, then variables by ascending
/// index. That order fixes the iteration order of word tails.
class Letter {
 public:
  static constexpr Letter p() noexcept { return Letter{0}; }

  static Letter var(var_index index) {
    if (index == 0) throw precondition_error("variable indices start at 1");
    return Letter{index};
  }

  constexpr bool is_p() const noexcept { return code_ == 0; }
  constexpr bool is_var() const noexcept { return code_ != 0; }

  /// Variable index; meaningless for p.
  constexpr var_index index() const noexcept { return code_; }

  std::string str() const {
    return is_p() ? std::string("p") : "x" + std::to_string(code_);
  }

  /// Inverse of str(): accepts "p" or "x<K>" with K >= 1.
  static Letter from_string(const std::string& text) {
    if (text == "p") return p();
    if (text.size() < 2 || text[0] != 'x')
      throw error("not a letter: '" + text + "'");
    var_index index = 0;
    for (std::size_t i = 1; i < text.size(); ++i) {
      const char c = text[i];
      if (c < '0' || c > '9') throw error("not a letter: '" + text + "'");
      const var_index digit = static_cast<var_index>(c - '0');
      if (index > (UINT64_MAX - digit) / 10)
        throw error("variable index too large: '" + text + "'");
      index = index * 10 + digit;
    }
    return var(index);
  }

  friend constexpr auto operator<=>(Letter, Letter) = default;

 private:
  constexpr explicit Letter(var_index code) noexcept : code_(code) {}
  var_index code_;
};

/// An element of the free algebra in normal form.
///
/// A word is a head letter followed by a nonempty *set* of tail letters.
/// The tail is stored sorted and deduplicated, so two words compare equal
/// exactly when their heads agree and their tails agree as sets. The head
/// may also occur in the tail.
class Element {
 public:
  enum class Kind : std::uint8_t { zero, letter, word };

  /// The zero element.
  Element() noexcept = default;

  static Element zero() noexcept { return Element{}; }

  static Element letter(Letter l) noexcept {
    Element e;
    e.kind_ = Kind::letter;
    e.head_ = l;
    return e;
  }

  static Element word(Letter head, std::vector<Letter> tail) {
    std::sort(tail.begin(), tail.end());
    tail.erase(std::unique(tail.begin(), tail.end()), tail.end());
    if (tail.empty()) throw precondition_error("a word needs a nonempty tail");
    Element e;
    e.kind_ = Kind::word;
    e.head_ = head;
    e.tail_ = std::move(tail);
    return e;
  }

  static Element word(Letter head, std::initializer_list<Letter> tail) {
    return word(head, std::vector<Letter>(tail));
  }

  Kind kind() const noexcept { return kind_; }
  bool is_zero() const noexcept { return kind_ == Kind::zero; }
  bool is_letter() const noexcept { return kind_ == Kind::letter; }
  bool is_word() const noexcept { return kind_ == Kind::word; }

  /// The letter itself for letters, the first letter for words.
  Letter head() const noexcept { return head_; }

  /// Tail letters in canonical order; empty unless this is a word.
  std::span<const Letter> tail() const noexcept { return tail_; }

  bool tail_contains(Letter l) const noexcept {
    return std::binary_search(tail_.begin(), tail_.end(), l);
  }

  friend bool operator==(const Element&, const Element&) = default;

  // Total order used for deterministic containers; zero < letters < words.
  friend std::strong_ordering operator<=>(const Element& a, const Element& b) {
    if (auto c = a.kind_ <=> b.kind_; c != 0) return c;
    if (a.kind_ == Kind::zero) return std::strong_ordering::equal;
    if (auto c = a.head_ <=> b.head_; c != 0) return c;
    return std::lexicographical_compare_three_way(
        a.tail_.begin(), a.tail_.end(), b.tail_.begin(), b.tail_.end());
  }

 private:
  friend Element star(const Element& a, const Element& b);

  Kind kind_ = Kind::zero;
  Letter head_ = Letter::p();
  std::vector<Letter> tail_;
};

/// The product of the free algebra.
///
///   0 * y = x * 0 = 0
///   letter * letter = the two-letter word
///   anything * word = 0
///   word * letter already in the tail = 0
///   word * fresh letter = the word with the letter added to its tail
inline Element star(const Element& a, const Element& b) {
  if (a.is_zero() || b.is_zero()) return Element::zero();
  if (a.is_letter() && b.is_letter()) {
    Element w;
    w.kind_ = Element::Kind::word;
    w.head_ = a.head_;
    w.tail_.push_back(b.head_);
    return w;
  }
  if (b.is_word()) return Element::zero();
  // a is a word, b a letter
  const Letter y = b.head_;
  auto pos = std::lower_bound(a.tail_.begin(), a.tail_.end(), y);
  if (pos != a.tail_.end() && *pos == y) return Element::zero();
  Element w;
  w.kind_ = Element::Kind::word;
  w.head_ = a.head_;
  w.tail_.reserve(a.tail_.size() + 1);
  w.tail_.insert(w.tail_.end(), a.tail_.begin(), pos);
  w.tail_.push_back(y);
  w.tail_.insert(w.tail_.end(), pos, a.tail_.end());
  return w;
}

/// 0 for zero, 1 for letters, tail size + 1 for words.
inline std::size_t length(const Element& e) noexcept {
  switch (e.kind()) {
    case Element::Kind::zero: return 0;
    case Element::Kind::letter: return 1;
    case Element::Kind::word: return e.tail().size() + 1;
  }
  return 0;
}

/// Indices of the variables occurring anywhere in `e`, ascending.
inline std::set<var_index> variables_of(const Element& e) {
  std::set<var_index> out;
  if (e.is_zero()) return out;
  if (e.head().is_var()) out.insert(e.head().index());
  for (Letter l : e.tail())
    if (l.is_var()) out.insert(l.index());
  return out;
}

/// Plain rendering: "0", "p", "x3", or head and tail separated by spaces
/// ("p p x1").
inline std::string to_string(const Element& e) {
  if (e.is_zero()) return "0";
  std::string out = e.head().str();
  for (Letter l : e.tail()) {
    out += ' ';
    out += l.str();
  }
  return out;
}

}  // namespace termclone
