#pragma once

// Term syntax over the signature (*, p, 0) and its text grammar:
//
//   term   := factor | term '*' factor
//   factor := '0' | 'p' | 'x' DIGITS | '(' term ')'
//
// '*' is left-associative, so "a*b*c" reads as (a*b)*c.

#include <cctype>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <set>
#include <string>
#include <string_view>

#include "termclone/element.hpp"
#include "termclone/error.hpp"

namespace termclone {

/// Immutable term tree. Subtrees are shared, so copies are cheap.
class Term {
 public:
  enum class Kind : std::uint8_t { zero, p, var, star };

  static Term zero() { return Term{std::make_shared<const Node>(Node{Kind::zero, 0, {}, {}})}; }
  static Term p() { return Term{std::make_shared<const Node>(Node{Kind::p, 0, {}, {}})}; }

  static Term var(var_index index) {
    if (index == 0) throw precondition_error("variable indices start at 1");
    return Term{std::make_shared<const Node>(Node{Kind::var, index, {}, {}})};
  }

  static Term star(Term left, Term right) {
    return Term{std::make_shared<const Node>(
        Node{Kind::star, 0, std::move(left.node_), std::move(right.node_)})};
  }

  /// The letter symbol p or x_i as a term.
  static Term of(Letter l) { return l.is_p() ? p() : var(l.index()); }

  Kind kind() const noexcept { return node_->kind; }
  bool is_star() const noexcept { return node_->kind == Kind::star; }
  var_index index() const noexcept { return node_->index; }
  Term left() const { return Term{node_->left}; }
  Term right() const { return Term{node_->right}; }

  friend bool operator==(const Term& a, const Term& b) {
    if (a.node_ == b.node_) return true;
    if (a.node_->kind != b.node_->kind) return false;
    switch (a.node_->kind) {
      case Kind::zero:
      case Kind::p: return true;
      case Kind::var: return a.node_->index == b.node_->index;
      case Kind::star: return a.left() == b.left() && a.right() == b.right();
    }
    return false;
  }

 private:
  struct Node {
    Kind kind;
    var_index index;
    std::shared_ptr<const Node> left;
    std::shared_ptr<const Node> right;
  };

  explicit Term(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

  std::shared_ptr<const Node> node_;
};

inline Term operator*(Term a, Term b) { return Term::star(std::move(a), std::move(b)); }

/// Number of '*' nodes.
inline std::size_t size(const Term& t) {
  return t.is_star() ? 1 + size(t.left()) + size(t.right()) : 0;
}

inline void collect_variables(const Term& t, std::set<var_index>& out) {
  switch (t.kind()) {
    case Term::Kind::var: out.insert(t.index()); break;
    case Term::Kind::star:
      collect_variables(t.left(), out);
      collect_variables(t.right(), out);
      break;
    default: break;
  }
}

inline std::set<var_index> variables_of(const Term& t) {
  std::set<var_index> out;
  collect_variables(t, out);
  return out;
}

/// Minimal-parenthesis rendering that parses back to the same tree.
inline std::string to_string(const Term& t) {
  switch (t.kind()) {
    case Term::Kind::zero: return "0";
    case Term::Kind::p: return "p";
    case Term::Kind::var: return "x" + std::to_string(t.index());
    case Term::Kind::star: {
      std::string rhs = to_string(t.right());
      if (t.right().is_star()) rhs = "(" + rhs + ")";
      return to_string(t.left()) + "*" + rhs;
    }
  }
  return {};
}

namespace detail {

class term_parser {
 public:
  explicit term_parser(std::string_view text) : text_(text) {}

  Term parse() {
    skip_space();
    if (pos_ == text_.size()) throw parse_error("empty term", pos_);
    Term t = parse_term();
    skip_space();
    if (pos_ != text_.size())
      throw parse_error(std::string("unexpected '") + text_[pos_] + "'", pos_);
    return t;
  }

 private:
  Term parse_term() {
    Term t = parse_factor();
    for (;;) {
      skip_space();
      if (pos_ < text_.size() && text_[pos_] == '*') {
        ++pos_;
        t = Term::star(std::move(t), parse_factor());
      } else {
        return t;
      }
    }
  }

  Term parse_factor() {
    skip_space();
    if (pos_ == text_.size()) throw parse_error("unexpected end of input", pos_);
    const std::size_t start = pos_;
    switch (text_[pos_]) {
      case '0': ++pos_; return Term::zero();
      case 'p': ++pos_; return Term::p();
      case 'x': {
        ++pos_;
        if (pos_ == text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
          throw parse_error("variable needs a numeric index", pos_);
        var_index index = 0;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
          const auto digit = static_cast<var_index>(text_[pos_] - '0');
          if (index > (UINT64_MAX - digit) / 10)
            throw parse_error("variable index too large", start);
          index = index * 10 + digit;
          ++pos_;
        }
        if (index == 0) throw parse_error("variable index must be positive", start);
        return Term::var(index);
      }
      case '(': {
        ++pos_;
        Term t = parse_term();
        skip_space();
        if (pos_ == text_.size() || text_[pos_] != ')')
          throw parse_error("expected ')'", pos_);
        ++pos_;
        return t;
      }
      default:
        throw parse_error(std::string("unexpected '") + text_[pos_] + "'", pos_);
    }
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace detail

inline Term parse_term(std::string_view text) { return detail::term_parser(text).parse(); }

}  // namespace termclone
