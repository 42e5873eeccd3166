#ifndef SYMLAB_ORDER_HPP
#define SYMLAB_ORDER_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "error.hpp"
#include "monomial.hpp"

namespace symlab {

enum class OrderKind { lex, grlex, grevlex, block };

/// A multiplicative total order on monomials.
///
/// `priority` lists variable indices from most to least significant; when it
/// is empty the ring's declaration order is used. A block order compares the
/// first `block_size` variables (in priority order) with `inner`, and breaks
/// ties on the remaining variables with the same `inner` order. Elimination
/// uses block orders with the eliminated variables in the leading block.
class MonomialOrder {
public:
  MonomialOrder() = default;

  static MonomialOrder lex() { return MonomialOrder(OrderKind::lex); }
  static MonomialOrder grlex() { return MonomialOrder(OrderKind::grlex); }
  static MonomialOrder grevlex() { return MonomialOrder(OrderKind::grevlex); }
  static MonomialOrder block(std::size_t block_size, OrderKind inner = OrderKind::grevlex) {
    if (inner == OrderKind::block) throw precondition_violation("nested block orders are not supported");
    MonomialOrder o(OrderKind::block);
    o.block_size_ = block_size;
    o.inner_ = inner;
    return o;
  }

  static MonomialOrder from_name(const std::string& name) {
    if (name == "lex") return lex();
    if (name == "grlex" || name == "deglex") return grlex();
    if (name == "grevlex" || name == "degrevlex") return grevlex();
    throw parse_error("unknown monomial order '" + name + "'");
  }

  MonomialOrder with_priority(std::vector<std::size_t> priority) const {
    MonomialOrder o = *this;
    o.priority_ = std::move(priority);
    return o;
  }

  OrderKind kind() const { return kind_; }
  OrderKind inner() const { return inner_; }
  std::size_t block_size() const { return block_size_; }
  const std::vector<std::size_t>& priority() const { return priority_; }

  /// Three-way comparison: negative if a < b, zero if equal, positive if a > b.
  int compare(const Monomial& a, const Monomial& b) const {
    const std::size_t n = a.size();
    if (n != b.size()) throw ring_mismatch("monomials from rings of different arity");
    if (!priority_.empty() && priority_.size() != n)
      throw ring_mismatch("order priority list does not match ring arity");
    switch (kind_) {
      case OrderKind::block: {
        std::size_t k = block_size_ < n ? block_size_ : n;
        int c = compare_range(inner_, a, b, 0, k);
        if (c != 0) return c;
        return compare_range(inner_, a, b, k, n);
      }
      case OrderKind::grevlex:
      case OrderKind::grlex:
        if (a.degree() != b.degree()) return a.degree() < b.degree() ? -1 : 1;
        return kind_ == OrderKind::grlex ? lex_tail(a, b, 0, n) : revlex_tail(a, b, 0, n);
      case OrderKind::lex:
        return lex_tail(a, b, 0, n);
    }
    return 0;
  }

  bool less(const Monomial& a, const Monomial& b) const { return compare(a, b) < 0; }

  std::string name() const {
    auto base = [](OrderKind k) -> std::string {
      switch (k) {
        case OrderKind::lex: return "lex";
        case OrderKind::grlex: return "grlex";
        case OrderKind::grevlex: return "grevlex";
        case OrderKind::block: return "block";
      }
      return "?";
    };
    std::string s = kind_ == OrderKind::block
                        ? "block(" + std::to_string(block_size_) + "," + base(inner_) + ")"
                        : base(kind_);
    if (!priority_.empty()) {
      s += "[";
      for (std::size_t i = 0; i < priority_.size(); ++i) s += (i ? "," : "") + std::to_string(priority_[i]);
      s += "]";
    }
    return s;
  }

  friend bool operator==(const MonomialOrder&, const MonomialOrder&) = default;

private:
  explicit MonomialOrder(OrderKind kind) : kind_(kind) {}

  std::size_t var(std::size_t position) const {
    return priority_.empty() ? position : priority_[position];
  }

  int lex_tail(const Monomial& a, const Monomial& b, std::size_t lo, std::size_t hi) const {
    for (std::size_t i = lo; i < hi; ++i) {
      auto ea = a[var(i)], eb = b[var(i)];
      if (ea != eb) return ea < eb ? -1 : 1;
    }
    return 0;
  }

  int revlex_tail(const Monomial& a, const Monomial& b, std::size_t lo, std::size_t hi) const {
    for (std::size_t i = hi; i-- > lo;) {
      auto ea = a[var(i)], eb = b[var(i)];
      if (ea != eb) return ea < eb ? 1 : -1;
    }
    return 0;
  }

  int compare_range(OrderKind k, const Monomial& a, const Monomial& b, std::size_t lo,
                    std::size_t hi) const {
    if (k == OrderKind::lex) return lex_tail(a, b, lo, hi);
    std::uint64_t da = 0, db = 0;
    for (std::size_t i = lo; i < hi; ++i) {
      da += a[var(i)];
      db += b[var(i)];
    }
    if (da != db) return da < db ? -1 : 1;
    return k == OrderKind::grlex ? lex_tail(a, b, lo, hi) : revlex_tail(a, b, lo, hi);
  }

  OrderKind kind_ = OrderKind::grevlex;
  OrderKind inner_ = OrderKind::grevlex;
  std::size_t block_size_ = 0;
  std::vector<std::size_t> priority_;
};

} // namespace symlab

#endif
