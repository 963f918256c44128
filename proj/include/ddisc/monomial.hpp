#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>

#include "ddisc/errors.hpp"

namespace ddisc {

inline constexpr std::size_t kMaxVariables = 32;

/// Exponent vector of a monomial. Entries beyond the ring's variable count
/// are always zero, so two monomials of the same ring compare field-wise.
class Monomial {
 public:
  static constexpr std::uint32_t kMaxExponent = 0xFFFF;

  Monomial() = default;

  std::uint32_t operator[](std::size_t var) const { return exp_[var]; }
  std::uint32_t degree() const { return degree_; }
  bool is_one() const { return degree_ == 0; }

  void set(std::size_t var, std::uint32_t e) {
    if (e > kMaxExponent) throw ExponentOverflow();
    degree_ = degree_ - exp_[var] + e;
    exp_[var] = static_cast<std::uint16_t>(e);
  }

  static Monomial variable(std::size_t var, std::uint32_t e = 1) {
    Monomial m;
    m.set(var, e);
    return m;
  }

  Monomial operator*(const Monomial& o) const {
    Monomial r;
    for (std::size_t i = 0; i < kMaxVariables; ++i) {
      std::uint32_t e = std::uint32_t{exp_[i]} + o.exp_[i];
      if (e > kMaxExponent) throw ExponentOverflow();
      r.exp_[i] = static_cast<std::uint16_t>(e);
    }
    r.degree_ = degree_ + o.degree_;
    return r;
  }

  /// Requires o.divides(*this).
  Monomial operator/(const Monomial& o) const {
    Monomial r;
    for (std::size_t i = 0; i < kMaxVariables; ++i) r.exp_[i] = exp_[i] - o.exp_[i];
    r.degree_ = degree_ - o.degree_;
    return r;
  }

  bool divides(const Monomial& o) const {
    if (degree_ > o.degree_) return false;
    for (std::size_t i = 0; i < kMaxVariables; ++i)
      if (exp_[i] > o.exp_[i]) return false;
    return true;
  }

  Monomial lcm(const Monomial& o) const {
    Monomial r;
    std::uint32_t d = 0;
    for (std::size_t i = 0; i < kMaxVariables; ++i) {
      r.exp_[i] = exp_[i] > o.exp_[i] ? exp_[i] : o.exp_[i];
      d += r.exp_[i];
    }
    r.degree_ = d;
    return r;
  }

  bool coprime(const Monomial& o) const {
    for (std::size_t i = 0; i < kMaxVariables; ++i)
      if (exp_[i] != 0 && o.exp_[i] != 0) return false;
    return true;
  }

  /// Bit i is set iff variable i occurs (variables >= 32 share the top bit).
  std::uint32_t support_mask() const {
    std::uint32_t mask = 0;
    for (std::size_t i = 0; i < kMaxVariables; ++i)
      if (exp_[i] != 0) mask |= 1u << i;
    return mask;
  }

  std::uint32_t partial_degree(std::size_t begin, std::size_t end) const {
    std::uint32_t d = 0;
    for (std::size_t i = begin; i < end; ++i) d += exp_[i];
    return d;
  }

  friend bool operator==(const Monomial& a, const Monomial& b) {
    return a.degree_ == b.degree_ && a.exp_ == b.exp_;
  }

  std::size_t hash() const {
    std::size_t h = 1469598103934665603ull;
    for (auto e : exp_) h = (h ^ e) * 1099511628211ull;
    return h;
  }

 private:
  std::array<std::uint16_t, kMaxVariables> exp_{};
  std::uint32_t degree_ = 0;
};

enum class OrderKind { Lex, GrevLex, BlockElimination };

/// Total multiplicative order on monomials. BlockElimination(k) compares the
/// first k variables by GrevLex and breaks ties by GrevLex on the rest, so any
/// monomial containing an eliminated variable beats every monomial free of them.
class MonomialOrder {
 public:
  static MonomialOrder lex() { return MonomialOrder(OrderKind::Lex, 0); }
  static MonomialOrder grevlex() { return MonomialOrder(OrderKind::GrevLex, 0); }
  static MonomialOrder block(std::size_t split) {
    return MonomialOrder(OrderKind::BlockElimination, split);
  }

  OrderKind kind() const { return kind_; }
  std::size_t block_split() const { return split_; }

  /// <0, 0, >0 as a is smaller than, equal to or greater than b.
  int compare(const Monomial& a, const Monomial& b) const {
    switch (kind_) {
      case OrderKind::Lex:
        for (std::size_t i = 0; i < kMaxVariables; ++i)
          if (a[i] != b[i]) return a[i] > b[i] ? 1 : -1;
        return 0;
      case OrderKind::GrevLex:
        if (a.degree() != b.degree()) return a.degree() > b.degree() ? 1 : -1;
        return revlex_tail(a, b, 0, kMaxVariables);
      case OrderKind::BlockElimination: {
        auto da = a.partial_degree(0, split_), db = b.partial_degree(0, split_);
        if (da != db) return da > db ? 1 : -1;
        if (int c = revlex_tail(a, b, 0, split_); c != 0) return c;
        auto ra = a.degree() - da, rb = b.degree() - db;
        if (ra != rb) return ra > rb ? 1 : -1;
        return revlex_tail(a, b, split_, kMaxVariables);
      }
    }
    return 0;
  }

  bool less(const Monomial& a, const Monomial& b) const { return compare(a, b) < 0; }

  friend bool operator==(const MonomialOrder& a, const MonomialOrder& b) {
    return a.kind_ == b.kind_ && a.split_ == b.split_;
  }

 private:
  MonomialOrder(OrderKind kind, std::size_t split) : kind_(kind), split_(split) {}

  static int revlex_tail(const Monomial& a, const Monomial& b, std::size_t begin, std::size_t end) {
    for (std::size_t i = end; i-- > begin;)
      if (a[i] != b[i]) return a[i] < b[i] ? 1 : -1;
    return 0;
  }

  OrderKind kind_;
  std::size_t split_;
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const { return m.hash(); }
};

}  // namespace ddisc
