#pragma once

#include <cstddef>
#include <map>
#include <utility>

#include "weylharm/rational.hpp"

namespace weylharm {

/// Sparse K-linear combination of keys, shared by polynomials and operators.
/// Zero coefficients are never stored, so map equality is value equality.
template <class Derived, class Key>
class LinearCombination {
 public:
  using key_type = Key;
  using map_type = std::map<Key, GaussRational>;

  LinearCombination() = default;

  static Derived term(const Key& key, GaussRational c = GaussRational(1)) {
    Derived d;
    d.add_term(key, std::move(c));
    return d;
  }

  const map_type& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }

  GaussRational coeff(const Key& key) const {
    auto it = terms_.find(key);
    return it == terms_.end() ? GaussRational() : it->second;
  }

  void add_term(const Key& key, const GaussRational& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(key, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  void add_term(const Key& key, GaussRational&& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(key, std::move(c));
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  Derived& operator+=(const Derived& rhs) {
    for (const auto& [k, c] : rhs.terms_) add_term(k, c);
    return self();
  }
  Derived& operator-=(const Derived& rhs) {
    for (const auto& [k, c] : rhs.terms_) add_term(k, -c);
    return self();
  }
  Derived& scale(const GaussRational& s) {
    if (s.is_zero()) {
      terms_.clear();
      return self();
    }
    for (auto& [k, c] : terms_) c *= s;
    return self();
  }

  Derived operator-() const {
    Derived out = self();
    for (auto& [k, c] : out.terms_) c = -c;
    return out;
  }

  friend Derived operator+(Derived a, const Derived& b) { return a += b; }
  friend Derived operator-(Derived a, const Derived& b) { return a -= b; }
  friend Derived operator*(const GaussRational& s, Derived a) { return a.scale(s); }

  friend bool operator==(const Derived& a, const Derived& b) { return a.terms_ == b.terms_; }

 protected:
  map_type terms_;

 private:
  Derived& self() { return static_cast<Derived&>(*this); }
  const Derived& self() const { return static_cast<const Derived&>(*this); }
};

}  // namespace weylharm
