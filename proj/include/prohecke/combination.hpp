#pragma once

#include <map>

#include "prohecke/gf.hpp"
#include "prohecke/propweyl.hpp"

namespace prohecke {

/// Finitely supported k-linear combination of basis symbols indexed by W~.
/// Zero coefficients are never stored. The tag separates tau- and phi-bases.
template <class Tag>
class Combination {
 public:
  using Map = std::map<ProPElt, FieldElt>;

  Combination() = default;
  explicit Combination(const GaloisField* field) : field_(field) {}

  static Combination basis(const GaloisField* field, const ProPElt& x) {
    Combination c(field);
    c.terms_.emplace(x, field->one());
    return c;
  }

  const GaloisField* field() const { return field_; }
  const Map& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  FieldElt coeff(const ProPElt& x) const {
    auto it = terms_.find(x);
    return it == terms_.end() ? field_->zero() : it->second;
  }

  void add_term(const ProPElt& x, const FieldElt& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(x, c);
    if (inserted) return;
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }

  Combination& operator+=(const Combination& o) {
    adopt(o);
    for (const auto& [x, c] : o.terms_) add_term(x, c);
    return *this;
  }
  Combination& operator-=(const Combination& o) {
    adopt(o);
    for (const auto& [x, c] : o.terms_) add_term(x, -c);
    return *this;
  }
  friend Combination operator+(Combination a, const Combination& b) { return a += b; }
  friend Combination operator-(Combination a, const Combination& b) { return a -= b; }
  Combination operator-() const {
    Combination out(field_);
    for (const auto& [x, c] : terms_) out.terms_.emplace(x, -c);
    return out;
  }
  friend Combination operator*(const FieldElt& s, const Combination& a) {
    Combination out(a.field_ ? a.field_ : &s.field());
    if (s.is_zero()) return out;
    for (const auto& [x, c] : a.terms_) out.terms_.emplace(x, s * c);
    return out;
  }

  friend bool operator==(const Combination& a, const Combination& b) { return a.terms_ == b.terms_; }

 private:
  void adopt(const Combination& o) {
    if (!field_) field_ = o.field_;
  }

  const GaloisField* field_ = nullptr;
  Map terms_;
};

using HeckeElt = Combination<struct HeckeTag>;
using TopElt = Combination<struct TopTag>;

}  // namespace prohecke
