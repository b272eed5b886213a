#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace prohecke {

/// Raised for malformed field data and arithmetic errors (division by zero).
class FieldError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Parameters of the coefficient field k = GF(p^m) together with the residue
/// field size q = p^f. Requires f | m so that F_q embeds in k.
struct FieldSpec {
  int p = 2;
  int f = 1;
  int m = 1;
  /// Monic reduction polynomial, coefficients low-to-high (length m + 1).
  std::optional<std::vector<int>> reduction_poly;

  friend bool operator==(const FieldSpec&, const FieldSpec&) = default;
};

class GaloisField;

/// An element of GF(p^m), stored as its coordinate vector packed base p.
class FieldElt {
 public:
  FieldElt() = default;
  FieldElt(const GaloisField* field, std::uint32_t code) : field_(field), code_(code) {}

  const GaloisField& field() const { return *field_; }
  std::uint32_t code() const { return code_; }
  bool is_zero() const { return code_ == 0; }
  bool is_one() const;

  /// Power-basis coordinates, low-to-high, length m.
  std::vector<int> coeffs() const;

  FieldElt operator+(const FieldElt& o) const;
  FieldElt operator-(const FieldElt& o) const;
  FieldElt operator*(const FieldElt& o) const;
  FieldElt operator/(const FieldElt& o) const;
  FieldElt operator-() const;
  FieldElt& operator+=(const FieldElt& o) { return *this = *this + o; }
  FieldElt& operator-=(const FieldElt& o) { return *this = *this - o; }
  FieldElt& operator*=(const FieldElt& o) { return *this = *this * o; }

  FieldElt inverse() const;
  FieldElt pow(long long e) const;

  friend bool operator==(const FieldElt& a, const FieldElt& b) {
    return a.field_ == b.field_ && a.code_ == b.code_;
  }

 private:
  const GaloisField* field_ = nullptr;
  std::uint32_t code_ = 0;
};

/// Exact arithmetic in GF(p^m) through exp/log tables over a fixed generator.
///
/// Elements hold a raw pointer back to their field, so a field must outlive
/// every element created from it; construct fields through make() and keep the
/// shared_ptr alive alongside any algebra built on top.
class GaloisField {
 public:
  static constexpr std::uint32_t kMaxOrder = 1u << 16;

  static std::shared_ptr<const GaloisField> make(const FieldSpec& spec);

  const FieldSpec& spec() const { return spec_; }
  int characteristic() const { return spec_.p; }
  int degree() const { return spec_.m; }
  /// Size of the residue field F_q.
  long long q() const { return q_; }
  std::uint32_t order() const { return order_; }
  const std::vector<int>& modulus() const { return modulus_; }

  FieldElt zero() const { return {this, 0}; }
  FieldElt one() const { return {this, 1}; }
  FieldElt from_int(long long n) const;
  FieldElt from_coeffs(std::span<const int> coeffs) const;
  FieldElt element(std::uint32_t code) const;

  /// Smallest (by code) generator of k^x.
  FieldElt generator() const { return {this, generator_}; }
  /// Element of exact order q - 1: generator^((p^m - 1)/(q - 1)).
  FieldElt zeta_q() const;

  std::uint32_t add(std::uint32_t a, std::uint32_t b) const;
  std::uint32_t neg(std::uint32_t a) const;
  std::uint32_t sub(std::uint32_t a, std::uint32_t b) const { return add(a, neg(b)); }
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const;
  std::uint32_t inv(std::uint32_t a) const;
  std::uint32_t pow(std::uint32_t a, long long e) const;

  std::vector<int> coeffs(std::uint32_t code) const;
  std::uint32_t encode(std::span<const int> coeffs) const;

 private:
  explicit GaloisField(FieldSpec spec);
  std::uint32_t slow_mul(std::uint32_t a, std::uint32_t b) const;

  FieldSpec spec_;
  long long q_ = 0;
  std::uint32_t order_ = 0;
  std::vector<int> modulus_;
  std::uint32_t generator_ = 1;
  std::vector<std::uint32_t> exp_;  // length 2 (order - 1)
  std::vector<std::uint32_t> log_;
  std::vector<std::uint32_t> add_table_;  // only for small fields
  std::vector<std::uint32_t> neg_;
};

enum class FieldOp { kAdd, kSub, kMul, kDiv };

FieldElt field_arith(const FieldElt& a, const FieldElt& b, FieldOp op);

/// Exhaustive irreducibility test over GF(p) (trial division by every monic
/// polynomial of degree at most deg/2). Coefficients low-to-high, monic.
bool is_irreducible(int p, std::span<const int> poly);

/// Lexicographically smallest irreducible monic polynomial of degree m,
/// ordered by (c0, ..., c_{m-1}).
std::vector<int> default_reduction_poly(int p, int m);

bool is_prime(long long n);

}  // namespace prohecke
