#include "prohecke/gf.hpp"

#include <algorithm>

namespace prohecke {

namespace {

long long ipow(long long base, int e) {
  long long r = 1;
  for (int i = 0; i < e; ++i) r *= base;
  return r;
}

// Remainder of a by monic b over GF(p); both low-to-high.
std::vector<int> poly_mod(std::vector<int> a, std::span<const int> b, int p) {
  const int db = static_cast<int>(b.size()) - 1;
  for (int i = static_cast<int>(a.size()) - 1; i >= db; --i) {
    const int c = a[i] % p;
    if (c == 0) continue;
    for (int j = 0; j <= db; ++j) {
      a[i - db + j] = ((a[i - db + j] - c * b[j]) % p + p) % p;
    }
  }
  a.resize(std::max(db, 0));
  return a;
}

std::vector<long long> prime_factors(long long n) {
  std::vector<long long> out;
  for (long long d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

}  // namespace

bool is_prime(long long n) {
  if (n < 2) return false;
  for (long long d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

bool is_irreducible(int p, std::span<const int> poly) {
  const int deg = static_cast<int>(poly.size()) - 1;
  if (deg < 1 || poly.back() != 1) return false;
  if (deg == 1) return true;
  for (int d = 1; d <= deg / 2; ++d) {
    const long long count = ipow(p, d);
    std::vector<int> divisor(d + 1);
    divisor[d] = 1;
    for (long long idx = 0; idx < count; ++idx) {
      long long rest = idx;
      for (int j = 0; j < d; ++j) {
        divisor[j] = static_cast<int>(rest % p);
        rest /= p;
      }
      const auto r = poly_mod(std::vector<int>(poly.begin(), poly.end()), divisor, p);
      if (std::all_of(r.begin(), r.end(), [](int c) { return c == 0; })) return false;
    }
  }
  return true;
}

std::vector<int> default_reduction_poly(int p, int m) {
  const long long count = ipow(p, m);
  std::vector<int> poly(m + 1);
  poly[m] = 1;
  // Lexicographic on (c0, ..., c_{m-1}): c0 is the most significant digit.
  for (long long idx = 0; idx < count; ++idx) {
    long long rest = idx;
    for (int j = m - 1; j >= 0; --j) {
      poly[j] = static_cast<int>(rest % p);
      rest /= p;
    }
    if (is_irreducible(p, poly)) return poly;
  }
  throw FieldError("no irreducible polynomial found");
}

std::shared_ptr<const GaloisField> GaloisField::make(const FieldSpec& spec) {
  return std::shared_ptr<const GaloisField>(new GaloisField(spec));
}

GaloisField::GaloisField(FieldSpec spec) : spec_(std::move(spec)) {
  const int p = spec_.p;
  if (!is_prime(p)) throw FieldError("p = " + std::to_string(p) + " is not prime");
  if (spec_.f < 1 || spec_.m < 1) throw FieldError("f and m must be positive");
  if (spec_.m % spec_.f != 0) {
    throw FieldError("f = " + std::to_string(spec_.f) + " does not divide m = " +
                     std::to_string(spec_.m));
  }
  const long long n = ipow(p, spec_.m);
  if (n > kMaxOrder) throw FieldError("field order exceeds supported bound");
  order_ = static_cast<std::uint32_t>(n);
  q_ = ipow(p, spec_.f);

  if (spec_.reduction_poly) {
    modulus_ = *spec_.reduction_poly;
    if (static_cast<int>(modulus_.size()) != spec_.m + 1) {
      throw FieldError("reduction polynomial must have degree m");
    }
    for (int& c : modulus_) {
      if (c < 0 || c >= p) throw FieldError("reduction polynomial coefficient out of range");
    }
    if (modulus_.back() != 1) throw FieldError("reduction polynomial must be monic");
    if (!is_irreducible(p, modulus_)) throw FieldError("reduction polynomial is reducible");
  } else {
    modulus_ = default_reduction_poly(p, spec_.m);
  }

  neg_.resize(order_);
  for (std::uint32_t a = 0; a < order_; ++a) {
    auto c = coeffs(a);
    for (int& x : c) x = (p - x) % p;
    neg_[a] = encode(c);
  }
  if (order_ <= 256) {
    add_table_.resize(std::size_t{order_} * order_);
    for (std::uint32_t a = 0; a < order_; ++a) {
      const auto ca = coeffs(a);
      for (std::uint32_t b = 0; b < order_; ++b) {
        auto cb = coeffs(b);
        for (int j = 0; j < spec_.m; ++j) cb[j] = (cb[j] + ca[j]) % p;
        add_table_[std::size_t{a} * order_ + b] = encode(cb);
      }
    }
  }

  // Smallest generator of k^x by exhaustive order testing.
  const long long group = n - 1;
  const auto factors = prime_factors(group);
  auto slow_pow = [&](std::uint32_t a, long long e) {
    std::uint32_t r = 1;
    for (long long i = 0; i < e; ++i) r = slow_mul(r, a);
    return r;
  };
  generator_ = 0;
  for (std::uint32_t g = 1; g < order_; ++g) {
    if (group == 1) {
      generator_ = g;
      break;
    }
    const bool ok = std::all_of(factors.begin(), factors.end(),
                                [&](long long r) { return slow_pow(g, group / r) != 1; });
    if (ok) {
      generator_ = g;
      break;
    }
  }
  if (generator_ == 0) throw FieldError("no generator found (reduction polynomial invalid?)");

  exp_.resize(2 * static_cast<std::size_t>(group) + 1);
  log_.assign(order_, 0);
  std::uint32_t x = 1;
  for (long long i = 0; i < group; ++i) {
    exp_[i] = x;
    exp_[i + group] = x;
    log_[x] = static_cast<std::uint32_t>(i);
    x = slow_mul(x, generator_);
  }
  exp_[2 * group] = 1;
}

std::vector<int> GaloisField::coeffs(std::uint32_t code) const {
  std::vector<int> c(spec_.m);
  for (int j = 0; j < spec_.m; ++j) {
    c[j] = static_cast<int>(code % spec_.p);
    code /= spec_.p;
  }
  return c;
}

std::uint32_t GaloisField::encode(std::span<const int> c) const {
  std::uint32_t code = 0;
  for (int j = static_cast<int>(c.size()) - 1; j >= 0; --j) {
    code = code * spec_.p + static_cast<std::uint32_t>(((c[j] % spec_.p) + spec_.p) % spec_.p);
  }
  return code;
}

std::uint32_t GaloisField::slow_mul(std::uint32_t a, std::uint32_t b) const {
  const auto ca = coeffs(a);
  const auto cb = coeffs(b);
  std::vector<int> prod(2 * spec_.m - 1, 0);
  for (int i = 0; i < spec_.m; ++i) {
    for (int j = 0; j < spec_.m; ++j) prod[i + j] = (prod[i + j] + ca[i] * cb[j]) % spec_.p;
  }
  return encode(poly_mod(prod, modulus_, spec_.p));
}

std::uint32_t GaloisField::add(std::uint32_t a, std::uint32_t b) const {
  if (!add_table_.empty()) return add_table_[std::size_t{a} * order_ + b];
  if (spec_.m == 1) return (a + b) % static_cast<std::uint32_t>(spec_.p);
  std::uint32_t out = 0, scale = 1;
  const auto p = static_cast<std::uint32_t>(spec_.p);
  for (int j = 0; j < spec_.m; ++j) {
    out += ((a % p + b % p) % p) * scale;
    a /= p;
    b /= p;
    scale *= p;
  }
  return out;
}

std::uint32_t GaloisField::neg(std::uint32_t a) const { return neg_[a]; }

std::uint32_t GaloisField::mul(std::uint32_t a, std::uint32_t b) const {
  if (a == 0 || b == 0) return 0;
  return exp_[log_[a] + log_[b]];
}

std::uint32_t GaloisField::inv(std::uint32_t a) const {
  if (a == 0) throw FieldError("division by zero in GF(" + std::to_string(spec_.p) + "^" +
                               std::to_string(spec_.m) + ")");
  const std::uint32_t group = order_ - 1;
  return exp_[(group - log_[a]) % group];
}

std::uint32_t GaloisField::pow(std::uint32_t a, long long e) const {
  const long long group = order_ - 1;
  if (a == 0) {
    if (e == 0) return 1;
    if (e < 0) throw FieldError("zero has no negative powers");
    return 0;
  }
  long long r = (static_cast<long long>(log_[a]) * (e % group)) % group;
  if (r < 0) r += group;
  return exp_[r];
}

FieldElt GaloisField::from_int(long long n) const {
  long long r = n % spec_.p;
  if (r < 0) r += spec_.p;
  return {this, static_cast<std::uint32_t>(r)};
}

FieldElt GaloisField::from_coeffs(std::span<const int> c) const {
  if (static_cast<int>(c.size()) > spec_.m) throw FieldError("too many coefficients for GF(p^m)");
  return {this, encode(c)};
}

FieldElt GaloisField::element(std::uint32_t code) const {
  if (code >= order_) throw FieldError("field element code out of range");
  return {this, code};
}

FieldElt GaloisField::zeta_q() const {
  const long long group = order_ - 1;
  return {this, pow(generator_, group / (q_ - 1))};
}

bool FieldElt::is_one() const { return code_ == 1; }

std::vector<int> FieldElt::coeffs() const { return field_->coeffs(code_); }

FieldElt FieldElt::operator+(const FieldElt& o) const { return {field_, field_->add(code_, o.code_)}; }
FieldElt FieldElt::operator-(const FieldElt& o) const { return {field_, field_->sub(code_, o.code_)}; }
FieldElt FieldElt::operator*(const FieldElt& o) const { return {field_, field_->mul(code_, o.code_)}; }
FieldElt FieldElt::operator/(const FieldElt& o) const {
  return {field_, field_->mul(code_, field_->inv(o.code_))};
}
FieldElt FieldElt::operator-() const { return {field_, field_->neg(code_)}; }
FieldElt FieldElt::inverse() const { return {field_, field_->inv(code_)}; }
FieldElt FieldElt::pow(long long e) const { return {field_, field_->pow(code_, e)}; }

FieldElt field_arith(const FieldElt& a, const FieldElt& b, FieldOp op) {
  if (&a.field() != &b.field()) throw FieldError("operands belong to different fields");
  switch (op) {
    case FieldOp::kAdd: return a + b;
    case FieldOp::kSub: return a - b;
    case FieldOp::kMul: return a * b;
    case FieldOp::kDiv: return a / b;
  }
  throw FieldError("unknown field operation");
}

}  // namespace prohecke
