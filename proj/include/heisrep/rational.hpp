#pragma once

// Exact rational scalar. Values that fit in signed 64-bit numerator and
// denominator are held inline; anything larger is promoted to a GMP mpq.
// Every constructor and arithmetic result is kept in canonical form:
// denominator > 0 and gcd(|numerator|, denominator) = 1.

#include <gmpxx.h>

#include <compare>
#include <concepts>
#include <cstdint>
#include <limits>
#include <memory>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

namespace heisrep {

/// Thrown when text cannot be read as a rational, matrix or algebra.
class ParseError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

namespace detail {

using i128 = __int128;
using u128 = unsigned __int128;

inline constexpr std::int64_t kSmallMax = std::numeric_limits<std::int64_t>::max();

inline u128 abs128(i128 v) { return v < 0 ? u128(0) - u128(v) : u128(v); }

inline u128 gcd128(u128 a, u128 b) {
  while (b != 0) {
    u128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

inline std::uint64_t gcd64(std::uint64_t a, std::uint64_t b) {
  while (b != 0) {
    std::uint64_t t = a % b;
    a = b;
    b = t;
  }
  return a;
}

// The range is symmetric so that negation never overflows.
inline bool fits_small(i128 v) { return v <= kSmallMax && v >= -kSmallMax; }

inline mpz_class to_mpz(i128 v) {
  const u128 mag = abs128(v);
  mpz_class hi(static_cast<unsigned long>(static_cast<std::uint64_t>(mag >> 64)));
  mpz_class r = hi << 64;
  r += mpz_class(static_cast<unsigned long>(static_cast<std::uint64_t>(mag)));
  return v < 0 ? mpz_class(-r) : r;
}

inline bool fits_small(const mpz_class& z) {
  return mpz_fits_slong_p(z.get_mpz_t()) != 0 &&
         mpz_cmp_si(z.get_mpz_t(), std::numeric_limits<long>::min()) != 0;
}

}  // namespace detail

class Rational {
public:
  Rational() = default;

  template <std::integral T>
  Rational(T value) {  // NOLINT(google-explicit-constructor)
    if constexpr (std::is_signed_v<T>) {
      assign(detail::i128(value), 1);
    } else {
      assign(detail::i128(static_cast<detail::u128>(value)), 1);
    }
  }

  Rational(std::int64_t numerator, std::int64_t denominator) {
    if (denominator == 0) throw std::domain_error("Rational: zero denominator");
    assign(numerator, denominator);
  }

  explicit Rational(mpq_class q) {
    if (q.get_den() == 0) throw std::domain_error("Rational: zero denominator");
    q.canonicalize();
    assign_big(std::move(q));
  }

  /// Reads "p" or "p/q" (optional leading '-', decimal digits only).
  static Rational parse(std::string_view text) {
    auto digits_ok = [](std::string_view s, bool allow_sign) {
      if (allow_sign && !s.empty() && s.front() == '-') s.remove_prefix(1);
      if (s.empty()) return false;
      for (char c : s)
        if (c < '0' || c > '9') return false;
      return true;
    };
    const auto slash = text.find('/');
    const std::string_view num = text.substr(0, slash);
    const std::string_view den =
        slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
    if (!digits_ok(num, true) || !digits_ok(den, false))
      throw ParseError("invalid rational: '" + std::string(text) + "'");
    mpq_class q;
    q.get_num() = mpz_class(std::string(num), 10);
    q.get_den() = mpz_class(std::string(den), 10);
    if (q.get_den() == 0) throw ParseError("invalid rational (zero denominator): '" + std::string(text) + "'");
    return Rational(std::move(q));
  }

  [[nodiscard]] bool is_zero() const { return !big_ && num_ == 0; }
  [[nodiscard]] bool is_one() const { return !big_ && num_ == 1 && den_ == 1; }
  [[nodiscard]] bool is_integer() const { return big_ ? big_->get_den() == 1 : den_ == 1; }
  [[nodiscard]] bool is_small() const { return !big_; }
  [[nodiscard]] int sign() const {
    if (big_) return sgn(*big_);
    return (num_ > 0) - (num_ < 0);
  }

  [[nodiscard]] mpq_class to_mpq() const {
    if (big_) return *big_;
    mpq_class q;
    q.get_num() = mpz_class(static_cast<long>(num_));
    q.get_den() = mpz_class(static_cast<long>(den_));
    return q;
  }

  [[nodiscard]] std::string str() const {
    if (big_) return big_->get_str(10);
    if (den_ == 1) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
  }

  /// Audit hook: verifies the canonical-form invariant of the stored value.
  [[nodiscard]] bool is_canonical() const {
    if (big_) {
      if (sgn(big_->get_den()) <= 0) return false;
      mpz_class g;
      mpz_gcd(g.get_mpz_t(), big_->get_num().get_mpz_t(), big_->get_den().get_mpz_t());
      if (g != 1) return false;
      // Small-representable values must never be stored in big form.
      return !(detail::fits_small(big_->get_num()) && detail::fits_small(big_->get_den()));
    }
    if (den_ <= 0) return false;
    if (num_ == 0) return den_ == 1;
    return detail::gcd64(static_cast<std::uint64_t>(num_ < 0 ? -num_ : num_),
                         static_cast<std::uint64_t>(den_)) == 1;
  }

  Rational operator-() const {
    if (big_) return Rational(mpq_class(-*big_));
    Rational r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
  }

  friend Rational operator+(const Rational& x, const Rational& y) {
    if (!x.big_ && !y.big_) {
      if (x.den_ == 1 && y.den_ == 1) return from_i128(detail::i128(x.num_) + y.num_, 1);
      const detail::i128 n = detail::i128(x.num_) * y.den_ + detail::i128(y.num_) * x.den_;
      const detail::i128 d = detail::i128(x.den_) * y.den_;
      return from_i128(n, d);
    }
    return Rational(mpq_class(x.to_mpq() + y.to_mpq()));
  }

  friend Rational operator-(const Rational& x, const Rational& y) { return x + (-y); }

  friend Rational operator*(const Rational& x, const Rational& y) {
    if (!x.big_ && !y.big_) {
      if (x.num_ == 0 || y.num_ == 0) return {};
      // Cross-cancel so the product is already reduced.
      const auto g1 = static_cast<std::int64_t>(detail::gcd64(absu(x.num_), static_cast<std::uint64_t>(y.den_)));
      const auto g2 = static_cast<std::int64_t>(detail::gcd64(absu(y.num_), static_cast<std::uint64_t>(x.den_)));
      const detail::i128 n = detail::i128(x.num_ / g1) * (y.num_ / g2);
      const detail::i128 d = detail::i128(x.den_ / g2) * (y.den_ / g1);
      if (detail::fits_small(n) && detail::fits_small(d)) {
        Rational r;
        r.num_ = static_cast<std::int64_t>(n);
        r.den_ = static_cast<std::int64_t>(d);
        return r;
      }
      return from_i128(n, d);
    }
    return Rational(mpq_class(x.to_mpq() * y.to_mpq()));
  }

  friend Rational operator/(const Rational& x, const Rational& y) {
    if (y.is_zero()) throw std::domain_error("Rational: division by zero");
    return x * y.reciprocal();
  }

  Rational& operator+=(const Rational& o) { return *this = *this + o; }
  Rational& operator-=(const Rational& o) { return *this = *this - o; }
  Rational& operator*=(const Rational& o) { return *this = *this * o; }
  Rational& operator/=(const Rational& o) { return *this = *this / o; }

  [[nodiscard]] Rational reciprocal() const {
    if (is_zero()) throw std::domain_error("Rational: reciprocal of zero");
    if (big_) return Rational(mpq_class(1 / *big_));
    Rational r;
    r.num_ = num_ < 0 ? -den_ : den_;
    r.den_ = num_ < 0 ? -num_ : num_;
    return r;
  }

  friend bool operator==(const Rational& x, const Rational& y) {
    if (!x.big_ && !y.big_) return x.num_ == y.num_ && x.den_ == y.den_;
    if (!x.big_ || !y.big_) return false;  // canonical: different storage means different value
    return *x.big_ == *y.big_;
  }

  friend std::strong_ordering operator<=>(const Rational& x, const Rational& y) {
    if (!x.big_ && !y.big_) {
      const detail::i128 l = detail::i128(x.num_) * y.den_;
      const detail::i128 r = detail::i128(y.num_) * x.den_;
      return l <=> r;
    }
    const int c = cmp(x.to_mpq(), y.to_mpq());
    return c <=> 0;
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

private:
  static std::uint64_t absu(std::int64_t v) {
    return v < 0 ? std::uint64_t(0) - static_cast<std::uint64_t>(v) : static_cast<std::uint64_t>(v);
  }

  static Rational from_i128(detail::i128 n, detail::i128 d) {
    Rational r;
    r.assign(n, d);
    return r;
  }

  void assign(detail::i128 n, detail::i128 d) {
    if (d < 0) {
      n = -n;
      d = -d;
    }
    if (n == 0) {
      num_ = 0;
      den_ = 1;
      big_.reset();
      return;
    }
    const detail::u128 g = detail::gcd128(detail::abs128(n), detail::u128(d));
    if (g > 1) {
      n /= static_cast<detail::i128>(g);
      d /= static_cast<detail::i128>(g);
    }
    if (detail::fits_small(n) && detail::fits_small(d)) {
      num_ = static_cast<std::int64_t>(n);
      den_ = static_cast<std::int64_t>(d);
      big_.reset();
      return;
    }
    mpq_class q;
    q.get_num() = detail::to_mpz(n);
    q.get_den() = detail::to_mpz(d);
    big_ = std::make_shared<const mpq_class>(std::move(q));
    num_ = 0;
    den_ = 1;
  }

  // q must already be canonical.
  void assign_big(mpq_class q) {
    if (detail::fits_small(q.get_num()) && detail::fits_small(q.get_den())) {
      num_ = q.get_num().get_si();
      den_ = q.get_den().get_si();
      big_.reset();
      return;
    }
    big_ = std::make_shared<const mpq_class>(std::move(q));
    num_ = 0;
    den_ = 1;
  }

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
  std::shared_ptr<const mpq_class> big_;
};

}  // namespace heisrep
