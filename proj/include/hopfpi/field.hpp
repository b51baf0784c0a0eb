#pragma once

#include <gmpxx.h>

#include <charconv>
#include <concepts>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>

#include "hopfpi/errors.hpp"

namespace hopfpi {

/// Scalar types usable as the base field. Every operation is exact and
/// equality is syntactic on canonical representatives.
template <class K>
concept ExactField = std::regular<K> && requires(const K a, const K b, std::string_view s) {
  { K(1L) };
  { a + b } -> std::same_as<K>;
  { a - b } -> std::same_as<K>;
  { a * b } -> std::same_as<K>;
  { a / b } -> std::same_as<K>;
  { -a } -> std::same_as<K>;
  { a.is_zero() } -> std::same_as<bool>;
  { a.str() } -> std::same_as<std::string>;
  { K::parse(s) } -> std::same_as<K>;
};

namespace detail {

inline bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (c < '0' || c > '9') return false;
  return true;
}

// Accepts an optional sign followed by decimal digits.
inline bool is_integer_literal(std::string_view s) {
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  return all_digits(s);
}

}  // namespace detail

/// Arbitrary-precision rational number, always kept in lowest terms with a
/// positive denominator.
class Rational {
 public:
  Rational() = default;
  Rational(long n) : v_(n) {}  // NOLINT(google-explicit-constructor)
  explicit Rational(mpq_class v) : v_(std::move(v)) { v_.canonicalize(); }

  Rational operator+(const Rational& o) const { return Rational(mpq_class(v_ + o.v_)); }
  Rational operator-(const Rational& o) const { return Rational(mpq_class(v_ - o.v_)); }
  Rational operator*(const Rational& o) const { return Rational(mpq_class(v_ * o.v_)); }
  Rational operator/(const Rational& o) const {
    if (o.is_zero()) throw Error("division by zero");
    return Rational(mpq_class(v_ / o.v_));
  }
  Rational operator-() const { return Rational(mpq_class(-v_)); }
  Rational& operator+=(const Rational& o) {
    v_ += o.v_;
    return *this;
  }
  Rational& operator-=(const Rational& o) {
    v_ -= o.v_;
    return *this;
  }
  Rational& operator*=(const Rational& o) {
    v_ *= o.v_;
    return *this;
  }

  bool operator==(const Rational& o) const { return v_ == o.v_; }
  bool is_zero() const { return sgn(v_) == 0; }
  const mpq_class& value() const { return v_; }

  /// "p/q", or "p" when q = 1.
  std::string str() const { return v_.get_str(10); }

  static Rational parse(std::string_view s) {
    const auto slash = s.find('/');
    const std::string_view num = s.substr(0, slash);
    if (!detail::is_integer_literal(num)) throw ParseError(0, "bad rational scalar \"" + std::string(s) + "\"");
    const std::string numerator(num.front() == '+' ? num.substr(1) : num);
    if (slash == std::string_view::npos) return Rational(mpq_class(mpz_class(numerator, 10)));
    const std::string_view den = s.substr(slash + 1);
    if (!detail::all_digits(den)) throw ParseError(0, "bad rational scalar \"" + std::string(s) + "\"");
    mpz_class d(std::string(den), 10);
    if (d == 0) throw ParseError(0, "zero denominator in \"" + std::string(s) + "\"");
    return Rational(mpq_class(mpz_class(numerator, 10), d));
  }

 private:
  mpq_class v_;
};

/// Residue modulo the active prime. The modulus is process-wide and is set
/// through ModP::Scope before any ModP value is created; values from two
/// different moduli must never be mixed.
class ModP {
 public:
  class Scope {
   public:
    explicit Scope(std::uint32_t p) : previous_(modulus_) { modulus_ = p; }
    ~Scope() { modulus_ = previous_; }
    Scope(const Scope&) = delete;
    Scope& operator=(const Scope&) = delete;

   private:
    std::uint32_t previous_;
  };

  static std::uint32_t modulus() { return modulus_; }

  ModP() = default;
  ModP(long n) {  // NOLINT(google-explicit-constructor)
    const auto p = static_cast<long long>(modulus_);
    if (p == 0) throw Error("ModP used without an active modulus");
    long long r = static_cast<long long>(n) % p;
    if (r < 0) r += p;
    v_ = static_cast<std::uint32_t>(r);
  }

  ModP operator+(const ModP& o) const { return raw((std::uint64_t{v_} + o.v_) % modulus_); }
  ModP operator-(const ModP& o) const { return raw((std::uint64_t{v_} + modulus_ - o.v_) % modulus_); }
  ModP operator*(const ModP& o) const { return raw((std::uint64_t{v_} * o.v_) % modulus_); }
  ModP operator/(const ModP& o) const { return *this * o.inverse(); }
  ModP operator-() const { return raw(v_ == 0 ? 0 : modulus_ - v_); }
  ModP& operator+=(const ModP& o) { return *this = *this + o; }
  ModP& operator-=(const ModP& o) { return *this = *this - o; }
  ModP& operator*=(const ModP& o) { return *this = *this * o; }

  bool operator==(const ModP& o) const = default;
  bool is_zero() const { return v_ == 0; }
  std::uint32_t value() const { return v_; }

  ModP inverse() const {
    if (v_ == 0) throw Error("division by zero");
    // Fermat: a^(p-2)
    std::uint64_t result = 1;
    std::uint64_t base = v_;
    std::uint64_t e = modulus_ - 2;
    while (e > 0) {
      if (e & 1U) result = result * base % modulus_;
      base = base * base % modulus_;
      e >>= 1U;
    }
    return raw(result);
  }

  std::string str() const { return std::to_string(v_); }

  /// Accepts an integer literal (reduced mod p) or "a/b" with b invertible.
  static ModP parse(std::string_view s) {
    const auto slash = s.find('/');
    const auto reduce = [&](std::string_view t) {
      if (!detail::is_integer_literal(t)) throw ParseError(0, "bad prime-field scalar \"" + std::string(s) + "\"");
      mpz_class z(std::string(t.front() == '+' ? t.substr(1) : t), 10);
      mpz_class r;
      mpz_fdiv_r_ui(r.get_mpz_t(), z.get_mpz_t(), modulus_);
      return raw(r.get_ui());
    };
    if (modulus_ == 0) throw Error("ModP used without an active modulus");
    if (slash == std::string_view::npos) return reduce(s);
    const ModP d = reduce(s.substr(slash + 1));
    if (d.is_zero()) throw ParseError(0, "zero denominator in \"" + std::string(s) + "\"");
    return reduce(s.substr(0, slash)) / d;
  }

 private:
  static ModP raw(std::uint64_t v) {
    ModP m;
    m.v_ = static_cast<std::uint32_t>(v);
    return m;
  }

  std::uint32_t v_ = 0;
  static inline std::uint32_t modulus_ = 0;
};

static_assert(ExactField<Rational>);
static_assert(ExactField<ModP>);

inline bool is_prime(std::uint64_t p) {
  if (p < 2) return false;
  for (std::uint64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

/// The base field of a structure: the rationals or F_p with p < 2^31 prime.
struct FieldSpec {
  enum class Kind { rationals, prime_field };
  Kind kind = Kind::rationals;
  std::uint32_t p = 0;

  static FieldSpec rationals() { return {}; }
  static FieldSpec prime_field(std::uint32_t p) {
    if (p >= (1U << 31) || !is_prime(p)) throw ParseError(0, "field modulus " + std::to_string(p) + " is not a prime < 2^31");
    return {Kind::prime_field, p};
  }

  /// "Q" or "Fp:<p>".
  static FieldSpec parse(std::string_view s) {
    if (s == "Q") return rationals();
    if (s.substr(0, 3) == "Fp:" && detail::all_digits(s.substr(3))) {
      std::uint64_t p = 0;
      const auto digits = s.substr(3);
      auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), p);
      if (ec != std::errc{} || p >= (1ULL << 31)) throw ParseError(0, "bad field \"" + std::string(s) + "\"");
      return prime_field(static_cast<std::uint32_t>(p));
    }
    throw ParseError(0, "bad field \"" + std::string(s) + "\" (expected Q or Fp:<p>)");
  }

  std::string str() const { return kind == Kind::rationals ? "Q" : "Fp:" + std::to_string(p); }

  /// Characteristic; 0 for the rationals.
  std::uint32_t characteristic() const { return kind == Kind::rationals ? 0 : p; }

  bool operator==(const FieldSpec&) const = default;
};

/// Invokes `f.template operator()<K>()` with K the scalar type of `spec`,
/// installing the prime modulus for the duration of the call.
template <class F>
decltype(auto) with_field(const FieldSpec& spec, F&& f) {
  if (spec.kind == FieldSpec::Kind::rationals) return std::forward<F>(f).template operator()<Rational>();
  ModP::Scope scope(spec.p);
  return std::forward<F>(f).template operator()<ModP>();
}

}  // namespace hopfpi
