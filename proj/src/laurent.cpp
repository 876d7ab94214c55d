#include "wt/laurent.hpp"

#include <cctype>
#include <sstream>

#include "wt/error.hpp"

namespace wt {

LaurentPoly LaurentPoly::monomial(BigInt coefficient, Exponent exponent) {
  LaurentPoly f;
  f.add_term(exponent, coefficient);
  return f;
}

BigInt LaurentPoly::coefficient(Exponent exponent) const {
  auto it = terms_.find(exponent);
  return it == terms_.end() ? BigInt(0) : it->second;
}

void LaurentPoly::add_term(Exponent exponent, const BigInt& coefficient) {
  if (coefficient == 0) return;
  auto [it, inserted] = terms_.try_emplace(exponent, coefficient);
  if (inserted) return;
  it->second += coefficient;
  if (it->second == 0) terms_.erase(it);
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly out = *this;
  for (auto& [e, c] : out.terms_) c = -c;
  return out;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& other) {
  for (const auto& [e, c] : other.terms_) add_term(e, c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& other) {
  for (const auto& [e, c] : other.terms_) add_term(e, -c);
  return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly out;
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) out.add_term(ea + eb, ca * cb);
  }
  return out;
}

LaurentPoly LaurentPoly::involute() const {
  LaurentPoly out;
  for (const auto& [e, c] : terms_) out.terms_.emplace(-e, c);
  return out;
}

namespace {

Rational power(const Rational& base, std::int64_t exponent) {
  Rational result = 1;
  Rational b = exponent < 0 ? Rational(1) / base : base;
  std::uint64_t n = exponent < 0 ? static_cast<std::uint64_t>(-exponent) : static_cast<std::uint64_t>(exponent);
  while (n) {
    if (n & 1) result *= b;
    b *= b;
    n >>= 1;
  }
  return result;
}

}  // namespace

Rational LaurentPoly::eval(const Rational& t) const {
  if (t == 0) throw DomainError("cannot evaluate a Laurent polynomial at t = 0");
  Rational total = 0;
  for (const auto& [e, c] : terms_) total += Rational(c) * power(t, e);
  return total;
}

bool LaurentPoly::vanishes_at_one() const {
  BigInt total = 0;
  for (const auto& [e, c] : terms_) total += c;
  return total == 0;
}

LaurentPoly symmetric_power(std::int64_t n) {
  return LaurentPoly::monomial(1, n) + LaurentPoly::monomial(1, -n);
}

// ---------------------------------------------------------------------------
// Text forms

namespace {

std::string abs_string(const BigInt& c) { return (c < 0 ? BigInt(-c) : c).str(); }

class TermScanner {
 public:
  TermScanner(std::string_view text, char variable) : text_(text), variable_(variable) {}

  // Calls emit(coefficient, exponent) for every term.
  template <typename Emit>
  void scan(Emit emit) {
    skip_space();
    if (pos_ == text_.size()) fail("empty polynomial");
    bool first = true;
    while (true) {
      skip_space();
      if (pos_ == text_.size()) break;
      int sign = 1;
      if (peek() == '+' || peek() == '-') {
        sign = peek() == '-' ? -1 : 1;
        ++pos_;
        skip_space();
      } else if (!first) {
        fail("expected '+' or '-' between terms");
      }
      first = false;
      BigInt coefficient = 1;
      bool has_number = false;
      if (std::isdigit(static_cast<unsigned char>(peek()))) {
        coefficient = read_natural();
        has_number = true;
        skip_space();
        if (peek() == '*') {
          ++pos_;
          skip_space();
          if (peek() != variable_) fail(std::string("expected '") + variable_ + "' after '*'");
        }
      }
      std::int64_t exponent = 0;
      if (peek() == variable_) {
        ++pos_;
        exponent = 1;
        skip_space();
        if (peek() == '^') {
          ++pos_;
          skip_space();
          int exponent_sign = 1;
          if (peek() == '-' || peek() == '+') {
            exponent_sign = peek() == '-' ? -1 : 1;
            ++pos_;
          }
          if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected an exponent");
          exponent = exponent_sign * static_cast<std::int64_t>(read_natural());
        }
      } else if (!has_number) {
        fail("expected a coefficient or '" + std::string(1, variable_) + "'");
      }
      emit(BigInt(sign) * coefficient, exponent);
    }
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(what + " at position " + std::to_string(pos_), pos_);
  }
  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }
  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  BigInt read_natural() {
    std::size_t start = pos_;
    while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    return BigInt(std::string(text_.substr(start, pos_ - start)));
  }

  std::string_view text_;
  char variable_;
  std::size_t pos_ = 0;
};

}  // namespace

std::string render(const LaurentPoly& f) {
  if (f.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [e, c] : f.terms()) {
    if (first) {
      out << (c < 0 ? "-" : "");
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    first = false;
    out << abs_string(c) << "*t^" << e;
  }
  return out.str();
}

LaurentPoly parse_laurent(std::string_view text) {
  LaurentPoly f;
  TermScanner(text, 't').scan([&](const BigInt& c, std::int64_t e) { f += LaurentPoly::monomial(c, e); });
  return f;
}

XPoly::XPoly(std::vector<BigInt> coefficients) : coefficients_(std::move(coefficients)) {
  while (!coefficients_.empty() && coefficients_.back() == 0) coefficients_.pop_back();
}

BigInt XPoly::coefficient(std::size_t power) const {
  if (power == 0 || power > coefficients_.size()) return 0;
  return coefficients_[power - 1];
}

Rational XPoly::eval(const Rational& x) const {
  Rational total = 0;
  for (auto it = coefficients_.rbegin(); it != coefficients_.rend(); ++it) total = (total + Rational(*it)) * x;
  return total;
}

std::string render(const XPoly& p) {
  if (p.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (std::size_t i = 0; i < p.coefficients().size(); ++i) {
    const BigInt& c = p.coefficients()[i];
    if (c == 0) continue;
    if (first) {
      out << (c < 0 ? "-" : "");
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (abs_string(c) != "1") out << abs_string(c);
    out << 'x';
    if (i > 0) out << '^' << (i + 1);
  }
  return out.str();
}

XPoly parse_x_poly(std::string_view text) {
  std::vector<BigInt> coefficients;
  TermScanner(text, 'x').scan([&](const BigInt& c, std::int64_t e) {
    if (e < 0) throw ParseError("negative powers of x are not allowed", 0);
    if (e == 0) {
      if (c != 0) throw ParseError("an x-polynomial has no constant term", 0);
      return;
    }
    if (coefficients.size() < static_cast<std::size_t>(e)) coefficients.resize(e);
    coefficients[e - 1] += c;
  });
  return XPoly(std::move(coefficients));
}

// ---------------------------------------------------------------------------
// Change of variables

XPoly to_x_poly(const LaurentPoly& f) {
  if (!f.is_symmetric()) throw DomainError("to_x_poly: polynomial is not symmetric under t -> t^-1: " + render(f));
  if (!f.vanishes_at_one()) throw DomainError("to_x_poly: polynomial does not vanish at t = 1: " + render(f));
  if (f.is_zero()) return XPoly();

  // Write f = c_0 + sum_{n>=1} c_n p_n with p_n = t^n + t^-n, then expand
  // p_n in x through p_0 = 2, p_1 = 2 - x, p_n = (2 - x) p_{n-1} - p_{n-2}.
  const std::int64_t top = f.terms().rbegin()->first;
  std::vector<BigInt> basis(top + 1);
  LaurentPoly rest = f;
  for (std::int64_t n = top; n >= 1; --n) {
    basis[n] = rest.coefficient(n);
    rest -= LaurentPoly::constant(basis[n]) * symmetric_power(n);
  }
  basis[0] = rest.coefficient(0);

  // Dense polynomials in x, constant term at index 0.
  using Dense = std::vector<BigInt>;
  Dense total(top + 2);
  total[0] = basis[0];
  Dense previous{2};
  Dense current{2, -1};
  auto accumulate = [&](const Dense& p, const BigInt& c) {
    for (std::size_t i = 0; i < p.size(); ++i) total[i] += c * p[i];
  };
  if (top >= 1) accumulate(current, basis[1]);
  for (std::int64_t n = 2; n <= top; ++n) {
    Dense next(current.size() + 1);
    for (std::size_t i = 0; i < current.size(); ++i) {
      next[i] += 2 * current[i];
      next[i + 1] -= current[i];
    }
    for (std::size_t i = 0; i < previous.size(); ++i) next[i] -= previous[i];
    previous = std::move(current);
    current = std::move(next);
    accumulate(current, basis[n]);
  }
  // total[0] is f(1), which is zero here.
  return XPoly(Dense(total.begin() + 1, total.end()));
}

LaurentPoly from_x_poly(const XPoly& p) {
  const LaurentPoly x = LaurentPoly::constant(2) - symmetric_power(1);
  LaurentPoly out;
  LaurentPoly x_power = LaurentPoly::constant(1);
  for (const BigInt& c : p.coefficients()) {
    x_power = x_power * x;
    out += LaurentPoly::constant(c) * x_power;
  }
  return out;
}

}  // namespace wt
