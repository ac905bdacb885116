#include "fano/rational.hpp"

#include <sstream>
#include <stdexcept>
#include <utility>

namespace fano {

namespace {
const BigInt kZero = 0;

BigInt int_gcd(BigInt a, BigInt b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    BigInt r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}
}  // namespace

Polynomial::Polynomial(std::initializer_list<BigInt> coeffs) : coeffs_(coeffs) { trim(); }
Polynomial::Polynomial(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

Polynomial Polynomial::constant(const BigInt& c) {
  Polynomial p;
  if (c != 0) p.coeffs_.push_back(c);
  return p;
}

Polynomial Polynomial::monomial(const BigInt& c, std::size_t deg) {
  Polynomial p;
  if (c != 0) {
    p.coeffs_.assign(deg + 1, BigInt(0));
    p.coeffs_[deg] = c;
  }
  return p;
}

void Polynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

const BigInt& Polynomial::coeff(std::size_t i) const {
  return i < coeffs_.size() ? coeffs_[i] : kZero;
}

const BigInt& Polynomial::leading() const {
  assert(!is_zero());
  return coeffs_.back();
}

BigInt Polynomial::content() const {
  BigInt g = 0;
  for (const BigInt& c : coeffs_) {
    g = int_gcd(g, c);
    if (g == 1) break;
  }
  return g;
}

Polynomial Polynomial::primitive_part() const {
  if (is_zero()) return {};
  BigInt g = content();
  Polynomial out = *this;
  for (BigInt& c : out.coeffs_) c /= g;
  return out;
}

Polynomial Polynomial::operator-() const {
  Polynomial out = *this;
  for (BigInt& c : out.coeffs_) c = -c;
  return out;
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
  std::vector<BigInt> cs(std::max(a.coeffs_.size(), b.coeffs_.size()), BigInt(0));
  for (std::size_t i = 0; i < cs.size(); ++i) cs[i] = a.coeff(i) + b.coeff(i);
  return Polynomial(std::move(cs));
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + (-b); }

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<BigInt> cs(a.coeffs_.size() + b.coeffs_.size() - 1, BigInt(0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) cs[i + j] += a.coeffs_[i] * b.coeffs_[j];
  return Polynomial(std::move(cs));
}

Polynomial Polynomial::operator*(const BigInt& s) const {
  if (s == 0) return {};
  Polynomial out = *this;
  for (BigInt& c : out.coeffs_) c *= s;
  return out;
}

Polynomial Polynomial::exact_divide(const Polynomial& d) const {
  assert(!d.is_zero());
  if (is_zero()) return {};
  assert(degree() >= d.degree());
  std::vector<BigInt> q(static_cast<std::size_t>(degree() - d.degree()) + 1, BigInt(0));
  Polynomial rem = *this;
  while (!rem.is_zero() && rem.degree() >= d.degree()) {
    const BigInt& lr = rem.leading();
    const BigInt& ld = d.leading();
    assert(lr % ld == 0 && "exact_divide: non-exact division");
    BigInt c = lr / ld;
    std::size_t shift = static_cast<std::size_t>(rem.degree() - d.degree());
    q[shift] = c;
    rem = rem - Polynomial::monomial(c, shift) * d;
  }
  assert(rem.is_zero() && "exact_divide: nonzero remainder");
  return Polynomial(std::move(q));
}

namespace {
// Pseudo-remainder: prem(a,b) with implicit multiplication of a by lc(b)^(deg a - deg b + 1).
Polynomial pseudo_rem(Polynomial a, const Polynomial& b) {
  assert(!b.is_zero());
  const BigInt& lb = b.leading();
  while (!a.is_zero() && a.degree() >= b.degree()) {
    std::size_t shift = static_cast<std::size_t>(a.degree() - b.degree());
    Polynomial t = Polynomial::monomial(a.leading(), shift) * b;
    a = a * lb - t;
  }
  return a;
}
}  // namespace

Polynomial Polynomial::gcd(const Polynomial& a0, const Polynomial& b0) {
  if (a0.is_zero() && b0.is_zero()) return {};
  if (a0.is_zero()) return b0.primitive_part().leading() > 0 ? b0.primitive_part() : -b0.primitive_part();
  if (b0.is_zero()) return a0.primitive_part().leading() > 0 ? a0.primitive_part() : -a0.primitive_part();
  Polynomial a = a0.primitive_part();
  Polynomial b = b0.primitive_part();
  if (a.degree() < b.degree()) std::swap(a, b);
  while (!b.is_zero()) {
    Polynomial r = pseudo_rem(a, b);
    a = std::move(b);
    b = r.is_zero() ? Polynomial{} : r.primitive_part();
  }
  if (a.leading() < 0) a = -a;
  return a;
}

std::string Polynomial::str(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    const BigInt& c = coeffs_[i];
    if (c == 0) continue;
    BigInt mag = c < 0 ? BigInt(-c) : c;
    if (first) {
      if (c < 0) os << "-";
      first = false;
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    if (i == 0) {
      os << mag;
    } else {
      if (mag != 1) os << mag << "*";
      os << var;
      if (i > 1) os << "^" << i;
    }
  }
  return os.str();
}

RationalFunction::RationalFunction() : num_{}, den_{Polynomial::constant(1)} {}

RationalFunction::RationalFunction(Polynomial num, Polynomial den)
    : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw std::invalid_argument("RationalFunction: zero denominator");
  canonicalize();
}

RationalFunction RationalFunction::integer(const BigInt& v) {
  return RationalFunction(Polynomial::constant(v), Polynomial::constant(1));
}

RationalFunction RationalFunction::from_poly(Polynomial p) {
  return RationalFunction(std::move(p), Polynomial::constant(1));
}

RationalFunction RationalFunction::variable() {
  return RationalFunction(Polynomial::monomial(1, 1), Polynomial::constant(1));
}

bool RationalFunction::is_one() const {
  return num_ == Polynomial::constant(1) && den_ == Polynomial::constant(1);
}

void RationalFunction::canonicalize() {
  if (num_.is_zero()) {
    den_ = Polynomial::constant(1);
    return;
  }
  Polynomial g = Polynomial::gcd(num_, den_);
  if (g.degree() > 0) {
    num_ = num_.exact_divide(g);
    den_ = den_.exact_divide(g);
  }
  BigInt c = [&] {
    BigInt cn = num_.content();
    BigInt cd = den_.content();
    BigInt r = cn;
    // gcd of the two contents
    while (cd != 0) {
      BigInt t = r % cd;
      r = cd;
      cd = t;
    }
    return r < 0 ? BigInt(-r) : r;
  }();
  if (c > 1) {
    num_ = num_.exact_divide(Polynomial::constant(c));
    den_ = den_.exact_divide(Polynomial::constant(c));
  }
  if (den_.leading() < 0) {
    num_ = -num_;
    den_ = -den_;
  }
}

RationalFunction RationalFunction::operator-() const {
  RationalFunction out = *this;
  out.num_ = -out.num_;
  return out;
}

RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
  return RationalFunction(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) {
  return a + (-b);
}

RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
  return RationalFunction(a.num_ * b.num_, a.den_ * b.den_);
}

RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
  if (b.is_zero()) throw std::invalid_argument("RationalFunction: division by zero");
  return RationalFunction(a.num_ * b.den_, a.den_ * b.num_);
}

std::string RationalFunction::str() const {
  if (den_ == Polynomial::constant(1)) return num_.str();
  return "(" + num_.str() + ") / (" + den_.str() + ")";
}

}  // namespace fano
