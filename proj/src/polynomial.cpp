#include "vizing/polynomial.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

namespace viz {

std::string VarId::str() const {
  std::ostringstream os;
  switch (kind()) {
    case VarKind::Vertex: os << "x_" << a() << b(); break;
    case VarKind::EdgeG: os << "e_g" << a() << b(); break;
    case VarKind::EdgeH: os << "e_h" << a() << b(); break;
  }
  return os.str();
}

Monomial::Monomial(VarId v, int exp) {
  if (exp <= 0) throw std::invalid_argument("Monomial: exponent must be positive");
  factors_.emplace_back(v, exp);
}

int Monomial::degree() const {
  int d = 0;
  for (const auto& [v, e] : factors_) d += e;
  return d;
}

Monomial Monomial::operator*(const Monomial& o) const {
  Monomial r;
  r.factors_.reserve(factors_.size() + o.factors_.size());
  auto a = factors_.begin(), b = o.factors_.begin();
  while (a != factors_.end() && b != o.factors_.end()) {
    if (a->first < b->first)
      r.factors_.push_back(*a++);
    else if (b->first < a->first)
      r.factors_.push_back(*b++);
    else {
      r.factors_.emplace_back(a->first, a->second + b->second);
      ++a, ++b;
    }
  }
  r.factors_.insert(r.factors_.end(), a, factors_.end());
  r.factors_.insert(r.factors_.end(), b, o.factors_.end());
  return r;
}

bool Monomial::divides(const Monomial& o) const {
  auto b = o.factors_.begin();
  for (const auto& f : factors_) {
    while (b != o.factors_.end() && b->first < f.first) ++b;
    if (b == o.factors_.end() || b->first != f.first || b->second < f.second) return false;
  }
  return true;
}

Monomial Monomial::divide_into(const Monomial& o) const {
  Monomial r;
  auto a = factors_.begin();
  for (const auto& f : o.factors_) {
    if (a != factors_.end() && a->first == f.first) {
      const int e = f.second - a->second;
      if (e < 0) throw std::invalid_argument("Monomial: not divisible");
      if (e > 0) r.factors_.emplace_back(f.first, e);
      ++a;
    } else {
      r.factors_.push_back(f);
    }
  }
  if (a != factors_.end()) throw std::invalid_argument("Monomial: not divisible");
  return r;
}

Monomial Monomial::lcm(const Monomial& o) const {
  Monomial r;
  auto a = factors_.begin(), b = o.factors_.begin();
  while (a != factors_.end() && b != o.factors_.end()) {
    if (a->first < b->first)
      r.factors_.push_back(*a++);
    else if (b->first < a->first)
      r.factors_.push_back(*b++);
    else {
      r.factors_.emplace_back(a->first, std::max(a->second, b->second));
      ++a, ++b;
    }
  }
  r.factors_.insert(r.factors_.end(), a, factors_.end());
  r.factors_.insert(r.factors_.end(), b, o.factors_.end());
  return r;
}

bool Monomial::coprime(const Monomial& o) const {
  auto a = factors_.begin(), b = o.factors_.begin();
  while (a != factors_.end() && b != o.factors_.end()) {
    if (a->first < b->first)
      ++a;
    else if (b->first < a->first)
      ++b;
    else
      return false;
  }
  return true;
}

std::string Monomial::str() const {
  if (is_one()) return "1";
  std::string s;
  for (const auto& [v, e] : factors_) {
    if (!s.empty()) s += "*";
    s += v.str();
    if (e > 1) s += "^" + std::to_string(e);
  }
  return s;
}

int TermOrder::cmp(const Monomial& a, const Monomial& b) const {
  const int da = a.degree(), db = b.degree();
  if (da != db) return da < db ? -1 : 1;
  // Walk variables in priority order (ascending code); the monomial with the
  // larger exponent on the first differing variable is the larger one.
  auto ia = a.factors_.begin(), ib = b.factors_.begin();
  while (ia != a.factors_.end() && ib != b.factors_.end()) {
    if (ia->first < ib->first) return 1;   // a has the higher-priority variable
    if (ib->first < ia->first) return -1;
    if (ia->second != ib->second) return ia->second > ib->second ? 1 : -1;
    ++ia, ++ib;
  }
  if (ia != a.factors_.end()) return 1;
  if (ib != b.factors_.end()) return -1;
  return 0;
}

Polynomial::Polynomial(Rational c) {
  if (!c.is_zero()) terms_.emplace_back(Monomial::one(), std::move(c));
}

Polynomial::Polynomial(const Monomial& m, Rational c) {
  if (!c.is_zero()) terms_.emplace_back(m, std::move(c));
}

const Monomial& Polynomial::leading_monomial() const {
  if (is_zero()) throw std::logic_error("Polynomial: leading term of zero");
  return terms_.front().first;
}

const Rational& Polynomial::leading_coeff() const {
  if (is_zero()) throw std::logic_error("Polynomial: leading term of zero");
  return terms_.front().second;
}

Rational Polynomial::coeff(const Monomial& m) const {
  const TermOrder ord;
  auto it = std::lower_bound(terms_.begin(), terms_.end(), m,
                             [&](const Term& t, const Monomial& mm) {
                               return ord.greater(t.first, mm);
                             });
  if (it != terms_.end() && it->first == m) return it->second;
  return Rational(0);
}

void Polynomial::normalize() {
  const TermOrder ord;
  std::sort(terms_.begin(), terms_.end(),
            [&](const Term& x, const Term& y) { return ord.greater(x.first, y.first); });
  std::vector<Term> merged;
  merged.reserve(terms_.size());
  for (auto& t : terms_) {
    if (!merged.empty() && merged.back().first == t.first)
      merged.back().second += t.second;
    else
      merged.push_back(std::move(t));
  }
  merged.erase(std::remove_if(merged.begin(), merged.end(),
                              [](const Term& t) { return t.second.is_zero(); }),
               merged.end());
  terms_ = std::move(merged);
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  const TermOrder ord;
  std::vector<Term> out;
  out.reserve(terms_.size() + o.terms_.size());
  auto a = terms_.begin();
  auto b = o.terms_.begin();
  while (a != terms_.end() && b != o.terms_.end()) {
    const int c = ord.cmp(a->first, b->first);
    if (c > 0)
      out.push_back(std::move(*a++));
    else if (c < 0)
      out.push_back(*b++);
    else {
      Rational s = a->second + b->second;
      if (!s.is_zero()) out.emplace_back(a->first, std::move(s));
      ++a, ++b;
    }
  }
  out.insert(out.end(), std::make_move_iterator(a), std::make_move_iterator(terms_.end()));
  out.insert(out.end(), b, o.terms_.end());
  terms_ = std::move(out);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) { return *this += -o; }

Polynomial Polynomial::operator+(const Polynomial& o) const {
  Polynomial r(*this);
  r += o;
  return r;
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
  Polynomial r(*this);
  r -= o;
  return r;
}

Polynomial Polynomial::operator-() const {
  Polynomial r(*this);
  for (auto& t : r.terms_) t.second = -t.second;
  return r;
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
  Polynomial r;
  r.terms_.reserve(terms_.size() * o.terms_.size());
  for (const auto& [ma, ca] : terms_)
    for (const auto& [mb, cb] : o.terms_) r.terms_.emplace_back(ma * mb, ca * cb);
  r.normalize();
  return r;
}

Polynomial Polynomial::scaled(const Rational& c) const {
  if (c.is_zero()) return Polynomial();
  Polynomial r(*this);
  for (auto& t : r.terms_) t.second *= c;
  return r;
}

Polynomial Polynomial::times_term(const Monomial& m, const Rational& c) const {
  if (c.is_zero()) return Polynomial();
  Polynomial r;
  r.terms_.reserve(terms_.size());
  for (const auto& [mm, cc] : terms_) r.terms_.emplace_back(m * mm, c * cc);
  return r;  // multiplying by a monomial preserves the term order
}

Polynomial Polynomial::monic() const {
  if (is_zero()) return *this;
  return scaled(Rational(1) / leading_coeff());
}

std::string Polynomial::str() const {
  if (is_zero()) return "0";
  std::string s;
  for (const auto& [m, c] : terms_) {
    const bool neg = c.sign() < 0;
    const Rational a = neg ? -c : c;
    if (s.empty())
      s += neg ? "-" : "";
    else
      s += neg ? " - " : " + ";
    if (m.is_one())
      s += a.str();
    else if (a == Rational(1))
      s += m.str();
    else
      s += a.str() + "*" + m.str();
  }
  return s;
}

}  // namespace viz
