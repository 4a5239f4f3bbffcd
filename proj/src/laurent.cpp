#include "torus/laurent.hpp"

#include <algorithm>
#include <cctype>

#include "torus/errors.hpp"

namespace torus {

LaurentPoly LaurentPoly::constant(const Integer &c) { return monomial(c, 0); }

LaurentPoly LaurentPoly::monomial(const Integer &c, long e) {
  LaurentPoly p;
  if (c != 0) p.terms_.emplace_back(e, c);
  return p;
}

LaurentPoly LaurentPoly::from_terms(std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(),
            [](const Term &a, const Term &b) { return a.first < b.first; });
  LaurentPoly p;
  for (auto &t : terms) {
    if (!p.terms_.empty() && p.terms_.back().first == t.first)
      p.terms_.back().second += t.second;
    else
      p.terms_.push_back(std::move(t));
    if (p.terms_.back().second == 0) p.terms_.pop_back();
  }
  return p;
}

Integer LaurentPoly::coeff(long e) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), e,
                             [](const Term &t, long x) { return t.first < x; });
  if (it != terms_.end() && it->first == e) return it->second;
  return 0;
}

long LaurentPoly::min_exp() const {
  if (terms_.empty()) throw Error(ErrorKind::BadParameters, "degree of zero polynomial");
  return terms_.front().first;
}

long LaurentPoly::max_exp() const {
  if (terms_.empty()) throw Error(ErrorKind::BadParameters, "degree of zero polynomial");
  return terms_.back().first;
}

bool LaurentPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].first == 0);
}

bool LaurentPoly::is_one() const {
  return terms_.size() == 1 && terms_[0].first == 0 && terms_[0].second == 1;
}

LaurentPoly LaurentPoly::bar() const {
  LaurentPoly p;
  p.terms_.reserve(terms_.size());
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it)
    p.terms_.emplace_back(-it->first, it->second);
  return p;
}

LaurentPoly LaurentPoly::shifted(long e) const {
  LaurentPoly p = *this;
  for (auto &t : p.terms_) t.first += e;
  return p;
}

Integer LaurentPoly::augmentation() const {
  Integer s = 0;
  for (auto &t : terms_) s += t.second;
  return s;
}

Integer LaurentPoly::max_abs_coeff() const {
  Integer m = 0;
  for (auto &t : terms_)
    if (abs(t.second) > m) m = abs(t.second);
  return m;
}

void LaurentPoly::add_term(const Integer &c, long e) {
  if (c == 0) return;
  auto it = std::lower_bound(terms_.begin(), terms_.end(), e,
                             [](const Term &t, long x) { return t.first < x; });
  if (it != terms_.end() && it->first == e) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  } else {
    terms_.insert(it, Term(e, c));
  }
}

static std::vector<LaurentPoly::Term> merge(const std::vector<LaurentPoly::Term> &a,
                                            const std::vector<LaurentPoly::Term> &b,
                                            bool subtract) {
  std::vector<LaurentPoly::Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j].first < a[i].first) {
      out.emplace_back(b[j].first, subtract ? Integer(-b[j].second) : b[j].second);
      ++j;
    } else {
      Integer c = subtract ? Integer(a[i].second - b[j].second) : Integer(a[i].second + b[j].second);
      if (c != 0) out.emplace_back(a[i].first, std::move(c));
      ++i;
      ++j;
    }
  }
  return out;
}

LaurentPoly &LaurentPoly::operator+=(const LaurentPoly &o) {
  if (o.terms_.empty()) return *this;
  terms_ = merge(terms_, o.terms_, false);
  return *this;
}

LaurentPoly &LaurentPoly::operator-=(const LaurentPoly &o) {
  if (o.terms_.empty()) return *this;
  terms_ = merge(terms_, o.terms_, true);
  return *this;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly p = *this;
  for (auto &t : p.terms_) t.second = -t.second;
  return p;
}

LaurentPoly &LaurentPoly::operator*=(const Integer &c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto &t : terms_) t.second *= c;
  return *this;
}

LaurentPoly &LaurentPoly::operator*=(const LaurentPoly &o) {
  *this = *this * o;
  return *this;
}

LaurentPoly operator*(const LaurentPoly &a, const LaurentPoly &b) {
  if (a.terms_.empty() || b.terms_.empty()) return {};
  if (b.terms_.size() == 1) {
    LaurentPoly p = a;
    for (auto &t : p.terms_) {
      t.first += b.terms_[0].first;
      t.second *= b.terms_[0].second;
    }
    return p;
  }
  if (a.terms_.size() == 1) return b * a;
  std::vector<LaurentPoly::Term> prods;
  prods.reserve(a.terms_.size() * b.terms_.size());
  for (auto &x : a.terms_)
    for (auto &y : b.terms_) prods.emplace_back(x.first + y.first, x.second * y.second);
  return LaurentPoly::from_terms(std::move(prods));
}

std::string LaurentPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::string s;
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    if (i) s += " + ";
    s += terms_[i].second.get_str();
    s += "*t^";
    s += std::to_string(terms_[i].first);
  }
  return s;
}

namespace {

struct Parser {
  const std::string &s;
  std::size_t i = 0;

  void skip() {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  }
  bool digits(std::string &out) {
    std::size_t st = i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    out = s.substr(st, i - st);
    return i > st;
  }
  [[noreturn]] void fail(const std::string &why) {
    throw Error(ErrorKind::ParseError, why + " at offset " + std::to_string(i) + " in \"" + s + "\"");
  }
};

} // namespace

LaurentPoly LaurentPoly::parse(const std::string &str) {
  Parser p{str};
  std::vector<Term> terms;
  p.skip();
  if (p.i == str.size()) p.fail("empty input");
  bool first = true;
  while (true) {
    p.skip();
    if (p.i == str.size()) break;
    int sign = 1;
    bool saw_sign = false;
    while (p.i < str.size() && (str[p.i] == '+' || str[p.i] == '-' || std::isspace(static_cast<unsigned char>(str[p.i])))) {
      if (str[p.i] == '-') sign = -sign;
      if (str[p.i] != ' ') saw_sign = true;
      ++p.i;
    }
    if (!first && !saw_sign) p.fail("expected + or -");
    first = false;
    std::string num;
    Integer c = 1;
    bool have_num = p.digits(num);
    if (have_num) c = Integer(num);
    p.skip();
    long e = 0;
    bool have_t = false;
    if (p.i < str.size() && str[p.i] == '*') {
      if (!have_num) p.fail("stray *");
      ++p.i;
      p.skip();
      if (p.i >= str.size() || str[p.i] != 't') p.fail("expected t");
    }
    if (p.i < str.size() && str[p.i] == 't') {
      have_t = true;
      ++p.i;
      e = 1;
      p.skip();
      if (p.i < str.size() && str[p.i] == '^') {
        ++p.i;
        p.skip();
        int es = 1;
        if (p.i < str.size() && (str[p.i] == '-' || str[p.i] == '+')) {
          if (str[p.i] == '-') es = -1;
          ++p.i;
        }
        std::string ed;
        if (!p.digits(ed)) p.fail("expected exponent");
        e = es * std::stol(ed);
      }
    }
    if (!have_num && !have_t) p.fail("expected term");
    terms.emplace_back(e, sign * c);
  }
  return from_terms(std::move(terms));
}

LaurentPoly exact_div(const LaurentPoly &a, const LaurentPoly &b) {
  if (b.is_zero()) throw Error(ErrorKind::NotWellDefined, "division by zero polynomial");
  if (a.is_zero()) return {};
  if (b.size() == 1) {
    const auto &[be, bc] = b.terms()[0];
    std::vector<LaurentPoly::Term> out;
    out.reserve(a.size());
    for (auto &[e, c] : a.terms()) {
      if (!mpz_divisible_p(c.get_mpz_t(), bc.get_mpz_t()))
        throw Error(ErrorKind::NotWellDefined, "inexact division");
      out.emplace_back(e - be, Integer(c / bc));
    }
    return LaurentPoly::from_terms(std::move(out));
  }
  long qmin = a.min_exp() - b.min_exp();
  LaurentPoly rem = a;
  std::vector<LaurentPoly::Term> q;
  const auto &[bmax, blead] = b.terms().back();
  while (!rem.is_zero()) {
    const auto &[rmax, rlead] = rem.terms().back();
    long e = rmax - bmax;
    if (e < qmin || !mpz_divisible_p(rlead.get_mpz_t(), blead.get_mpz_t()))
      throw Error(ErrorKind::NotWellDefined, "inexact division");
    Integer c = rlead / blead;
    q.emplace_back(e, c);
    rem -= b.shifted(e) * c;
  }
  return LaurentPoly::from_terms(std::move(q));
}

Unit unit_decompose(const LaurentPoly &p) {
  if (p.size() != 1) throw Error(ErrorKind::NotAUnit, p.to_string());
  const auto &[e, c] = p.terms()[0];
  if (c == 1) return {1, e};
  if (c == -1) return {-1, e};
  throw Error(ErrorKind::NotAUnit, p.to_string());
}

bool is_unit(const LaurentPoly &p) {
  return p.size() == 1 && (p.terms()[0].second == 1 || p.terms()[0].second == -1);
}

FormParameter FormParameter::for_n(int n, ParamVariant v) {
  FormParameter P;
  P.eps = sign_of_n(n);
  P.variant = v;
  P.n_is_3_or_7 = (n == 3 || n == 7);
  return P;
}

bool FormParameter::constants_absorbed() const {
  switch (variant) {
  case ParamVariant::MIN: return false;
  case ParamVariant::FULL: return n_is_3_or_7;
  case ParamVariant::MAX: return eps == -1;
  }
  return false;
}

bool FormParameter::contains(const LaurentPoly &p) const {
  for (auto &[e, c] : p.terms()) {
    if (e == 0) continue;
    // u_{-a} = -eps * u_a
    if (p.coeff(-e) != -eps * c) return false;
  }
  Integer u0 = p.coeff(0);
  if (u0 == 0 || constants_absorbed()) return true;
  if (eps == 1) return false;
  return mpz_even_p(u0.get_mpz_t()) != 0;
}

LaurentPoly FormParameter::reduce(const LaurentPoly &p) const {
  std::vector<LaurentPoly::Term> out;
  Integer u0 = 0;
  for (auto &[e, c] : p.terms()) {
    if (e < 0) out.emplace_back(e, c);
    else if (e == 0) u0 = c;
    else out.emplace_back(-e, Integer(eps * c));
  }
  if (constants_absorbed()) u0 = 0;
  else if (eps == -1) u0 = mpz_odd_p(u0.get_mpz_t()) ? 1 : 0;
  out.emplace_back(0, u0);
  return LaurentPoly::from_terms(std::move(out));
}

LaurentPoly min_element(const LaurentPoly &a, int eps) { return a - a.bar() * Integer(eps); }

LaurentPoly min_preimage(const LaurentPoly &p, int eps) {
  std::vector<LaurentPoly::Term> out;
  for (auto &[e, c] : p.terms()) {
    if (e > 0) out.emplace_back(e, c);
    else if (e == 0 && eps == -1) {
      if (!mpz_even_p(c.get_mpz_t())) throw Error(ErrorKind::BadParameters, "not in the minimal parameter");
      out.emplace_back(0, Integer(c / 2));
    }
  }
  return LaurentPoly::from_terms(std::move(out));
}

} // namespace torus
