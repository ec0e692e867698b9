#include "gsp4/exact/laurent.hpp"

#include <algorithm>
#include <cctype>
#include <set>

#include "gsp4/errors.hpp"

namespace gsp4::exact {

namespace {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r = 0;
  if (__builtin_add_overflow(a, b, &r)) throw DomainError(Errc::ExponentOverflow, "exponent overflow");
  return r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r = 0;
  if (__builtin_mul_overflow(a, b, &r)) throw DomainError(Errc::ExponentOverflow, "exponent overflow");
  return r;
}

// Lexicographic comparison on exponent vectors in the given generator order.
int lex_compare(const Monomial& a, const Monomial& b, const std::vector<std::string>& gens) {
  for (const auto& g : gens) {
    auto ea = a.exponent(g);
    auto eb = b.exponent(g);
    if (ea != eb) return ea > eb ? 1 : -1;
  }
  return 0;
}

std::vector<std::string> merged_generators(const LaurentPoly& a, const LaurentPoly& b) {
  auto ga = a.generators();
  auto gb = b.generators();
  std::vector<std::string> out;
  std::set_union(ga.begin(), ga.end(), gb.begin(), gb.end(), std::back_inserter(out));
  return out;
}

std::pair<Monomial, Rational> lex_leading(const LaurentPoly& p, const std::vector<std::string>& gens) {
  auto best = p.terms().begin();
  for (auto it = p.terms().begin(); it != p.terms().end(); ++it) {
    if (lex_compare(it->first, best->first, gens) > 0) best = it;
  }
  return *best;
}

}  // namespace

Monomial Monomial::variable(std::string name, std::int64_t exponent) {
  Monomial m;
  if (exponent != 0) m.factors_.emplace_back(std::move(name), exponent);
  return m;
}

Monomial Monomial::from_factors(std::vector<Factor> factors) {
  std::sort(factors.begin(), factors.end(), [](const Factor& a, const Factor& b) { return a.first < b.first; });
  Monomial m;
  for (auto& f : factors) {
    if (!m.factors_.empty() && m.factors_.back().first == f.first) {
      m.factors_.back().second = checked_add(m.factors_.back().second, f.second);
      if (m.factors_.back().second == 0) m.factors_.pop_back();
    } else if (f.second != 0) {
      m.factors_.push_back(std::move(f));
    }
  }
  return m;
}

std::int64_t Monomial::exponent(std::string_view name) const {
  auto it = std::lower_bound(factors_.begin(), factors_.end(), name,
                             [](const Factor& f, std::string_view n) { return f.first < n; });
  return (it != factors_.end() && it->first == name) ? it->second : 0;
}

std::int64_t Monomial::degree() const {
  std::int64_t d = 0;
  for (const auto& f : factors_) d = checked_add(d, f.second);
  return d;
}

Monomial Monomial::inverse() const {
  Monomial m = *this;
  for (auto& f : m.factors_) f.second = checked_mul(f.second, -1);
  return m;
}

Monomial Monomial::pow(std::int64_t n) const {
  if (n == 0) return Monomial();
  Monomial m = *this;
  for (auto& f : m.factors_) f.second = checked_mul(f.second, n);
  return m;
}

bool Monomial::divides(const Monomial& other) const {
  std::set<std::string> names;
  for (const auto& f : factors_) names.insert(f.first);
  for (const auto& f : other.factors_) names.insert(f.first);
  return std::all_of(names.begin(), names.end(), [&](const std::string& n) { return exponent(n) <= other.exponent(n); });
}

std::string Monomial::to_string() const {
  if (factors_.empty()) return "1";
  std::string out;
  for (const auto& [name, e] : factors_) {
    if (!out.empty()) out += "*";
    out += name;
    if (e != 1) out += "^" + std::to_string(e);
  }
  return out;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  Monomial out;
  auto& f = out.factors_;
  f.reserve(a.factors_.size() + b.factors_.size());
  auto ia = a.factors_.begin();
  auto ib = b.factors_.begin();
  while (ia != a.factors_.end() || ib != b.factors_.end()) {
    if (ib == b.factors_.end() || (ia != a.factors_.end() && ia->first < ib->first)) {
      f.push_back(*ia++);
    } else if (ia == a.factors_.end() || ib->first < ia->first) {
      f.push_back(*ib++);
    } else {
      auto e = checked_add(ia->second, ib->second);
      if (e != 0) f.emplace_back(ia->first, e);
      ++ia;
      ++ib;
    }
  }
  return out;
}

Monomial monomial_min(const Monomial& a, const Monomial& b) {
  std::vector<Monomial::Factor> out;
  std::set<std::string> names;
  for (const auto& f : a.factors()) names.insert(f.first);
  for (const auto& f : b.factors()) names.insert(f.first);
  for (const auto& n : names) out.emplace_back(n, std::min(a.exponent(n), b.exponent(n)));
  return Monomial::from_factors(std::move(out));
}

bool graded_lex_before(const Monomial& a, const Monomial& b, const std::vector<std::string>& gens) {
  auto da = a.degree();
  auto db = b.degree();
  if (da != db) return da > db;
  return lex_compare(a, b, gens) > 0;
}

LaurentPoly::LaurentPoly(const Rational& c) {
  if (!c.is_zero()) terms_.emplace(Monomial(), c);
}

LaurentPoly::LaurentPoly(const Monomial& m, const Rational& c) {
  if (!c.is_zero()) terms_.emplace(m, c);
}

LaurentPoly LaurentPoly::variable(std::string name, std::int64_t exponent) {
  return LaurentPoly(Monomial::variable(std::move(name), exponent));
}

bool LaurentPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one());
}

Rational LaurentPoly::constant_term() const {
  auto it = terms_.find(Monomial());
  return it == terms_.end() ? Rational(0) : it->second;
}

std::optional<Rational> LaurentPoly::as_constant() const {
  if (!is_constant()) return std::nullopt;
  return constant_term();
}

std::vector<std::string> LaurentPoly::generators() const {
  std::set<std::string> names;
  for (const auto& [m, c] : terms_) {
    for (const auto& f : m.factors()) names.insert(f.first);
  }
  return {names.begin(), names.end()};
}

std::int64_t LaurentPoly::max_exponent(std::string_view name) const {
  std::int64_t best = 0;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    auto e = m.exponent(name);
    if (first || e > best) best = e;
    first = false;
  }
  return best;
}

std::int64_t LaurentPoly::min_exponent(std::string_view name) const {
  std::int64_t best = 0;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    auto e = m.exponent(name);
    if (first || e < best) best = e;
    first = false;
  }
  return best;
}

Monomial LaurentPoly::monomial_content() const {
  if (terms_.empty()) return Monomial();
  Monomial m = terms_.begin()->first;
  for (const auto& [t, c] : terms_) m = monomial_min(m, t);
  return m;
}

std::pair<Monomial, Rational> LaurentPoly::leading_term() const {
  if (terms_.empty()) return {Monomial(), Rational(0)};
  auto gens = generators();
  auto best = terms_.begin();
  for (auto it = terms_.begin(); it != terms_.end(); ++it) {
    if (graded_lex_before(it->first, best->first, gens)) best = it;
  }
  return *best;
}

void LaurentPoly::add_term(const Monomial& m, const Rational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

LaurentPoly LaurentPoly::pow(std::int64_t n) const {
  if (n < 0) {
    if (!is_monomial()) throw DomainError(Errc::DenominatorVanishes, "negative power of a non-monomial Laurent polynomial");
    const auto& [m, c] = *terms_.begin();
    return LaurentPoly(m.pow(n), c.pow(n));
  }
  LaurentPoly result(1);
  LaurentPoly base = *this;
  while (n > 0) {
    if (n & 1) result = result * base;
    n >>= 1;
    if (n > 0) base = base * base;
  }
  return result;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly out = *this;
  for (auto& [m, c] : out.terms_) c = -c;
  return out;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& o) {
  *this = *this * o;
  return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly out;
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) out.add_term(ma * mb, ca * cb);
  }
  return out;
}

LaurentPoly LaurentPoly::scaled(const Rational& c, const Monomial& m) const {
  LaurentPoly out;
  if (c.is_zero()) return out;
  for (const auto& [t, k] : terms_) out.terms_.emplace(t * m, k * c);
  return out;
}

std::string LaurentPoly::to_string() const {
  if (terms_.empty()) return "0";
  auto gens = generators();
  std::vector<std::pair<Monomial, Rational>> sorted(terms_.begin(), terms_.end());
  std::sort(sorted.begin(), sorted.end(),
            [&](const auto& a, const auto& b) { return graded_lex_before(a.first, b.first, gens); });
  std::string out;
  bool first = true;
  for (const auto& [m, c] : sorted) {
    bool negative = c.sign() < 0;
    Rational mag = c.abs();
    if (first) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    if (m.is_one()) {
      out += mag.to_string();
    } else if (mag.is_one()) {
      out += m.to_string();
    } else {
      out += mag.to_string() + "*" + m.to_string();
    }
  }
  return out;
}

LaurentPoly LaurentPoly::parse(std::string_view text) {
  // Split into signed terms. A sign directly after '^' belongs to an exponent.
  LaurentPoly result;
  std::string term;
  int sign = 1;
  bool seen_any = false;
  auto flush = [&](std::size_t pos) {
    auto start = term.find_first_not_of(' ');
    if (start == std::string::npos) {
      if (seen_any) throw DomainError(Errc::ParseError, "empty term near offset " + std::to_string(pos));
      return;
    }
    auto end = term.find_last_not_of(' ');
    std::string_view body(term.data() + start, end - start + 1);
    Rational coeff(sign);
    std::vector<Monomial::Factor> factors;
    std::size_t i = 0;
    while (i <= body.size()) {
      auto star = body.find('*', i);
      auto piece = body.substr(i, star == std::string_view::npos ? std::string_view::npos : star - i);
      while (!piece.empty() && piece.front() == ' ') piece.remove_prefix(1);
      while (!piece.empty() && piece.back() == ' ') piece.remove_suffix(1);
      if (piece.empty()) throw DomainError(Errc::ParseError, "empty factor in '" + std::string(body) + "'");
      if (std::isdigit(static_cast<unsigned char>(piece.front()))) {
        coeff *= Rational::parse(piece);
      } else {
        auto caret = piece.find('^');
        std::string name(piece.substr(0, caret));
        std::int64_t e = 1;
        if (caret != std::string_view::npos) e = Rational::parse(piece.substr(caret + 1)).to_int64();
        factors.emplace_back(std::move(name), e);
      }
      if (star == std::string_view::npos) break;
      i = star + 1;
    }
    result.add_term(Monomial::from_factors(std::move(factors)), coeff);
    seen_any = true;
  };
  char prev = '\0';
  for (std::size_t pos = 0; pos < text.size(); ++pos) {
    char ch = text[pos];
    if ((ch == '+' || ch == '-') && prev != '^') {
      bool empty_so_far = term.find_first_not_of(' ') == std::string::npos;
      if (empty_so_far && !seen_any) {
        sign = (ch == '-') ? -sign : sign;
      } else {
        flush(pos);
        term.clear();
        sign = (ch == '-') ? -1 : 1;
      }
    } else {
      term.push_back(ch);
    }
    if (ch != ' ') prev = ch;
  }
  flush(text.size());
  if (!seen_any) throw DomainError(Errc::ParseError, "empty polynomial");
  return result;
}

std::optional<LaurentPoly> try_divide(const LaurentPoly& a, const LaurentPoly& b) {
  if (b.is_zero()) throw DomainError(Errc::DenominatorVanishes, "division by zero polynomial");
  if (a.is_zero()) return LaurentPoly();
  if (b.is_monomial()) {
    const auto& [m, c] = *b.terms().begin();
    return a.scaled(c.inverse(), m.inverse());
  }
  if (a.size() < b.size() && a.size() == 1) return std::nullopt;
  // Shift both to ordinary polynomials; monomials are units in the Laurent ring.
  Monomial ma = a.monomial_content();
  Monomial mb = b.monomial_content();
  LaurentPoly rem = a.scaled(Rational(1), ma.inverse());
  LaurentPoly div = b.scaled(Rational(1), mb.inverse());
  auto gens = merged_generators(rem, div);
  auto [ld_m, ld_c] = lex_leading(div, gens);
  LaurentPoly quotient;
  while (!rem.is_zero()) {
    auto [lr_m, lr_c] = lex_leading(rem, gens);
    if (!ld_m.divides(lr_m)) return std::nullopt;
    LaurentPoly t(lr_m / ld_m, lr_c / ld_c);
    quotient += t;
    rem -= t * div;
  }
  return quotient.scaled(Rational(1), ma / mb);
}

}  // namespace gsp4::exact
