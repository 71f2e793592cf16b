#include "cdgalab/algebra.hpp"

#include <algorithm>
#include <sstream>

#include "cdgalab/errors.hpp"

namespace cdgalab {

bool MonomialOrder::operator()(const Monomial& a, const Monomial& b) const {
  const auto& fa = a.factors();
  const auto& fb = b.factors();
  auto ia = fa.rbegin();
  auto ib = fb.rbegin();
  for (; ia != fa.rend() && ib != fb.rend(); ++ia, ++ib) {
    if (*ia != *ib) return *ia < *ib;
  }
  return ia == fa.rend() && ib != fb.rend();
}

GradedAlgebra::GradedAlgebra(std::vector<Generator> generators, int cap)
    : generators_(std::move(generators)), cap_(cap) {
  if (cap_ < 0) throw Error("degree cap must be nonnegative");
  std::sort(generators_.begin(), generators_.end(), [](const Generator& a, const Generator& b) {
    return a.degree != b.degree ? a.degree < b.degree : a.name < b.name;
  });
  for (std::size_t i = 0; i < generators_.size(); ++i) {
    const auto& g = generators_[i];
    if (g.name.empty()) throw Error("generator with empty name");
    if (g.degree < 1) throw Error("generator '" + g.name + "' has degree < 1");
    if (!index_.emplace(g.name, i).second) throw Error("duplicate generator '" + g.name + "'");
  }
}

std::optional<std::size_t> GradedAlgebra::find(std::string_view name) const {
  auto it = index_.find(std::string(name));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::size_t GradedAlgebra::index_of(std::string_view name) const {
  auto idx = find(name);
  if (!idx) throw UnknownGenerator(std::string(name));
  return *idx;
}

std::optional<SignedMonomial> GradedAlgebra::normalize(
    std::span<const Monomial::Factor> raw) const {
  std::vector<Monomial::Factor> work;
  work.reserve(raw.size());
  for (const auto& f : raw) {
    if (f.first >= generators_.size()) throw Error("generator index out of range");
    if (f.second == 0) continue;
    if (is_odd(f.first) && f.second > 1) return std::nullopt;
    work.push_back(f);
  }
  // Stable insertion sort; each transposition of two blocks contributes
  // (-1)^(deg a * deg b).
  int sign = 1;
  for (std::size_t i = 1; i < work.size(); ++i) {
    for (std::size_t j = i; j > 0 && work[j - 1].first > work[j].first; --j) {
      const long da = static_cast<long>(generators_[work[j - 1].first].degree) * work[j - 1].second;
      const long db = static_cast<long>(generators_[work[j].first].degree) * work[j].second;
      if ((da % 2 != 0) && (db % 2 != 0)) sign = -sign;
      std::swap(work[j - 1], work[j]);
    }
  }
  std::vector<Monomial::Factor> merged;
  int degree = 0;
  for (const auto& f : work) {
    degree += generators_[f.first].degree * static_cast<int>(f.second);
    if (!merged.empty() && merged.back().first == f.first) {
      if (is_odd(f.first)) return std::nullopt;
      merged.back().second += f.second;
    } else {
      merged.push_back(f);
    }
  }
  return SignedMonomial{sign, Monomial(std::move(merged), degree)};
}

std::optional<SignedMonomial> GradedAlgebra::normalize(
    std::span<const std::pair<std::string, unsigned>> raw) const {
  std::vector<Monomial::Factor> factors;
  factors.reserve(raw.size());
  for (const auto& [name, exp] : raw) {
    factors.emplace_back(static_cast<std::uint32_t>(index_of(name)), exp);
  }
  return normalize(factors);
}

Monomial GradedAlgebra::generator_monomial(std::size_t index) const {
  return Monomial({{static_cast<std::uint32_t>(index), 1u}}, generators_.at(index).degree);
}

std::vector<Monomial> GradedAlgebra::basis(int degree) const {
  if (degree > cap_) {
    throw CapOverflow("basis requested in degree " + std::to_string(degree) + " above cap " +
                      std::to_string(cap_));
  }
  std::vector<Monomial> out;
  if (degree < 0) return out;
  std::vector<Monomial::Factor> current;
  // Depth-first over generator indices; odd generators take exponent 0 or 1.
  auto recurse = [&](auto&& self, std::size_t index, int remaining) -> void {
    if (remaining == 0) {
      out.push_back(Monomial(current, degree));
      return;
    }
    if (index == generators_.size()) return;
    const int deg = generators_[index].degree;
    const unsigned max_exp = is_odd(index) ? 1u : static_cast<unsigned>(remaining / deg);
    for (unsigned e = std::min(max_exp, static_cast<unsigned>(remaining / deg)); e >= 1; --e) {
      current.emplace_back(static_cast<std::uint32_t>(index), e);
      self(self, index + 1, remaining - deg * static_cast<int>(e));
      current.pop_back();
    }
    self(self, index + 1, remaining);
  };
  recurse(recurse, 0, degree);
  std::sort(out.begin(), out.end(), MonomialOrder{});
  return out;
}

std::string GradedAlgebra::format(const Monomial& m) const {
  if (m.is_unit()) return "1";
  std::string s;
  for (const auto& [idx, exp] : m.factors()) {
    if (!s.empty()) s += "*";
    s += generators_[idx].name;
    if (exp > 1) s += "^" + std::to_string(exp);
  }
  return s;
}

bool GradedAlgebra::same_as(const GradedAlgebra& other) const {
  return this == &other || (cap_ == other.cap_ && generators_ == other.generators_);
}

// ---------------------------------------------------------------------------

Polynomial::Polynomial(AlgebraPtr algebra) : algebra_(std::move(algebra)) {
  if (!algebra_) throw Error("polynomial without an algebra");
}

Polynomial Polynomial::constant(AlgebraPtr algebra, const Rational& value) {
  Polynomial p(std::move(algebra));
  p.add_term(Monomial{}, value);
  return p;
}

Polynomial Polynomial::generator(AlgebraPtr algebra, std::string_view name) {
  Polynomial p(algebra);
  p.add_term(algebra->generator_monomial(algebra->index_of(name)), 1);
  return p;
}

Polynomial Polynomial::monomial(AlgebraPtr algebra, const Monomial& m, const Rational& coeff) {
  Polynomial p(std::move(algebra));
  p.add_term(m, coeff);
  return p;
}

bool Polynomial::is_homogeneous() const {
  if (terms_.empty()) return true;
  const int d = terms_.begin()->first.degree();
  return std::all_of(terms_.begin(), terms_.end(),
                     [d](const auto& t) { return t.first.degree() == d; });
}

std::optional<int> Polynomial::degree() const {
  if (terms_.empty() || !is_homogeneous()) return std::nullopt;
  return terms_.begin()->first.degree();
}

Rational Polynomial::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

void Polynomial::add_term(const Monomial& m, const Rational& coeff) {
  if (coeff == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, coeff);
  if (inserted) {
    it->second.canonicalize();
  } else {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

void Polynomial::require_same(const Polynomial& other) const {
  if (!algebra_->same_as(*other.algebra_)) throw MixedAlgebra();
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  require_same(other);
  for (const auto& [m, c] : other.terms_) add_term(m, c);
  truncated_ = truncated_ || other.truncated_;
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
  require_same(other);
  for (const auto& [m, c] : other.terms_) {
    Rational neg = -c;
    add_term(m, neg);
  }
  truncated_ = truncated_ || other.truncated_;
  return *this;
}

Polynomial& Polynomial::operator*=(const Rational& scalar) {
  if (scalar == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, c] : terms_) c *= scalar;
  return *this;
}

Polynomial Polynomial::operator-() const {
  Polynomial out = *this;
  out *= Rational(-1);
  return out;
}

bool Polynomial::operator==(const Polynomial& other) const {
  return algebra_->same_as(*other.algebra_) && terms_ == other.terms_;
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    const bool negative = c < 0;
    Rational mag = abs(c);
    if (first) {
      if (negative) os << "-";
    } else {
      os << (negative ? " - " : " + ");
    }
    first = false;
    if (m.is_unit()) {
      os << cdgalab::to_string(mag);
    } else {
      if (mag != 1) os << cdgalab::to_string(mag) << "*";
      os << algebra_->format(m);
    }
  }
  return os.str();
}

Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
Polynomial operator*(Polynomial a, const Rational& s) { return a *= s; }
Polynomial operator*(const Rational& s, Polynomial a) { return a *= s; }

Polynomial multiply(const Polynomial& a, const Polynomial& b) {
  if (!a.algebra().same_as(b.algebra())) throw MixedAlgebra();
  const GradedAlgebra& alg = a.algebra();
  Polynomial out(a.algebra_ptr());
  if (a.truncated() || b.truncated()) out.mark_truncated();
  std::vector<Monomial::Factor> raw;
  for (const auto& [ma, ca] : a.terms()) {
    for (const auto& [mb, cb] : b.terms()) {
      if (ma.degree() + mb.degree() > alg.cap()) {
        out.mark_truncated();
        continue;
      }
      raw.assign(ma.factors().begin(), ma.factors().end());
      raw.insert(raw.end(), mb.factors().begin(), mb.factors().end());
      auto n = alg.normalize(raw);
      if (!n) continue;
      Rational c = ca * cb;
      if (n->sign < 0) c = -c;
      out.add_term(n->monomial, c);
    }
  }
  return out;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) { return multiply(a, b); }

Polynomial transport(const Polynomial& p, const AlgebraPtr& target,
                     const std::map<std::string, std::string>& rename) {
  Polynomial out(target);
  if (p.truncated()) out.mark_truncated();
  std::vector<Monomial::Factor> raw;
  for (const auto& [m, c] : p.terms()) {
    raw.clear();
    for (const auto& [idx, exp] : m.factors()) {
      const std::string& name = p.algebra().generator(idx).name;
      auto it = rename.find(name);
      raw.emplace_back(static_cast<std::uint32_t>(
                           target->index_of(it == rename.end() ? name : it->second)),
                       exp);
    }
    if (m.degree() > target->cap()) {
      out.mark_truncated();
      continue;
    }
    auto n = target->normalize(raw);
    if (!n) continue;
    Rational coeff = c;
    if (n->sign < 0) coeff = -coeff;
    out.add_term(n->monomial, coeff);
  }
  return out;
}

}  // namespace cdgalab
