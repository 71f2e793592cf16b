#include "cdgalab/cdga.hpp"

#include <algorithm>

#include "cdgalab/errors.hpp"
#include "cdgalab/expr.hpp"

namespace cdgalab {

namespace {

int max_term_degree(const Polynomial& p) {
  int m = -1;
  for (const auto& [mono, c] : p.terms()) m = std::max(m, mono.degree());
  return m;
}

Polynomial power_of(const Polynomial& base, unsigned e) {
  Polynomial out = Polynomial::constant(base.algebra_ptr(), 1);
  for (unsigned i = 0; i < e; ++i) out = multiply(out, base);
  return out;
}

}  // namespace

FreeCdga::FreeCdga(AlgebraPtr algebra, const std::map<std::string, Polynomial>& differential)
    : algebra_(std::move(algebra)) {
  if (!algebra_) throw Error("cdga without an algebra");
  differential_.assign(algebra_->size(), Polynomial(algebra_));
  for (const auto& [name, value] : differential) {
    const std::size_t idx = algebra_->index_of(name);
    if (!value.algebra().same_as(*algebra_)) {
      throw DifferentialError("d(" + name + ") uses generators outside the algebra", name);
    }
    const int want = algebra_->generator(idx).degree + 1;
    if (!value.is_zero()) {
      if (!value.is_homogeneous() || *value.degree() != want) {
        throw DifferentialError("d(" + name + ") = " + value.to_string() + " is not homogeneous of degree " +
                                std::to_string(want), name);
      }
      if (want > algebra_->cap()) {
        throw DifferentialError("d(" + name + ") has degree " + std::to_string(want) +
                                " above the cap " + std::to_string(algebra_->cap()), name);
      }
    }
    Polynomial v(algebra_);
    v += value;
    differential_[idx] = std::move(v);
  }
  for (std::size_t i = 0; i < differential_.size(); ++i) {
    const int deg = algebra_->generator(i).degree;
    if (deg + 2 > algebra_->cap() || differential_[i].is_zero()) continue;
    Polynomial dd = differentiate(differential_[i]);
    if (!dd.is_zero()) {
      throw DifferentialError("d(d(" + algebra_->generator(i).name + ")) = " + dd.to_string() +
                              " is not zero", algebra_->generator(i).name);
    }
  }
}

CdgaPtr FreeCdga::make(std::vector<Generator> generators, int cap,
                       const std::map<std::string, std::string>& differential_text) {
  auto alg = std::make_shared<const GradedAlgebra>(std::move(generators), cap);
  std::map<std::string, Polynomial> d;
  for (const auto& [name, text] : differential_text) d.emplace(name, parse_polynomial(text, alg));
  return std::make_shared<const FreeCdga>(alg, d);
}

Polynomial FreeCdga::differentiate(const Polynomial& p) const {
  if (!p.algebra().same_as(*algebra_)) throw MixedAlgebra();
  if (max_term_degree(p) >= algebra_->cap()) {
    throw CapOverflow("d undefined on degree " + std::to_string(max_term_degree(p)) +
                      " at cap " + std::to_string(algebra_->cap()));
  }
  Polynomial out(algebra_);
  for (const auto& [mono, coeff] : p.terms()) {
    const auto& f = mono.factors();
    // d(g1^e1 ... gk^ek) = sum_i (-1)^(deg of prefix) prefix * d(gi^ei) * suffix
    for (std::size_t i = 0; i < f.size(); ++i) {
      const auto [idx, e] = f[i];
      if (differential_[idx].is_zero()) continue;
      Polynomial prefix = Polynomial::constant(algebra_, coeff);
      int prefix_degree = 0;
      for (std::size_t j = 0; j < i; ++j) {
        prefix = multiply(prefix, power_of(Polynomial::monomial(algebra_, algebra_->generator_monomial(f[j].first)), f[j].second));
        prefix_degree += algebra_->generator(f[j].first).degree * static_cast<int>(f[j].second);
      }
      Polynomial g = Polynomial::monomial(algebra_, algebra_->generator_monomial(idx));
      Polynomial piece = multiply(power_of(g, e - 1), differential_[idx]);
      piece *= Rational(e);
      Polynomial suffix = Polynomial::constant(algebra_, 1);
      for (std::size_t j = i + 1; j < f.size(); ++j) {
        suffix = multiply(suffix, power_of(Polynomial::monomial(algebra_, algebra_->generator_monomial(f[j].first)), f[j].second));
      }
      Polynomial term = multiply(multiply(prefix, piece), suffix);
      if (prefix_degree % 2 != 0) term *= Rational(-1);
      out += term;
    }
  }
  return out;
}

// ---------------------------------------------------------------------------

Polynomial random_polynomial(const AlgebraPtr& algebra, int degree, SplitMix64& rng) {
  Polynomial p(algebra);
  if (degree < 0 || degree > algebra->cap()) return p;
  const auto basis = algebra->basis(degree);
  if (basis.empty()) return p;
  const long terms = rng.range(1, 3);
  for (long t = 0; t < terms; ++t) {
    const auto& m = basis[rng.below(basis.size())];
    long num = rng.range(-5, 5);
    if (num == 0) num = 1;
    Rational c(num, rng.range(1, 3));
    c.canonicalize();
    p.add_term(m, c);
  }
  return p;
}

DSquaredReport check_d_squared(const FreeCdga& a, std::uint64_t seed, std::size_t samples) {
  DSquaredReport report;
  const GradedAlgebra& alg = a.algebra();
  for (std::size_t i = 0; i < alg.size(); ++i) {
    const auto& g = alg.generator(i);
    if (g.degree + 2 > a.cap()) {
      ++report.generators_skipped;
      continue;
    }
    ++report.generators_checked;
    Polynomial dd = a.differentiate(a.differentiate(a.gen(g.name)));
    if (!dd.is_zero()) report.violations.push_back("d(d(" + g.name + ")) = " + dd.to_string());
  }
  if (a.cap() < 2) return report;
  SplitMix64 rng(seed);
  for (std::size_t s = 0; s < samples; ++s) {
    const long total = rng.range(0, a.cap() - 2);
    const long left = rng.range(0, total);
    Polynomial x = random_polynomial(a.algebra_ptr(), static_cast<int>(left), rng);
    Polynomial y = random_polynomial(a.algebra_ptr(), static_cast<int>(total - left), rng);
    Polynomial xy = x * y;
    ++report.products_checked;
    Polynomial dd = a.differentiate(a.differentiate(xy));
    if (!dd.is_zero()) report.violations.push_back("d(d(" + xy.to_string() + ")) = " + dd.to_string());
  }
  return report;
}

LeibnizReport check_leibniz(const FreeCdga& a, std::uint64_t seed, std::size_t samples) {
  LeibnizReport report;
  if (a.cap() < 1) return report;
  SplitMix64 rng(seed);
  for (std::size_t s = 0; s < samples; ++s) {
    const long total = rng.range(0, a.cap() - 1);
    const long da = rng.range(0, total);
    Polynomial x = random_polynomial(a.algebra_ptr(), static_cast<int>(da), rng);
    Polynomial y = random_polynomial(a.algebra_ptr(), static_cast<int>(total - da), rng);
    Polynomial lhs = a.differentiate(x * y);
    Polynomial rhs = a.differentiate(x) * y;
    Polynomial second = x * a.differentiate(y);
    if (da % 2 != 0) {
      rhs -= second;
    } else {
      rhs += second;
    }
    ++report.pairs_checked;
    if (!(lhs == rhs)) {
      report.violations.push_back("d((" + x.to_string() + ")(" + y.to_string() + ")) = " +
                                  lhs.to_string() + " but Leibniz gives " + rhs.to_string());
    }
  }
  return report;
}

// ---------------------------------------------------------------------------

DegreeBasis::DegreeBasis(AlgebraPtr algebra, int degree)
    : algebra_(std::move(algebra)), degree_(degree), monomials_(algebra_->basis(degree)) {
  for (std::size_t i = 0; i < monomials_.size(); ++i) index_.emplace(monomials_[i], i);
}

SparseVector DegreeBasis::coordinates(const Polynomial& p) const {
  if (!p.algebra().same_as(*algebra_)) throw MixedAlgebra();
  SparseVector v;
  for (const auto& [m, c] : p.terms()) {
    auto it = index_.find(m);
    if (it == index_.end()) {
      throw Error("term " + algebra_->format(m) + " of degree " + std::to_string(m.degree()) +
                  " outside degree " + std::to_string(degree_));
    }
    v.emplace(it->second, c);
  }
  return v;
}

Polynomial DegreeBasis::polynomial(const SparseVector& v) const {
  Polynomial p(algebra_);
  for (const auto& [i, c] : v) p.add_term(monomials_.at(i), c);
  return p;
}

RationalMatrix differential_matrix(const FreeCdga& a, const DegreeBasis& from,
                                   const DegreeBasis& to) {
  if (to.degree() != from.degree() + 1) throw DimensionMismatch("d raises degree by one");
  RationalMatrix m(to.size(), from.size());
  for (std::size_t j = 0; j < from.size(); ++j) {
    Polynomial image = a.differentiate(Polynomial::monomial(a.algebra_ptr(), from.monomials()[j]));
    m.set_column(j, to.coordinates(image));
  }
  return m;
}

std::optional<Polynomial> solve_coboundary(const FreeCdga& a, const Polynomial& target,
                                           int degree) {
  if (!target.is_zero() && target.degree() != degree) {
    throw Error("target " + target.to_string() + " is not homogeneous of degree " +
                std::to_string(degree));
  }
  if (degree > a.cap()) throw UndecidableDegree("degree " + std::to_string(degree) + " above cap");
  if (degree <= 0) {
    if (target.is_zero()) return a.zero();
    return std::nullopt;
  }
  DegreeBasis from(a.algebra_ptr(), degree - 1);
  DegreeBasis to(a.algebra_ptr(), degree);
  auto result = solve_in_image(differential_matrix(a, from, to), to.coordinates(target));
  if (!result.solution) return std::nullopt;
  return from.polynomial(*result.solution);
}

CohomologyGroup cohomology(const FreeCdga& a, int degree) {
  if (degree < 0 || degree + 1 > a.cap()) {
    throw UndecidableDegree("H^" + std::to_string(degree) + " needs degree + 1 <= cap (cap " +
                            std::to_string(a.cap()) + ")");
  }
  DegreeBasis below(a.algebra_ptr(), degree - 1);
  DegreeBasis here(a.algebra_ptr(), degree);
  DegreeBasis above(a.algebra_ptr(), degree + 1);
  CohomologyGroup h(degree, here);
  if (degree >= 1) {
    RationalMatrix in = differential_matrix(a, below, here);
    for (std::size_t j = 0; j < in.cols(); ++j) h.reducer_.add(in.column(j));
    h.image_columns_ = in.cols();
  }
  for (const auto& z : kernel_basis(differential_matrix(a, here, above))) {
    if (h.reducer_.reduce(z).residue.empty()) continue;
    h.reducer_.add(z);
    h.representatives_.push_back(here.polynomial(z));
  }
  return h;
}

std::vector<Rational> class_of(const FreeCdga& a, const Polynomial& cocycle,
                               const CohomologyGroup& h) {
  if (!cocycle.is_zero() && cocycle.degree() != h.degree()) {
    throw Error(cocycle.to_string() + " is not homogeneous of degree " + std::to_string(h.degree()));
  }
  if (!a.differentiate(cocycle).is_zero()) throw Error(cocycle.to_string() + " is not a cocycle");
  auto red = h.reducer_.reduce(h.basis_.coordinates(cocycle));
  if (!red.residue.empty()) throw Error("cocycle outside the cohomology context");
  std::vector<Rational> out(h.dimension(), Rational(0));
  for (const auto& [id, c] : red.combination) {
    if (id >= h.image_columns_) out.at(id - h.image_columns_) = c;
  }
  return out;
}

bool is_zero_vector(const std::vector<Rational>& v) {
  return std::all_of(v.begin(), v.end(), [](const Rational& x) { return x == 0; });
}

// ---------------------------------------------------------------------------

CdgaMorphism::CdgaMorphism(CdgaPtr source, CdgaPtr target,
                           const std::map<std::string, Polynomial>& assignment)
    : source_(std::move(source)), target_(std::move(target)) {
  const GradedAlgebra& src = source_->algebra();
  images_.assign(src.size(), target_->zero());
  std::vector<bool> assigned(src.size(), false);
  for (const auto& [name, value] : assignment) {
    const auto idx = src.find(name);
    if (!idx) throw MorphismError("morphism assigns unknown source generator '" + name + "'");
    if (!value.algebra().same_as(target_->algebra())) {
      throw MorphismError("image of '" + name + "' is not in the target algebra");
    }
    const int deg = src.generator(*idx).degree;
    if (!value.is_zero() && value.degree() != deg) {
      throw MorphismError("image of '" + name + "' = " + value.to_string() +
                          " is not homogeneous of degree " + std::to_string(deg));
    }
    Polynomial v = target_->zero();
    v += value;
    images_[*idx] = std::move(v);
    assigned[*idx] = true;
  }
  for (std::size_t i = 0; i < src.size(); ++i) {
    if (!assigned[i]) defaulted_.push_back(src.generator(i).name);
  }
  for (std::size_t i = 0; i < src.size(); ++i) {
    const int deg = src.generator(i).degree;
    if (deg + 1 > source_->cap() || deg + 1 > target_->cap()) continue;
    Polynomial lhs = apply(source_->d(i));
    Polynomial rhs = target_->differentiate(images_[i]);
    if (!(lhs == rhs)) {
      throw MorphismError("morphism does not commute with d on '" + src.generator(i).name +
                          "': phi(d) = " + lhs.to_string() + ", d(phi) = " + rhs.to_string());
    }
  }
}

const Polynomial& CdgaMorphism::image(std::string_view source_name) const {
  return images_.at(source_->algebra().index_of(source_name));
}

Polynomial CdgaMorphism::apply(const Polynomial& p) const {
  if (!p.algebra().same_as(source_->algebra())) throw MixedAlgebra();
  Polynomial out = target_->zero();
  if (p.truncated()) out.mark_truncated();
  for (const auto& [mono, coeff] : p.terms()) {
    Polynomial term = Polynomial::constant(target_->algebra_ptr(), coeff);
    for (const auto& [idx, e] : mono.factors()) {
      term = multiply(term, power_of(images_[idx], e));
      if (term.is_zero()) break;
    }
    out += term;
  }
  return out;
}

CdgaMorphism CdgaMorphism::after(const CdgaMorphism& first) const {
  if (!first.target_->algebra().same_as(source_->algebra())) {
    throw MorphismError("composition of morphisms with mismatched ends");
  }
  std::map<std::string, Polynomial> images;
  const GradedAlgebra& src = first.source_->algebra();
  for (std::size_t i = 0; i < src.size(); ++i) images.emplace(src.generator(i).name, apply(first.images_[i]));
  return CdgaMorphism(first.source_, target_, images);
}

CdgaMorphism CdgaMorphism::identity(const CdgaPtr& a) {
  std::map<std::string, Polynomial> images;
  for (const auto& g : a->algebra().generators()) images.emplace(g.name, a->gen(g.name));
  return CdgaMorphism(a, a, images);
}

// ---------------------------------------------------------------------------

CdgaPtr gem_model(const std::vector<Generator>& generators, int cap) {
  return std::make_shared<const FreeCdga>(std::make_shared<const GradedAlgebra>(generators, cap),
                                          std::map<std::string, Polynomial>{});
}

CdgaPtr gem_model(const std::vector<std::pair<int, int>>& degree_dimensions, int cap) {
  std::vector<Generator> gens;
  for (const auto& [degree, dim] : degree_dimensions) {
    if (degree < 1) throw Error("GEM degree must be >= 1");
    for (int k = 1; k <= dim; ++k) {
      gens.push_back({"e" + std::to_string(degree) + "_" + std::to_string(k), degree});
    }
  }
  return gem_model(gens, cap);
}

std::string prime_name(const std::string& base) { return base + "'"; }
std::string bar_name(const std::string& base) { return base + "~"; }

namespace {

void reject_degree_one(const std::vector<Generator>& generators, const char* what) {
  for (const auto& g : generators) {
    if (g.degree <= 1) {
      throw Error(std::string(what) + " of degree-" + std::to_string(g.degree) + " generator '" +
                  g.name + "' would have degree < 1");
    }
  }
}

}  // namespace

CdgaPtr cone_model(const std::vector<Generator>& generators, int cap) {
  reject_degree_one(generators, "cone");
  std::vector<Generator> gens;
  for (const auto& g : generators) {
    gens.push_back({prime_name(g.name), g.degree});
    gens.push_back({bar_name(g.name), g.degree - 1});
  }
  auto alg = std::make_shared<const GradedAlgebra>(gens, cap);
  std::map<std::string, Polynomial> d;
  for (const auto& g : generators) {
    d.emplace(bar_name(g.name), -Polynomial::generator(alg, prime_name(g.name)));
  }
  return std::make_shared<const FreeCdga>(alg, d);
}

CdgaPtr suspension_model(const std::vector<Generator>& generators, int cap) {
  reject_degree_one(generators, "suspension");
  std::vector<Generator> gens;
  for (const auto& g : generators) gens.push_back({bar_name(g.name), g.degree - 1});
  return gem_model(gens, cap);
}

CoproductResult coproduct(const FreeCdga& a, const FreeCdga& b, bool allow_rename) {
  const GradedAlgebra& ga = a.algebra();
  const GradedAlgebra& gb = b.algebra();
  CoproductResult result;
  std::vector<Generator> gens = ga.generators();
  auto taken = [&](const std::string& n) { return ga.find(n) || gb.find(n); };
  for (const auto& g : gb.generators()) {
    if (!ga.find(g.name)) {
      gens.push_back(g);
      continue;
    }
    if (!allow_rename) throw Error("generator name '" + g.name + "' occurs in both factors");
    std::string fresh;
    for (int k = 1;; ++k) {
      fresh = g.name + "_" + std::to_string(k);
      if (!taken(fresh) && std::none_of(gens.begin(), gens.end(),
                                        [&](const Generator& x) { return x.name == fresh; })) {
        break;
      }
    }
    result.renamed.emplace(g.name, fresh);
    gens.push_back({fresh, g.degree});
  }
  const int cap = std::min(a.cap(), b.cap());
  auto alg = std::make_shared<const GradedAlgebra>(gens, cap);
  std::map<std::string, Polynomial> d;
  auto carry = [&](const FreeCdga& part, const std::map<std::string, std::string>& rename) {
    for (std::size_t i = 0; i < part.algebra().size(); ++i) {
      const auto& g = part.algebra().generator(i);
      if (part.d(i).is_zero() || g.degree + 1 > cap) continue;
      auto it = rename.find(g.name);
      d.emplace(it == rename.end() ? g.name : it->second, transport(part.d(i), alg, rename));
    }
  };
  carry(a, {});
  carry(b, result.renamed);
  result.algebra = std::make_shared<const FreeCdga>(alg, d);
  return result;
}

}  // namespace cdgalab
