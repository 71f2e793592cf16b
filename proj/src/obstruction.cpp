#include "cdgalab/obstruction.hpp"

#include <sstream>

#include "cdgalab/errors.hpp"

namespace cdgalab {

namespace {

/// Multiplicative substitution of partially known generator values.
Polynomial substitute(const Polynomial& p, const std::map<std::string, Polynomial>& values,
                      const CdgaPtr& target) {
  Polynomial out = target->zero();
  for (const auto& [mono, coeff] : p.terms()) {
    Polynomial term = Polynomial::constant(target->algebra_ptr(), coeff);
    for (const auto& [idx, e] : mono.factors()) {
      const std::string& name = p.algebra().generator(idx).name;
      auto it = values.find(name);
      if (it == values.end()) throw ObstructionError("no value assigned to '" + name + "' yet");
      for (unsigned i = 0; i < e; ++i) term = multiply(term, it->second);
    }
    out += term;
  }
  return out;
}

int degree_of(const Polynomial& p, int fallback) { return p.is_zero() ? fallback : *p.degree(); }

}  // namespace

std::string ObstructionClass::describe() const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < coordinates.size(); ++i) {
    const Rational& c = coordinates[i];
    if (c == 0) continue;
    Rational mag = abs(c);
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (mag != 1) os << to_string(mag) << "*";
    os << "[" << basis[i].to_string() << "]";
  }
  return first ? "0" : os.str();
}

ObstructionClass classify(const CdgaPtr& ambient, const Polynomial& cocycle, int degree) {
  if (!ambient->differentiate(cocycle).is_zero()) {
    throw ObstructionError("internal: obstruction representative " + cocycle.to_string() + " is not a cocycle");
  }
  CohomologyGroup h = cohomology(*ambient, degree);
  ObstructionClass out{ambient, degree, cocycle, class_of(*ambient, cocycle, h), h.representatives()};
  return out;
}

// ---------------------------------------------------------------------------

namespace {

MasseyResult finish_massey(const CdgaPtr& b, const Polynomial& a, const Polynomial& bb, const Polynomial& c,
                           const Polynomial& xi, const Polynomial& eta) {
  const int da = degree_of(a, 0);
  const int db = degree_of(bb, 0);
  const int dc = degree_of(c, 0);
  const int dm = da + db + dc - 1;
  Polynomial m = xi * c;
  Polynomial second = a * eta;
  if (da % 2 != 0) {
    m += second;
  } else {
    m -= second;
  }
  MasseyResult out{classify(b, m, dm), xi, eta, {}, true};
  CohomologyGroup hm = cohomology(*b, dm);
  ColumnReducer span;
  auto include = [&](const Polynomial& p) {
    auto v = to_sparse(class_of(*b, p, hm));
    if (span.add(v).independent) out.indeterminacy.push_back(to_dense(v, hm.dimension()));
  };
  if (db + dc - 1 >= 0) {
    CohomologyGroup left = cohomology(*b, db + dc - 1);
    for (const auto& h : left.representatives()) include(a * h);
  }
  if (da + db - 1 >= 0) {
    CohomologyGroup right = cohomology(*b, da + db - 1);
    for (const auto& h : right.representatives()) include(h * c);
  }
  return out;
}

void require_cocycle(const CdgaPtr& b, const Polynomial& p, const char* what) {
  // a zero argument carries no degree
  if (p.is_zero()) throw ObstructionError(std::string(what) + " is zero");
  if (!p.is_homogeneous()) throw ObstructionError(std::string(what) + " is not homogeneous");
  if (!b->differentiate(p).is_zero()) throw ObstructionError(std::string(what) + " = " + p.to_string() + " is not a cocycle");
}

}  // namespace

MasseyResult massey_triple(const CdgaPtr& b, const Polynomial& a, const Polynomial& bb,
                           const Polynomial& c) {
  require_cocycle(b, a, "a");
  require_cocycle(b, bb, "b");
  require_cocycle(b, c, "c");
  Polynomial ab = a * bb;
  Polynomial bc = bb * c;
  auto xi = solve_coboundary(*b, ab, degree_of(a, 0) + degree_of(bb, 0));
  if (!xi) throw ObstructionError("Massey product undefined: a*b = " + ab.to_string() + " is not exact");
  auto eta = solve_coboundary(*b, bc, degree_of(bb, 0) + degree_of(c, 0));
  if (!eta) throw ObstructionError("Massey product undefined: b*c = " + bc.to_string() + " is not exact");
  return finish_massey(b, a, bb, c, *xi, *eta);
}

MasseyResult massey_triple(const CdgaPtr& b, const Polynomial& a, const Polynomial& bb,
                           const Polynomial& c, const Polynomial& xi, const Polynomial& eta) {
  require_cocycle(b, a, "a");
  require_cocycle(b, bb, "b");
  require_cocycle(b, c, "c");
  if (!(b->differentiate(xi) == a * bb)) throw ObstructionError("d(xi) != a*b");
  if (!(b->differentiate(eta) == bb * c)) throw ObstructionError("d(eta) != b*c");
  return finish_massey(b, a, bb, c, xi, eta);
}

bool in_indeterminacy(const MasseyResult& m, const std::vector<Rational>& v) {
  ColumnReducer red;
  for (const auto& b : m.indeterminacy) red.add(to_sparse(b));
  return red.reduce(to_sparse(v)).residue.empty();
}

// ---------------------------------------------------------------------------

CdgaMorphism Strand::morphism(const TruncatedRealization& r) const {
  return CdgaMorphism(r.level(0).algebra, target_, values_);
}

Strand initial_strand(const TruncatedRealization& r, const CdgaMorphism& theta) {
  if (!theta.source()->algebra().same_as(r.base(0)->algebra())) {
    throw ObstructionError("theta must be defined on the level-0 basis algebra");
  }
  Strand s;
  s.target_ = theta.target();
  for (const auto& g : r.basis(0)) s.values_.emplace(g.name, theta.image(g.name));
  return s;
}

struct StrandExtender {
  static StrandExtension run(const TruncatedRealization& r, const Strand& previous) {
    const int stage = previous.stage_ + 1;
    if (stage > 2) throw ObstructionError("strand stages above 2 are not implemented");
    if (stage > r.top_level()) {
      throw ObstructionError("stage " + std::to_string(stage) + " needs simplicial dimension " +
                             std::to_string(stage) + " data");
    }
    const CdgaPtr& b = previous.target_;
    Strand next = previous;
    next.stage_ = stage;
    StrandExtension out;
    for (const auto& g : r.basis(stage)) {
      // The cocycle the new bar generator must bound.
      std::string prime;
      std::string bar;
      Polynomial value = b->zero();
      int degree = 0;
      if (stage == 1) {
        prime = prime_name(g.name);
        bar = bar_name(g.name);
        value = substitute(r.attach(g.name), previous.values_, b);
        degree = g.degree;
      } else {
        prime = prime_name(bar_name(g.name));
        bar = bar_name(bar_name(g.name));
        value = -substitute(r.null(g.name), previous.values_, b);
        degree = g.degree - 1;
      }
      next.values_.insert_or_assign(prime, value);
      ObstructionClass cls = classify(b, value, degree);
      auto solved = solve_coboundary(*b, -value, degree);
      if (!solved) {
        out.failures.push_back({bar, std::move(cls)});
        continue;
      }
      next.values_.insert_or_assign(bar, *solved);
    }
    if (out.failures.empty()) out.strand = std::move(next);
    return out;
  }
};

StrandExtension extend_strand(const TruncatedRealization& r, const Strand& previous) {
  return StrandExtender::run(r, previous);
}

StrandRun run_strand(const TruncatedRealization& r, const CdgaMorphism& theta) {
  StrandRun run{initial_strand(r, theta), std::nullopt, {}};
  for (int stage = 1; stage <= std::min(2, r.top_level()); ++stage) {
    auto ext = extend_strand(r, run.last);
    if (!ext.extended()) {
      run.failed_stage = stage;
      run.failures = std::move(ext.failures);
      return run;
    }
    run.last = std::move(*ext.strand);
  }
  return run;
}

std::vector<std::string> coequalizer_failures(const TruncatedRealization& r, const Strand& s) {
  std::vector<std::string> bad;
  if (r.top_level() < 1) return bad;
  const auto& l1 = r.level(1);
  for (const auto& g : l1.algebra->algebra().generators()) {
    Polynomial p = l1.algebra->gen(g.name);
    try {
      Polynomial a = substitute(l1.faces[0].apply(p), s.values(), s.target());
      Polynomial b = substitute(l1.faces[1].apply(p), s.values(), s.target());
      if (!(a == b)) bad.push_back(g.name);
    } catch (const ObstructionError&) {
      // involves generators beyond the strand's stage
    }
  }
  return bad;
}

// ---------------------------------------------------------------------------

bool MapObstruction::vanishes() const {
  for (const auto& t : terms) {
    if (!t.value.vanishes()) return false;
  }
  return true;
}

const MapObstructionTerm* MapObstruction::value() const {
  for (const auto& t : terms) {
    if (!t.value.vanishes()) return &t;
  }
  return terms.empty() ? nullptr : &terms.front();
}

MapObstruction map_obstruction(const CdgaMorphism& phi, const TruncatedRealization& r,
                               const CdgaMorphism& theta) {
  if (r.top_level() < 1) throw ObstructionError("map obstruction needs simplicial dimension 1 data");
  if (!theta.target()->algebra().same_as(phi.source()->algebra())) {
    throw ObstructionError("the realization's augmentation must land in the source of the morphism");
  }
  auto ext = extend_strand(r, initial_strand(r, theta));
  if (!ext.extended()) {
    throw ObstructionError("the realization's stage-1 strand does not exist: " +
                           ext.failures.front().obstruction.describe());
  }
  const auto& eps = ext.strand->values();
  const CdgaPtr& b = phi.target();
  MapObstruction out;
  for (const auto& g : r.basis(1)) {
    Polynomial prime = phi.apply(eps.at(prime_name(g.name)));
    Polynomial bar = phi.apply(eps.at(bar_name(g.name)));
    auto beta = solve_coboundary(*b, prime, g.degree);
    if (!beta) {
      throw ObstructionError("precondition failed: phi(eps(" + prime_name(g.name) + ")) = " + prime.to_string() +
                             " is not exact, so phi is nonzero on cohomology");
    }
    Polynomial c = -(bar + *beta);
    out.terms.push_back({g.name, *beta, classify(b, c, g.degree - 1)});
  }
  return out;
}

}  // namespace cdgalab
