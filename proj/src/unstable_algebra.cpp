#include "c2coh/unstable_algebra.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

#include "c2coh/errors.hpp"
#include "c2coh/expression.hpp"

namespace c2coh {

UnstableAlgebra::UnstableAlgebra(std::vector<AlgebraGenerator> generators,
                                 std::vector<Polynomial> relations, SqTable sq, int bound)
    : generators_(std::move(generators)), relations_(std::move(relations)), sq_(std::move(sq)),
      bound_(bound) {
  if (bound_ < 0) throw std::invalid_argument("negative bound");
  for (std::size_t i = 0; i < generators_.size(); ++i) {
    const auto& g = generators_[i];
    if (g.name.empty() || !is_identifier(g.name))
      throw std::invalid_argument("bad generator name '" + g.name + "'");
    if (g.name == "b") throw std::invalid_argument("generator name 'b' is reserved");
    if (g.degree < 1) throw std::invalid_argument("generator '" + g.name + "' needs degree >= 1");
    for (std::size_t j = 0; j < i; ++j)
      if (generators_[j].name == g.name)
        throw std::invalid_argument("duplicate generator '" + g.name + "'");
    weights_.push_back(g.degree);
  }
  for (const auto& r : relations_) {
    if (r.is_zero()) throw std::invalid_argument("zero relation");
    for (const auto& m : r.terms()) {
      for (const auto& [g, e] : m.factors())
        if (g >= generators_.size()) throw std::invalid_argument("relation uses unknown generator");
      if (degree(m) != degree(r.terms().front()))
        throw std::invalid_argument("inhomogeneous relation");
    }
    if (degree(r.terms().front()) == 0) throw std::invalid_argument("relation in degree 0");
  }
  build_degrees();

  squares_.resize(generators_.size());
  for (std::size_t g = 0; g < generators_.size(); ++g) {
    int n = generators_[g].degree;
    auto gen = Polynomial(Monomial::generator(static_cast<GenId>(g)));
    squares_[g].assign(n + 1, Polynomial{});
    squares_[g][0] = gen;
    squares_[g][n] = gen * gen;
  }
  for (const auto& [g, entries] : sq_) {
    if (g >= generators_.size()) throw std::invalid_argument("Sq table names unknown generator");
    const auto& gen = generators_[g];
    for (const auto& [i, value] : entries) {
      std::string where = "Sq^" + std::to_string(i) + " " + gen.name;
      if (i < 0) throw std::invalid_argument("negative square in " + where);
      if (i > gen.degree) {
        if (!value.is_zero()) throw std::invalid_argument("instability violated: " + where);
        continue;
      }
      if (!value.is_zero() && degree(value) != gen.degree + i)
        throw std::invalid_argument("wrong degree for " + where);
      if (i == 0 && !reduce_or_empty_check(value, squares_[g][0]))
        throw std::invalid_argument("Sq^0 must be the identity on " + gen.name);
      if (i == gen.degree && !reduce_or_empty_check(value, squares_[g][i]))
        throw std::invalid_argument("Sq^" + std::to_string(i) + " " + gen.name +
                                    " must be the square of " + gen.name);
      squares_[g][i] = value;
    }
  }
  validate_squares();
}

bool UnstableAlgebra::reduce_or_empty_check(const Polynomial& x, const Polynomial& y) const {
  auto d = degree(x + y);
  if (!d || !in_range(*d)) return true;
  return reduce(x + y).is_zero();
}

UnstableAlgebra UnstableAlgebra::point(int bound) { return UnstableAlgebra({}, {}, {}, bound); }

UnstableAlgebra UnstableAlgebra::truncated_polynomial(std::string name, int degree, int height,
                                                      int bound) {
  return UnstableAlgebra({{std::move(name), degree}},
                         {Polynomial(Monomial::generator(0, height + 1))}, {}, bound);
}

std::vector<Monomial> UnstableAlgebra::monomials_of_degree(int d) const {
  std::vector<Monomial> out;
  std::vector<Monomial::Factor> current;
  std::function<void(std::size_t, int)> rec = [&](std::size_t g, int remaining) {
    if (remaining == 0) {
      out.push_back(Monomial(current));
      return;
    }
    if (g == generators_.size()) return;
    int w = generators_[g].degree;
    for (int e = 0; e * w <= remaining; ++e) {
      if (e > 0) current.emplace_back(static_cast<GenId>(g), e);
      rec(g + 1, remaining - e * w);
      if (e > 0) current.pop_back();
    }
  };
  rec(0, d);
  std::sort(out.begin(), out.end());
  return out;
}

void UnstableAlgebra::build_degrees() {
  degrees_.clear();
  degrees_.resize(bound_ + 1);
  for (int d = 0; d <= bound_; ++d) {
    auto& data = degrees_[d];
    data.monomials = monomials_of_degree(d);
    for (std::size_t k = 0; k < data.monomials.size(); ++k) data.index[data.monomials[k]] = k;
    data.ideal = EchelonBasis(data.monomials.size());
    for (const auto& r : relations_) {
      int e = degree(r.terms().front());
      if (e > d) continue;
      for (const auto& m : degrees_[d - e].monomials) {
        BitVector v(data.monomials.size());
        for (const auto& t : r.terms()) v.flip(data.index.at(m * t));
        data.ideal.insert(std::move(v));
      }
    }
    for (std::size_t k = 0; k < data.monomials.size(); ++k)
      if (!data.ideal.is_pivot(k)) data.basis.push_back(data.monomials[k]);
  }
  int maxgen = 0;
  for (const auto& g : generators_) maxgen = std::max(maxgen, g.degree);
  if (generators_.empty()) {
    complete_ = true;
  } else if (bound_ >= maxgen) {
    complete_ = true;
    for (int d = bound_ - maxgen + 1; d <= bound_; ++d)
      if (!degrees_[d].basis.empty()) complete_ = false;
  }
}

void UnstableAlgebra::validate_squares() const {
  for (const auto& r : relations_) {
    int e = degree(r.terms().front());
    for (int i = 1; i <= e && in_range(e + i); ++i)
      if (!reduce(sq_free(i, r)).is_zero())
        throw std::invalid_argument("relation " + format(r) + " is not closed under Sq^" +
                                    std::to_string(i));
  }
}

int UnstableAlgebra::degree(const Monomial& m) const {
  return static_cast<int>(m.weighted_degree(weights_));
}

std::optional<int> UnstableAlgebra::degree(const Polynomial& x) const {
  if (x.is_zero()) return std::nullopt;
  int d = degree(x.terms().front());
  for (const auto& m : x.terms())
    if (degree(m) != d) throw std::invalid_argument("inhomogeneous element " + format(x));
  return d;
}

const std::vector<Monomial>& UnstableAlgebra::basis(int d) const {
  static const std::vector<Monomial> empty;
  if (d < 0) return empty;
  if (d > bound_) {
    if (complete_) return empty;
    throw DegreeOverflow("degree " + std::to_string(d) + " exceeds bound " +
                         std::to_string(bound_));
  }
  return degrees_[d].basis;
}

std::vector<int> UnstableAlgebra::poincare_series(int up_to) const {
  std::vector<int> out;
  for (int d = 0; d <= up_to; ++d) out.push_back(dim(d));
  return out;
}

int UnstableAlgebra::top_degree() const {
  for (int d = bound_; d >= 0; --d)
    if (!degrees_[d].basis.empty()) return d;
  return -1;
}

Polynomial UnstableAlgebra::reduce(const Polynomial& x) const {
  std::map<int, std::vector<const Monomial*>> by_degree;
  for (const auto& m : x.terms()) by_degree[degree(m)].push_back(&m);
  std::vector<Monomial> out;
  for (const auto& [d, monos] : by_degree) {
    if (d > bound_) {
      if (complete_) continue;
      throw DegreeOverflow("degree " + std::to_string(d) + " exceeds bound " +
                           std::to_string(bound_));
    }
    const auto& data = degrees_[d];
    BitVector v(data.monomials.size());
    for (const auto* m : monos) v.flip(data.index.at(*m));
    auto r = data.ideal.reduce(std::move(v)).residual;
    for (std::size_t k = 0; k < data.monomials.size(); ++k)
      if (r.get(k)) out.push_back(data.monomials[k]);
  }
  return Polynomial::from_terms(std::move(out));
}

Polynomial UnstableAlgebra::multiply(const Polynomial& x, const Polynomial& y) const {
  return reduce(x * y);
}

Polynomial UnstableAlgebra::power(const Polynomial& x, int n) const {
  if (n < 0) throw std::invalid_argument("negative power");
  Polynomial r = Polynomial::one();
  for (int k = 0; k < n; ++k) r = multiply(r, x);
  return r;
}

Polynomial UnstableAlgebra::sq_monomial(int i, const Monomial& m) const {
  int target = degree(m) + i;
  std::vector<GenId> factors;
  for (const auto& [g, e] : m.factors())
    for (std::uint32_t k = 0; k < e; ++k) factors.push_back(g);
  int remaining = degree(m);
  Polynomial partial = Polynomial::one();
  for (GenId g : factors) {
    remaining -= generators_[g].degree;
    std::vector<Monomial> next;
    for (const auto& t : partial.terms()) {
      int dt = degree(t);
      for (const auto& s : squares_[g])
        for (const auto& sm : s.terms()) {
          int d = dt + degree(sm);
          if (d + remaining <= target && d + 2 * remaining >= target) next.push_back(t * sm);
        }
    }
    partial = Polynomial::from_terms(std::move(next));
  }
  return partial;
}

Polynomial UnstableAlgebra::sq_free(int i, const Polynomial& x) const {
  Polynomial r;
  for (const auto& m : x.terms())
    if (i <= degree(m)) r += sq_monomial(i, m);
  return r;
}

Polynomial UnstableAlgebra::sq(int i, const Polynomial& x) const {
  if (i < 0) throw std::invalid_argument("negative square");
  auto d = degree(x);
  if (!d) return {};
  if (i == 0) return reduce(x);
  if (i > *d) return {};
  if (!in_range(*d + i))
    throw DegreeOverflow("Sq^" + std::to_string(i) + " of a degree " + std::to_string(*d) +
                         " class exceeds bound " + std::to_string(bound_));
  if (*d + i > bound_) return {};
  return reduce(sq_free(i, x));
}

Polynomial UnstableAlgebra::total_sq(const Polynomial& x) const {
  std::map<int, std::vector<Monomial>> parts;
  for (const auto& m : x.terms()) parts[degree(m)].push_back(m);
  Polynomial r;
  for (const auto& [d, monos] : parts) {
    auto part = Polynomial::from_terms(monos);
    for (int i = 0; i <= d; ++i) r += sq(i, part);
  }
  return r;
}

std::optional<GenId> UnstableAlgebra::generator_index(std::string_view name) const {
  for (std::size_t g = 0; g < generators_.size(); ++g)
    if (generators_[g].name == name) return static_cast<GenId>(g);
  return std::nullopt;
}

Polynomial UnstableAlgebra::generator(std::string_view name) const {
  auto g = generator_index(name);
  if (!g) throw std::invalid_argument("unknown generator '" + std::string(name) + "'");
  return Polynomial(Monomial::generator(*g));
}

Polynomial UnstableAlgebra::parse(std::string_view text) const {
  return reduce(parse_polynomial(text, [this](std::string_view n) { return generator_index(n); }));
}

std::string UnstableAlgebra::format(const Monomial& m) const {
  if (m.is_one()) return "1";
  std::string s;
  for (const auto& [g, e] : m.factors()) {
    if (!s.empty()) s += "*";
    s += generators_[g].name;
    if (e != 1) s += "^" + std::to_string(e);
  }
  return s;
}

std::string UnstableAlgebra::format(const Polynomial& x) const {
  if (x.is_zero()) return "0";
  std::string s;
  for (const auto& m : x.terms()) {
    if (!s.empty()) s += " + ";
    s += format(m);
  }
  return s;
}

namespace {

Monomial shift(const Monomial& m, GenId offset) {
  std::vector<Monomial::Factor> f;
  for (const auto& [g, e] : m.factors()) f.emplace_back(g + offset, e);
  return Monomial(std::move(f));
}

Polynomial shift(const Polynomial& p, GenId offset) {
  std::vector<Monomial> out;
  for (const auto& m : p.terms()) out.push_back(shift(m, offset));
  return Polynomial::from_terms(std::move(out));
}

}  // namespace

UnstableAlgebra tensor_product(const UnstableAlgebra& x, const UnstableAlgebra& y, int bound) {
  auto gens = x.generators();
  GenId offset = static_cast<GenId>(gens.size());
  gens.insert(gens.end(), y.generators().begin(), y.generators().end());
  auto rels = x.relations();
  for (const auto& r : y.relations()) rels.push_back(shift(r, offset));
  SqTable sq = x.sq_table();
  for (const auto& [g, entries] : y.sq_table())
    for (const auto& [i, v] : entries) sq[g + offset][i] = shift(v, offset);
  return UnstableAlgebra(std::move(gens), std::move(rels), std::move(sq), bound);
}

}  // namespace c2coh
