#include "c2coh/steinberg.hpp"

#include <algorithm>
#include <stdexcept>

#include "c2coh/errors.hpp"

namespace c2coh {

BPolynomial BPolynomial::from_terms(std::vector<BTerm> terms) {
  std::sort(terms.begin(), terms.end());
  BPolynomial x;
  for (std::size_t i = 0; i < terms.size();) {
    std::size_t j = i;
    while (j < terms.size() && terms[j] == terms[i]) ++j;
    if ((j - i) % 2 == 1) x.terms_.push_back(terms[i]);
    i = j;
  }
  return x;
}

BPolynomial BPolynomial::from_coefficient(const Polynomial& c, int k) {
  std::vector<BTerm> terms;
  for (const auto& m : c.terms()) terms.push_back({k, m});
  return from_terms(std::move(terms));
}

Polynomial BPolynomial::coefficient(int k) const {
  std::vector<Monomial> out;
  for (const auto& t : terms_)
    if (t.b == k) out.push_back(t.m);
  return Polynomial::from_terms(std::move(out));
}

int BPolynomial::max_b() const {
  int k = -1;
  for (const auto& t : terms_) k = std::max(k, t.b);
  return k;
}

BPolynomial& BPolynomial::operator+=(const BPolynomial& other) {
  std::vector<BTerm> out;
  std::set_symmetric_difference(terms_.begin(), terms_.end(), other.terms_.begin(),
                                other.terms_.end(), std::back_inserter(out));
  terms_ = std::move(out);
  return *this;
}

BPolynomial b_times(const BPolynomial& x, int k) {
  std::vector<BTerm> terms;
  for (const auto& t : x.terms()) terms.push_back({t.b + k, t.m});
  return BPolynomial::from_terms(std::move(terms));
}

BPolynomial multiply(const UnstableAlgebra& m, const BPolynomial& x, const BPolynomial& y) {
  BPolynomial r;
  for (const auto& s : x.terms())
    for (const auto& t : y.terms())
      r += BPolynomial::from_coefficient(m.multiply(Polynomial(s.m), Polynomial(t.m)), s.b + t.b);
  return r;
}

std::string format(const UnstableAlgebra& m, const BPolynomial& x) {
  if (x.is_zero()) return "0";
  std::string s;
  for (auto it = x.terms().rbegin(); it != x.terms().rend(); ++it) {
    if (!s.empty()) s += " + ";
    std::string b = it->b == 0 ? "" : it->b == 1 ? "b" : "b^" + std::to_string(it->b);
    if (b.empty())
      s += m.format(it->m);
    else if (it->m.is_one())
      s += b;
    else
      s += b + "*" + m.format(it->m);
  }
  return s;
}

BPolynomial steinberg(const UnstableAlgebra& m, const Polynomial& x) {
  auto n = m.degree(x);
  if (!n) return {};
  BPolynomial r;
  for (int j = 0; j <= *n; ++j) r += BPolynomial::from_coefficient(m.sq(j, x), *n - j);
  return r;
}

std::size_t steinberg_rank(const UnstableAlgebra& m, int n) {
  const auto& basis = m.basis(n);
  // coordinates: (b^e, basis monomial of degree 2n - e)
  std::map<BTerm, std::size_t> index;
  for (int e = 0; e <= 2 * n; ++e)
    for (const auto& mono : m.basis(2 * n - e)) index.emplace(BTerm{e, mono}, index.size());
  BitMatrix mat(basis.size(), index.size());
  for (std::size_t r = 0; r < basis.size(); ++r)
    for (const auto& t : steinberg(m, Polynomial(basis[r])).terms()) mat.set(r, index.at(t));
  return rank_gf2(mat);
}

int DoubledModule::degree(const Polynomial& phi_x) const {
  auto d = m_->degree(phi_x);
  return d ? 2 * *d : 0;
}

Polynomial DoubledModule::sq(int i, const Polynomial& phi_x) const {
  if (i % 2 != 0) return {};
  return m_->sq(i / 2, phi_x);
}

Polynomial sq0(const UnstableAlgebra& m, const Polynomial& x) {
  auto d = m.degree(x);
  if (!d) return {};
  return m.sq(*d, x);
}

RModule::RModule(const UnstableAlgebra& m, int bound)
    : m_(std::make_shared<const UnstableAlgebra>(m)), bound_(bound) {
  if (bound < 0) throw std::invalid_argument("negative bound");
  degrees_.resize(bound + 1);
  for (int d = 0; d <= bound; ++d) {
    auto& deg = degrees_[d];
    for (int e = 0; e <= d; ++e)
      for (const auto& mono : m_->basis(d - e)) {
        deg.index.emplace(BTerm{e, mono}, deg.ambient.size());
        deg.ambient.push_back({e, mono});
      }
    for (int n = 0; 2 * n <= d; ++n)
      for (const auto& x : m_->basis(n)) {
        deg.basis.push_back(b_times(steinberg(*m_, Polynomial(x)), d - 2 * n));
        deg.labels.emplace_back(d - 2 * n, x);
      }
    deg.echelon = EchelonBasis(deg.ambient.size(), deg.basis.size());
    for (std::size_t k = 0; k < deg.basis.size(); ++k) {
      BitVector tag(deg.basis.size());
      tag.set(k);
      if (!deg.echelon.insert(coordinates(deg, deg.basis[k]), std::move(tag)))
        throw std::logic_error("Steinberg classes are dependent in degree " + std::to_string(d));
    }
  }
}

BitVector RModule::coordinates(const Degree& deg, const BPolynomial& y) const {
  BitVector v(deg.ambient.size());
  for (const auto& t : y.terms()) {
    auto it = deg.index.find(t);
    if (it == deg.index.end())
      throw std::invalid_argument("term " + format(*m_, BPolynomial::from_terms({t})) +
                                  " is not a reduced basis term");
    v.flip(it->second);
  }
  return v;
}

int RModule::degree_of(const BPolynomial& y) const {
  int d = -1;
  for (const auto& t : y.terms()) {
    int e = t.b + m_->degree(t.m);
    if (d >= 0 && e != d) throw std::invalid_argument("inhomogeneous element");
    d = e;
  }
  if (d > bound_) throw DegreeOverflow("degree " + std::to_string(d) + " exceeds bound");
  return d;
}

int RModule::dim(int d) const {
  if (d < 0) return 0;
  if (d > bound_) throw DegreeOverflow("degree " + std::to_string(d) + " exceeds bound");
  return static_cast<int>(degrees_[d].basis.size());
}

std::vector<int> RModule::poincare_series() const {
  std::vector<int> out;
  for (int d = 0; d <= bound_; ++d) out.push_back(dim(d));
  return out;
}

bool RModule::contains(const BPolynomial& y) const {
  int d = degree_of(y);
  if (d < 0) return true;
  return degrees_[d].echelon.contains(coordinates(degrees_[d], y));
}

Polynomial RModule::rho1(const BPolynomial& y) const {
  int d = degree_of(y);
  if (d < 0) return {};
  const auto& deg = degrees_[d];
  auto r = deg.echelon.reduce(coordinates(deg, y));
  if (r.residual.any()) throw std::invalid_argument("element is not in R M");
  std::vector<Monomial> out;
  for (std::size_t k = 0; k < deg.labels.size(); ++k)
    if (r.tag.get(k) && deg.labels[k].first == 0) out.push_back(deg.labels[k].second);
  return Polynomial::from_terms(std::move(out));
}

const std::vector<BPolynomial>& RModule::basis(int d) const {
  if (d < 0 || d > bound_) throw DegreeOverflow("degree out of range");
  return degrees_[d].basis;
}

const std::vector<BTerm>& RModule::ambient(int d) const {
  if (d < 0 || d > bound_) throw DegreeOverflow("degree out of range");
  return degrees_[d].ambient;
}

RModule compute_R(const UnstableAlgebra& m, int bound) { return RModule(m, bound); }

AdemReport adem_spotcheck(const UnstableAlgebra& m, int bound) {
  AdemReport rep;
  for (int d = 0; d + 4 <= bound; ++d)
    for (const auto& mono : m.basis(d)) {
      Polynomial x(mono);
      auto fail = [&](const std::string& what) {
        if (rep.ok) rep.violation = what + " on " + m.format(x);
        rep.ok = false;
      };
      ++rep.checked;
      if (!m.sq(1, m.sq(1, x)).is_zero()) fail("Sq1Sq1 != 0");
      ++rep.checked;
      if (m.sq(1, m.sq(2, x)) != m.sq(3, x)) fail("Sq1Sq2 != Sq3");
      ++rep.checked;
      if (m.sq(2, m.sq(2, x)) != m.sq(3, m.sq(1, x))) fail("Sq2Sq2 != Sq3Sq1");
    }
  return rep;
}

AdemReport adem_spotcheck() {
  UnstableAlgebra p({{"t1", 1}, {"t2", 1}, {"t3", 1}}, {}, {}, 12);
  return adem_spotcheck(p, 12);
}

}  // namespace c2coh
