#include "c2coh/gf2.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace c2coh {

Monomial::Monomial(std::vector<Factor> factors) {
  std::sort(factors.begin(), factors.end());
  for (const auto& [g, e] : factors) {
    if (e == 0) continue;
    if (!factors_.empty() && factors_.back().first == g)
      factors_.back().second += e;
    else
      factors_.emplace_back(g, e);
  }
}

Monomial Monomial::generator(GenId g, std::uint32_t exponent) {
  Monomial m;
  if (exponent > 0) m.factors_.emplace_back(g, exponent);
  return m;
}

std::uint32_t Monomial::exponent(GenId g) const {
  auto it = std::lower_bound(factors_.begin(), factors_.end(), Factor{g, 0});
  return (it != factors_.end() && it->first == g) ? it->second : 0;
}

std::uint64_t Monomial::total_exponent() const {
  std::uint64_t s = 0;
  for (const auto& f : factors_) s += f.second;
  return s;
}

long Monomial::weighted_degree(std::span<const int> weights) const {
  long d = 0;
  for (const auto& [g, e] : factors_) {
    if (g >= weights.size()) throw std::out_of_range("generator without weight");
    d += static_cast<long>(e) * weights[g];
  }
  return d;
}

bool Monomial::divides(const Monomial& other) const {
  for (const auto& [g, e] : factors_)
    if (other.exponent(g) < e) return false;
  return true;
}

Monomial operator*(const Monomial& x, const Monomial& y) {
  Monomial r;
  r.factors_.reserve(x.factors_.size() + y.factors_.size());
  auto i = x.factors_.begin();
  auto j = y.factors_.begin();
  while (i != x.factors_.end() || j != y.factors_.end()) {
    if (j == y.factors_.end() || (i != x.factors_.end() && i->first < j->first)) {
      r.factors_.push_back(*i++);
    } else if (i == x.factors_.end() || j->first < i->first) {
      r.factors_.push_back(*j++);
    } else {
      r.factors_.emplace_back(i->first, i->second + j->second);
      ++i;
      ++j;
    }
  }
  return r;
}

Polynomial Polynomial::from_terms(std::vector<Monomial> terms) {
  std::sort(terms.begin(), terms.end());
  Polynomial p;
  for (std::size_t i = 0; i < terms.size();) {
    std::size_t j = i;
    while (j < terms.size() && terms[j] == terms[i]) ++j;
    if ((j - i) % 2 == 1) p.terms_.push_back(std::move(terms[i]));
    i = j;
  }
  return p;
}

bool Polynomial::contains(const Monomial& m) const {
  return std::binary_search(terms_.begin(), terms_.end(), m);
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  std::vector<Monomial> out;
  out.reserve(terms_.size() + other.terms_.size());
  std::set_symmetric_difference(terms_.begin(), terms_.end(), other.terms_.begin(),
                                other.terms_.end(), std::back_inserter(out));
  terms_ = std::move(out);
  return *this;
}

Polynomial operator*(const Polynomial& x, const Polynomial& y) {
  std::vector<Monomial> prod;
  prod.reserve(x.terms_.size() * y.terms_.size());
  for (const auto& m : x.terms_)
    for (const auto& n : y.terms_) prod.push_back(m * n);
  return Polynomial::from_terms(std::move(prod));
}

Polynomial poly_mul(const Polynomial& x, const Polynomial& y) { return x * y; }

// --- bit vectors ---------------------------------------------------------

void BitVector::set(std::size_t i, bool v) {
  auto mask = std::uint64_t{1} << (i % 64);
  if (v)
    words_[i / 64] |= mask;
  else
    words_[i / 64] &= ~mask;
}

BitVector& BitVector::operator^=(const BitVector& other) {
  if (other.size_ != size_) throw std::invalid_argument("bit vector size mismatch");
  for (std::size_t k = 0; k < words_.size(); ++k) words_[k] ^= other.words_[k];
  return *this;
}

bool BitVector::any() const {
  return std::any_of(words_.begin(), words_.end(), [](auto w) { return w != 0; });
}

std::size_t BitVector::count() const {
  std::size_t c = 0;
  for (auto w : words_) c += std::popcount(w);
  return c;
}

std::size_t BitVector::highest() const {
  for (std::size_t k = words_.size(); k-- > 0;)
    if (words_[k]) return k * 64 + 63 - std::countl_zero(words_[k]);
  return size_;
}

BitMatrix::BitMatrix(std::size_t rows, std::size_t cols)
    : cols_(cols), rows_(rows, BitVector(cols)) {}

BitMatrix BitMatrix::identity(std::size_t n) {
  BitMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i);
  return m;
}

BitMatrix operator*(const BitMatrix& x, const BitMatrix& y) {
  if (x.cols() != y.rows()) throw std::invalid_argument("matrix shape mismatch");
  BitMatrix r(x.rows(), y.cols());
  for (std::size_t i = 0; i < x.rows(); ++i)
    for (std::size_t k = 0; k < x.cols(); ++k)
      if (x.get(i, k)) r.rows_[i] ^= y.rows_[k];
  return r;
}

BitMatrix operator+(const BitMatrix& x, const BitMatrix& y) {
  if (x.rows() != y.rows() || x.cols() != y.cols())
    throw std::invalid_argument("matrix shape mismatch");
  BitMatrix r = x;
  for (std::size_t i = 0; i < x.rows(); ++i) r.rows_[i] ^= y.rows_[i];
  return r;
}

std::size_t rank_gf2(const BitMatrix& m) {
  EchelonBasis e(m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) e.insert(m.row(i));
  return e.rank();
}

EchelonBasis::Reduced EchelonBasis::reduce(BitVector v, BitVector tag) const {
  if (v.size() != width_) throw std::invalid_argument("echelon width mismatch");
  if (tag.size() != tag_width_) tag = BitVector(tag_width_);
  for (const auto& [pivot, row] : rows_) {
    if (v.get(pivot)) {
      v ^= row.bits;
      tag ^= row.tag;
    }
  }
  return {std::move(v), std::move(tag)};
}

bool EchelonBasis::insert(BitVector v, BitVector tag) {
  auto r = reduce(std::move(v), std::move(tag));
  if (!r.residual.any()) return false;
  auto pivot = r.residual.highest();
  rows_.emplace(pivot, Row{std::move(r.residual), std::move(r.tag)});
  return true;
}

void GradedVector::add(int degree, std::string name) {
  if (degree > bound_)
    throw std::invalid_argument("degree " + std::to_string(degree) + " exceeds bound " +
                                std::to_string(bound_));
  for (const auto& [d, names] : basis_)
    if (std::find(names.begin(), names.end(), name) != names.end())
      throw std::invalid_argument("duplicate basis name '" + name + "'");
  basis_[degree].push_back(std::move(name));
}

int GradedVector::dim(int degree) const {
  auto it = basis_.find(degree);
  return it == basis_.end() ? 0 : static_cast<int>(it->second.size());
}

const std::vector<std::string>& GradedVector::basis(int degree) const {
  static const std::vector<std::string> empty;
  auto it = basis_.find(degree);
  return it == basis_.end() ? empty : it->second;
}

std::vector<int> GradedVector::degrees() const {
  std::vector<int> out;
  for (const auto& [d, names] : basis_) out.push_back(d);
  return out;
}

}  // namespace c2coh
