#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace c2coh {

struct Bit {
  bool value = false;

  constexpr Bit() = default;
  constexpr explicit Bit(bool v) : value(v) {}
  constexpr explicit operator bool() const { return value; }

  friend constexpr Bit operator+(Bit x, Bit y) { return Bit{x.value != y.value}; }
  friend constexpr Bit operator-(Bit x, Bit y) { return x + y; }
  friend constexpr Bit operator*(Bit x, Bit y) { return Bit{x.value && y.value}; }
  friend constexpr bool operator==(Bit, Bit) = default;
};

// Lucas: C(n,k) is odd iff every bit of k is a bit of n.
constexpr Bit binom_mod2(std::uint64_t n, std::uint64_t k) { return Bit{(k & ~n) == 0}; }

using GenId = std::uint32_t;

// Commutative monomial: sorted (generator, exponent) pairs, exponents > 0.
class Monomial {
 public:
  using Factor = std::pair<GenId, std::uint32_t>;

  Monomial() = default;
  explicit Monomial(std::vector<Factor> factors);
  static Monomial generator(GenId g, std::uint32_t exponent = 1);

  std::uint32_t exponent(GenId g) const;
  std::span<const Factor> factors() const& { return factors_; }
  std::span<const Factor> factors() const&& = delete;
  bool is_one() const { return factors_.empty(); }
  std::uint64_t total_exponent() const;
  // sum of exponent * weight[generator]
  long weighted_degree(std::span<const int> weights) const;
  bool divides(const Monomial& other) const;

  friend Monomial operator*(const Monomial& x, const Monomial& y);
  auto operator<=>(const Monomial&) const = default;
  bool operator==(const Monomial&) const = default;

 private:
  std::vector<Factor> factors_;
};

// Polynomial over GF(2): a sorted set of monomials.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(Monomial m) { terms_.push_back(std::move(m)); }
  static Polynomial one() { return Polynomial(Monomial{}); }
  // Sums the list; repeated monomials cancel in pairs.
  static Polynomial from_terms(std::vector<Monomial> terms);

  const std::vector<Monomial>& terms() const& { return terms_; }
  std::vector<Monomial> terms() && { return std::move(terms_); }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  bool contains(const Monomial& m) const;

  Polynomial& operator+=(const Polynomial& other);
  friend Polynomial operator+(Polynomial x, const Polynomial& y) { return x += y; }
  friend Polynomial operator*(const Polynomial& x, const Polynomial& y);
  auto operator<=>(const Polynomial&) const = default;
  bool operator==(const Polynomial&) const = default;

 private:
  std::vector<Monomial> terms_;
};

Polynomial poly_mul(const Polynomial& x, const Polynomial& y);

class BitVector {
 public:
  BitVector() = default;
  explicit BitVector(std::size_t size) : size_(size), words_((size + 63) / 64, 0) {}

  std::size_t size() const { return size_; }
  bool get(std::size_t i) const { return (words_[i / 64] >> (i % 64)) & 1u; }
  void set(std::size_t i, bool v = true);
  void flip(std::size_t i) { words_[i / 64] ^= (std::uint64_t{1} << (i % 64)); }
  BitVector& operator^=(const BitVector& other);
  bool any() const;
  std::size_t count() const;
  // index of the highest set bit, or size() when zero
  std::size_t highest() const;
  bool operator==(const BitVector&) const = default;

 private:
  std::size_t size_ = 0;
  std::vector<std::uint64_t> words_;
};

class BitMatrix {
 public:
  BitMatrix() = default;
  BitMatrix(std::size_t rows, std::size_t cols);
  static BitMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_.size(); }
  std::size_t cols() const { return cols_; }
  bool get(std::size_t r, std::size_t c) const { return rows_[r].get(c); }
  void set(std::size_t r, std::size_t c, bool v = true) { rows_[r].set(c, v); }
  const BitVector& row(std::size_t r) const { return rows_[r]; }

  friend BitMatrix operator*(const BitMatrix& x, const BitMatrix& y);
  friend BitMatrix operator+(const BitMatrix& x, const BitMatrix& y);
  bool operator==(const BitMatrix&) const = default;

 private:
  std::size_t cols_ = 0;
  std::vector<BitVector> rows_;
};

std::size_t rank_gf2(const BitMatrix& m);

// Incremental row echelon form; the pivot of a row is its highest set bit.
// Each row carries a tag vector recording which inserted vectors it combines.
class EchelonBasis {
 public:
  explicit EchelonBasis(std::size_t width = 0, std::size_t tag_width = 0)
      : width_(width), tag_width_(tag_width) {}

  struct Reduced {
    BitVector residual;
    BitVector tag;
  };

  std::size_t width() const { return width_; }
  std::size_t rank() const { return rows_.size(); }
  bool is_pivot(std::size_t column) const { return rows_.count(column) != 0; }
  Reduced reduce(BitVector v, BitVector tag = {}) const;
  bool contains(const BitVector& v) const { return !reduce(v).residual.any(); }
  // Returns false when v was already in the span.
  bool insert(BitVector v, BitVector tag = {});

 private:
  struct Row {
    BitVector bits;
    BitVector tag;
  };
  std::size_t width_;
  std::size_t tag_width_;
  std::map<std::size_t, Row, std::greater<>> rows_;
};

// Finite graded F-vector space with named basis, concentrated in degrees <= bound.
class GradedVector {
 public:
  explicit GradedVector(int bound) : bound_(bound) {}

  void add(int degree, std::string name);
  int bound() const { return bound_; }
  int dim(int degree) const;
  const std::vector<std::string>& basis(int degree) const;
  std::vector<int> degrees() const;

 private:
  int bound_;
  std::map<int, std::vector<std::string>> basis_;
};

}  // namespace c2coh
