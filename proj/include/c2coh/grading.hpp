#pragma once

#include <string>
#include <string_view>

namespace c2coh {

// p + q*alpha, alpha the sign representation
struct RODegree {
  int p = 0;
  int q = 0;

  static constexpr RODegree diagonal(int n) { return {n, n}; }  // n(1+alpha)
  static constexpr RODegree alpha() { return {0, 1}; }

  constexpr int dimension() const { return p + q; }
  constexpr bool is_diagonal() const { return p == q; }

  friend constexpr RODegree operator+(RODegree x, RODegree y) { return {x.p + y.p, x.q + y.q}; }
  friend constexpr RODegree operator-(RODegree x, RODegree y) { return {x.p - y.p, x.q - y.q}; }
  friend constexpr RODegree operator-(RODegree x) { return {-x.p, -x.q}; }
  friend constexpr RODegree operator*(int k, RODegree x) { return {k * x.p, k * x.q}; }
  friend constexpr auto operator<=>(const RODegree&, const RODegree&) = default;
};

constexpr RODegree deg_add(RODegree x, RODegree y) { return x + y; }
constexpr int dimension(RODegree d) { return d.dimension(); }
constexpr bool is_diagonal(RODegree d) { return d.is_diagonal(); }

enum class Grading { cohomological, homological };

constexpr RODegree convert(RODegree d, Grading from, Grading to) { return from == to ? d : -d; }

// "p+q*al"
std::string to_string(RODegree d);
RODegree parse_degree(std::string_view text);

}  // namespace c2coh
