#include "oracles.hpp"

#include <stdexcept>

#include "c2coh/steinberg.hpp"

namespace oracle {

bool binom_odd(int n, int k) {
  static std::vector<std::vector<int>> table{{1}};
  while (static_cast<int>(table.size()) <= n) {
    const auto& prev = table.back();
    std::vector<int> row(prev.size() + 1, 1);
    for (std::size_t j = 1; j < prev.size(); ++j) row[j] = (prev[j - 1] + prev[j]) % 2;
    table.push_back(row);
  }
  if (k < 0 || k > n || n < 0) return false;
  return table[n][k] == 1;
}

std::size_t rank(std::vector<std::vector<int>> rows) {
  std::size_t r = 0;
  if (rows.empty()) return 0;
  std::size_t cols = rows[0].size();
  for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
    std::size_t p = r;
    while (p < rows.size() && !rows[p][c]) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[p], rows[r]);
    for (std::size_t i = 0; i < rows.size(); ++i)
      if (i != r && rows[i][c])
        for (std::size_t j = 0; j < cols; ++j) rows[i][j] ^= rows[r][j];
    ++r;
  }
  return r;
}

std::string chart_token(int p, int q) {
  int s = p + q;
  if (p <= 0 && s == 0) return "Fbar";
  if (p <= 0 && s > 0) return "dot";
  if (p >= 2 && s == 0) return "L";
  if (p >= 2 && s < 0) return "dot";
  return "0";
}

namespace {

void toggle(Mini& x, std::array<int, 4> k) {
  if (x.count(k))
    x.erase(k);
  else
    x[k] = 1;
}

}  // namespace

Mini mini_mul(const Mini& x, const Mini& y) {
  Mini out;
  for (const auto& [s, sv] : x)
    for (const auto& [t, tv] : y) {
      std::array<int, 4> k{s[0] + t[0], s[1] + t[1], s[2] + t[2], s[3] + t[3]};
      if (k[3] < 2) {
        toggle(out, k);
        continue;
      }
      // tau0^2 = a tau0 xi1 + u xi1
      toggle(out, {k[0] + 1, k[1], k[2] + 1, 1});
      toggle(out, {k[0], k[1] + 1, k[2] + 1, 0});
    }
  return out;
}

Mini mini_pow(const Mini& x, int n) {
  Mini r{{{0, 0, 0, 0}, 1}};
  for (int i = 0; i < n; ++i) r = mini_mul(r, x);
  return r;
}

Mini zeta1() { return {{{1, 0, 1, 0}, 1}, {{0, 0, 0, 1}, 1}}; }
Mini eta_u() { return {{{1, 0, 0, 1}, 1}, {{0, 1, 0, 0}, 1}}; }

std::set<std::pair<int, int>> mini_coefficient(const Mini& x, int i, int eps) {
  std::set<std::pair<int, int>> out;
  for (const auto& [k, v] : x)
    if (k[2] == i && k[3] == eps) out.insert({k[0], k[1]});
  return out;
}

std::set<std::pair<int, int>> to_set(const c2coh::CoeffElem& x) {
  std::set<std::pair<int, int>> out;
  for (const auto& m : x.terms()) {
    if (m.theta) throw std::logic_error("unexpected theta class");
    out.insert({m.a, m.u});
  }
  return out;
}

std::set<std::pair<int, int>> steinberg_rp(int n, int k) {
  std::set<std::pair<int, int>> out;
  for (int j = 0; j <= k; ++j)
    if (binom_odd(k, j) && k + j <= n) out.insert({k - j, k + j});
  return out;
}

std::vector<int> r_series_rp(int n, int top) {
  std::vector<int> dims;
  for (int d = 0; d <= top; ++d) {
    // coordinates b^e t^{d-e}, 0 <= d-e <= n
    std::vector<std::vector<int>> rows;
    for (int k = 0; 2 * k <= d && k <= n; ++k) {
      int e = d - 2 * k;
      std::vector<int> row(d + 1, 0);
      for (auto [b, t] : steinberg_rp(n, k)) row[b + e] ^= 1;
      rows.push_back(row);
    }
    dims.push_back(static_cast<int>(rank(rows)));
  }
  return dims;
}

std::size_t count_sections_brute(const c2coh::SpaceModel& model, const c2coh::Monomial& x) {
  using namespace c2coh;
  int d = model.even.degree(x);
  int m = d / 2;
  RModule R(model.fixed, d);
  const auto& basis = R.basis(d);
  if (basis.size() > 20) throw std::runtime_error("too many subsets");
  auto kx = apply_kappa(model.kappa0, Polynomial(x));
  std::size_t count = 0;
  for (std::size_t mask = 0; mask < (std::size_t{1} << basis.size()); ++mask) {
    BPolynomial y;
    for (std::size_t i = 0; i < basis.size(); ++i)
      if (mask >> i & 1) y += basis[i];
    bool ok = y.coefficient(m) == kx;
    for (int k = m + 1; ok && k <= d; ++k) ok = y.coefficient(k).is_zero();
    count += ok;
  }
  return count;
}

}  // namespace oracle
