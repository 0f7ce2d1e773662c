#include "c2coh/coefficient_action.hpp"

#include <functional>
#include <stdexcept>

namespace c2coh {

namespace {

CoeffElem mono(int a, int u) { return CoeffElem(CoeffMono::pos(a, u)); }

void check(DualOp op, int k) {
  if (op.ell < 0 || k < 0) throw std::invalid_argument("negative index");
}

}  // namespace

EqMonomial DualOp::monomial() const {
  EqMonomial m = EqMonomial::xi_gen(1, ell);
  if (tau0) m = m * EqMonomial::tau_gen(0);
  return m;
}

std::string DualOp::name() const {
  std::string s;
  if (ell > 0) s = ell == 1 ? "x1" : "x1^" + std::to_string(ell);
  if (tau0) s += s.empty() ? "t0" : "*t0";
  if (s.empty()) s = "1";
  return "(" + s + ")^v";
}

CoeffElem pairing_closed_form(int i, int k) {
  if (i < 0 || k < i || k > 2 * i) return {};
  if (!binom_mod2(i, k - i)) return {};
  return mono(2 * i - k, k - i);
}

CoeffElem act_on_coefficient(DualOp op, int k) {
  check(op, k);
  int n = op.ell;
  // x[l], d[l]: values of (xi_1^l)^v and (xi_1^l tau_0)^v on the current power of u
  std::vector<CoeffElem> x(n + 1), d(n + 1);
  x[0] = CoeffElem::one();
  const CoeffElem u = mono(0, 1), a = mono(1, 0), au = mono(1, 1), a2 = mono(2, 0);
  for (int step = 0; step < k; ++step) {
    std::vector<CoeffElem> nx(n + 1), nd(n + 1);
    for (int l = 0; l <= n; ++l) {
      nx[l] = u * x[l];
      nd[l] = u * d[l] + a * x[l];
      if (l >= 1) {
        nx[l] += au * d[l - 1];
        nd[l] += a2 * d[l - 1];
      }
    }
    x = std::move(nx);
    d = std::move(nd);
  }
  return op.tau0 ? d[n] : x[n];
}

std::vector<CartanTerm> cartan_expand(DualOp op) {
  if (op.ell < 0) throw std::invalid_argument("negative index");
  std::vector<CartanTerm> out;
  const int l = op.ell;
  if (!op.tau0) {
    for (int j = 0; j <= l; ++j) out.push_back({CoeffElem::one(), {j, false}, {l - j, false}});
    for (int j = 0; j <= l - 1; ++j) out.push_back({mono(0, 1), {j, true}, {l - 1 - j, true}});
  } else {
    for (int j = 0; j <= l; ++j) {
      out.push_back({CoeffElem::one(), {j, true}, {l - j, false}});
      out.push_back({CoeffElem::one(), {l - j, false}, {j, true}});
    }
    for (int j = 0; j <= l - 1; ++j) out.push_back({mono(1, 0), {j, true}, {l - 1 - j, true}});
  }
  return out;
}

CoeffElem act_on_coefficient_cartan(DualOp op, int k) {
  check(op, k);
  const EqElement eta_u = right_unit(CoeffMono::pos(0, 1));
  std::map<std::pair<DualOp, int>, CoeffElem> memo;
  std::function<CoeffElem(DualOp, int)> eval = [&](DualOp o, int n) -> CoeffElem {
    if (n == 0) return (o.ell == 0 && !o.tau0) ? CoeffElem::one() : CoeffElem{};
    auto key = std::make_pair(o, n);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    CoeffElem r;
    for (const auto& t : cartan_expand(o)) {
      CoeffElem right = pair(t.right.monomial(), eta_u);
      if (right.is_zero()) continue;
      r += t.coefficient * eval(t.left, n - 1) * right;
    }
    memo[key] = r;
    return r;
  };
  return eval(op, k);
}

CoeffElem act_on_coefficient_pairing(DualOp op, int k) {
  check(op, k);
  return pair(op.monomial(), right_unit(CoeffMono::pos(0, k)));
}

CoeffElem reduce_mod_u(const CoeffElem& x) {
  std::vector<CoeffMono> out;
  for (const auto& m : x.terms())
    if (!m.theta && m.u == 0) out.push_back(m);
  return CoeffElem::from_terms(std::move(out));
}

TrivialClass act_on_trivial(DualOp op, const UnstableAlgebra& m, const Polynomial& y) {
  if (op.ell < 0) throw std::invalid_argument("negative index");
  TrivialClass out;
  for (int j = 0; j <= op.ell; ++j) {
    if (!binom_mod2(op.ell, j)) continue;
    Polynomial s = m.sq(op.ell + j + (op.tau0 ? 1 : 0), y);
    if (s.is_zero()) continue;
    auto key = CoeffMono::pos(op.ell - j, j);
    out[key] += s;
    if (out[key].is_zero()) out.erase(key);
  }
  return out;
}

std::string format(const UnstableAlgebra& m, const TrivialClass& x) {
  if (x.empty()) return "0";
  std::string s;
  for (const auto& [c, y] : x) {
    if (!s.empty()) s += " + ";
    std::string coeff = to_string(c);
    std::string cls = m.format(y);
    if (y.size() > 1) cls = "(" + cls + ")";
    s += coeff == "1" ? cls : coeff + "*" + cls;
  }
  return s;
}

int restrict_operation(const EqMonomial& m) {
  if (!m.is_normal() || m.a != 0 || m.u != 0)
    throw std::invalid_argument("expected a coefficient-free normal monomial");
  for (std::size_t i = 1; i < m.xi.size(); ++i)
    if (m.xi[i]) throw std::invalid_argument("only xi_1 and tau_0 restrict to a single square");
  for (std::size_t i = 1; i < m.tau.size(); ++i)
    if (m.tau[i]) throw std::invalid_argument("only xi_1 and tau_0 restrict to a single square");
  return 2 * m.xi_exp(1) + m.tau_exp(0);
}

}  // namespace c2coh
