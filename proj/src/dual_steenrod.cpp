#include "c2coh/dual_steenrod.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

#include "c2coh/errors.hpp"

namespace c2coh {

namespace {

void trim_vector(std::vector<int>& v) {
  while (!v.empty() && v.back() == 0) v.pop_back();
}

int at(const std::vector<int>& v, int i) {
  return i >= 0 && i < static_cast<int>(v.size()) ? v[i] : 0;
}

// true when x should come before y reading from the highest index down
int compare_from_top(const std::vector<int>& x, const std::vector<int>& y) {
  int n = static_cast<int>(std::max(x.size(), y.size()));
  for (int i = n - 1; i >= 0; --i) {
    int ex = at(x, i), ey = at(y, i);
    if (ex != ey) return ex > ey ? -1 : 1;
  }
  return 0;
}

std::string power(const std::string& name, int e) {
  return e == 1 ? name : name + "^" + std::to_string(e);
}

template <class T, class Cmp>
std::vector<T> cancel_sorted(std::vector<T> terms, Cmp cmp) {
  std::sort(terms.begin(), terms.end(), cmp);
  std::vector<T> out;
  for (std::size_t i = 0; i < terms.size();) {
    std::size_t j = i;
    while (j < terms.size() && terms[j] == terms[i]) ++j;
    if ((j - i) % 2 == 1) out.push_back(std::move(terms[i]));
    i = j;
  }
  return out;
}

template <class T>
void toggle(std::set<T>& s, const T& x) {
  auto [it, inserted] = s.insert(x);
  if (!inserted) s.erase(it);
}

struct TensorOrder {
  bool operator()(const TensorTerm& x, const TensorTerm& y) const {
    PrintOrder p;
    if (p(x.left, y.left)) return true;
    if (p(y.left, x.left)) return false;
    return p(x.right, y.right);
  }
};

}  // namespace

// --- monomials --------------------------------------------------------------

EqMonomial EqMonomial::coefficient(int a, int u) {
  EqMonomial m;
  m.a = a;
  m.u = u;
  return m;
}

EqMonomial EqMonomial::xi_gen(int i, int e) {
  EqMonomial m;
  if (i > 0) m.set_xi(i, e);
  return m;
}

EqMonomial EqMonomial::tau_gen(int i, int e) {
  EqMonomial m;
  m.set_tau(i, e);
  return m;
}

int EqMonomial::xi_exp(int i) const { return at(xi, i - 1); }
int EqMonomial::tau_exp(int i) const { return at(tau, i); }

void EqMonomial::set_xi(int i, int e) {
  if (i < 1) throw std::invalid_argument("xi index starts at 1");
  if (static_cast<int>(xi.size()) < i) xi.resize(i, 0);
  xi[i - 1] = e;
  trim_vector(xi);
}

void EqMonomial::set_tau(int i, int e) {
  if (i < 0) throw std::invalid_argument("negative tau index");
  if (static_cast<int>(tau.size()) <= i) tau.resize(i + 1, 0);
  tau[i] = e;
  trim_vector(tau);
}

void EqMonomial::trim() {
  trim_vector(xi);
  trim_vector(tau);
}

bool EqMonomial::is_normal() const {
  return std::all_of(tau.begin(), tau.end(), [](int e) { return e <= 1; });
}

bool EqMonomial::is_coefficient() const { return xi.empty() && tau.empty(); }

EqMonomial EqMonomial::generator_part() const {
  EqMonomial m = *this;
  m.a = m.u = 0;
  return m;
}

EqMonomial operator*(const EqMonomial& x, const EqMonomial& y) {
  EqMonomial r;
  r.a = x.a + y.a;
  r.u = x.u + y.u;
  r.xi.resize(std::max(x.xi.size(), y.xi.size()), 0);
  for (std::size_t i = 0; i < r.xi.size(); ++i)
    r.xi[i] = at(x.xi, static_cast<int>(i)) + at(y.xi, static_cast<int>(i));
  r.tau.resize(std::max(x.tau.size(), y.tau.size()), 0);
  for (std::size_t i = 0; i < r.tau.size(); ++i)
    r.tau[i] = at(x.tau, static_cast<int>(i)) + at(y.tau, static_cast<int>(i));
  r.trim();
  return r;
}

RODegree degree(const EqMonomial& m, Grading g) {
  RODegree d = m.a * RODegree{0, -1} + m.u * RODegree{1, -1};
  for (std::size_t i = 0; i < m.xi.size(); ++i) {
    int w = (1 << (i + 1)) - 1;
    d = d + m.xi[i] * RODegree{w, w};
  }
  for (std::size_t i = 0; i < m.tau.size(); ++i) {
    int w = (1 << i) - 1;
    d = d + m.tau[i] * RODegree{w + 1, w};
  }
  return convert(d, Grading::homological, g);
}

int generator_dimension(const EqMonomial& m) {
  int d = 0;
  for (std::size_t i = 0; i < m.xi.size(); ++i) d += m.xi[i] * 2 * ((1 << (i + 1)) - 1);
  for (std::size_t i = 0; i < m.tau.size(); ++i) d += m.tau[i] * ((1 << (i + 1)) - 1);
  return d;
}

std::string to_string(const EqMonomial& m) {
  std::vector<std::string> parts;
  if (m.a) parts.push_back(power("a", m.a));
  if (m.u) parts.push_back(power("u", m.u));
  for (std::size_t i = 0; i < m.tau.size(); ++i)
    if (m.tau[i]) parts.push_back(power("t" + std::to_string(i), m.tau[i]));
  for (std::size_t i = 0; i < m.xi.size(); ++i)
    if (m.xi[i]) parts.push_back(power("x" + std::to_string(i + 1), m.xi[i]));
  if (parts.empty()) return "1";
  std::string s = parts[0];
  for (std::size_t i = 1; i < parts.size(); ++i) s += "*" + parts[i];
  return s;
}

bool PrintOrder::operator()(const EqMonomial& x, const EqMonomial& y) const {
  if (x.a != y.a) return x.a > y.a;
  if (x.u != y.u) return x.u < y.u;
  if (int c = compare_from_top(x.tau, y.tau)) return c < 0;
  return compare_from_top(x.xi, y.xi) < 0;
}

// --- elements ---------------------------------------------------------------

EqElement::EqElement(EqMonomial m) {
  m.trim();
  terms_.push_back(std::move(m));
}

EqElement EqElement::from_terms(std::vector<EqMonomial> terms) {
  for (auto& t : terms) t.trim();
  EqElement x;
  x.terms_ = cancel_sorted(std::move(terms), PrintOrder{});
  return x;
}

bool EqElement::is_normal() const {
  return std::all_of(terms_.begin(), terms_.end(), [](const auto& m) { return m.is_normal(); });
}

EqElement& EqElement::operator+=(const EqElement& other) {
  std::vector<EqMonomial> out;
  std::set_symmetric_difference(terms_.begin(), terms_.end(), other.terms_.begin(),
                                other.terms_.end(), std::back_inserter(out), PrintOrder{});
  terms_ = std::move(out);
  return *this;
}

std::string to_string(const EqElement& x) {
  if (x.is_zero()) return "0";
  std::string s;
  for (const auto& m : x.terms()) {
    if (!s.empty()) s += " + ";
    s += to_string(m);
  }
  return s;
}

EqElement normal_form(const EqElement& raw, std::mt19937_64* rng, int bound) {
  std::set<EqMonomial> pending;
  std::set<EqMonomial> done;
  for (const auto& m : raw.terms()) {
    if (generator_dimension(m) > bound)
      throw DegreeOverflow("monomial " + to_string(m) + " exceeds bound " +
                           std::to_string(bound));
    toggle(pending, m);
  }
  while (!pending.empty()) {
    auto it = pending.begin();
    if (rng) std::advance(it, std::uniform_int_distribution<std::size_t>(0, pending.size() - 1)(*rng));
    EqMonomial m = *it;
    pending.erase(it);
    std::vector<int> squares;
    for (std::size_t i = 0; i < m.tau.size(); ++i)
      if (m.tau[i] >= 2) squares.push_back(static_cast<int>(i));
    if (squares.empty()) {
      toggle(done, m);
      continue;
    }
    int i = squares.front();
    if (rng) i = squares[std::uniform_int_distribution<std::size_t>(0, squares.size() - 1)(*rng)];
    EqMonomial base = m;
    base.set_tau(i, m.tau_exp(i) - 2);
    EqMonomial a = EqMonomial::coefficient(1, 0);
    EqMonomial u = EqMonomial::coefficient(0, 1);
    EqMonomial next_xi = EqMonomial::xi_gen(i + 1);
    EqMonomial rewritten[3] = {base * a * EqMonomial::tau_gen(i + 1),
                               base * a * EqMonomial::tau_gen(0) * next_xi, base * u * next_xi};
    RODegree d = degree(m);
    for (const auto& r : rewritten) {
      if (degree(r) != d) throw std::logic_error("rewrite changed degree");
      toggle(pending, r);
    }
  }
  return EqElement::from_terms(std::vector<EqMonomial>(done.begin(), done.end()));
}

EqElement multiply(const EqElement& x, const EqElement& y) {
  std::vector<EqMonomial> raw;
  raw.reserve(x.terms().size() * y.terms().size());
  for (const auto& m : x.terms())
    for (const auto& n : y.terms()) raw.push_back(m * n);
  return normal_form(EqElement::from_terms(std::move(raw)));
}

EqElement power(const EqElement& x, int n) {
  if (n < 0) throw std::invalid_argument("negative power");
  EqElement r = EqElement::one();
  for (int k = 0; k < n; ++k) r = multiply(r, x);
  return r;
}

namespace {

// caches powers of eta_R(u) for one computation
class RightUnitCache {
 public:
  const EqElement& u_power(int n) {
    if (powers_.empty()) powers_.push_back(EqElement::one());
    while (static_cast<int>(powers_.size()) <= n) {
      EqElement eta_u = EqElement::from_terms(
          {EqMonomial::coefficient(1, 0) * EqMonomial::tau_gen(0), EqMonomial::coefficient(0, 1)});
      powers_.push_back(multiply(powers_.back(), eta_u));
    }
    return powers_[n];
  }

  // normal form of m * eta_R(a^k u^n)
  EqElement times(const EqMonomial& m, int k, int n) {
    std::vector<EqMonomial> raw;
    EqMonomial ak = m * EqMonomial::coefficient(k, 0);
    for (const auto& t : u_power(n).terms()) raw.push_back(ak * t);
    return normal_form(EqElement::from_terms(std::move(raw)));
  }

 private:
  std::vector<EqElement> powers_;
};

}  // namespace

EqElement right_unit(const CoeffMono& h) {
  if (h.theta || h.a < 0 || h.u < 0)
    throw std::invalid_argument("right unit is defined on F[a,u]: " + to_string(h));
  RightUnitCache cache;
  return cache.times(EqMonomial{}, h.a, h.u);
}

EqElement right_unit(const CoeffElem& h) {
  EqElement r;
  for (const auto& m : h.terms()) r += right_unit(m);
  return r;
}

// --- tensors ----------------------------------------------------------------

EqTensor EqTensor::from_terms(std::vector<TensorTerm> terms) {
  for (auto& t : terms) {
    t.left.trim();
    t.right.trim();
  }
  EqTensor x;
  x.terms_ = cancel_sorted(std::move(terms), TensorOrder{});
  return x;
}

std::string to_string(const EqTensor& x) {
  if (x.terms().empty()) return "0";
  std::string s;
  for (const auto& t : x.terms()) {
    if (!s.empty()) s += " + ";
    s += to_string(t.left) + " (x) " + to_string(t.right);
  }
  return s;
}

namespace {

EqTensor tensor_multiply_cached(const EqTensor& x, const EqTensor& y, RightUnitCache& cache) {
  std::vector<TensorTerm> out;
  for (const auto& s : x.terms())
    for (const auto& t : y.terms()) {
      EqElement right = normal_form(EqElement(s.right * t.right));
      EqMonomial left_raw = s.left * t.left;
      for (const auto& r : right.terms()) {
        EqMonomial gen = r.generator_part();
        for (const auto& l : cache.times(left_raw, r.a, r.u).terms()) out.push_back({l, gen});
      }
    }
  return EqTensor::from_terms(std::move(out));
}

EqTensor generator_coproduct(bool is_tau, int i) {
  std::vector<TensorTerm> terms;
  for (int j = 0; j <= i; ++j) {
    EqMonomial left = EqMonomial::xi_gen(i - j, 1 << j);
    EqMonomial right = is_tau ? EqMonomial::tau_gen(j) : EqMonomial::xi_gen(j);
    terms.push_back({left, right});
  }
  if (is_tau) terms.push_back({EqMonomial::tau_gen(i), EqMonomial{}});
  return EqTensor::from_terms(std::move(terms));
}

}  // namespace

EqTensor tensor_multiply(const EqTensor& x, const EqTensor& y) {
  RightUnitCache cache;
  return tensor_multiply_cached(x, y, cache);
}

EqTensor coproduct(const EqElement& x, int bound) {
  RightUnitCache cache;
  std::vector<TensorTerm> all;
  for (const auto& m : normal_form(x, nullptr, bound).terms()) {
    EqTensor acc = EqTensor::from_terms({{EqMonomial::coefficient(m.a, m.u), EqMonomial{}}});
    for (std::size_t i = 0; i < m.xi.size(); ++i)
      for (int e = 0; e < m.xi[i]; ++e)
        acc = tensor_multiply_cached(acc, generator_coproduct(false, static_cast<int>(i) + 1), cache);
    for (std::size_t i = 0; i < m.tau.size(); ++i)
      for (int e = 0; e < m.tau[i]; ++e)
        acc = tensor_multiply_cached(acc, generator_coproduct(true, static_cast<int>(i)), cache);
    all.insert(all.end(), acc.terms().begin(), acc.terms().end());
  }
  return EqTensor::from_terms(std::move(all));
}

namespace {

std::vector<TripleTerm> cancel_triples(std::vector<TripleTerm> terms) {
  return cancel_sorted(std::move(terms), std::less<TripleTerm>{});
}

}  // namespace

std::vector<TripleTerm> coproduct_left_iterate(const EqElement& x) {
  std::vector<TripleTerm> out;
  for (const auto& t : coproduct(x).terms())
    for (const auto& s : coproduct(EqElement(t.left)).terms())
      out.push_back({s.left, s.right, t.right});
  return cancel_triples(std::move(out));
}

std::vector<TripleTerm> coproduct_right_iterate(const EqElement& x) {
  RightUnitCache cache;
  std::vector<TripleTerm> out;
  for (const auto& t : coproduct(x).terms())
    for (const auto& s : coproduct(EqElement(t.right)).terms()) {
      EqMonomial middle = s.left.generator_part();
      for (const auto& l : cache.times(t.left, s.left.a, s.left.u).terms())
        out.push_back({l, middle, s.right});
    }
  return cancel_triples(std::move(out));
}

CoeffElem counit(const EqElement& x) {
  std::vector<CoeffMono> out;
  for (const auto& m : x.terms())
    if (m.is_coefficient()) out.push_back(m.coefficient_part());
  return CoeffElem::from_terms(std::move(out));
}

EqElement counit_left(const EqTensor& t) {
  std::vector<EqMonomial> out;
  for (const auto& term : t.terms())
    if (term.left.is_coefficient()) out.push_back(term.left * term.right);
  return EqElement::from_terms(std::move(out));
}

EqElement counit_right(const EqTensor& t) {
  std::vector<EqMonomial> out;
  for (const auto& term : t.terms())
    if (term.right.is_coefficient()) out.push_back(term.left);
  return EqElement::from_terms(std::move(out));
}

CoeffElem pair(const EqMonomial& m, const EqElement& x) {
  EqMonomial target = m.generator_part();
  std::vector<CoeffMono> out;
  for (const auto& t : x.terms())
    if (t.generator_part() == target) out.push_back(t.coefficient_part());
  return CoeffElem::from_terms(std::move(out));
}

// --- psi ------------------------------------------------------------------

EqElement psi_generator(int n) {
  if (n < 0) throw std::invalid_argument("negative zeta index");
  if (n == 0) return EqElement::one();
  if (n > 20) throw DegreeOverflow("zeta index too large");
  RightUnitCache cache;
  int top = 1 << n;
  EqElement sum(EqMonomial::coefficient(top - 1, 0) * EqMonomial::xi_gen(n));
  for (int i = 1; i <= n; ++i) {
    EqMonomial m = EqMonomial::xi_gen(n - i, 1 << i) * EqMonomial::tau_gen(i - 1);
    sum += cache.times(m, top - (1 << i), (1 << (i - 1)) - 1);
  }
  return normal_form(sum);
}

EqElement psi(const ZetaMonomial& z) {
  EqElement r = EqElement::one();
  for (std::size_t i = 0; i < z.exps.size(); ++i)
    if (z.exps[i] > 0) r = multiply(r, power(psi_generator(static_cast<int>(i) + 1), z.exps[i]));
  return r;
}

PQ p_sequence(int n) {
  if (n < 0) throw std::invalid_argument("negative index");
  auto shift = [](const EqElement& x, int a, int u) {
    std::vector<EqMonomial> out;
    for (const auto& m : x.terms()) out.push_back(m * EqMonomial::coefficient(a, u) * EqMonomial::xi_gen(1));
    return EqElement::from_terms(std::move(out));
  };
  PQ cur{EqElement::one(), EqElement{}};
  for (int k = 0; k < n; ++k) cur = PQ{shift(cur.p, 1, 0) + shift(cur.q, 0, 1), cur.p};
  return cur;
}

}  // namespace c2coh
