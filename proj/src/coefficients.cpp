#include "c2coh/coefficients.hpp"

#include <algorithm>
#include <stdexcept>

namespace c2coh {

namespace {

std::string power(const char* name, int e) {
  if (e == 1) return name;
  return std::string(name) + "^" + std::to_string(e);
}

template <class T>
std::vector<T> cancel_pairs(std::vector<T> terms) {
  std::sort(terms.begin(), terms.end());
  std::vector<T> out;
  for (std::size_t i = 0; i < terms.size();) {
    std::size_t j = i;
    while (j < terms.size() && terms[j] == terms[i]) ++j;
    if ((j - i) % 2 == 1) out.push_back(terms[i]);
    i = j;
  }
  return out;
}

template <class T>
std::vector<T> symmetric_sum(const std::vector<T>& x, const std::vector<T>& y) {
  std::vector<T> out;
  std::set_symmetric_difference(x.begin(), x.end(), y.begin(), y.end(),
                                std::back_inserter(out));
  return out;
}

}  // namespace

std::string to_string(const CoeffMono& m) {
  if (m.theta) return "th[" + std::to_string(-m.a) + "," + std::to_string(-m.u) + "]";
  if (m.a == 0 && m.u == 0) return "1";
  std::string s;
  if (m.a != 0) s += power("a", m.a);
  if (m.u != 0) {
    if (!s.empty()) s += "*";
    s += power("u", m.u);
  }
  return s;
}

CoeffElem::CoeffElem(CoeffMono m) {
  if (!m.valid_in_hf()) throw std::invalid_argument("not a coefficient monomial: " + to_string(m));
  terms_.push_back(m);
}

CoeffElem CoeffElem::from_terms(std::vector<CoeffMono> terms) {
  for (const auto& m : terms)
    if (!m.valid_in_hf())
      throw std::invalid_argument("not a coefficient monomial: " + to_string(m));
  CoeffElem x;
  x.terms_ = cancel_pairs(std::move(terms));
  return x;
}

bool CoeffElem::is_homogeneous() const {
  return std::all_of(terms_.begin(), terms_.end(),
                     [&](const CoeffMono& m) { return m.degree() == terms_.front().degree(); });
}

std::optional<RODegree> CoeffElem::degree() const {
  if (terms_.empty()) return std::nullopt;
  if (!is_homogeneous()) throw std::invalid_argument("inhomogeneous coefficient element");
  return terms_.front().degree();
}

CoeffElem& CoeffElem::operator+=(const CoeffElem& other) {
  terms_ = symmetric_sum(terms_, other.terms_);
  return *this;
}

CoeffElem operator*(const CoeffElem& x, const CoeffElem& y) { return coeff_mul(x, y); }

std::string to_string(const CoeffElem& x) {
  if (x.is_zero()) return "0";
  std::string s;
  for (const auto& m : x.terms()) {
    if (!s.empty()) s += " + ";
    s += to_string(m);
  }
  return s;
}

std::optional<CoeffMono> coeff_mul(const CoeffMono& x, const CoeffMono& y) {
  if (x.theta && y.theta) return std::nullopt;
  CoeffMono r{x.theta || y.theta, x.a + y.a, x.u + y.u};
  if (!r.valid_in_hf()) return std::nullopt;
  return r;
}

CoeffElem coeff_mul(const CoeffElem& x, const CoeffElem& y) {
  std::vector<CoeffMono> out;
  for (const auto& m : x.terms())
    for (const auto& n : y.terms())
      if (auto r = coeff_mul(m, n)) out.push_back(*r);
  return CoeffElem::from_terms(std::move(out));
}

std::optional<CoeffMono> hf_basis(RODegree d) {
  if (d.p <= 0 && d.p + d.q >= 0) return CoeffMono::pos(d.p + d.q, -d.p);
  if (d.p >= 2 && d.p + d.q <= 0) return CoeffMono::neg(-d.p - d.q, d.p);
  return std::nullopt;
}

std::string shape_token(Shape s) {
  switch (s) {
    case Shape::zero: return "0";
    case Shape::dot: return "dot";
    case Shape::fbar: return "Fbar";
    case Shape::l: return "L";
    case Shape::l_minus: return "L-";
  }
  return "?";
}

MackeyShape MackeyShape::make(Shape s) {
  MackeyShape m;
  m.tag = s;
  std::size_t top = 0, bottom = 0;
  switch (s) {
    case Shape::zero: break;
    case Shape::dot: top = 1; break;
    case Shape::fbar:
    case Shape::l: top = bottom = 1; break;
    case Shape::l_minus: bottom = 1; break;
  }
  m.restriction = BitMatrix(bottom, top);
  m.transfer = BitMatrix(top, bottom);
  m.conjugation = BitMatrix::identity(bottom);
  if (s == Shape::fbar) m.restriction.set(0, 0);
  if (s == Shape::l) m.transfer.set(0, 0);
  return m;
}

bool MackeyShape::satisfies_relations() const {
  auto id = BitMatrix::identity(bottom_dim());
  return transfer * conjugation == transfer && conjugation * restriction == restriction &&
         conjugation * conjugation == id && restriction * transfer == id + conjugation;
}

Shape chart_shape(RODegree d) {
  if (d.p <= 0 && d.p + d.q >= 0) return d.p + d.q == 0 ? Shape::fbar : Shape::dot;
  if (d.p >= 2 && d.p + d.q <= 0) return d.p + d.q == 0 ? Shape::l : Shape::dot;
  return Shape::zero;
}

MackeyShape chart_lookup(RODegree d) { return MackeyShape::make(chart_shape(d)); }

std::optional<int> restriction(const CoeffElem& x) {
  if (x.is_zero()) return std::nullopt;
  if (!x.is_homogeneous()) throw std::invalid_argument("restriction of inhomogeneous element");
  const auto& m = x.terms().front();
  if (m.theta || m.a != 0) return std::nullopt;
  return m.u;
}

bool CoefficientRing::admits(const CoeffMono& m) const {
  switch (kind) {
    case RingKind::hf: return m.valid_in_hf();
    case RingKind::borel: return !m.theta && m.a >= 0;
    case RingKind::geometric: return !m.theta && m.u >= 0;
    case RingKind::truncated_borel: return !m.theta && m.a >= 0 && m.a < truncation;
  }
  return false;
}

std::optional<CoeffMono> CoefficientRing::basis(RODegree d) const {
  if (kind == RingKind::hf) return hf_basis(d);
  CoeffMono m = CoeffMono::pos(d.p + d.q, -d.p);
  if (admits(m)) return m;
  return std::nullopt;
}

std::string CoefficientRing::name() const {
  switch (kind) {
    case RingKind::hf: return "HF";
    case RingKind::borel: return "F[a,u^+-1]";
    case RingKind::geometric: return "F[a^+-1,u]";
    case RingKind::truncated_borel: return "F[a,u^+-1]/(a^" + std::to_string(truncation) + ")";
  }
  return "?";
}

CoefficientRing free_sphere_cohomology(int n) {
  if (n <= 0) throw std::invalid_argument("free sphere needs n >= 1");
  return CoefficientRing::truncated(n);
}

LaurentElem::LaurentElem(CoefficientRing ring, std::vector<CoeffMono> terms) : ring_(ring) {
  if (ring.kind == RingKind::hf) throw std::invalid_argument("HF is not a Laurent ring");
  for (const auto& m : terms)
    if (!ring.admits(m))
      throw std::invalid_argument(to_string(m) + " is not in " + ring.name());
  terms_ = cancel_pairs(std::move(terms));
}

LaurentElem& LaurentElem::operator+=(const LaurentElem& other) {
  if (!(ring_ == other.ring_)) throw std::invalid_argument("ring mismatch");
  terms_ = symmetric_sum(terms_, other.terms_);
  return *this;
}

LaurentElem operator*(const LaurentElem& x, const LaurentElem& y) {
  if (!(x.ring_ == y.ring_)) throw std::invalid_argument("ring mismatch");
  std::vector<CoeffMono> out;
  for (const auto& m : x.terms_)
    for (const auto& n : y.terms_) {
      CoeffMono r = CoeffMono::pos(m.a + n.a, m.u + n.u);
      if (x.ring_.admits(r)) out.push_back(r);
    }
  return LaurentElem(x.ring_, std::move(out));
}

LaurentElem phi_shadow(const CoeffElem& x) {
  std::vector<CoeffMono> out;
  for (const auto& m : x.terms())
    if (!m.theta) out.push_back(m);
  return LaurentElem(CoefficientRing::geometric(), std::move(out));
}

Bit pr(const LaurentElem& x, int k) {
  Bit b;
  for (const auto& m : x.terms())
    if (m.u == k) b = b + Bit{true};
  return b;
}

GradedFreeModule::GradedFreeModule(CoefficientRing ring, std::vector<ModuleGenerator> generators)
    : ring_(ring), generators_(std::move(generators)) {
  for (std::size_t i = 0; i < generators_.size(); ++i)
    for (std::size_t j = 0; j < i; ++j)
      if (generators_[i].name == generators_[j].name)
        throw std::invalid_argument("duplicate generator '" + generators_[i].name + "'");
}

GradedFreeModule GradedFreeModule::ring_itself(CoefficientRing ring) {
  return GradedFreeModule(ring, {{"1", {0, 0}}});
}

std::vector<ModuleBasisElement> GradedFreeModule::basis(RODegree d) const {
  std::vector<ModuleBasisElement> out;
  for (const auto& g : generators_)
    if (auto m = ring_.basis(d - g.degree)) out.push_back({*m, g.name});
  return out;
}

GradedFreeModule tensor_with_trivial(const GradedFreeModule& base, const GradedVector& x) {
  std::vector<ModuleGenerator> gens;
  for (const auto& g : base.generators())
    for (int m : x.degrees())
      for (const auto& name : x.basis(m)) {
        std::string joined = g.name == "1" ? name : name == "1" ? g.name : g.name + "*" + name;
        gens.push_back({joined, g.degree + RODegree{m, 0}});
      }
  return GradedFreeModule(base.ring(), std::move(gens));
}

}  // namespace c2coh
