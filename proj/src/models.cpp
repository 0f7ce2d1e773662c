#include "c2coh/models.hpp"

#include <cstdio>
#include <stdexcept>

namespace c2coh {

namespace {

Monomial power(GenId g, int e) { return Monomial::generator(g, static_cast<std::uint32_t>(e)); }

}  // namespace

UnstableAlgebra rp_algebra(int n, const std::string& name) {
  return UnstableAlgebra::truncated_polynomial(name, 1, n, n + 1);
}

SpaceModel sphere_model(int n) {
  if (n < 1) throw std::invalid_argument("sphere level must be >= 1");
  SpaceModel m{"S" + std::to_string(n) + "(1+al)",
               UnstableAlgebra::truncated_polynomial("x", 2 * n, 1, 4 * n),
               UnstableAlgebra::truncated_polynomial("s", n, 1, 2 * n),
               {},
               2 * n};
  m.kappa0[Monomial{}] = Polynomial::one();
  m.kappa0[power(0, 1)] = Polynomial(power(0, 1));
  return m;
}

SpaceModel cp_model(int n) {
  if (n < 1) throw std::invalid_argument("CP^n needs n >= 1");
  SpaceModel m{"CP" + std::to_string(n), UnstableAlgebra::truncated_polynomial("x", 2, n, 2 * n + 2),
               rp_algebra(n), {}, 2 * n};
  for (int k = 0; k <= n; ++k) m.kappa0[power(0, k)] = Polynomial(power(0, k));
  return m;
}

SpaceModel cp_product_model(int a, int b) {
  if (a < 1 || b < 1) throw std::invalid_argument("CP^a x CP^b needs a, b >= 1");
  int top = a + b;
  auto even = tensor_product(UnstableAlgebra::truncated_polynomial("x1", 2, a, 2 * a + 2),
                             UnstableAlgebra::truncated_polynomial("x2", 2, b, 2 * b + 2),
                             2 * top + 2);
  auto fixed = tensor_product(rp_algebra(a, "t1"), rp_algebra(b, "t2"), top + 1);
  SpaceModel m{"CP" + std::to_string(a) + "xCP" + std::to_string(b), even, fixed, {}, 2 * top};
  for (int i = 0; i <= a; ++i)
    for (int j = 0; j <= b; ++j) {
      Monomial x = power(0, i) * power(1, j);
      m.kappa0[x] = Polynomial(x);
    }
  return m;
}

SpaceModel point_model(int bound) {
  SpaceModel m{"point", UnstableAlgebra::point(bound), UnstableAlgebra::point(bound), {}, bound};
  m.kappa0[Monomial{}] = Polynomial::one();
  return m;
}

std::vector<std::string> builtin_model_names() {
  std::vector<std::string> names{"point"};
  for (int n = 1; n <= 8; ++n) names.push_back("S" + std::to_string(n) + "(1+al)");
  for (int n = 1; n <= 8; ++n) names.push_back("CP" + std::to_string(n));
  for (int a = 1; a <= 6; ++a)
    for (int b = a; a + b <= 6; ++b)
      names.push_back("CP" + std::to_string(a) + "xCP" + std::to_string(b));
  return names;
}

SpaceModel builtin_model(const std::string& name) {
  if (name == "point") return point_model();
  int a = 0, b = 0;
  char tail = 0;
  if (std::sscanf(name.c_str(), "S%d(1+al%c", &a, &tail) == 2 && tail == ')' &&
      name == "S" + std::to_string(a) + "(1+al)")
    return sphere_model(a);
  if (std::sscanf(name.c_str(), "CP%dxCP%d", &a, &b) == 2 &&
      name == "CP" + std::to_string(a) + "xCP" + std::to_string(b))
    return cp_product_model(a, b);
  if (std::sscanf(name.c_str(), "CP%d", &a) == 1 && name == "CP" + std::to_string(a))
    return cp_model(a);
  throw std::invalid_argument("unknown built-in model '" + name + "'");
}

std::vector<SpaceModel> builtin_models() {
  std::vector<SpaceModel> out;
  for (const auto& n : builtin_model_names()) out.push_back(builtin_model(n));
  return out;
}

}  // namespace c2coh
