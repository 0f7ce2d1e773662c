#pragma once

#include <string>
#include <vector>

#include "c2coh/frames.hpp"

namespace c2coh {

// S^{n(1+alpha)}: H^* = F[x]/x^2, |x| = 2n, fixed points S^n
SpaceModel sphere_model(int n);
// CP^n with fixed points RP^n
SpaceModel cp_model(int n);
// CP^a x CP^b with the product frame
SpaceModel cp_product_model(int a, int b);
// a point
SpaceModel point_model(int bound = 0);

std::vector<std::string> builtin_model_names();
SpaceModel builtin_model(const std::string& name);
std::vector<SpaceModel> builtin_models();

// the fixed point algebra RP^n = F[t]/t^{n+1}
UnstableAlgebra rp_algebra(int n, const std::string& name = "t");

}  // namespace c2coh
