#pragma once

#include <string>

#include "json.hpp"

#include "c2coh/frames.hpp"
#include "c2coh/unstable_algebra.hpp"

namespace c2coh {

// {"generators":[{"name":"t","degree":1}],"relations":["t^3"],"sq":{"t":{"1":"t^2"}},"bound":4}
// "bound" is optional; default_bound is used when absent.
UnstableAlgebra algebra_from_json(const nlohmann::json& j, int default_bound,
                                  const std::string& pointer);
nlohmann::json algebra_to_json(const UnstableAlgebra& a);

// {"name":..., "even":{...}, "fixed":{...}, "kappa0":{"x":"t"}, "bound":12}
// Throws ModelError (with a JSON pointer) on any schema or validation failure.
SpaceModel model_from_json(const nlohmann::json& j, std::optional<int> bound_override = {});
SpaceModel load_model_text(const std::string& text, std::optional<int> bound_override = {});
SpaceModel load_model(const std::string& path, std::optional<int> bound_override = {});
nlohmann::json model_to_json(const SpaceModel& m);

nlohmann::json report_to_json(const SpaceModel& m, const FrameReport& r);

}  // namespace c2coh
