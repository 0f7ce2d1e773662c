#include "c2coh/model_io.hpp"

#include <fstream>
#include <sstream>

#include "c2coh/errors.hpp"
#include "c2coh/expression.hpp"

namespace c2coh {

using nlohmann::json;

namespace {

std::string escape_pointer(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '~')
      out += "~0";
    else if (c == '/')
      out += "~1";
    else
      out += c;
  }
  return out;
}

const json& require(const json& j, const char* key, const std::string& pointer) {
  if (!j.is_object()) throw ModelError("expected an object", pointer);
  auto it = j.find(key);
  if (it == j.end()) throw ModelError(std::string("missing key '") + key + "'", pointer);
  return *it;
}

int as_int(const json& j, const std::string& pointer) {
  if (!j.is_number_integer()) throw ModelError("expected an integer", pointer);
  return j.get<int>();
}

std::string as_string(const json& j, const std::string& pointer) {
  if (!j.is_string()) throw ModelError("expected a string", pointer);
  return j.get<std::string>();
}

template <class F>
auto with_pointer(const std::string& pointer, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const ModelError&) {
    throw;
  } catch (const std::exception& e) {
    throw ModelError(e.what(), pointer);
  }
}

BitVector coordinates(const std::vector<Monomial>& basis, const Polynomial& x) {
  BitVector v(basis.size());
  for (const auto& m : x.terms())
    v.flip(static_cast<std::size_t>(std::lower_bound(basis.begin(), basis.end(), m) - basis.begin()));
  return v;
}

}  // namespace

UnstableAlgebra algebra_from_json(const json& j, int default_bound, const std::string& pointer) {
  if (!j.is_object()) throw ModelError("expected an object", pointer);
  std::vector<AlgebraGenerator> gens;
  const auto& jg = require(j, "generators", pointer);
  if (!jg.is_array()) throw ModelError("expected an array", pointer + "/generators");
  int maxgen = 0;
  for (std::size_t k = 0; k < jg.size(); ++k) {
    std::string p = pointer + "/generators/" + std::to_string(k);
    AlgebraGenerator g{as_string(require(jg[k], "name", p), p + "/name"),
                       as_int(require(jg[k], "degree", p), p + "/degree")};
    if (g.degree < 1) throw ModelError("generator degree must be >= 1", p + "/degree");
    maxgen = std::max(maxgen, g.degree);
    gens.push_back(g);
  }
  auto lookup = [&](std::string_view name) -> std::optional<GenId> {
    for (std::size_t g = 0; g < gens.size(); ++g)
      if (gens[g].name == name) return static_cast<GenId>(g);
    return std::nullopt;
  };
  std::vector<Polynomial> rels;
  if (j.contains("relations")) {
    const auto& jr = j["relations"];
    if (!jr.is_array()) throw ModelError("expected an array", pointer + "/relations");
    for (std::size_t k = 0; k < jr.size(); ++k) {
      std::string p = pointer + "/relations/" + std::to_string(k);
      std::string text = as_string(jr[k], p);
      rels.push_back(with_pointer(p, [&] { return parse_polynomial(text, lookup); }));
    }
  }
  SqTable sq;
  if (j.contains("sq")) {
    const auto& js = j["sq"];
    if (!js.is_object()) throw ModelError("expected an object", pointer + "/sq");
    for (const auto& [gname, entries] : js.items()) {
      std::string p = pointer + "/sq/" + escape_pointer(gname);
      auto g = lookup(gname);
      if (!g) throw ModelError("unknown generator '" + gname + "'", p);
      if (!entries.is_object()) throw ModelError("expected an object", p);
      for (const auto& [key, value] : entries.items()) {
        std::string pe = p + "/" + escape_pointer(key);
        int i = with_pointer(pe, [&] {
          std::size_t used = 0;
          int v = std::stoi(key, &used);
          if (used != key.size()) throw std::invalid_argument("square index must be an integer");
          return v;
        });
        std::string text = as_string(value, pe);
        sq[*g][i] = with_pointer(pe, [&] { return parse_polynomial(text, lookup); });
      }
    }
  }
  int bound = default_bound + maxgen;
  if (j.contains("bound")) bound = as_int(j["bound"], pointer + "/bound");
  return with_pointer(pointer, [&] { return UnstableAlgebra(gens, rels, sq, bound); });
}

json algebra_to_json(const UnstableAlgebra& a) {
  json j;
  j["generators"] = json::array();
  for (const auto& g : a.generators()) j["generators"].push_back({{"name", g.name}, {"degree", g.degree}});
  j["relations"] = json::array();
  for (const auto& r : a.relations()) j["relations"].push_back(a.format(r));
  j["sq"] = json::object();
  for (const auto& [g, entries] : a.sq_table())
    for (const auto& [i, v] : entries) j["sq"][a.generators()[g].name][std::to_string(i)] = a.format(v);
  j["bound"] = a.bound();
  return j;
}

SpaceModel model_from_json(const json& j, std::optional<int> bound_override) {
  if (!j.is_object()) throw ModelError("expected an object", "");
  int bound = bound_override ? *bound_override : as_int(require(j, "bound", ""), "/bound");
  if (bound < 0) throw ModelError("negative bound", "/bound");
  std::string name = j.contains("name") ? as_string(j["name"], "/name") : "model";
  auto even = algebra_from_json(require(j, "even", ""), bound, "/even");
  auto fixed = algebra_from_json(require(j, "fixed", ""), bound, "/fixed");
  SpaceModel model{name, even, fixed, {}, bound};
  if (!even.in_range(bound)) throw ModelError("algebra bound below model bound", "/even/bound");
  if (!fixed.in_range(bound)) throw ModelError("algebra bound below model bound", "/fixed/bound");

  // keys and values grouped by degree of the key
  std::map<int, std::vector<std::pair<Polynomial, Polynomial>>> by_degree;
  std::map<int, std::string> first_pointer;
  const auto& jk = require(j, "kappa0", "");
  if (!jk.is_object()) throw ModelError("expected an object", "/kappa0");
  for (const auto& [key, value] : jk.items()) {
    std::string p = "/kappa0/" + escape_pointer(key);
    Polynomial x = with_pointer(p, [&] { return even.parse(key); });
    Polynomial y = with_pointer(p, [&] { return fixed.parse(as_string(value, p)); });
    auto d = with_pointer(p, [&] { return even.degree(x); });
    if (!d) throw ModelError("kappa0 key is zero", p);
    if (*d % 2 != 0) throw ModelError("kappa0 key in odd degree", p);
    if (*d > bound) continue;
    auto e = with_pointer(p, [&] { return fixed.degree(y); });
    if (e && *e != *d / 2) throw ModelError("kappa0 value has the wrong degree", p);
    by_degree[*d].emplace_back(x, y);
    first_pointer.emplace(*d, p);
  }
  if (!by_degree.count(0)) by_degree[0].emplace_back(Polynomial::one(), Polynomial::one());

  for (int d = 0; d <= bound; d += 2) {
    const auto& eb = even.basis(d);
    const auto& fb = fixed.basis(d / 2);
    const auto& pairs = by_degree[d];
    std::string p = first_pointer.count(d) ? first_pointer[d] : "/kappa0";
    EchelonBasis image(fb.size());
    for (const auto& [x, y] : pairs) image.insert(coordinates(fb, y));
    if (image.rank() < fb.size())
      throw ModelError("kappa0 not surjective in degree " + std::to_string(d), "/kappa0");
    EchelonBasis keys(eb.size(), pairs.size());
    for (std::size_t k = 0; k < pairs.size(); ++k) {
      BitVector tag(pairs.size());
      tag.set(k);
      if (!keys.insert(coordinates(eb, pairs[k].first), std::move(tag)))
        throw ModelError("kappa0 keys are linearly dependent in degree " + std::to_string(d), p);
    }
    if (keys.rank() < eb.size())
      throw ModelError("kappa0 undefined on part of degree " + std::to_string(d), "/kappa0");
    for (std::size_t b = 0; b < eb.size(); ++b) {
      BitVector v(eb.size());
      v.set(b);
      auto r = keys.reduce(std::move(v));
      Polynomial value;
      for (std::size_t k = 0; k < pairs.size(); ++k)
        if (r.tag.get(k)) value += pairs[k].second;
      model.kappa0[eb[b]] = value;
    }
  }
  validate_model(model, true);
  return model;
}

SpaceModel load_model_text(const std::string& text, std::optional<int> bound_override) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ModelError(std::string("malformed JSON: ") + e.what(), "");
  }
  return model_from_json(j, bound_override);
}

SpaceModel load_model(const std::string& path, std::optional<int> bound_override) {
  std::ifstream in(path);
  if (!in) throw ModelError("cannot open " + path, "");
  std::stringstream ss;
  ss << in.rdbuf();
  return load_model_text(ss.str(), bound_override);
}

json model_to_json(const SpaceModel& m) {
  json j;
  j["name"] = m.name;
  j["bound"] = m.bound;
  j["even"] = algebra_to_json(m.even);
  j["fixed"] = algebra_to_json(m.fixed);
  j["kappa0"] = json::object();
  for (const auto& [x, y] : m.kappa0)
    if (!x.is_one()) j["kappa0"][m.even.format(x)] = m.fixed.format(y);
  return j;
}

json report_to_json(const SpaceModel& m, const FrameReport& r) {
  json j;
  j["model"] = r.model;
  j["pass"] = r.pass();
  j["verdicts"] = json::array();
  for (const auto& v : r.verdicts)
    j["verdicts"].push_back({{"name", v.name}, {"pass", v.pass}, {"witness", v.witness}});
  j["rows"] = json::array();
  for (const auto& row : r.rows) {
    json k = json::array();
    for (const auto& p : row.kappa) k.push_back(m.fixed.format(p));
    j["rows"].push_back({{"class", row.name},
                         {"degree", 2 * row.m},
                         {"kappa0", m.fixed.format(row.kappa.empty() ? Polynomial{} : row.kappa[0])},
                         {"r_sigma", format(m.fixed, row.r_sigma)},
                         {"kappa", k}});
  }
  return j;
}

}  // namespace c2coh
