// Copyright 2026 The semicayley Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "semicayley/json_io.hpp"

#include "semicayley/error.hpp"

namespace semicayley {

namespace {

template <typename T>
T get_field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) {
    throw ValidationError(std::string("missing field '") + key + "'");
  }
  try {
    return j.at(key).get<T>();
  } catch (const Json::exception&) {
    throw ValidationError(std::string("field '") + key + "' has the wrong type");
  }
}

Json optional_json(const auto& v) {
  return v ? Json(*v) : Json(nullptr);
}

std::vector<int> int_vector(const Json& j, const std::string& what) {
  if (!j.is_array()) throw ValidationError(what + " must be an integer array");
  std::vector<int> out;
  for (const auto& x : j) {
    if (!x.is_number_integer()) {
      throw ValidationError(what + " must be an integer array");
    }
    out.push_back(x.get<int>());
  }
  return out;
}

}  // namespace

Json to_json(const AbelianGroup& group) {
  return Json{{"factors", group.factors()}};
}

Json to_json(const GroupElement& g) { return Json(g.exponents()); }

Json to_json(const GroupSubset& x) {
  Json out = Json::array();
  for (const auto& g : x) out.push_back(to_json(g));
  return out;
}

Json to_json(const Vertex& v) {
  return Json::array({to_json(v.element), v.layer});
}

Json to_json(const SemiCayleySpec& spec) {
  return Json{{"group", to_json(spec.group())},
              {"R", to_json(spec.right())},
              {"L", to_json(spec.left())},
              {"S", to_json(spec.spoke())}};
}

Json to_json(const std::complex<double>& z) {
  return Json{{"re", z.real()}, {"im", z.imag()}};
}

Json to_json(const CycloValue& v) {
  return Json{{"N", v.order()},
              {"coeffs", v.coeffs()},
              {"re", v.approx().real()},
              {"im", v.approx().imag()}};
}

Json to_json(const Spectrum& spectrum) {
  Json pairs = Json::array();
  for (const auto& p : spectrum.pairs) {
    const auto lp = p.plus.integer_value();
    const auto lm = p.minus.integer_value();
    pairs.push_back(Json{
        {"character", p.character.indices()},
        {"lambda_plus", p.plus.value},
        {"lambda_minus", p.minus.value},
        {"exact", lp.has_value() && lm.has_value()},
        {"lambda_plus_integer", optional_json(lp)},
        {"lambda_minus_integer", optional_json(lm)},
        {"chi_R", to_json(p.chi_right)},
        {"chi_L", to_json(p.chi_left)},
        {"chi_S", to_json(p.chi_spoke)},
        {"c_plus", p.coeffs.c_plus},
        {"c_minus", p.coeffs.c_minus},
        {"d_plus", p.coeffs.d_plus},
        {"d_minus", p.coeffs.d_minus},
        {"e_plus", to_json(p.coeffs.e_plus)},
        {"e_minus", to_json(p.coeffs.e_minus)},
    });
  }
  const bool integral = is_integral(spectrum);
  return Json{{"group", to_json(spectrum.group)},
              {"pairs", pairs},
              {"integral", integral},
              {"eigen_gcd", integral ? Json(eigen_gcd(spectrum)) : Json(nullptr)},
              {"eigenvalues", spectrum.sorted_values()}};
}

Json to_json(const PstVerdict& verdict) {
  const Certificate& c = verdict.certificate;
  return Json{
      {"from", to_json(verdict.from)},
      {"to", to_json(verdict.to)},
      {"status", to_string(verdict.status)},
      {"time", verdict.time ? Json(verdict.time->str()) : Json(nullptr)},
      {"time_value", verdict.time ? Json(verdict.time->value()) : Json(nullptr)},
      {"certificate",
       Json{{"rule", to_string(c.rule)},
            {"route", c.route},
            {"detail", c.detail},
            {"character", optional_json(c.character)},
            {"k", optional_json(c.k)},
            {"radicand", optional_json(c.radicand)},
            {"spectral_magnitude", optional_json(c.spectral_magnitude)},
            {"oracle_magnitude", optional_json(c.oracle_magnitude)}}}};
}

Json to_json(const PeriodReport& report) {
  return Json{
      {"periodic", report.periodic},
      {"route", report.route},
      {"min_period",
       report.min_period ? Json(report.min_period->str()) : Json(nullptr)},
      {"min_period_value",
       report.min_period ? Json(report.min_period->value()) : Json(nullptr)},
      {"eigen_gcd", optional_json(report.eigen_gcd)},
      {"radicand", optional_json(report.radicand)}};
}

Json to_json(const TimeCheck& check) {
  return Json{{"t", check.time},
              {"spectral_magnitude", check.spectral_magnitude},
              {"oracle_magnitude", check.oracle_magnitude},
              {"pass", check.pass}};
}

AbelianGroup group_from_json(const Json& j) {
  if (j.is_array()) return AbelianGroup(int_vector(j, "group factors"));
  return AbelianGroup(int_vector(get_field<Json>(j, "factors"), "factors"));
}

GroupElement element_from_json(const AbelianGroup& group, const Json& j) {
  auto e = int_vector(j, "group element");
  if (e.size() != group.rank()) {
    throw ValidationError("element " + j.dump() + " has the wrong rank");
  }
  for (std::size_t l = 0; l < e.size(); ++l) {
    if (e[l] < 0 || e[l] >= group.factors()[l]) {
      throw ValidationError("element " + j.dump() + " is out of range");
    }
  }
  return GroupElement(std::move(e));
}

GroupSubset subset_from_json(const AbelianGroup& group, const Json& j) {
  if (!j.is_array()) throw ValidationError("subset must be an array");
  std::vector<GroupElement> out;
  for (const auto& x : j) out.push_back(element_from_json(group, x));
  return GroupSubset(group, std::move(out));
}

Vertex vertex_from_json(const AbelianGroup& group, const Json& j) {
  if (!j.is_array() || j.size() != 2 || !j[1].is_number_integer()) {
    throw ValidationError("vertex must be [[exponents],layer]");
  }
  const int layer = j[1].get<int>();
  if (layer != 0 && layer != 1) throw ValidationError("layer must be 0 or 1");
  return {element_from_json(group, j[0]), layer};
}

Vertex parse_vertex(const AbelianGroup& group, const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::exception&) {
    throw ValidationError("malformed vertex '" + text + "'");
  }
  return vertex_from_json(group, j);
}

SemiCayleySpec family_spec(const std::string& name, const Json& params) {
  auto n = [&] { return get_field<int>(params, "n"); };
  auto a = [&] { return group_from_json(get_field<Json>(params, "A")); };
  if (name == "sunlet") return sunlet(n());
  if (name == "cone") return cone(n());
  if (name == "hypercube") return hypercube(get_field<int>(params, "d"));
  if (name == "dihedral-full-coset") return dihedral_full_coset(a());
  if (name == "dihedral-involutions") return dihedral_involutions(a());
  if (name == "dicyclic-full-coset" || name == "dicyclic-involutions") {
    const AbelianGroup g = a();
    const GroupElement y = element_from_json(g, get_field<Json>(params, "y"));
    return name == "dicyclic-full-coset" ? dicyclic_full_coset(g, y)
                                         : dicyclic_involutions(g, y);
  }
  if (name == "join") {
    const AbelianGroup g = group_from_json(get_field<Json>(params, "group"));
    return join_spec(g, subset_from_json(g, get_field<Json>(params, "R")),
                     subset_from_json(g, get_field<Json>(params, "L")));
  }
  throw ValidationError("unknown family '" + name + "'");
}

SemiCayleySpec spec_from_json(const Json& j) {
  if (!j.is_object()) throw ValidationError("graph spec must be an object");
  const int sources = static_cast<int>(j.contains("family")) +
                      static_cast<int>(j.contains("cayley")) +
                      static_cast<int>(j.contains("group"));
  if (sources != 1) {
    throw ValidationError(
        "graph spec needs exactly one of 'family', 'cayley', 'group'");
  }
  if (j.contains("family")) {
    return family_spec(get_field<std::string>(j, "family"), j);
  }
  if (j.contains("cayley")) {
    const Json& c = j.at("cayley");
    const AbelianGroup base = group_from_json(get_field<Json>(c, "base"));
    const auto kind = get_field<std::string>(c, "extension");
    const GroupElement x2 =
        c.contains("x_square") ? element_from_json(base, c.at("x_square"))
                               : base.identity();
    IndexTwoExtension ext =
        kind == "dihedral"   ? IndexTwoExtension::generalized_dihedral(base)
        : kind == "dicyclic" ? IndexTwoExtension::generalized_dicyclic(base, x2)
        : kind == "abelian"  ? IndexTwoExtension::abelian(base, x2)
                             : throw ValidationError("unknown extension '" +
                                                     kind + "'");
    return from_cayley_index2(ext,
                              subset_from_json(base, get_field<Json>(c, "T1")),
                              subset_from_json(base, get_field<Json>(c, "T2")))
        .spec;
  }
  const AbelianGroup g = group_from_json(get_field<Json>(j, "group"));
  return SemiCayleySpec(g, subset_from_json(g, get_field<Json>(j, "R")),
                        subset_from_json(g, get_field<Json>(j, "L")),
                        subset_from_json(g, get_field<Json>(j, "S")));
}

}  // namespace semicayley
