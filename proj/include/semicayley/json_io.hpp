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

#pragma once

#include <string>

#include "json.hpp"
#include "semicayley/cyclo.hpp"
#include "semicayley/graph.hpp"
#include "semicayley/pst.hpp"
#include "semicayley/spectrum.hpp"
#include "semicayley/transfer.hpp"

namespace semicayley {

using Json = nlohmann::json;

Json to_json(const AbelianGroup& group);
Json to_json(const GroupElement& g);
Json to_json(const GroupSubset& x);
Json to_json(const Vertex& v);
/// {"group":{"factors":[...]}, "R":[...], "L":[...], "S":[...]}
Json to_json(const SemiCayleySpec& spec);
/// {"N", "coeffs", "re", "im"}
Json to_json(const CycloValue& v);
Json to_json(const Spectrum& spectrum);
Json to_json(const PstVerdict& verdict);
Json to_json(const PeriodReport& report);
Json to_json(const TimeCheck& check);
Json to_json(const std::complex<double>& z);

AbelianGroup group_from_json(const Json& j);
GroupElement element_from_json(const AbelianGroup& group, const Json& j);
GroupSubset subset_from_json(const AbelianGroup& group, const Json& j);
Vertex vertex_from_json(const AbelianGroup& group, const Json& j);
/// "[[exponents],layer]"
Vertex parse_vertex(const AbelianGroup& group, const std::string& text);

/// An explicit spec, a named family {"family": ..., params}, or an index-2
/// Cayley description {"cayley": {"extension", "base", "x_square", "T1",
/// "T2"}}.
SemiCayleySpec spec_from_json(const Json& j);
/// Named family: sunlet/cone (n), join (group, R, L), dihedral-full-coset,
/// dihedral-involutions (A), dicyclic-full-coset, dicyclic-involutions (A,
/// y), hypercube (d).
SemiCayleySpec family_spec(const std::string& name, const Json& params);

}  // namespace semicayley
