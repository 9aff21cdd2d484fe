// Copyright 2026 The qsv Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef QSV_SERIALIZE_HPP_
#define QSV_SERIALIZE_HPP_

#include <nlohmann/json.hpp>

#include "qsv/bases.hpp"
#include "qsv/charfunc.hpp"
#include "qsv/dfe.hpp"

namespace qsv {

// SU(d) labels become [k, k'], Weyl labels [[p, q], [p', q']]. Decoding
// needs the basis and site dimensions, which travel with the enclosing
// document.
nlohmann::json label_to_json(const ObservablePair& label);
ObservablePair label_from_json(const nlohmann::json& j, BasisKind basis, int d1,
                               int d2);

// {"basis", "d1", "d2", "entries": [{"label", "re", "im"}]}
nlohmann::json to_json(const CharFunction& chi);
CharFunction char_function_from_json(const nlohmann::json& j);

// {"basis", "d1", "d2", "ell", "epsilon", "delta",
//  "entries": [{"label", "chi", "prob", "m"}]}. chi is a number for SU(d)
// and [re, im] for Weyl.
nlohmann::json to_json(const SamplingPlan& plan);
SamplingPlan plan_from_json(const nlohmann::json& j);

// {"y_tilde", "true_fidelity" (null when unknown), "seed",
//  "total_single_measurements"}
nlohmann::json to_json(const EstimateReport& report);

}  // namespace qsv

#endif  // QSV_SERIALIZE_HPP_
