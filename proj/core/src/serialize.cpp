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

#include "qsv/serialize.hpp"

#include "qsv/error.hpp"

namespace qsv {

using nlohmann::json;

json label_to_json(const ObservablePair& label) {
  if (label.kind() == BasisKind::kSud) {
    return json::array({label.sud_first().k, label.sud_second().k});
  }
  const auto& a = label.weyl_first();
  const auto& b = label.weyl_second();
  return json::array({json::array({a.p, a.q}), json::array({b.p, b.q})});
}

ObservablePair label_from_json(const json& j, BasisKind basis, int d1, int d2) {
  try {
    if (basis == BasisKind::kSud) {
      return ObservablePair::sud(d1, j.at(0).get<int>(), d2, j.at(1).get<int>());
    }
    if (d1 != d2) {
      throw Error(ErrorKind::kDimensionMismatch,
                  "Weyl labels need equal site dimensions");
    }
    return ObservablePair::weyl(d1, j.at(0).at(0).get<int>(),
                                j.at(0).at(1).get<int>(), j.at(1).at(0).get<int>(),
                                j.at(1).at(1).get<int>());
  } catch (const json::exception& e) {
    throw Error(ErrorKind::kInvalidParameter,
                std::string("malformed label: ") + e.what());
  }
}

json to_json(const CharFunction& chi) {
  json entries = json::array();
  for (std::size_t i = 0; i < chi.labels.size(); ++i) {
    entries.push_back({{"label", label_to_json(chi.labels[i])},
                       {"re", chi.values[i].real()},
                       {"im", chi.values[i].imag()}});
  }
  return {{"basis", to_string(chi.basis)},
          {"d1", chi.d1},
          {"d2", chi.d2},
          {"entries", std::move(entries)}};
}

CharFunction char_function_from_json(const json& j) {
  try {
    CharFunction chi;
    chi.basis = basis_from_string(j.at("basis").get<std::string>());
    chi.d1 = j.at("d1").get<int>();
    chi.d2 = j.at("d2").get<int>();
    for (const auto& e : j.at("entries")) {
      chi.labels.push_back(label_from_json(e.at("label"), chi.basis, chi.d1, chi.d2));
      chi.values.emplace_back(e.at("re").get<double>(), e.at("im").get<double>());
    }
    return chi;
  } catch (const json::exception& e) {
    throw Error(ErrorKind::kInvalidParameter,
                std::string("malformed characteristic function: ") + e.what());
  }
}

json to_json(const SamplingPlan& plan) {
  json entries = json::array();
  for (const auto& e : plan.entries) {
    json chi = plan.basis == BasisKind::kSud
                   ? json(e.chi.real())
                   : json::array({e.chi.real(), e.chi.imag()});
    entries.push_back({{"label", label_to_json(e.label)},
                       {"chi", std::move(chi)},
                       {"prob", e.probability},
                       {"m", e.m}});
  }
  return {{"basis", to_string(plan.basis)},
          {"d1", plan.d1},
          {"d2", plan.d2},
          {"ell", plan.ell},
          {"epsilon", plan.epsilon},
          {"delta", plan.delta},
          {"entries", std::move(entries)}};
}

SamplingPlan plan_from_json(const json& j) {
  try {
    SamplingPlan plan;
    plan.basis = basis_from_string(j.at("basis").get<std::string>());
    plan.d1 = j.at("d1").get<int>();
    plan.d2 = j.at("d2").get<int>();
    plan.ell = j.at("ell").get<std::uint64_t>();
    plan.epsilon = j.at("epsilon").get<double>();
    plan.delta = j.at("delta").get<double>();
    for (const auto& e : j.at("entries")) {
      const auto& c = e.at("chi");
      const Complex chi = c.is_array()
                              ? Complex(c.at(0).get<double>(), c.at(1).get<double>())
                              : Complex(c.get<double>(), 0.0);
      plan.entries.push_back(
          {label_from_json(e.at("label"), plan.basis, plan.d1, plan.d2), chi,
           e.at("prob").get<double>(), e.at("m").get<std::uint64_t>()});
    }
    return plan;
  } catch (const json::exception& e) {
    throw Error(ErrorKind::kInvalidParameter,
                std::string("malformed sampling plan: ") + e.what());
  }
}

json to_json(const EstimateReport& report) {
  return {{"y_tilde", report.y_tilde},
          {"true_fidelity", report.true_fidelity ? json(*report.true_fidelity)
                                                 : json(nullptr)},
          {"seed", report.seed},
          {"total_single_measurements", report.total_single_measurements}};
}

}  // namespace qsv
