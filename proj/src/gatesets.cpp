/*
 * Copyright 2026 The designet Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *      http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "designet/gatesets.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace designet {

namespace {

MatC mat_i() { return MatC::Identity(2, 2); }

MatC mat_x() {
  MatC m(2, 2);
  m << 0, 1, 1, 0;
  return m;
}

MatC mat_y() {
  MatC m(2, 2);
  m << Complex(0, 0), Complex(0, -1), Complex(0, 1), Complex(0, 0);
  return m;
}

MatC mat_z() {
  MatC m(2, 2);
  m << 1, 0, 0, -1;
  return m;
}

MatC mat_h() {
  double r = 1.0 / std::sqrt(2.0);
  MatC m(2, 2);
  m << r, r, r, -r;
  return m;
}

MatC mat_s() {
  MatC m(2, 2);
  m << 1, 0, 0, Complex(0, 1);
  return m;
}

MatC mat_t() {
  MatC m(2, 2);
  m << 1, 0, 0, std::polar(1.0, 3.14159265358979323846 / 4.0);
  return m;
}

MatC mat_cz() {
  MatC m = MatC::Identity(4, 4);
  m(3, 3) = -1;
  return m;
}

MatC mat_cnot() {
  MatC m = MatC::Zero(4, 4);
  m(0, 0) = 1;
  m(1, 1) = 1;
  m(2, 3) = 1;
  m(3, 2) = 1;
  return m;
}

// Global phase canonicalization: the first entry of magnitude above 1e-6
// (row-major scan) is made real and positive.
MatC canonical_phase(MatC m) {
  for (long i = 0; i < m.rows(); ++i) {
    for (long j = 0; j < m.cols(); ++j) {
      double a = std::abs(m(i, j));
      if (a > 1e-6) {
        m *= std::conj(m(i, j)) / a;
        return m;
      }
    }
  }
  return m;
}

bool same_channel(const MatC& a, const MatC& b) {
  double d = static_cast<double>(a.rows());
  return std::abs(std::abs((a.adjoint() * b).trace()) - d) < 1e-9;
}

}  // namespace

UnitaryMatrix named_gate(const std::string& name) {
  if (name == "I") return UnitaryMatrix(mat_i());
  if (name == "X") return UnitaryMatrix(mat_x());
  if (name == "Y") return UnitaryMatrix(mat_y());
  if (name == "Z") return UnitaryMatrix(mat_z());
  if (name == "H") return UnitaryMatrix(mat_h());
  if (name == "S") return UnitaryMatrix(mat_s());
  if (name == "T") return UnitaryMatrix(mat_t());
  if (name == "CZ") return UnitaryMatrix(mat_cz());
  if (name == "CNOT") return UnitaryMatrix(mat_cnot());
  if (name == "CZ-HI") return UnitaryMatrix(mat_cz() * dense_kron(mat_h(), mat_i()));
  if (name == "CZ-TI") return UnitaryMatrix(mat_cz() * dense_kron(mat_t(), mat_i()));
  throw Error(Error::Kind::invalid_argument, "unknown gate name: " + name);
}

std::vector<UnitaryMatrix> group_closure(const std::vector<UnitaryMatrix>& generators,
                                         int max_elements) {
  if (generators.empty()) throw Error(Error::Kind::invalid_argument, "no generators");
  const int d = generators.front().dim();
  std::vector<MatC> elements;
  elements.push_back(canonical_phase(MatC::Identity(d, d)));
  std::size_t frontier = 0;
  while (frontier < elements.size()) {
    MatC base = elements[frontier++];
    for (const auto& g : generators) {
      MatC prod = canonical_phase(base * g.matrix());
      bool known = false;
      for (const auto& e : elements) {
        if (same_channel(e, prod)) {
          known = true;
          break;
        }
      }
      if (!known) {
        if (static_cast<int>(elements.size()) >= max_elements) {
          throw Error(Error::Kind::dimension_limit,
                      "group closure exceeded " + std::to_string(max_elements) + " elements");
        }
        elements.push_back(std::move(prod));
      }
    }
  }
  std::vector<UnitaryMatrix> out;
  out.reserve(elements.size());
  for (auto& e : elements) out.emplace_back(std::move(e), 1e-8);
  return out;
}

GateEnsemble builtin_ensemble(const std::string& name) {
  if (name == "pauli") {
    return GateEnsemble::uniform(
        {UnitaryMatrix(mat_i()), UnitaryMatrix(mat_x()), UnitaryMatrix(mat_y()),
         UnitaryMatrix(mat_z())});
  }
  if (name == "clifford1") {
    auto cliff = group_closure({named_gate("H"), named_gate("S")});
    return GateEnsemble::uniform(std::move(cliff));
  }
  if (name == "ht") return GateEnsemble::uniform({named_gate("H"), named_gate("T")});
  if (name == "hs") return GateEnsemble::uniform({named_gate("H"), named_gate("S")});
  if (name == "cz-ht-2q") {
    return GateEnsemble::uniform({named_gate("CZ-HI"), named_gate("CZ-TI")});
  }
  throw Error(Error::Kind::invalid_argument, "unknown built-in gate set: " + name);
}

GateEnsemble ensemble_from_json(const std::string& json_text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::exception& e) {
    throw Error(Error::Kind::parse, std::string("gate-set JSON parse error: ") + e.what());
  }
  if (!j.contains("d") || !j.contains("gates") || !j["gates"].is_array() || j["gates"].empty()) {
    throw Error(Error::Kind::parse, "gate-set JSON needs fields 'd' and non-empty 'gates'");
  }
  int d = j["d"].get<int>();
  std::vector<WeightedGate> items;
  bool any_weight = false;
  for (const auto& g : j["gates"]) {
    std::string name = g.value("name", "gate" + std::to_string(items.size()));
    if (!g.contains("matrix")) {
      throw Error(Error::Kind::parse, "gate '" + name + "' has no matrix");
    }
    const auto& rows = g["matrix"];
    if (static_cast<int>(rows.size()) != d) {
      throw Error(Error::Kind::parse, "gate '" + name + "' has wrong row count");
    }
    MatC m(d, d);
    for (int r = 0; r < d; ++r) {
      if (static_cast<int>(rows[r].size()) != d) {
        throw Error(Error::Kind::parse, "gate '" + name + "' has wrong column count");
      }
      for (int c = 0; c < d; ++c) {
        const auto& entry = rows[r][c];
        if (!entry.is_array() || entry.size() != 2) {
          throw Error(Error::Kind::parse, "gate '" + name + "' entries must be [re, im] pairs");
        }
        m(r, c) = Complex(entry[0].get<double>(), entry[1].get<double>());
      }
    }
    double w = -1.0;
    if (g.contains("weight")) {
      any_weight = true;
      w = g["weight"].get<double>();
    }
    try {
      items.push_back(WeightedGate{w, UnitaryMatrix(std::move(m), 1e-8)});
    } catch (const Error&) {
      throw Error(Error::Kind::invalid_argument, "gate '" + name + "' is not unitary at 1e-8");
    }
  }
  if (!any_weight) {
    std::vector<UnitaryMatrix> gates;
    gates.reserve(items.size());
    for (auto& it : items) gates.push_back(std::move(it.gate));
    return GateEnsemble::uniform(std::move(gates));
  }
  for (const auto& it : items) {
    if (it.weight < 0.0) {
      throw Error(Error::Kind::parse, "either all gates carry weights or none");
    }
  }
  return GateEnsemble(d, std::move(items));
}

GateEnsemble ensemble_from_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(Error::Kind::parse, "cannot open gate-set file: " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ensemble_from_json(ss.str());
}

GateEnsemble resolve_ensemble(const std::string& spec) {
  try {
    return builtin_ensemble(spec);
  } catch (const Error&) {
    return ensemble_from_file(spec);
  }
}

}  // namespace designet
