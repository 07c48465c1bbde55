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

#ifndef DESIGNET_GATESETS_HPP
#define DESIGNET_GATESETS_HPP

#include <string>

#include "designet/moment_operators.hpp"

namespace designet {

/// Fixed single- and two-qubit gates by name: I, X, Y, Z, H, S, T (d=2) and
/// CZ, CNOT, CZ-HI, CZ-TI (d=4).
UnitaryMatrix named_gate(const std::string& name);

/// Built-in ensembles: "pauli" (uniform I,X,Y,Z), "clifford1" (uniform
/// single-qubit Clifford group, 24 channel-distinct elements), "ht", "hs"
/// (uniform two-element generator sets) and "cz-ht-2q" (uniform
/// {CZ(H(x)I), CZ(T(x)I)} on two qubits).
GateEnsemble builtin_ensemble(const std::string& name);

/// Closure of the given gates under multiplication, modulo global phase.
/// Gates are phase-canonicalized; growth beyond max_elements raises an error.
std::vector<UnitaryMatrix> group_closure(const std::vector<UnitaryMatrix>& generators,
                                         int max_elements = 100000);

/// Parse an ensemble from the JSON schema
///   {"d": int, "gates": [{"name": str, "matrix": [[[re,im],...],...],
///                         "weight": optional real}, ...]}
/// Omitted weights make the ensemble uniform. Each matrix is checked for
/// unitarity at 1e-8 and errors name the offending gate.
GateEnsemble ensemble_from_json(const std::string& json_text);
GateEnsemble ensemble_from_file(const std::string& path);

/// Resolve a CLI-style gate-set argument: a builtin name, else a file path.
GateEnsemble resolve_ensemble(const std::string& spec);

}  // namespace designet

#endif
