// Copyright 2026 The subsched Authors
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

#ifndef SUBSCHED_TABLEAU_HPP
#define SUBSCHED_TABLEAU_HPP

#include <cstdint>
#include <span>
#include <vector>

#include "subsched/common.hpp"
#include "subsched/pauli.hpp"
#include "subsched/stabilizer.hpp"

namespace subsched {

/// Stabilizer group of an n-qubit state held as n generator rows in
/// symplectic form (x bits, z bits packed 64 per word, one sign bit).
class Tableau {
   public:
    explicit Tableau(size_t n = 0);

    /// Row v = +X_v for qubits initialized in |+>, +Z_v for |0>.
    static Tableau from_plan(const ReductionPlan &plan);
    static Tableau from_rows(std::span<const PauliString> rows);

    size_t num_qubits() const {
        return n_;
    }
    PauliString row(size_t r) const;
    void set_row(size_t r, const PauliString &p);

    enum class Outcome {
        projected,          // p anticommuted with the group; +1 outcome forced
        determined_plus,    // p already in the group
        determined_minus,   // -p already in the group; projection onto +1 impossible
    };

    /// Even-parity (+1) projection onto p. If p anticommutes with some rows,
    /// the first such row is replaced by p and the others are multiplied by
    /// it. Otherwise the group is unchanged and the fixed sign is reported.
    Outcome project(const PauliString &p, Exec exec = Exec::parallel);

    /// Whether +p (sign included) is an element of the group.
    bool contains(const PauliString &p) const;
    /// Membership for many strings against a single row reduction.
    std::vector<bool> contains_all(std::span<const PauliString> ps) const;

    /// GF(2) rank of the rows, signs ignored.
    size_t rank() const;
    bool rows_commute() const;

   private:
    size_t n_;
    size_t words_;
    std::vector<uint64_t> xs_;
    std::vector<uint64_t> zs_;
    std::vector<uint8_t> signs_;
};

/// tableau_init: product state prescribed by the plan.
inline Tableau tableau_init(const ReductionPlan &plan) {
    return Tableau::from_plan(plan);
}

/// True iff t and target generate the same group with the same signs.
bool stabilizer_groups_equal(const Tableau &t, std::span<const PauliString> target);

/// Product lhs * rhs of two commuting Pauli strings, sign included.
/// Reference implementation (per-qubit phase table) used to check the
/// packed kernel.
PauliString multiply_reference(const PauliString &lhs, const PauliString &rhs);

/// Same product through the packed word kernel.
PauliString multiply_packed(const PauliString &lhs, const PauliString &rhs);

}  // namespace subsched

#endif
