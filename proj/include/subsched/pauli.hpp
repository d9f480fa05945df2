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

#ifndef SUBSCHED_PAULI_HPP
#define SUBSCHED_PAULI_HPP

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace subsched {

/// Single-qubit Pauli letter encoded as (x bit, z bit): Y = (1, 1).
enum class Pauli : uint8_t { I = 0, X = 1, Z = 2, Y = 3 };

inline bool x_bit(Pauli p) {
    return (uint8_t)p & 1;
}
inline bool z_bit(Pauli p) {
    return (uint8_t)p & 2;
}
inline Pauli pauli_from_bits(bool x, bool z) {
    return (Pauli)((uint8_t)x | ((uint8_t)z << 1));
}

/// A Hermitian Pauli word with a +/- sign.
class PauliString {
   public:
    PauliString() = default;
    explicit PauliString(size_t n) : letters_(n, Pauli::I) {
    }

    /// Parses "+XZI", "-ZZ" or "XZ" (sign defaults to +). Accepts '_' for I.
    static PauliString from_string(std::string_view text);

    size_t size() const {
        return letters_.size();
    }
    Pauli operator[](size_t q) const {
        return letters_[q];
    }
    void set(size_t q, Pauli p) {
        letters_[q] = p;
    }
    bool negative() const {
        return negative_;
    }
    void set_negative(bool negative) {
        negative_ = negative;
    }

    /// Qubits carrying a non-identity letter.
    std::vector<size_t> support() const;

    bool commutes_with(const PauliString &other) const;

    std::string str() const;

    bool operator==(const PauliString &other) const = default;

   private:
    std::vector<Pauli> letters_;
    bool negative_ = false;
};

}  // namespace subsched

#endif
