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

#include "subsched/pauli.hpp"

#include <stdexcept>

namespace subsched {

PauliString PauliString::from_string(std::string_view text) {
    bool negative = false;
    if (!text.empty() && (text[0] == '+' || text[0] == '-')) {
        negative = text[0] == '-';
        text.remove_prefix(1);
    }
    PauliString p(text.size());
    p.negative_ = negative;
    for (size_t q = 0; q < text.size(); q++) {
        switch (text[q]) {
            case 'I':
            case '_':
                break;
            case 'X':
                p.letters_[q] = Pauli::X;
                break;
            case 'Y':
                p.letters_[q] = Pauli::Y;
                break;
            case 'Z':
                p.letters_[q] = Pauli::Z;
                break;
            default:
                throw std::invalid_argument("not a Pauli letter: '" + std::string(1, text[q]) + "'");
        }
    }
    return p;
}

std::vector<size_t> PauliString::support() const {
    std::vector<size_t> out;
    for (size_t q = 0; q < letters_.size(); q++) {
        if (letters_[q] != Pauli::I) {
            out.push_back(q);
        }
    }
    return out;
}

bool PauliString::commutes_with(const PauliString &other) const {
    if (other.size() != size()) {
        throw std::invalid_argument("Pauli strings have different lengths");
    }
    bool anti = false;
    for (size_t q = 0; q < letters_.size(); q++) {
        Pauli a = letters_[q];
        Pauli b = other.letters_[q];
        anti ^= (x_bit(a) && z_bit(b)) ^ (z_bit(a) && x_bit(b));
    }
    return !anti;
}

std::string PauliString::str() const {
    std::string out(1, negative_ ? '-' : '+');
    for (Pauli p : letters_) {
        out.push_back("IXZY"[(uint8_t)p]);
    }
    return out;
}

}  // namespace subsched
