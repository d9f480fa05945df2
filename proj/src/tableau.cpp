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

#include "subsched/tableau.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace subsched {

namespace {

struct RowRef {
    uint64_t *x;
    uint64_t *z;
    uint8_t *sign;
};

struct ConstRowRef {
    const uint64_t *x;
    const uint64_t *z;
    uint8_t sign;
};

bool anticommutes(ConstRowRef a, ConstRowRef b, size_t words) {
    uint64_t acc = 0;
    for (size_t w = 0; w < words; w++) {
        acc ^= (a.x[w] & b.z[w]) ^ (a.z[w] & b.x[w]);
    }
    return std::popcount(acc) & 1;
}

// lhs <- lhs * rhs. Per qubit, X*Y, Y*Z, Z*X contribute +i and X*Z, Y*X, Z*Y
// contribute -i; the total power of i must be even for commuting operands.
void mul_into(RowRef lhs, ConstRowRef rhs, size_t words) {
    int64_t power = 0;
    for (size_t w = 0; w < words; w++) {
        uint64_t x1 = lhs.x[w];
        uint64_t z1 = lhs.z[w];
        uint64_t x2 = rhs.x[w];
        uint64_t z2 = rhs.z[w];
        uint64_t l_x = x1 & ~z1;
        uint64_t l_y = x1 & z1;
        uint64_t l_z = ~x1 & z1;
        uint64_t r_x = x2 & ~z2;
        uint64_t r_y = x2 & z2;
        uint64_t r_z = ~x2 & z2;
        uint64_t pos = (l_x & r_y) | (l_y & r_z) | (l_z & r_x);
        uint64_t neg = (l_x & r_z) | (l_y & r_x) | (l_z & r_y);
        power += std::popcount(pos) - std::popcount(neg);
        lhs.x[w] = x1 ^ x2;
        lhs.z[w] = z1 ^ z2;
    }
    power = ((power % 4) + 4) % 4;
    if (power & 1) {
        throw std::logic_error("product of anticommuting Pauli rows is not Hermitian");
    }
    *lhs.sign ^= rhs.sign ^ (uint8_t)(power >> 1);
}

void pack(const PauliString &p, uint64_t *x, uint64_t *z, size_t words) {
    for (size_t w = 0; w < words; w++) {
        x[w] = 0;
        z[w] = 0;
    }
    for (size_t q = 0; q < p.size(); q++) {
        if (x_bit(p[q])) x[q / 64] |= uint64_t{1} << (q % 64);
        if (z_bit(p[q])) z[q / 64] |= uint64_t{1} << (q % 64);
    }
}

PauliString unpack(const uint64_t *x, const uint64_t *z, uint8_t sign, size_t n) {
    PauliString p(n);
    for (size_t q = 0; q < n; q++) {
        bool xb = (x[q / 64] >> (q % 64)) & 1;
        bool zb = (z[q / 64] >> (q % 64)) & 1;
        p.set(q, pauli_from_bits(xb, zb));
    }
    p.set_negative(sign);
    return p;
}

size_t words_for(size_t n) {
    return (n + 63) / 64;
}

// Row-reduced copy of a set of rows used for membership and rank queries.
struct Basis {
    size_t n;
    size_t words;
    std::vector<uint64_t> xs;
    std::vector<uint64_t> zs;
    std::vector<uint8_t> signs;
    std::vector<size_t> pivot_col;

    RowRef row(size_t r) {
        return {&xs[r * words], &zs[r * words], &signs[r]};
    }
    ConstRowRef crow(size_t r) const {
        return {&xs[r * words], &zs[r * words], signs[r]};
    }
    static bool bit(const uint64_t *x, const uint64_t *z, size_t n, size_t col) {
        const uint64_t *src = col < n ? x : z;
        size_t q = col < n ? col : col - n;
        return (src[q / 64] >> (q % 64)) & 1;
    }

    // Rows must pairwise commute so that every product stays Hermitian.
    static Basis reduce(size_t n, size_t words, std::vector<uint64_t> xs, std::vector<uint64_t> zs,
                        std::vector<uint8_t> signs) {
        Basis b{n, words, std::move(xs), std::move(zs), std::move(signs), {}};
        size_t rows = b.signs.size();
        size_t rank = 0;
        for (size_t col = 0; col < 2 * n && rank < rows; col++) {
            size_t pivot = rank;
            while (pivot < rows && !bit(&b.xs[pivot * words], &b.zs[pivot * words], n, col)) {
                pivot++;
            }
            if (pivot == rows) {
                continue;
            }
            if (pivot != rank) {
                std::swap_ranges(&b.xs[pivot * words], &b.xs[pivot * words] + words, &b.xs[rank * words]);
                std::swap_ranges(&b.zs[pivot * words], &b.zs[pivot * words] + words, &b.zs[rank * words]);
                std::swap(b.signs[pivot], b.signs[rank]);
            }
            for (size_t r = 0; r < rows; r++) {
                if (r != rank && bit(&b.xs[r * words], &b.zs[r * words], n, col)) {
                    mul_into(b.row(r), b.crow(rank), words);
                }
            }
            b.pivot_col.push_back(col);
            rank++;
        }
        return b;
    }

    bool contains(const PauliString &p) const {
        std::vector<uint64_t> x(words);
        std::vector<uint64_t> z(words);
        uint8_t sign = p.negative();
        pack(p, x.data(), z.data(), words);
        RowRef residual{x.data(), z.data(), &sign};
        for (size_t r = 0; r < pivot_col.size(); r++) {
            if (bit(x.data(), z.data(), n, pivot_col[r])) {
                mul_into(residual, crow(r), words);
            }
        }
        for (size_t w = 0; w < words; w++) {
            if (x[w] || z[w]) {
                return false;
            }
        }
        return sign == 0;
    }
};

}  // namespace

Tableau::Tableau(size_t n) : n_(n), words_(words_for(n)), xs_(n * words_, 0), zs_(n * words_, 0), signs_(n, 0) {
}

Tableau Tableau::from_plan(const ReductionPlan &plan) {
    size_t n = plan.init_basis.size();
    Tableau t(n);
    for (size_t q = 0; q < n; q++) {
        uint64_t bit = uint64_t{1} << (q % 64);
        if (plan.init_basis[q] == InitBasis::plus) {
            t.xs_[q * t.words_ + q / 64] |= bit;
        } else {
            t.zs_[q * t.words_ + q / 64] |= bit;
        }
    }
    return t;
}

Tableau Tableau::from_rows(std::span<const PauliString> rows) {
    size_t n = rows.size();
    Tableau t(n);
    for (size_t r = 0; r < n; r++) {
        t.set_row(r, rows[r]);
    }
    return t;
}

PauliString Tableau::row(size_t r) const {
    return unpack(&xs_[r * words_], &zs_[r * words_], signs_[r], n_);
}

void Tableau::set_row(size_t r, const PauliString &p) {
    if (p.size() != n_) {
        throw std::invalid_argument("Pauli string length does not match the tableau");
    }
    pack(p, &xs_[r * words_], &zs_[r * words_], words_);
    signs_[r] = p.negative();
}

Tableau::Outcome Tableau::project(const PauliString &p, Exec exec) {
    if (p.size() != n_) {
        throw std::invalid_argument("Pauli string length does not match the tableau");
    }
    std::vector<uint64_t> px(words_);
    std::vector<uint64_t> pz(words_);
    pack(p, px.data(), pz.data(), words_);
    ConstRowRef target{px.data(), pz.data(), (uint8_t)p.negative()};

    std::vector<uint8_t> anti(n_, 0);
    if (exec == Exec::parallel) {
#pragma omp parallel for schedule(static) if (n_ >= 256)
        for (int64_t r = 0; r < (int64_t)n_; r++) {
            anti[r] = anticommutes({&xs_[r * words_], &zs_[r * words_], signs_[r]}, target, words_);
        }
    } else {
        for (size_t r = 0; r < n_; r++) {
            anti[r] = anticommutes({&xs_[r * words_], &zs_[r * words_], signs_[r]}, target, words_);
        }
    }

    size_t pivot = n_;
    for (size_t r = 0; r < n_; r++) {
        if (anti[r]) {
            pivot = r;
            break;
        }
    }
    if (pivot == n_) {
        if (contains(p)) {
            return Outcome::determined_plus;
        }
        PauliString flipped = p;
        flipped.set_negative(!p.negative());
        if (contains(flipped)) {
            return Outcome::determined_minus;
        }
        throw std::logic_error("commuting Pauli is outside a full-rank stabilizer group");
    }

    ConstRowRef pivot_row{&xs_[pivot * words_], &zs_[pivot * words_], signs_[pivot]};
    auto fix = [&](size_t r) {
        if (r != pivot && anti[r]) {
            mul_into({&xs_[r * words_], &zs_[r * words_], &signs_[r]}, pivot_row, words_);
        }
    };
    if (exec == Exec::parallel) {
#pragma omp parallel for schedule(static) if (n_ >= 256)
        for (int64_t r = 0; r < (int64_t)n_; r++) {
            fix((size_t)r);
        }
    } else {
        for (size_t r = 0; r < n_; r++) {
            fix(r);
        }
    }
    set_row(pivot, p);
    return Outcome::projected;
}

bool Tableau::contains(const PauliString &p) const {
    return contains_all(std::span<const PauliString>(&p, 1))[0];
}

std::vector<bool> Tableau::contains_all(std::span<const PauliString> ps) const {
    Basis b = Basis::reduce(n_, words_, xs_, zs_, signs_);
    std::vector<bool> out;
    out.reserve(ps.size());
    for (const auto &p : ps) {
        out.push_back(p.size() == n_ && b.contains(p));
    }
    return out;
}

size_t Tableau::rank() const {
    // Signs are irrelevant for rank; clearing them also keeps the reduction
    // valid for rows that do not commute.
    size_t rows = n_;
    std::vector<uint64_t> xs = xs_;
    std::vector<uint64_t> zs = zs_;
    size_t rank = 0;
    for (size_t col = 0; col < 2 * n_ && rank < rows; col++) {
        size_t pivot = rank;
        while (pivot < rows && !Basis::bit(&xs[pivot * words_], &zs[pivot * words_], n_, col)) {
            pivot++;
        }
        if (pivot == rows) {
            continue;
        }
        std::swap_ranges(&xs[pivot * words_], &xs[pivot * words_] + words_, &xs[rank * words_]);
        std::swap_ranges(&zs[pivot * words_], &zs[pivot * words_] + words_, &zs[rank * words_]);
        for (size_t r = rank + 1; r < rows; r++) {
            if (Basis::bit(&xs[r * words_], &zs[r * words_], n_, col)) {
                for (size_t w = 0; w < words_; w++) {
                    xs[r * words_ + w] ^= xs[rank * words_ + w];
                    zs[r * words_ + w] ^= zs[rank * words_ + w];
                }
            }
        }
        rank++;
    }
    return rank;
}

bool Tableau::rows_commute() const {
    for (size_t a = 0; a < n_; a++) {
        for (size_t b = a + 1; b < n_; b++) {
            if (anticommutes({&xs_[a * words_], &zs_[a * words_], 0}, {&xs_[b * words_], &zs_[b * words_], 0},
                             words_)) {
                return false;
            }
        }
    }
    return true;
}

bool stabilizer_groups_equal(const Tableau &t, std::span<const PauliString> target) {
    size_t n = t.num_qubits();
    if (target.size() != n) {
        return false;
    }
    for (const auto &p : target) {
        if (p.size() != n) {
            return false;
        }
    }
    // Equal ranks plus containment of every target generator means the
    // spans coincide; containment is checked with signs.
    if (Tableau::from_rows(target).rank() != n || t.rank() != n) {
        return false;
    }
    auto found = t.contains_all(target);
    return std::all_of(found.begin(), found.end(), [](bool b) {
        return b;
    });
}

PauliString multiply_reference(const PauliString &lhs, const PauliString &rhs) {
    if (lhs.size() != rhs.size()) {
        throw std::invalid_argument("Pauli strings have different lengths");
    }
    // Power of i picked up by P1 * P2 for single-qubit letters (x, z).
    auto g = [](bool x1, bool z1, bool x2, bool z2) -> int {
        if (!x1 && !z1) return 0;
        if (x1 && z1) return (int)z2 - (int)x2;
        if (x1) return (int)z2 * (2 * (int)x2 - 1);
        return (int)x2 * (1 - 2 * (int)z2);
    };
    PauliString out(lhs.size());
    int power = 2 * (int)lhs.negative() + 2 * (int)rhs.negative();
    for (size_t q = 0; q < lhs.size(); q++) {
        Pauli a = lhs[q];
        Pauli b = rhs[q];
        power += g(x_bit(a), z_bit(a), x_bit(b), z_bit(b));
        out.set(q, pauli_from_bits(x_bit(a) ^ x_bit(b), z_bit(a) ^ z_bit(b)));
    }
    power = ((power % 4) + 4) % 4;
    if (power & 1) {
        throw std::invalid_argument("product of anticommuting Pauli strings is not Hermitian");
    }
    out.set_negative(power == 2);
    return out;
}

PauliString multiply_packed(const PauliString &lhs, const PauliString &rhs) {
    if (lhs.size() != rhs.size()) {
        throw std::invalid_argument("Pauli strings have different lengths");
    }
    size_t n = lhs.size();
    size_t words = words_for(n);
    std::vector<uint64_t> x1(words), z1(words), x2(words), z2(words);
    pack(lhs, x1.data(), z1.data(), words);
    pack(rhs, x2.data(), z2.data(), words);
    uint8_t sign = lhs.negative();
    try {
        mul_into({x1.data(), z1.data(), &sign}, {x2.data(), z2.data(), (uint8_t)rhs.negative()}, words);
    } catch (const std::logic_error &) {
        throw std::invalid_argument("product of anticommuting Pauli strings is not Hermitian");
    }
    return unpack(x1.data(), z1.data(), sign, n);
}

}  // namespace subsched
