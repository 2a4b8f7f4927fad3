/**************************************************************************
 * serialize.hpp
 *
 * Copyright 2026 The qmds Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 **************************************************************************/

#pragma once

#include <cstdint>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "qmds/classify.hpp"
#include "qmds/code.hpp"
#include "qmds/pseudoarc.hpp"
#include "qmds/weights.hpp"

namespace qmds {

using json = nlohmann::json;

/// Malformed or inconsistent input file.
class FormatError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

inline json field_to_json(const Field& f) {
    json j{{"p", f.characteristic()}, {"e", f.degree()}};
    if (f.degree() > 1) j["modulus"] = f.modulus();
    return j;
}

inline FieldPtr field_from_json(const json& j) {
    try {
        const auto p = j.at("p").get<std::uint32_t>();
        const auto e = j.value("e", std::uint32_t{1});
        if (j.contains("modulus") && e > 1) return Field::create(p, e, j.at("modulus").get<std::vector<std::uint32_t>>());
        return Field::create(p, e);
    } catch (const json::exception& ex) {
        throw FormatError(std::string("field description: ") + ex.what());
    }
}

/// Bare integer when e = 1, coefficient array (low-degree-first) otherwise.
inline json elem_to_json(const Field& f, Elem a) {
    if (f.degree() == 1) return a.v;
    return f.coeffs(a);
}

inline Elem elem_from_json(const Field& f, const json& j) {
    if (j.is_number_integer()) {
        const auto v = j.get<std::int64_t>();
        if (f.degree() != 1 || v < 0 || static_cast<std::uint64_t>(v) >= f.order())
            throw FormatError("element " + j.dump() + " out of range for " + f.name());
        return Elem{static_cast<std::uint32_t>(v)};
    }
    if (!j.is_array()) throw FormatError("element must be an integer or coefficient array");
    try {
        const auto c = j.get<std::vector<std::uint32_t>>();
        return f.from_coeffs(c);
    } catch (const std::exception& ex) {
        throw FormatError(std::string("element ") + j.dump() + ": " + ex.what());
    }
}

inline json matrix_to_json(const Matrix& m) {
    json rows = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(elem_to_json(*m.field(), m(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

inline Matrix matrix_from_json(const FieldPtr& f, const json& j, std::size_t cols) {
    if (!j.is_array()) throw FormatError("matrix must be an array of rows");
    Matrix m(f, j.size(), cols);
    for (std::size_t i = 0; i < j.size(); ++i) {
        if (!j[i].is_array() || j[i].size() != cols)
            throw FormatError("matrix row " + std::to_string(i + 1) + " must have " + std::to_string(cols) + " entries");
        for (std::size_t c = 0; c < cols; ++c) m(i, c) = elem_from_json(*f, j[i][c]);
    }
    return m;
}

inline json code_to_json(const LinearCode& c) {
    return json{{"field", field_to_json(*c.field())},
                {"n", c.n()},
                {"r", c.r()},
                {"generator", matrix_to_json(c.generator())}};
}

inline LinearCode code_from_json(const json& j) {
    try {
        const auto f = field_from_json(j.at("field"));
        const auto n = j.at("n").get<std::size_t>();
        const auto r = j.at("r").get<std::size_t>();
        Matrix g = matrix_from_json(f, j.at("generator"), n * r);
        if (g.rows() == 0) return LinearCode::zero(f, n, r);
        return LinearCode::from_generator(f, n, r, std::move(g));
    } catch (const json::exception& ex) {
        throw FormatError(std::string("code file: ") + ex.what());
    }
}

inline json arc_to_json(const PseudoArc& a) {
    json subs = json::array();
    for (const auto& h : a.subspaces) subs.push_back(matrix_to_json(h));
    return json{{"field", field_to_json(*a.field)}, {"m", a.m}, {"r", a.r}, {"subspaces", subs}};
}

inline PseudoArc arc_from_json(const json& j) {
    try {
        PseudoArc a;
        a.field = field_from_json(j.at("field"));
        a.m = j.at("m").get<std::size_t>();
        a.r = j.at("r").get<std::size_t>();
        for (const auto& s : j.at("subspaces")) {
            Matrix h = matrix_from_json(a.field, s, a.r);
            if (h.rows() != a.m) throw FormatError("arc file: subspace basis must have m rows");
            a.subspaces.push_back(std::move(h));
        }
        return a;
    } catch (const json::exception& ex) {
        throw FormatError(std::string("arc file: ") + ex.what());
    }
}

/// sigma is written 1-based.
inline json isometry_to_json(const Field& f, const Isometry& iso) {
    json sigma = json::array(), blocks = json::array();
    for (auto s : iso.sigma) sigma.push_back(s + 1);
    for (const auto& b : iso.blocks) blocks.push_back(matrix_to_json(b));
    return json{{"field", field_to_json(f)}, {"sigma", sigma}, {"blocks", blocks}};
}

inline Isometry isometry_from_json(const json& j, const FieldPtr& f, std::size_t r) {
    try {
        Isometry iso;
        for (const auto& s : j.at("sigma")) {
            const auto v = s.get<std::size_t>();
            if (v == 0) throw FormatError("isometry file: sigma is 1-based");
            iso.sigma.push_back(v - 1);
        }
        for (const auto& b : j.at("blocks")) iso.blocks.push_back(matrix_from_json(f, b, r));
        return iso;
    } catch (const json::exception& ex) {
        throw FormatError(std::string("isometry file: ") + ex.what());
    }
}

inline json classification_to_json(const Classification& c) {
    return json{{"d", c.d}, {"d_perp", c.d_perp}, {"class", c.label()}, {"type", c.type()}, {"dual_type", c.dual_type()}};
}

/// Decimal strings; counts routinely exceed 64 bits.
inline json counts_to_json(const std::vector<BigInt>& v) {
    json out = json::array();
    for (const auto& x : v) out.push_back(x.str());
    return out;
}

inline std::vector<BigInt> counts_from_json(const json& j) {
    std::vector<BigInt> out;
    for (const auto& x : j) out.emplace_back(x.is_string() ? x.get<std::string>() : x.dump());
    return out;
}

inline json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path + ": file not found or unreadable");
    try {
        return json::parse(in);
    } catch (const json::exception& ex) {
        throw FormatError(path + ": " + ex.what());
    }
}

inline void write_json_file(const std::string& path, const json& j) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << j.dump(2) << '\n';
}

}  // namespace qmds
