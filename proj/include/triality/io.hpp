#pragma once

#include <nlohmann/json.hpp>

#include <string>

#include "triality/symspace.hpp"

// JSON encodings. Scalars are always written as literal strings so exact
// values survive the round trip ("1/2+1/2*r3", "0.36602540378443865").

namespace triality {

template <Scalar S, std::size_t N>
nlohmann::json matrix_to_json(const Matrix<S, N>& m) {
    nlohmann::json rows = nlohmann::json::array();
    for (std::size_t r = 0; r < N; ++r) {
        nlohmann::json row = nlohmann::json::array();
        for (std::size_t c = 0; c < N; ++c) row.push_back(to_string(m(r, c)));
        rows.push_back(std::move(row));
    }
    return rows;
}

namespace detail {

template <Scalar S>
S scalar_from_json(const nlohmann::json& j) {
    if (j.is_string()) return parse_scalar<S>(j.get<std::string>());
    if (j.is_number_integer()) return S(static_cast<int>(j.get<long>()));
    if (j.is_number()) return parse_scalar<S>(j.dump());
    throw ParseError("scalar must be a string or number literal");
}

}  // namespace detail

/// Row-major nested arrays of scalar literals; shape must be N×N.
template <Scalar S, std::size_t N>
Matrix<S, N> matrix_from_json(const nlohmann::json& j) {
    if (!j.is_array() || j.size() != N)
        throw DimensionMismatch("matrix JSON must have " + std::to_string(N) + " rows");
    Matrix<S, N> m;
    for (std::size_t r = 0; r < N; ++r) {
        const auto& row = j[r];
        if (!row.is_array() || row.size() != N)
            throw DimensionMismatch("matrix row " + std::to_string(r) + " must have " + std::to_string(N) + " entries");
        for (std::size_t c = 0; c < N; ++c) m(r, c) = detail::scalar_from_json<S>(row[c]);
    }
    return m;
}

template <Scalar S>
nlohmann::json triple_to_json(const TrialityTriple<S>& g) {
    return {{"A", matrix_to_json(g.a())}, {"B", matrix_to_json(g.b())}, {"C", matrix_to_json(g.c())}};
}

/// Parses {"A": mat, "B": mat, "C": mat} and runs the full triality verification.
template <Scalar S>
TrialityTriple<S> triple_from_json(const nlohmann::json& j) {
    for (const char* key : {"A", "B", "C"})
        if (!j.contains(key)) throw ParseError(std::string("triple JSON is missing \"") + key + "\"");
    return TrialityTriple<S>::verify(matrix_from_json<S, 8>(j["A"]), matrix_from_json<S, 8>(j["B"]),
                                     matrix_from_json<S, 8>(j["C"]));
}

template <Scalar S>
nlohmann::json point_to_json(const SpherePoint<S>& p) {
    return {{"x", to_string(p.x())}, {"y", to_string(p.y())}};
}

template <Scalar S>
SpherePoint<S> point_from_json(const nlohmann::json& j) {
    if (!j.contains("x") || !j.contains("y")) throw ParseError("sphere point JSON needs \"x\" and \"y\"");
    return SpherePoint<S>(UnitOctonion<S>(parse_octonion<S>(j["x"].get<std::string>())),
                          UnitOctonion<S>(parse_octonion<S>(j["y"].get<std::string>())));
}

inline nlohmann::json gamma_to_json(GammaElement g) { return to_string(g); }
inline GammaElement gamma_from_json(const nlohmann::json& j) { return parse_gamma(j.get<std::string>()); }

/// [{candidate, accepted, residual, label}, ...]
template <Scalar S>
nlohmann::json scan_to_json(const ScanReport<S>& report) {
    nlohmann::json out = nlohmann::json::array();
    for (const auto& e : report.entries)
        out.push_back({{"candidate", point_to_json(e.candidate)},
                       {"accepted", e.accepted},
                       {"residual", e.residual},
                       {"label", e.label}});
    return out;
}

}  // namespace triality
