#pragma once

#include <array>
#include <cstddef>
#include <fstream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "../band_matrix.hpp"
#include "../dense.hpp"
#include "../errors.hpp"
#include "../rational.hpp"

namespace hepta::cli {

using nlohmann::json;

/*
 * Band file: a JSON object
 *
 *   { "n": 5,
 *     "a": ["4", "2"], "b": [...], "c": [...], "d": [...],
 *     "e": [...], "f": [...], "g": ["1", "0"] }
 *
 * Arrays list ascending subscripts starting at the first valid one
 * (a[0] = a_4, b[0] = b_3, c[0] = c_2, d[0] = d_1, e[0] = e_1, f[0] = f_1,
 * g[0] = g_1). Entries are rational strings "p/q" or "p"; bare JSON integers
 * are accepted on input.
 */
struct BandFile {
    std::size_t n = 0;
    // a, b, c, d, e, f, g
    std::array<std::vector<Rational>, 7> bands;

    static constexpr std::array<const char*, 7> names = {"a", "b", "c", "d", "e", "f", "g"};
    // n minus the band length
    static constexpr std::array<std::size_t, 7> shortfall = {3, 2, 1, 0, 1, 2, 3};

    static std::size_t expected_length(std::size_t n, std::size_t band) {
        return n > shortfall[band] ? n - shortfall[band] : 0;
    }

    HeptaBands<Rational> to_hepta() const {
        if (n < 5) throw InvalidOrder(n);
        return HeptaBands<Rational>(n, bands[0], bands[1], bands[2], bands[3], bands[4], bands[5], bands[6]);
    }

    /// Dense form for any n >= 1 (orders below 5 included).
    Matrix<Rational> to_dense() const {
        Matrix<Rational> m(n, n);
        // band k sits on diagonal offset k-3; its first entry is in row max(1, 4-k)
        for (std::size_t k = 0; k < 7; ++k) {
            const long offset = static_cast<long>(k) - 3;
            for (std::size_t idx = 0; idx < bands[k].size(); ++idx) {
                const long row = offset < 0 ? static_cast<long>(idx) - offset : static_cast<long>(idx);
                m(static_cast<std::size_t>(row), static_cast<std::size_t>(row + offset)) = bands[k][idx];
            }
        }
        return m;
    }
};

inline Rational parse_rational_json(const json& v, std::string_view where) {
    if (v.is_string()) {
        try {
            return Rational::parse(v.get<std::string>());
        } catch (const ParseError& e) {
            throw ParseError(std::string(where) + ": " + e.what());
        }
    }
    if (v.is_number_integer()) return Rational(v.get<long long>());
    throw ParseError(std::string(where) + ": expected a rational string, got " + v.dump());
}

inline json parse_json_text(const std::string& text, std::string_view what) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(std::string(what) + ": " + e.what());
    }
}

inline std::string read_text(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

inline BandFile band_file_from_json(const json& j) {
    if (!j.is_object()) throw ParseError("band file: top level must be an object");
    if (!j.contains("n") || !j["n"].is_number_integer()) throw ParseError("band file: missing integer \"n\"");
    const long long n = j["n"].get<long long>();
    if (n < 1) throw InvalidOrder(static_cast<std::size_t>(n < 0 ? 0 : n));

    BandFile bf;
    bf.n = static_cast<std::size_t>(n);
    for (std::size_t k = 0; k < 7; ++k) {
        const char* name = BandFile::names[k];
        const std::size_t want = BandFile::expected_length(bf.n, k);
        if (!j.contains(name)) {
            if (want == 0) continue;
            throw ParseError(std::string("band file: missing array \"") + name + "\"");
        }
        const json& arr = j[name];
        if (!arr.is_array()) throw ParseError(std::string("band file: \"") + name + "\" must be an array");
        if (arr.size() != want)
            throw ParseError(std::string("band file: \"") + name + "\" has length " + std::to_string(arr.size()) +
                             ", expected " + std::to_string(want) + " for n=" + std::to_string(bf.n));
        for (std::size_t i = 0; i < arr.size(); ++i)
            bf.bands[k].push_back(parse_rational_json(arr[i], std::string(name) + "[" + std::to_string(i) + "]"));
    }
    return bf;
}

inline BandFile read_band_file(const std::string& path) {
    return band_file_from_json(parse_json_text(read_text(path), path));
}

/// Reads and validates a band file; orders below 5 raise InvalidOrder.
inline HeptaBands<Rational> parse_band_file(const std::string& path) { return read_band_file(path).to_hepta(); }

inline json to_json(const HeptaBands<Rational>& h) {
    auto arr = [](const std::vector<Rational>& v) {
        json out = json::array();
        for (const auto& x : v) out.push_back(x.to_string());
        return out;
    };
    json j;
    j["n"] = h.n();
    j["a"] = arr(h.a());
    j["b"] = arr(h.b());
    j["c"] = arr(h.c());
    j["d"] = arr(h.d());
    j["e"] = arr(h.e());
    j["f"] = arr(h.f());
    j["g"] = arr(h.g());
    return j;
}

/// Right-hand side: a JSON array of rational strings, or {"rhs": [...]}.
inline std::vector<Rational> read_rhs_file(const std::string& path) {
    json j = parse_json_text(read_text(path), path);
    if (j.is_object() && j.contains("rhs")) j = j["rhs"];
    if (!j.is_array()) throw ParseError(path + ": expected an array of rationals");
    std::vector<Rational> v;
    for (std::size_t i = 0; i < j.size(); ++i) v.push_back(parse_rational_json(j[i], "rhs[" + std::to_string(i) + "]"));
    return v;
}

}  // namespace hepta::cli
