#pragma once

#include <cstddef>
#include <cstdint>
#include <fstream>
#include <functional>
#include <iomanip>
#include <optional>
#include <ostream>
#include <random>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "../bench.hpp"
#include "../checks.hpp"
#include "../extended_float.hpp"
#include "../inverse_core.hpp"
#include "../oracle.hpp"
#include "../rational.hpp"
#include "../symbolic_engine.hpp"
#include "band_file.hpp"

namespace hepta::cli {

enum ExitCode : int { ok = 0, singular = 1, invalid_input = 2, breakdown = 3 };

enum class RunMode { exact, floating, symbolic, automatic };

inline RunMode parse_mode(std::string_view s) {
    if (s == "exact") return RunMode::exact;
    if (s == "float") return RunMode::floating;
    if (s == "symbolic") return RunMode::symbolic;
    if (s == "auto") return RunMode::automatic;
    throw ParseError("unknown mode \"" + std::string(s) + "\" (expected exact|float|symbolic|auto)");
}

/// Runs fn and maps library errors onto exit codes, reporting on err.
inline int guarded(std::ostream& err, const std::function<int()>& fn) {
    try {
        return fn();
    } catch (const ZeroSuperDiagonal& e) {
        err << "error: " << e.what() << "; rerun with --mode symbolic or --mode auto\n";
        return breakdown;
    } catch (const SingularMatrix& e) {
        err << "error: " << e.what() << "\n";
        return singular;
    } catch (const DivisionByZero& e) {
        err << "error: " << e.what() << " (matrix is singular to working precision)\n";
        return singular;
    } catch (const ParseError& e) {
        err << "error: " << e.what() << "\n";
        return invalid_input;
    } catch (const InvalidOrder& e) {
        err << "error: " << e.what() << "\n";
        return invalid_input;
    } catch (const DimensionMismatch& e) {
        err << "error: " << e.what() << "\n";
        return invalid_input;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return singular;
    }
}

/// Inverse in printable form.
struct RenderedInverse {
    Mode mode;
    std::string det;
    std::vector<std::vector<std::string>> entries;
    std::vector<std::size_t> substituted;
};

namespace detail {

inline std::string render(const Rational& r) { return r.to_string(); }
inline std::string render(const ExtendedFloat& v) { return v.to_string(); }

template <class S>
RenderedInverse render_result(const InverseResult<S>& r) {
    RenderedInverse out{r.mode, render(r.determinant), {}, r.substituted};
    for (std::size_t i = 0; i < r.entries.rows(); ++i) {
        std::vector<std::string> row;
        for (std::size_t j = 0; j < r.entries.cols(); ++j) row.push_back(render(r.entries(i, j)));
        out.entries.push_back(std::move(row));
    }
    return out;
}

inline HeptaBands<ExtendedFloat> to_float(const HeptaBands<Rational>& h) {
    return map_bands<ExtendedFloat>(h, [](const Rational& x) { return ExtendedFloat(x.to_double()); });
}

inline std::string render_float(const Rational& r) { return ExtendedFloat(r.to_double()).to_string(); }

// Exact inverse and determinant from the dense oracle, for orders below 5.
inline InverseResult<Rational> oracle_result(const BandFile& bf) {
    const Matrix<Rational> m = bf.to_dense();
    const Rational det = oracle::dense_det_exact(m);
    if (det.is_zero()) throw SingularMatrix();
    return {oracle::dense_inverse_exact(m), det, Mode::dense_oracle, {}};
}

inline void warn_small(std::ostream& err, std::size_t n) {
    err << "warning: n=" << n << " is below the heptadiagonal minimum of 5; using the dense exact inverter\n";
}

// Writes to the file at `path` when given, else to `out`.
inline void emit(const std::optional<std::string>& path, std::ostream& out, const std::string& text) {
    if (path && !path->empty() && *path != "-") {
        std::ofstream f(*path);
        if (!f) throw ParseError("cannot write " + *path);
        f << text;
    } else {
        out << text;
    }
}

}  // namespace detail

/// Inverse of the band file contents in the requested mode.
inline RenderedInverse compute_inverse(const BandFile& bf, RunMode mode, std::ostream& err) {
    if (bf.n < 5) {
        detail::warn_small(err, bf.n);
        RenderedInverse r = detail::render_result(detail::oracle_result(bf));
        if (mode == RunMode::floating) {
            const auto exact = detail::oracle_result(bf);
            r.det = detail::render_float(exact.determinant);
            for (std::size_t i = 0; i < bf.n; ++i)
                for (std::size_t j = 0; j < bf.n; ++j) r.entries[i][j] = detail::render_float(exact.entries(i, j));
        }
        return r;
    }
    const HeptaBands<Rational> h = bf.to_hepta();
    switch (mode) {
        case RunMode::exact: return detail::render_result(invert(h));
        case RunMode::floating: return detail::render_result(invert(detail::to_float(h)));
        case RunMode::symbolic: return detail::render_result(invert_symbolic(h));
        case RunMode::automatic: return detail::render_result(auto_invert(h));
    }
    throw ParseError("unreachable mode");
}

inline json inverse_json(const RenderedInverse& r) {
    json j;
    j["mode"] = std::string(to_string(r.mode));
    j["det"] = r.det;
    j["inverse"] = r.entries;
    if (!r.substituted.empty()) j["substituted"] = r.substituted;
    return j;
}

inline int cmd_invert(const std::string& input, std::string_view mode, const std::optional<std::string>& output,
                      std::ostream& out, std::ostream& err) {
    return guarded(err, [&] {
        const RunMode m = parse_mode(mode);
        const BandFile bf = read_band_file(input);
        const RenderedInverse r = compute_inverse(bf, m, err);
        detail::emit(output, out, inverse_json(r).dump(2) + "\n");
        return static_cast<int>(ok);
    });
}

/// Determinant string for the requested mode; only the O(n) sequences are
/// built, no inverse columns.
inline std::string compute_det(const BandFile& bf, RunMode mode, std::ostream& err) {
    if (bf.n < 5) {
        detail::warn_small(err, bf.n);
        const Rational det = oracle::dense_det_exact(bf.to_dense());
        return mode == RunMode::floating ? detail::render_float(det) : det.to_string();
    }
    const HeptaBands<Rational> h = bf.to_hepta();
    auto numeric = [](const auto& bands) {
        const auto p = pad(bands);
        return determinant(p, det_sequences(seed_sequences(p)));
    };
    bool has_zero_g = false;
    for (const auto& gi : h.g()) has_zero_g = has_zero_g || gi.is_zero();
    switch (mode) {
        case RunMode::exact: return numeric(h).to_string();
        case RunMode::floating: return numeric(detail::to_float(h)).to_string();
        case RunMode::symbolic: return symbolic_determinant(h).to_string();
        case RunMode::automatic: return (has_zero_g ? symbolic_determinant(h) : numeric(h)).to_string();
    }
    throw ParseError("unreachable mode");
}

inline int cmd_det(const std::string& input, std::string_view mode, const std::optional<std::string>& output,
                   std::ostream& out, std::ostream& err) {
    return guarded(err, [&] {
        const RunMode m = parse_mode(mode);
        const BandFile bf = read_band_file(input);
        detail::emit(output, out, compute_det(bf, m, err) + "\n");
        return static_cast<int>(ok);
    });
}

inline int cmd_solve(const std::string& input, const std::string& rhs_path, std::string_view mode,
                     const std::optional<std::string>& output, std::ostream& out, std::ostream& err) {
    return guarded(err, [&] {
        const RunMode m = parse_mode(mode);
        const BandFile bf = read_band_file(input);
        const std::vector<Rational> rhs = read_rhs_file(rhs_path);
        if (rhs.size() != bf.n)
            throw DimensionMismatch("rhs has length " + std::to_string(rhs.size()) + ", expected n=" +
                                    std::to_string(bf.n));

        json j;
        json sol = json::array();
        if (bf.n < 5) {
            detail::warn_small(err, bf.n);
            for (const auto& x : oracle::dense_solve_exact(bf.to_dense(), std::span<const Rational>(rhs)))
                sol.push_back(m == RunMode::floating ? detail::render_float(x) : x.to_string());
            j["mode"] = std::string(to_string(Mode::dense_oracle));
        } else if (m == RunMode::floating) {
            const HeptaBands<ExtendedFloat> hf = detail::to_float(bf.to_hepta());
            std::vector<ExtendedFloat> b;
            for (const auto& x : rhs) b.emplace_back(x.to_double());
            for (const auto& x : solve(hf, b)) sol.push_back(x.to_string());
            j["mode"] = std::string(to_string(Mode::floating));
        } else {
            const HeptaBands<Rational> h = bf.to_hepta();
            const InverseResult<Rational> r = m == RunMode::exact      ? invert(h)
                                              : m == RunMode::symbolic ? invert_symbolic(h)
                                                                       : auto_invert(h);
            for (const auto& x : r.entries * rhs) sol.push_back(x.to_string());
            j["mode"] = std::string(to_string(r.mode));
        }
        j["solution"] = sol;
        detail::emit(output, out, j.dump(2) + "\n");
        return static_cast<int>(ok);
    });
}

/// Band file for the Toeplitz family or random integer bands in [-9, 9].
inline HeptaBands<Rational> generate(std::string_view family, std::size_t n, std::uint64_t seed) {
    if (family == "toeplitz") return gen_toeplitz_family<Rational>(n);
    if (family == "random") {
        std::mt19937_64 rng(seed);
        return random_bands<Rational>(n, rng, -9, 9);
    }
    throw ParseError("unknown family \"" + std::string(family) + "\" (expected toeplitz|random)");
}

inline int cmd_gen(std::string_view family, long long n, std::uint64_t seed, const std::optional<std::string>& output,
                   std::ostream& out, std::ostream& err) {
    return guarded(err, [&] {
        if (n < 5) throw InvalidOrder(static_cast<std::size_t>(n < 0 ? 0 : n));
        detail::emit(output, out, to_json(generate(family, static_cast<std::size_t>(n), seed)).dump(2) + "\n");
        return static_cast<int>(ok);
    });
}

namespace detail {

template <class K>
void report_checks(std::ostream& out, const HeptaBands<K>& h, const DetSequences<K>& dets,
                   const SeedSequences<K>& seeds, bool& pass) {
    const bool ends = ends_agree(dets);
    const bool seed_ids = seed_identities_hold(h, seeds);
    const bool det_ids = det_identities_hold(h, dets);
    out << "ends X_{n+1} = -Y_{n+2} = Z_{n+3}: " << (ends ? "ok" : "FAILED") << "\n";
    out << "seed identities H A, H B, H C: " << (seed_ids ? "ok" : "FAILED") << "\n";
    out << "identities H X = -X_{n+1} E_{n-2}, H Y = -Y_{n+2} E_{n-1}, H Z = -Z_{n+3} E_n: "
        << (det_ids ? "ok" : "FAILED") << "\n";
    pass = pass && ends && seed_ids && det_ids;
}

}  // namespace detail

inline constexpr std::size_t verify_oracle_limit = 40;

inline int cmd_verify(const std::string& input, std::ostream& out, std::ostream& err) {
    return guarded(err, [&]() -> int {
        const BandFile bf = read_band_file(input);
        if (bf.n < 5) throw InvalidOrder(bf.n);
        const HeptaBands<Rational> h = bf.to_hepta();
        bool pass = true;

        bool symbolic = false;
        for (const auto& gi : h.g()) symbolic = symbolic || gi.is_zero();
        if (symbolic) {
            const SymbolicLift<> lift = lift_to_symbolic(h);
            out << "path: symbolic (g_i = t at i =";
            for (auto i : lift.substituted_indices) out << " " << i;
            out << ")\n";
            const auto seeds = seed_sequences(lift.bands);
            detail::report_checks(out, lift.matrix, det_sequences(seeds), seeds, pass);
        } else {
            out << "path: numeric-exact\n";
            const auto seeds = seed_sequences(pad(h));
            detail::report_checks(out, h, det_sequences(seeds), seeds, pass);
        }

        std::optional<InverseResult<Rational>> banded;
        bool banded_singular = false;
        try {
            banded = auto_invert(h);
        } catch (const SingularMatrix&) {
            banded_singular = true;
        }

        if (bf.n > verify_oracle_limit) {
            out << "oracle: skipped (n > " << verify_oracle_limit << ")\n";
            if (banded_singular) {
                out << "SINGULAR\n";
                return singular;
            }
            const bool id = to_dense(h) * banded->entries == Matrix<Rational>::identity(h.n());
            out << "H * inverse == I: " << (id ? "ok" : "FAILED") << "\n";
            pass = pass && id;
            out << (pass ? "PASS" : "FAIL") << "\n";
            return pass ? ok : singular;
        }

        const Matrix<Rational> dense = to_dense(h);
        const Rational odet = oracle::dense_det_exact(dense);
        std::optional<Matrix<Rational>> oinv;
        bool oracle_singular = false;
        try {
            oinv = oracle::dense_inverse_exact(dense);
        } catch (const SingularMatrix&) {
            oracle_singular = true;
        }

        if (banded_singular || oracle_singular) {
            if (banded_singular && oracle_singular) {
                out << "SingularMatrix reported by both the banded path and the oracle (det = " << odet << ")\n";
            } else {
                out << "FAIL: singularity mismatch (banded " << (banded_singular ? "singular" : "invertible")
                    << ", oracle " << (oracle_singular ? "singular" : "invertible") << ")\n";
            }
            return singular;
        }

        std::size_t mismatches = 0;
        for (std::size_t i = 0; i < h.n(); ++i)
            for (std::size_t j = 0; j < h.n(); ++j)
                if (banded->entries(i, j) != (*oinv)(i, j)) ++mismatches;
        out << "oracle inverse: " << (mismatches == 0 ? "match" : "MISMATCH") << " (" << h.n() * h.n() - mismatches
            << "/" << h.n() * h.n() << " entries equal)\n";
        const bool det_ok = banded->determinant == odet;
        out << "oracle determinant: " << (det_ok ? "match" : "MISMATCH") << " (" << banded->determinant.to_string()
            << " vs " << odet.to_string() << ")\n";
        pass = pass && mismatches == 0 && det_ok;
        out << (pass ? "PASS" : "FAIL") << "\n";
        return pass ? ok : singular;
    });
}

struct BenchRow {
    std::size_t n = 0;
    double seconds = 0.0;
    std::uint64_t ops = 0;
    std::optional<std::uint64_t> linear_ops;  // seeds, determinants, last columns, det
    std::optional<std::uint64_t> back_ops;    // back-substitution
    std::string note;                         // set when the kernel stopped early
};

inline BenchRow bench_one(std::size_t n, RunMode mode, int reps) {
    const HeptaBands<Rational> h = gen_toeplitz_family<Rational>(n);
    BenchRow row;
    row.n = n;
    auto staged = [&](const auto& bands) {
        row.seconds = median_seconds([&] { (void)invert(bands); }, reps);
        const StageCounts c = count_stages(bands);
        row.ops = c.total();
        row.linear_ops = c.linear_part();
        row.back_ops = c.back_substitution;
    };
    try {
        if (mode == RunMode::floating) {
            staged(detail::to_float(h));
        } else if (mode == RunMode::symbolic) {
            row.seconds = median_seconds([&] { (void)invert_symbolic(h); }, reps);
            OpCountScope scope;
            (void)invert_symbolic<Counted<RationalFunction>>(h);
            row.ops = scope.count();
        } else {
            // g = 1 throughout, so auto takes the exact numeric path.
            staged(h);
        }
    } catch (const SingularMatrix& e) {
        row.note = e.what();
    }
    return row;
}

inline int cmd_bench(const std::vector<long long>& ns, std::string_view mode, int reps, std::ostream& out,
                     std::ostream& err) {
    return guarded(err, [&] {
        const RunMode m = parse_mode(mode);
        if (ns.empty()) throw ParseError("bench: empty --n list");
        for (long long n : ns)
            if (n < 5) throw InvalidOrder(static_cast<std::size_t>(n < 0 ? 0 : n));
        if (reps < 1) throw ParseError("bench: --reps must be >= 1");

        out << "# Toeplitz family a=2 b=1 c=3 d=-2 e=-1 f=2 g=1, mode=" << mode << ", median of " << reps
            << " run(s)\n";
        out << std::left << std::setw(8) << "n" << std::setw(16) << "seconds" << std::setw(16) << "scalar_ops"
            << std::setw(16) << "linear_ops" << std::setw(16) << "backsub_ops" << "ratio_vs_prev\n";
        auto opt = [](const std::optional<std::uint64_t>& v) { return v ? std::to_string(*v) : std::string("-"); };
        std::optional<BenchRow> prev;
        for (long long n : ns) {
            const BenchRow row = bench_one(static_cast<std::size_t>(n), m, reps);
            out << std::left << std::setw(8) << row.n;
            if (!row.note.empty()) {
                out << "-               -               -               -               - (" << row.note << ")\n";
                prev.reset();
                continue;
            }
            std::ostringstream secs;
            secs << std::scientific << std::setprecision(4) << row.seconds;
            out << std::setw(16) << secs.str() << std::setw(16) << row.ops << std::setw(16) << opt(row.linear_ops)
                << std::setw(16) << opt(row.back_ops);
            if (prev && prev->ops > 0)
                out << std::fixed << std::setprecision(3) << static_cast<double>(row.ops) / static_cast<double>(prev->ops);
            else
                out << "-";
            out << "\n";
            prev = row;
        }
        return static_cast<int>(ok);
    });
}

}  // namespace hepta::cli
