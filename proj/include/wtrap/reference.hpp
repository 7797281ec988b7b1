// Copyright 2026 The wtrap Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef WTRAP_REFERENCE_HPP
#define WTRAP_REFERENCE_HPP

// Reference tables and relative-error maps.
//
// Reference CSV:  z_re,z_im,w_re,w_im
//   z fields   shortest round-trip decimal of a binary64 value
//   w fields   decimal with >= 30 significant digits
// Rows are matched to grid points by the exact binary64 value of z.

#include <algorithm>
#include <bit>
#include <charconv>
#include <cmath>
#include <complex>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <istream>
#include <limits>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <system_error>
#include <unordered_map>
#include <utility>
#include <vector>

#include "wtrap/errlike.hpp"
#include "wtrap/faddeeva.hpp"
#include "wtrap/tuning.hpp"

namespace wtrap {

inline constexpr std::string_view reference_header = "z_re,z_im,w_re,w_im";
inline constexpr std::string_view accuracy_header = "z_re,z_im,relerr_deps,region,overflowed";

/// Rectangular grid with inclusive endpoints, point k of n at
/// lo + (hi - lo) * k / (n - 1) evaluated left to right in binary64.
struct GridSpec {
    double re_min = 0.0;
    double re_max = 0.0;
    double im_min = 0.0;
    double im_max = 0.0;
    int n_re = 1;
    int n_im = 1;

    void validate() const
    {
        if (!std::isfinite(re_min) || !std::isfinite(re_max) || !std::isfinite(im_min) ||
            !std::isfinite(im_max)) {
            throw std::invalid_argument("grid bounds must be finite");
        }
        if (re_min > re_max || im_min > im_max) {
            throw std::invalid_argument("grid bounds must satisfy min <= max");
        }
        if (n_re < 1 || n_im < 1) {
            throw std::invalid_argument("grid sizes must be at least 1");
        }
    }

    static double coordinate(double lo, double hi, int k, int n)
    {
        if (n == 1) {
            return lo;
        }
        return lo + (hi - lo) * static_cast<double>(k) / static_cast<double>(n - 1);
    }

    double re_at(int i) const { return coordinate(re_min, re_max, i, n_re); }
    double im_at(int j) const { return coordinate(im_min, im_max, j, n_im); }
    std::size_t size() const { return static_cast<std::size_t>(n_re) * static_cast<std::size_t>(n_im); }

    /// Points in row-major order with the imaginary part outer.
    std::vector<std::complex<double>> points() const
    {
        validate();
        std::vector<std::complex<double>> out;
        out.reserve(size());
        for (int j = 0; j < n_im; ++j) {
            for (int i = 0; i < n_re; ++i) {
                out.emplace_back(re_at(i), im_at(j));
            }
        }
        return out;
    }
};

/// Shortest decimal that parses back to exactly `v`.
inline std::string format_shortest(double v)
{
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, v);
    return {buf, res.ptr};
}

inline double parse_double(std::string_view s)
{
    double v = 0.0;
    const auto res = std::from_chars(s.data(), s.data() + s.size(), v);
    if (res.ec != std::errc{} || res.ptr != s.data() + s.size()) {
        throw std::invalid_argument("not a binary64 decimal: '" + std::string(s) + "'");
    }
    return v;
}

inline long double parse_extended(const std::string& s)
{
    char* end = nullptr;
    const long double v = std::strtold(s.c_str(), &end);
    if (s.empty() || end != s.c_str() + s.size() || std::isnan(v)) {
        throw std::invalid_argument("not a decimal number: '" + s + "'");
    }
    return v;
}

struct ReferenceRecord {
    std::string z_re;
    std::string z_im;
    std::string w_re;
    std::string w_im;
};

/// Parsed reference file, indexed by the exact binary64 argument.
class ReferenceTable {
public:
    struct Entry {
        std::complex<double> z;
        long double w_re;
        long double w_im;
    };

    static ReferenceTable read(std::istream& in)
    {
        ReferenceTable table;
        std::string line;
        if (!std::getline(in, line)) {
            throw std::runtime_error("reference file is empty");
        }
        strip_cr(line);
        if (line != reference_header) {
            throw std::runtime_error("unexpected reference header '" + line + "'");
        }
        std::size_t lineno = 1;
        while (std::getline(in, line)) {
            ++lineno;
            strip_cr(line);
            if (line.empty()) {
                continue;
            }
            ReferenceRecord rec;
            if (!split4(line, rec)) {
                throw std::runtime_error("reference line " + std::to_string(lineno) + ": expected 4 fields");
            }
            table.add(rec);
        }
        return table;
    }

    void add(const ReferenceRecord& rec)
    {
        const Entry e{{parse_double(rec.z_re), parse_double(rec.z_im)},
                      parse_extended(rec.w_re),
                      parse_extended(rec.w_im)};
        index_.insert_or_assign(key(e.z), entries_.size());
        entries_.push_back(e);
        records_.push_back(rec);
    }

    const Entry* find(std::complex<double> z) const
    {
        const auto it = index_.find(key(z));
        return it == index_.end() ? nullptr : &entries_[it->second];
    }

    const std::vector<Entry>& entries() const { return entries_; }
    const std::vector<ReferenceRecord>& records() const { return records_; }
    std::size_t size() const { return entries_.size(); }

private:
    struct Key {
        std::uint64_t re;
        std::uint64_t im;
        bool operator==(const Key&) const = default;
    };
    struct KeyHash {
        std::size_t operator()(const Key& k) const noexcept
        {
            return std::hash<std::uint64_t>{}(k.re * 0x9E3779B97F4A7C15ull ^ k.im);
        }
    };

    static Key key(std::complex<double> z)
    {
        return {std::bit_cast<std::uint64_t>(z.real()), std::bit_cast<std::uint64_t>(z.imag())};
    }

    static void strip_cr(std::string& s)
    {
        if (!s.empty() && s.back() == '\r') {
            s.pop_back();
        }
    }

    static bool split4(const std::string& line, ReferenceRecord& rec)
    {
        std::string* fields[4] = {&rec.z_re, &rec.z_im, &rec.w_re, &rec.w_im};
        std::size_t start = 0;
        for (int f = 0; f < 4; ++f) {
            const std::size_t comma = line.find(',', start);
            if ((comma == std::string::npos) != (f == 3)) {
                return false;
            }
            *fields[f] = line.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
            start = comma + 1;
        }
        return true;
    }

    std::vector<Entry> entries_;
    std::vector<ReferenceRecord> records_;
    std::unordered_map<Key, std::size_t, KeyHash> index_;
};

inline void write_reference_csv(std::ostream& out, const std::vector<ReferenceRecord>& records)
{
    out << reference_header << '\n';
    for (const auto& r : records) {
        out << r.z_re << ',' << r.z_im << ',' << r.w_re << ',' << r.w_im << '\n';
    }
}

/// |computed - ref| / |ref| in units of deps, evaluated in extended
/// precision. NaN when the reference itself is outside the binary64 range.
inline double relative_error_deps(std::complex<double> computed, long double ref_re, long double ref_im)
{
    constexpr long double big = std::numeric_limits<double>::max();
    if (std::abs(ref_re) > big || std::abs(ref_im) > big) {
        return std::numeric_limits<double>::quiet_NaN();
    }
    const long double dre = static_cast<long double>(computed.real()) - ref_re;
    const long double dim = static_cast<long double>(computed.imag()) - ref_im;
    const long double num = std::hypot(dre, dim);
    const long double den = std::hypot(ref_re, ref_im);
    if (den == 0.0L) {
        return num == 0.0L ? 0.0 : std::numeric_limits<double>::infinity();
    }
    if (std::isnan(num)) {
        return std::numeric_limits<double>::infinity();
    }
    return static_cast<double>(num / den / static_cast<long double>(deps));
}

struct AccuracyRow {
    double z_re = 0.0;
    double z_im = 0.0;
    double relerr_deps = 0.0;
    Region region = Region::A;
    bool overflowed = false;
};

struct AccuracySummary {
    double mean = 0.0;
    double max = 0.0;
    std::size_t n = 0;
};

/// Grid point with no matching reference row.
class ReferenceMismatch : public std::runtime_error {
public:
    explicit ReferenceMismatch(std::complex<double> z)
        : std::runtime_error("no reference value for z = " + format_shortest(z.real()) + "," +
                             format_shortest(z.imag())),
          point(z)
    {
    }
    std::complex<double> point;
};

/// Relative error of `kind` against the table at every grid point, in grid
/// order. The table holds values of `kind` itself (w for the shipped files).
inline std::vector<AccuracyRow> accuracy_map(FunctionKind kind, const GridSpec& grid,
                                             const ReferenceTable& table, const EvalParams& p)
{
    std::vector<AccuracyRow> rows;
    rows.reserve(grid.size());
    for (const std::complex<double> z : grid.points()) {
        const ReferenceTable::Entry* ref = table.find(z);
        if (ref == nullptr) {
            throw ReferenceMismatch(z);
        }
        const std::complex<double> v = evaluate(kind, z, p);
        AccuracyRow row;
        row.z_re = z.real();
        row.z_im = z.imag();
        row.region = classify_region(z, p);
        row.overflowed = !std::isfinite(v.real()) || !std::isfinite(v.imag());
        row.relerr_deps = relative_error_deps(v, ref->w_re, ref->w_im);
        rows.push_back(row);
    }
    return rows;
}

/// Arithmetic mean and max over rows with a defined relative error.
inline AccuracySummary summarize(const std::vector<AccuracyRow>& rows)
{
    AccuracySummary s;
    double total = 0.0;
    for (const auto& r : rows) {
        if (std::isnan(r.relerr_deps)) {
            continue;
        }
        total += r.relerr_deps;
        s.max = std::max(s.max, r.relerr_deps);
        ++s.n;
    }
    s.mean = s.n == 0 ? 0.0 : total / static_cast<double>(s.n);
    return s;
}

inline std::string format_relerr(double v)
{
    if (std::isnan(v)) {
        return "nan";
    }
    if (std::isinf(v)) {
        return "inf";
    }
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6g", v);
    return buf;
}

inline void write_accuracy_csv(std::ostream& out, const std::vector<AccuracyRow>& rows)
{
    out << accuracy_header << '\n';
    for (const auto& r : rows) {
        out << format_shortest(r.z_re) << ',' << format_shortest(r.z_im) << ',' << format_relerr(r.relerr_deps)
            << ',' << to_string(r.region) << ',' << (r.overflowed ? 1 : 0) << '\n';
    }
}

} // namespace wtrap

#endif // WTRAP_REFERENCE_HPP
