#pragma once
// CSV / JSON emitters. Every rational is written in the "p/q" wire format.

#include "genbell/exact.hpp"
#include "genbell/real_zeros.hpp"
#include "genbell/stirling.hpp"

#include "json.hpp"

#include <sstream>
#include <string>

namespace genbell::io {

using nlohmann::ordered_json;

/// Header "n,k,value", one line per entry, row-major.
inline std::string table_csv(const GStirlingTable& t)
{
    std::ostringstream out;
    out << "n,k,value\n";
    for (unsigned n = 0; n <= t.nmax(); ++n)
        for (unsigned k = 0; k <= n; ++k) out << n << ',' << k << ',' << to_string(t(n, k)) << '\n';
    return out.str();
}

inline ordered_json table_json(const GStirlingTable& t)
{
    ordered_json j;
    j["alpha"] = to_string(t.alpha());
    j["beta"] = to_string(t.beta());
    auto rows = ordered_json::array();
    for (unsigned n = 0; n <= t.nmax(); ++n) {
        auto row = ordered_json::array();
        for (const auto& v : t.row(n)) row.push_back(to_string(v));
        rows.push_back(std::move(row));
    }
    j["rows"] = std::move(rows);
    return j;
}

/// Triangle laid out row by row, entries separated by tabs.
inline std::string table_pretty(const GStirlingTable& t)
{
    std::ostringstream out;
    out << "S_{" << to_string(t.alpha()) << "," << to_string(t.beta()) << "}(n,k)\n";
    for (unsigned n = 0; n <= t.nmax(); ++n) {
        out << "n=" << n << ':';
        for (const auto& v : t.row(n)) out << '\t' << to_string(v);
        out << '\n';
    }
    return out.str();
}

inline ordered_json coefficients_json(const QPolynomial& p)
{
    auto a = ordered_json::array();
    for (const auto& c : p.coefficients()) a.push_back(to_string(c));
    if (p.is_zero()) a.push_back("0");
    return a;
}

inline ordered_json region_report_json(const RegionReport& r)
{
    ordered_json j;
    j["alpha"] = to_string(r.params.alpha());
    j["beta"] = to_string(r.params.beta());
    j["region"] = to_string(r.region);
    auto results = ordered_json::array();
    for (const auto& d : r.results) {
        ordered_json row;
        row["n"] = d.n;
        row["all_real"] = d.all_real;
        row["asserted"] = d.asserted;
        auto roots = ordered_json::array();
        for (const auto& iv : d.roots) roots.push_back(ordered_json::array({to_string(iv.lo), to_string(iv.hi)}));
        row["roots"] = std::move(roots);
        results.push_back(std::move(row));
    }
    j["results"] = std::move(results);
    return j;
}

} // namespace genbell::io
