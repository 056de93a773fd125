#pragma once

// CSV, JSON and plot-data forms of results.

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "cgw/conjugacy.hpp"
#include "cgw/equivgrowth.hpp"
#include "cgw/growth.hpp"
#include "cgw/smallcancel.hpp"

namespace cgw {

// Comment lines "# key: value" written at the top of output files.
using Header = std::vector<std::pair<std::string, std::string>>;
std::string format_header(const Header& h);

// "n,value" rows, or "n,value,lower,upper" for bracketed tables, after a
// header of comment lines and a column line.
std::string to_csv(const GrowthTable& t, const Header& header = {});
// Accepts the output of to_csv; kind and engine come from the comments when
// present.
GrowthTable table_from_csv(std::string_view text);
SampledFunction function_from_csv(std::string_view text, std::string name);

std::string to_json(const GrowthTable& t, const Header& header = {});
// Inverse of to_json for tables; the provenance block is ignored.
GrowthTable table_from_json(std::string_view text);
std::string to_json(const EquivVerdict& v, const Header& header = {});
std::string to_json(const SCReport& r, const SymmetrizedSet& S,
                    const Header& header = {});
std::string to_json(const WWord& w, const Header& header = {});
std::string to_json(const GroupEngine& e, const HatMetricResult& r,
                    const Header& header = {});
std::string to_json(const GroupEngine& e, const TranslationEstimate& t,
                    const Header& header = {});

// "n value" lines ("n lower upper" when bracketed); empty for an empty table.
std::string plot_data(const GrowthTable& t, const Header& header = {});
// The same rows with natural logarithms of the values.
std::string plot_log_data(const GrowthTable& t, const Header& header = {});
// "n f(n) g(Cn)" over the checked range of a verdict with witness C.
std::string plot_data(const SampledFunction& f, const SampledFunction& g,
                      std::int64_t C, const Header& header = {});

}  // namespace cgw
