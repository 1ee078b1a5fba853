#pragma once

#include <cstdint>
#include <ostream>
#include <span>
#include <string>

#include "beepid/montecarlo.hpp"

namespace beepid {

inline constexpr const char* kMetricsCsvHeader =
    "T_ms,p,interference_rate,filter_len,runs,events,tp,fn,tn,fp,tp_rate,tn_rate";
inline constexpr const char* kComparisonCsvHeader =
    "T_ms,p,interference_rate,filter_len,runs,tp_rate_off,tn_rate_off,tp_rate_on,tn_rate_on,"
    "tp_gain,tn_loss,net";

/// Fixed-point with six fractional digits; NaN prints as "nan".
std::string format_decimal(double value);

void write_metrics_csv(std::ostream& out, std::span<const MetricsRecord> records);
void write_comparison_csv(std::ostream& out, std::span<const FilterComparison> rows);

/// Companion gnuplot script plotting `column` against p, one curve per T_ms.
void write_gnuplot_script(std::ostream& out, const std::string& csv_path, const std::string& column,
                          std::span<const std::uint64_t> period_ms);

}  // namespace beepid
