#include "beepid/report.hpp"

#include <cmath>
#include <cstdio>

namespace beepid {

std::string format_decimal(double value) {
  if (std::isnan(value)) return "nan";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", value);
  // Keep "-0.000000" out of the CSV.
  std::string text(buf);
  if (text == "-0.000000") text.erase(0, 1);
  return text;
}

void write_metrics_csv(std::ostream& out, std::span<const MetricsRecord> records) {
  out << kMetricsCsvHeader << '\n';
  for (const MetricsRecord& r : records) {
    out << r.point.period_ms << ',' << format_decimal(r.point.p) << ','
        << format_decimal(r.point.interference_rate) << ',' << r.point.filter_len << ',' << r.runs
        << ',' << r.events << ',' << r.tp << ',' << r.fn << ',' << r.tn << ',' << r.fp << ','
        << format_decimal(r.tp_rate()) << ',' << format_decimal(r.tn_rate()) << '\n';
  }
}

void write_comparison_csv(std::ostream& out, std::span<const FilterComparison> rows) {
  out << kComparisonCsvHeader << '\n';
  for (const FilterComparison& c : rows) {
    out << c.point.period_ms << ',' << format_decimal(c.point.p) << ','
        << format_decimal(c.point.interference_rate) << ',' << c.point.filter_len << ','
        << c.on.runs << ',' << format_decimal(c.off.tp_rate()) << ','
        << format_decimal(c.off.tn_rate()) << ',' << format_decimal(c.on.tp_rate()) << ','
        << format_decimal(c.on.tn_rate()) << ',' << format_decimal(c.tp_gain) << ','
        << format_decimal(c.tn_loss) << ',' << format_decimal(c.net) << '\n';
  }
}

void write_gnuplot_script(std::ostream& out, const std::string& csv_path, const std::string& column,
                          std::span<const std::uint64_t> period_ms) {
  out << "set datafile separator ','\n"
      << "set key autotitle columnhead\n"
      << "set xlabel 'p'\n"
      << "set ylabel '" << column << "'\n"
      << "set yrange [*:*]\n"
      << "plot";
  for (std::size_t i = 0; i < period_ms.size(); ++i) {
    out << (i == 0 ? " " : ", \\\n     ") << "'" << csv_path << "' using ($1==" << period_ms[i]
        << " ? $2 : 1/0):(column('" << column << "')) with linespoints title 'T=" << period_ms[i] << " ms'";
  }
  out << '\n';
}

}  // namespace beepid
