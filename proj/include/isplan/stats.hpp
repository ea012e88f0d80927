// Copyright 2026 The isplan Authors.
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

// Pearson chi-square on contingency tables, plus the corpus count tables
// for Cb placement and given/new status by sentence position.

#pragma once

#include <algorithm>
#include <array>
#include <cstddef>
#include <cstdint>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "isplan/error.hpp"

namespace isplan {

struct ContingencyTable {
  std::string name;
  std::vector<std::string> row_labels;
  std::vector<std::string> column_labels;
  std::vector<std::vector<std::int64_t>> counts;

  std::size_t rows() const { return counts.size(); }
  std::size_t columns() const { return counts.empty() ? 0 : counts[0].size(); }

  std::int64_t row_total(std::size_t r) const {
    std::int64_t total = 0;
    for (std::int64_t v : counts.at(r)) total += v;
    return total;
  }

  std::int64_t column_total(std::size_t c) const {
    std::int64_t total = 0;
    for (const auto& row : counts) total += row.at(c);
    return total;
  }

  std::int64_t grand_total() const {
    std::int64_t total = 0;
    for (std::size_t r = 0; r < rows(); ++r) total += row_total(r);
    return total;
  }

  // Sub-table with the given rows and columns, in the given order.
  ContingencyTable select(const std::vector<std::size_t>& row_ids,
                          const std::vector<std::size_t>& column_ids,
                          std::string sub_name) const {
    ContingencyTable out;
    out.name = std::move(sub_name);
    for (std::size_t c : column_ids) out.column_labels.push_back(column_labels.at(c));
    for (std::size_t r : row_ids) {
      out.row_labels.push_back(row_labels.at(r));
      std::vector<std::int64_t> row;
      for (std::size_t c : column_ids) row.push_back(counts.at(r).at(c));
      out.counts.push_back(std::move(row));
    }
    return out;
  }
};

// Plain counts, unlabeled.
inline ContingencyTable make_table(std::vector<std::vector<std::int64_t>> counts) {
  ContingencyTable table;
  table.counts = std::move(counts);
  for (std::size_t r = 0; r < table.counts.size(); ++r) {
    table.row_labels.push_back("r" + std::to_string(r + 1));
  }
  for (std::size_t c = 0; c < table.columns(); ++c) {
    table.column_labels.push_back("c" + std::to_string(c + 1));
  }
  return table;
}

struct ChiSquareResult {
  double statistic = 0.0;
  int degrees_of_freedom = 0;
};

// Uncorrected Pearson statistic with expected counts from the marginals.
inline ChiSquareResult chi_square(const ContingencyTable& table) {
  const std::size_t rows = table.rows();
  const std::size_t cols = table.columns();
  if (rows < 2 || cols < 2) throw InputError("contingency table must be at least 2x2");
  for (const auto& row : table.counts) {
    if (row.size() != cols) throw InputError("contingency table is not rectangular");
    for (std::int64_t v : row) {
      if (v < 0) throw InputError("contingency table has a negative count");
    }
  }
  const double total = static_cast<double>(table.grand_total());
  std::vector<double> row_totals(rows), col_totals(cols);
  for (std::size_t r = 0; r < rows; ++r) {
    row_totals[r] = static_cast<double>(table.row_total(r));
    if (row_totals[r] == 0) throw InputError("contingency table has an all-zero row");
  }
  for (std::size_t c = 0; c < cols; ++c) {
    col_totals[c] = static_cast<double>(table.column_total(c));
    if (col_totals[c] == 0) throw InputError("contingency table has an all-zero column");
  }
  ChiSquareResult result;
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) {
      double expected = row_totals[r] * col_totals[c] / total;
      double diff = static_cast<double>(table.counts[r][c]) - expected;
      result.statistic += diff * diff / expected;
    }
  }
  result.degrees_of_freedom = static_cast<int>((rows - 1) * (cols - 1));
  return result;
}

// Upper-tail critical values of the chi-square distribution.
struct CriticalValues {
  int df;
  std::array<double, 4> values;  // p = .05, .01, .005, .001
};

inline constexpr std::array<double, 4> kSignificanceLevels = {0.05, 0.01, 0.005,
                                                              0.001};

inline constexpr std::array<CriticalValues, 6> kCriticalValues = {{
    {1, {3.841, 6.635, 7.879, 10.828}},
    {2, {5.991, 9.210, 10.597, 13.816}},
    {3, {7.815, 11.345, 12.838, 16.266}},
    {4, {9.488, 13.277, 14.860, 18.467}},
    {5, {11.070, 15.086, 16.750, 20.515}},
    {6, {12.592, 16.812, 18.548, 22.458}},
}};

// Smallest tabulated p-level the statistic clears, e.g. "p < 0.005";
// "n.s." when it clears none; "df out of range" beyond the table.
inline std::string significance_band(const ChiSquareResult& result) {
  for (const CriticalValues& row : kCriticalValues) {
    if (row.df != result.degrees_of_freedom) continue;
    for (std::size_t i = row.values.size(); i-- > 0;) {
      if (result.statistic >= row.values[i]) {
        std::ostringstream out;
        out << "p < " << kSignificanceLevels[i];
        return out.str();
      }
    }
    return "n.s.";
  }
  return "df out of range";
}

// Cb placement: rows are word orders, columns are the Cb's grammatical
// role, restricted to the two conclusive Cb rows.
inline ContingencyTable cb_by_word_order_table() {
  return {"Cb by word order",
          {"SOV", "OSV"},
          {"Cb=Subject", "Cb=Object"},
          {{14, 6}, {4, 16}}};
}

// Full Cb analysis of 30 SOV and 30 OSV sentences.
inline ContingencyTable cb_full_table() {
  return {"Cb in SOV and OSV sentences",
          {"Cb=Subject", "Cb=Object", "Cb=Subj or Obj?",
           "Cb=Subj or Other Obj?", "No Cb"},
          {"SOV", "OSV"},
          {{14, 4}, {6, 16}, {6, 6}, {0, 2}, {4, 2}}};
}

inline ContingencyTable status_by_position_table() {
  return {"Given/new status by sentence position",
          {"Discourse-Old", "Inferrable", "D-New, Hearer-Old",
           "D-New, Hearer-New"},
          {"S-init", "IPV", "Post-V"},
          {{55, 43, 56}, {8, 10, 4}, {1, 1, 0}, {0, 10, 0}}};
}

// Brand-new versus all other statuses, sentence-initial versus
// immediately preverbal.
inline ContingencyTable brand_new_by_position_table() {
  ContingencyTable full = status_by_position_table();
  ContingencyTable out;
  out.name = "Brand-new vs given, S-init vs IPV";
  out.row_labels = {"D-New, Hearer-New", "Other"};
  out.column_labels = {"S-init", "IPV"};
  std::vector<std::int64_t> brand_new = {full.counts[3][0], full.counts[3][1]};
  std::vector<std::int64_t> other = {0, 0};
  for (std::size_t r = 0; r < 3; ++r) {
    other[0] += full.counts[r][0];
    other[1] += full.counts[r][1];
  }
  out.counts = {brand_new, other};
  return out;
}

struct NamedTable {
  std::string key;
  ContingencyTable table;
};

inline std::vector<NamedTable> builtin_tables() {
  return {{"figure1", cb_by_word_order_table()},
          {"figure1-full", cb_full_table()},
          {"figure2", status_by_position_table()},
          {"figure2-brand-new", brand_new_by_position_table()}};
}

inline void write_table(std::ostream& out, const ContingencyTable& table) {
  std::size_t width = 8;
  for (const auto& label : table.row_labels) width = std::max(width, label.size());
  out << std::left << std::setw(static_cast<int>(width)) << "" << std::right;
  for (const auto& label : table.column_labels) out << std::setw(12) << label;
  out << '\n';
  for (std::size_t r = 0; r < table.rows(); ++r) {
    out << std::left << std::setw(static_cast<int>(width)) << table.row_labels[r]
        << std::right;
    for (std::int64_t v : table.counts[r]) out << std::setw(12) << v;
    out << '\n';
  }
}

// Analyses reported by the `stats` command: the two 2x2 tests and the
// goodness-of-fit figure that the published counts do not support.
inline void write_stats_report(std::ostream& out) {
  struct Analysis {
    ContingencyTable table;
    const char* reported;
  };
  const Analysis analyses[] = {{cb_by_word_order_table(), "10.10"},
                               {brand_new_by_position_table(), "10.847"}};
  for (const Analysis& analysis : analyses) {
    ChiSquareResult result = chi_square(analysis.table);
    out << "== " << analysis.table.name << '\n';
    write_table(out, analysis.table);
    out << std::fixed << std::setprecision(3) << "chi2 = " << result.statistic
        << "  df = " << result.degrees_of_freedom << "  "
        << significance_band(result) << "  (reported " << analysis.reported
        << ")\n\n";
    out.unsetf(std::ios::floatfield);
  }
  out << "== SOV counts as expected frequencies for OSV\n"
      << "chi2 = 8.8 (reported): not reproduced from the published counts\n";
}

}  // namespace isplan
