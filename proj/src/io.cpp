#include "mx1/io.hpp"

#include <map>
#include <ostream>
#include <stdexcept>

#include "mx1/decimal.hpp"

namespace mx1 {

using nlohmann::ordered_json;

Format parse_format(std::string_view name) {
  if (name == "csv") return Format::Csv;
  if (name == "json") return Format::Json;
  if (name == "markdown" || name == "md") return Format::Markdown;
  throw std::invalid_argument("unknown format '" + std::string(name) + "'");
}

namespace {

std::string rational_string(const BigRational& q) {
  return to_string(q.get_num()) + "/" + to_string(q.get_den());
}

BigInt parse_bigint(const nlohmann::json& v, const char* what) {
  if (!v.is_string()) throw std::invalid_argument(std::string(what) + " must be a decimal string");
  BigInt out;
  if (out.set_str(v.get<std::string>(), 10) != 0) {
    throw std::invalid_argument(std::string(what) + " is not a decimal integer");
  }
  return out;
}

std::size_t parse_row(const std::string& key) {
  std::size_t pos = 0;
  const unsigned long v = std::stoul(key, &pos);
  if (pos != key.size()) throw std::invalid_argument("bad row key '" + key + "'");
  return v;
}

}  // namespace

ordered_json table_to_json(const StoppingTable& table, unsigned precision) {
  ordered_json doc;
  doc["m"] = table.params().m();
  doc["kmax"] = table.kmax();
  ordered_json cols = ordered_json::array();
  for (const auto& col : table.columns()) {
    ordered_json c;
    c["k"] = col.k;
    c["threshold_row"] = col.threshold_row;
    ordered_json counts = ordered_json::object();
    for (std::size_t i = col.first_row; i <= col.last_row(); ++i) {
      counts[std::to_string(i)] = to_string(col.count(i));
    }
    c["counts"] = std::move(counts);
    c["gray"] = to_string(col.gray);
    c["gray_row"] = col.gray_row ? ordered_json(*col.gray_row) : ordered_json(nullptr);
    c["total"] = to_string(col.total);
    c["f_exact"] = rational_string(col.f);
    c["f_decimal"] = render_decimal(col.f, precision);
    cols.push_back(std::move(c));
  }
  doc["columns"] = std::move(cols);
  return doc;
}

StoppingTable table_from_json(const nlohmann::json& doc) {
  try {
    const MapParams params = MapParams::make(doc.at("m").get<unsigned>());
    const auto kmax = doc.at("kmax").get<std::size_t>();
    const auto& cols = doc.at("columns");
    if (!cols.is_array() || cols.size() != kmax + 1) {
      throw std::invalid_argument("columns must hold kmax + 1 entries");
    }
    std::vector<TableColumn> out;
    out.reserve(cols.size());
    for (const auto& c : cols) {
      TableColumn col;
      col.k = c.at("k").get<std::size_t>();
      if (col.k != out.size()) throw std::invalid_argument("columns out of order");
      col.threshold_row = c.at("threshold_row").get<std::size_t>();
      const auto& counts = c.at("counts");
      if (!counts.is_object() || counts.empty()) {
        throw std::invalid_argument("counts must be a nonempty object");
      }
      std::map<std::size_t, BigInt> rows;
      for (const auto& [key, value] : counts.items()) rows[parse_row(key)] = parse_bigint(value, "count");
      col.first_row = rows.begin()->first;
      if (rows.rbegin()->first - col.first_row + 1 != rows.size()) {
        throw std::invalid_argument("counts rows must be contiguous");
      }
      for (auto& [row, v] : rows) col.counts.push_back(std::move(v));
      col.gray = parse_bigint(c.at("gray"), "gray");
      if (c.contains("gray_row") && !c.at("gray_row").is_null()) {
        col.gray_row = c.at("gray_row").get<std::size_t>();
      }
      col.total = parse_bigint(c.at("total"), "total");
      if (col.f.set_str(c.at("f_exact").get<std::string>(), 10) != 0) {
        throw std::invalid_argument("f_exact is not a rational");
      }
      col.f.canonicalize();
      out.push_back(std::move(col));
    }
    return StoppingTable(params, std::move(out));
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("malformed table json: ") + e.what());
  }
}

void write_table(std::ostream& os, const StoppingTable& table, const OutputSpec& spec) {
  switch (spec.format) {
    case Format::Json:
      os << table_to_json(table, spec.precision).dump(2) << '\n';
      return;
    case Format::Csv:
      os << "k2,k,count\n";
      for (const auto& col : table.columns()) {
        for (std::size_t i = col.first_row; i <= col.last_row(); ++i) {
          os << i << ',' << col.k << ',' << to_string(col.count(i)) << '\n';
        }
        os << "#threshold," << col.k << ',' << col.threshold_row << '\n'
           << "#gray," << col.k << ',' << to_string(col.gray) << '\n'
           << "#total," << col.k << ',' << to_string(col.total) << '\n'
           << "#F," << col.k << ',' << render_decimal(col.f, spec.precision) << '\n';
      }
      return;
    case Format::Markdown: {
      // Triangle layout: rows k2, columns k; gray cells in brackets.
      const std::size_t kmax = table.kmax();
      os << "| k2 \\ k |";
      for (std::size_t k = 0; k <= kmax; ++k) os << ' ' << k << " |";
      os << "\n|---|";
      for (std::size_t k = 0; k <= kmax; ++k) os << "---|";
      os << '\n';
      for (std::size_t i = 0; i <= kmax; ++i) {
        os << "| " << i << " |";
        for (const auto& col : table.columns()) {
          if (col.gray_row && *col.gray_row == i) {
            os << " [" << to_string(col.gray) << "] |";
          } else if (i >= col.first_row && i <= col.last_row()) {
            os << ' ' << to_string(col.count(i)) << " |";
          } else if (i <= col.k && col.k > 0) {
            os << " 0 |";
          } else {
            os << "  |";
          }
        }
        os << '\n';
      }
      os << "| threshold |";
      for (const auto& col : table.columns()) os << ' ' << col.threshold_row << " |";
      os << "\n| total |";
      for (const auto& col : table.columns()) os << ' ' << to_string(col.total) << " |";
      os << "\n| F |";
      for (const auto& col : table.columns()) os << ' ' << render_decimal(col.f, spec.precision) << " |";
      os << '\n';
      return;
    }
  }
}

void write_fk(std::ostream& os, const MapParams& params, const std::vector<NChiRow>& rows,
              const OutputSpec& spec) {
  switch (spec.format) {
    case Format::Json: {
      ordered_json doc;
      doc["m"] = params.m();
      ordered_json arr = ordered_json::array();
      for (const auto& r : rows) {
        arr.push_back({{"k", r.k},
                       {"N", to_string(r.n_chi_gt_k)},
                       {"pow2k", to_string(r.pow2k)},
                       {"f_exact", rational_string(r.f.exact)},
                       {"f_decimal", r.f.decimal}});
      }
      doc["rows"] = std::move(arr);
      os << doc.dump(2) << '\n';
      return;
    }
    case Format::Csv:
      os << "k,N,pow2k,F\n";
      for (const auto& r : rows) {
        os << r.k << ',' << to_string(r.n_chi_gt_k) << ',' << to_string(r.pow2k) << ','
           << r.f.decimal << '\n';
      }
      return;
    case Format::Markdown:
      os << "| k | N | 2^k | F |\n|---|---|---|---|\n";
      for (const auto& r : rows) {
        os << "| " << r.k << " | " << to_string(r.n_chi_gt_k) << " | " << to_string(r.pow2k)
           << " | " << r.f.decimal << " |\n";
      }
      return;
  }
}

std::string verify_summary(const SieveReport& report) {
  const char* rel = report.verdict == Verdict::Equal            ? " == "
                    : report.verdict == Verdict::TableLowerBound ? " > "
                                                                 : " < ";
  return std::to_string(report.count_chi_gt_k()) + rel + to_string(report.table_total);
}

void write_verify(std::ostream& os, const std::vector<SieveReport>& reports,
                  const OutputSpec& spec) {
  switch (spec.format) {
    case Format::Json: {
      ordered_json arr = ordered_json::array();
      for (const auto& r : reports) {
        ordered_json hist = ordered_json::object();
        for (std::size_t j = 1; j <= r.k; ++j) {
          if (r.counts.chi_histogram[j] != 0) hist[std::to_string(j)] = r.counts.chi_histogram[j];
        }
        ordered_json cells = ordered_json::object();
        for (const auto& [k2, n] : per_cell_histogram(r.counts)) cells[std::to_string(k2)] = n;
        arr.push_back({{"m", r.params.m()},
                       {"k", r.k},
                       {"slice", {r.slice_lo, r.slice_hi}},
                       {"count_chi_gt_k", r.count_chi_gt_k()},
                       {"chi_histogram", std::move(hist)},
                       {"survivors_by_k2", std::move(cells)},
                       {"table_total", to_string(r.table_total)},
                       {"surplus", to_string(r.surplus)},
                       {"verdict", to_string(r.verdict)}});
      }
      os << arr.dump(2) << '\n';
      return;
    }
    case Format::Csv:
      os << "k,slice_lo,slice_hi,count_chi_gt_k,table_total,surplus,verdict,chi_eq_k\n";
      for (const auto& r : reports) {
        os << r.k << ',' << r.slice_lo << ',' << r.slice_hi << ',' << r.count_chi_gt_k() << ','
           << to_string(r.table_total) << ',' << to_string(r.surplus) << ','
           << to_string(r.verdict) << ',' << r.counts.chi_histogram[r.k] << '\n';
      }
      return;
    case Format::Markdown:
      os << "| k | slice | chi > k (brute) | table | surplus | verdict | chi == k |\n"
         << "|---|---|---|---|---|---|---|\n";
      for (const auto& r : reports) {
        os << "| " << r.k << " | [" << r.slice_lo << ", " << r.slice_hi << "] | "
           << r.count_chi_gt_k() << " | " << to_string(r.table_total) << " | "
           << to_string(r.surplus) << " | " << to_string(r.verdict) << " | "
           << r.counts.chi_histogram[r.k] << " |\n";
      }
      return;
  }
}

}  // namespace mx1
